#pragma once

namespace herald {

// The two physical knobs of the scheme and their derived series parameters:
//   s  -- squeezing amplitude of the input state, s > 0
//   t  -- beam-splitter transmittance, t in (0, 1]
//   r  -- reflectance, t^2 + r^2 = 1
//   y0 -- tanh(s)/2, the input-state series parameter in (0, 1/2)
//   y1 -- t^2 y0, the series parameter of every heralded state
//
// Construction validates the domain (throws DomainError), including the
// y0 <= 1/2 - 1e-9 guard inherited from the Z(y) singularity at 1/2.
class ModelParams {
 public:
  ModelParams(double s, double t);

  double s() const { return s_; }
  double t() const { return t_; }
  double r() const { return r_; }
  double y0() const { return y0_; }
  double y1() const { return y1_; }

 private:
  double s_, t_, r_, y0_, y1_;
};

}  // namespace herald
