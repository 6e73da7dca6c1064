#include "herald/model_params.hpp"

#include <cmath>
#include <string>

#include "herald/errors.hpp"
#include "herald/z_ladder.hpp"

namespace herald {

ModelParams::ModelParams(double s, double t) : s_(s), t_(t) {
  if (!(s > 0.0)) {
    throw DomainError("squeezing amplitude requires s > 0, got " + std::to_string(s));
  }
  if (!(t > 0.0) || t > 1.0) {
    throw DomainError("transmittance requires t in (0, 1], got " + std::to_string(t));
  }
  r_ = std::sqrt((1.0 - t) * (1.0 + t));
  y0_ = std::tanh(s) / 2.0;
  if (y0_ > kMaxSeriesParameter) {
    throw DomainError("s = " + std::to_string(s) +
                      " puts y0 = tanh(s)/2 into the excluded neighborhood of 1/2");
  }
  y1_ = t * t * y0_;
}

}  // namespace herald
