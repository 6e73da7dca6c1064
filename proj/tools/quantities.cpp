#include <cmath>
#include <cstdio>

#include "cli.hpp"
#include "herald/heralding.hpp"

namespace herald::cli {

std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::mean: return "mean";
    case Quantity::variance: return "variance";
    case Quantity::sqrt_variance: return "sqrt_variance";
    case Quantity::var_x1: return "var_x1";
    case Quantity::var_x2: return "var_x2";
    case Quantity::dx2: return "dx2";
    case Quantity::qfi: return "qfi";
    case Quantity::qcr: return "qcr";
    case Quantity::gain_db: return "gain_db";
    case Quantity::rn: return "rn";
    case Quantity::rv: return "rv";
    case Quantity::rs: return "rs";
    case Quantity::prob: return "prob";
  }
  return "?";
}

std::vector<Quantity> all_quantities() {
  return {Quantity::mean,  Quantity::variance, Quantity::sqrt_variance, Quantity::var_x1,
          Quantity::var_x2, Quantity::dx2,      Quantity::qfi,           Quantity::qcr,
          Quantity::gain_db, Quantity::rn,      Quantity::rv,            Quantity::rs,
          Quantity::prob};
}

std::optional<Quantity> parse_quantity(const std::string& name) {
  for (const Quantity q : all_quantities()) {
    if (name == quantity_name(q)) return q;
  }
  return std::nullopt;
}

double eval_quantity(const ModelParams& params, int n, const HeraldStats& stats, Quantity q) {
  switch (q) {
    case Quantity::mean: return stats.mean;
    case Quantity::variance: return stats.variance;
    case Quantity::sqrt_variance: return std::sqrt(stats.variance);
    case Quantity::var_x1: return stats.var_x1;
    case Quantity::var_x2: return stats.var_x2;
    case Quantity::dx2: return std::sqrt(stats.var_x2);
    case Quantity::qfi: return stats.qfi;
    case Quantity::qcr: return stats.qcr;
    case Quantity::gain_db: return stats.gain_db;
    case Quantity::rn: return stats.rn;
    case Quantity::rv: return stats.rv;
    case Quantity::rs: return stats.rs;
    case Quantity::prob: return success_probability(params, n);
  }
  return 0.0;
}

}  // namespace herald::cli
