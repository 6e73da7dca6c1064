#include "cli.hpp"

namespace herald::cli {
namespace {

std::vector<FigureSpec> build_table() {
  std::vector<FigureSpec> table;
  // Success probabilities vs s; one transmittance per panel, herald counts
  // 0..10. The panel-t assignment spans the visible trend of the peaks
  // moving toward larger s as t grows.
  const double fig2_t[] = {0.7, 0.8, 0.9, 0.99};
  const char* panel = "abcd";
  for (int i = 0; i < 4; ++i) {
    table.push_back({std::string("2") + panel[i], Quantity::prob, fig2_t[i], 0, 10, 1});
  }
  // Photon statistics vs s for n = 0..100 at t = 0.98 (fig 3) and 0.99 (fig 4).
  const Quantity stats_q[] = {Quantity::mean, Quantity::rn, Quantity::sqrt_variance, Quantity::rv};
  for (int i = 0; i < 4; ++i) {
    table.push_back({std::string("3") + panel[i], stats_q[i], 0.98, 0, 100, 1});
    table.push_back({std::string("4") + panel[i], stats_q[i], 0.99, 0, 100, 1});
  }
  // Quadrature squeezing and its ratio vs s, split by parity, m = 0..10,
  // at t = 0.9 (fig 5) and 0.99 (fig 6).
  for (const double t : {0.9, 0.99}) {
    const char* digit = (t == 0.9) ? "5" : "6";
    table.push_back({std::string(digit) + "a", Quantity::dx2, t, 0, 20, 2});
    table.push_back({std::string(digit) + "b", Quantity::dx2, t, 1, 21, 2});
    table.push_back({std::string(digit) + "c", Quantity::rs, t, 0, 20, 2});
    table.push_back({std::string(digit) + "d", Quantity::rs, t, 1, 21, 2});
  }
  // Phase-estimation bound and gain vs s for n = 0..100.
  table.push_back({"7a", Quantity::qcr, 0.98, 0, 100, 1});
  table.push_back({"7b", Quantity::qcr, 0.99, 0, 100, 1});
  table.push_back({"7c", Quantity::gain_db, 0.98, 0, 100, 1});
  table.push_back({"7d", Quantity::gain_db, 0.99, 0, 100, 1});
  return table;
}

}  // namespace

const std::vector<FigureSpec>& figure_table() {
  static const std::vector<FigureSpec> table = build_table();
  return table;
}

std::optional<FigureSpec> find_figure(const std::string& id) {
  for (const FigureSpec& spec : figure_table()) {
    if (spec.id == id) return spec;
  }
  return std::nullopt;
}

}  // namespace herald::cli
