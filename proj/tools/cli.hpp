#pragma once

#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "herald/stats.hpp"

namespace herald::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitValidation = 4;

// Command-line level mistakes (bad spec grammar, unknown names); rendered as
// usage errors, unlike DomainError which reports invalid physics parameters.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Entry point used by main() and by the CLI tests; args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// %.12g rendering used by the s,t,n,quantity,value schema; %.17g for the
// state/prob listings whose spot checks are parsed back from text.
std::string format_g12(double v);
std::string format_g17(double v);

// Quantity vocabulary of the CSV schema and sweep specs.
enum class Quantity {
  mean,
  variance,
  sqrt_variance,
  var_x1,
  var_x2,
  dx2,
  qfi,
  qcr,
  gain_db,
  rn,
  rv,
  rs,
  prob,
};

const char* quantity_name(Quantity q);
std::optional<Quantity> parse_quantity(const std::string& name);
std::vector<Quantity> all_quantities();

// Value of one quantity at (params, n); stats must be compute_stats(params, n).
double eval_quantity(const ModelParams& params, int n, const HeraldStats& stats, Quantity q);

// Figure-panel registry: every dataset is regenerable from the id alone.
struct FigureSpec {
  std::string id;
  Quantity quantity;
  double t;
  int n_first, n_last, n_step;
};

const std::vector<FigureSpec>& figure_table();
std::optional<FigureSpec> find_figure(const std::string& id);

// Sweep specification file contents (flat key = value lists, version header).
struct SweepSpec {
  std::vector<double> s_values;
  std::vector<double> t_values;
  std::vector<int> n_values;
  std::vector<Quantity> quantities;
  std::string output_path;  // optional "out = ..." entry
};

// Throws DomainError on grammar or vocabulary violations (reported as usage).
SweepSpec parse_sweep_spec(std::istream& in);

// Rows in lexicographic (s, t, n, quantity) order; grid points may be
// evaluated concurrently, output order never depends on scheduling.
void write_sweep_csv(const SweepSpec& spec, std::ostream& out);

}  // namespace herald::cli
