#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "herald/errors.hpp"
#include "herald/heralding.hpp"
#include "herald/states.hpp"
#include "herald/validation.hpp"

namespace herald::cli {
namespace {

namespace fs = std::filesystem;

std::string default_out_dir() {
  if (const char* env = std::getenv("HERALD_OUT_DIR")) {
    if (*env != '\0') return env;
  }
  return ".";
}

// stats/state/prob print to stdout unless --out redirects them to a file.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DomainError("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void render_stats_table(const HeraldStats& st, std::ostream& out) {
  const auto row = [&out](const char* name, const std::string& value) {
    out << std::left << std::setw(14) << name << value << '\n';
  };
  row("s", format_g12(st.s));
  row("t", format_g12(st.t));
  row("n", std::to_string(st.n));
  row("mean", format_g12(st.mean));
  row("second_moment", format_g12(st.second_moment));
  row("variance", format_g12(st.variance));
  row("var_x1", format_g12(st.var_x1));
  row("var_x2", format_g12(st.var_x2));
  row("qfi", format_g12(st.qfi));
  row("qcr", format_g12(st.qcr));
  row("rn", format_g12(st.rn));
  row("rv", format_g12(st.rv));
  row("rs", format_g12(st.rs));
  row("gain_db", format_g12(st.gain_db));
}

void render_stats_record(const HeraldStats& st, std::ostream& out) {
  out << "{\"s\": " << format_g12(st.s) << ", \"t\": " << format_g12(st.t)
      << ", \"n\": " << st.n << ", \"mean\": " << format_g12(st.mean)
      << ", \"second_moment\": " << format_g12(st.second_moment)
      << ", \"variance\": " << format_g12(st.variance)
      << ", \"var_x1\": " << format_g12(st.var_x1)
      << ", \"var_x2\": " << format_g12(st.var_x2) << ", \"qfi\": " << format_g12(st.qfi)
      << ", \"qcr\": " << format_g12(st.qcr) << ", \"rn\": " << format_g12(st.rn)
      << ", \"rv\": " << format_g12(st.rv) << ", \"rs\": " << format_g12(st.rs)
      << ", \"gain_db\": " << format_g12(st.gain_db) << "}\n";
}

void render_stats_csv(const ModelParams& params, int n, const HeraldStats& st,
                      std::ostream& out) {
  out << "s,t,n,quantity,value\n";
  for (const Quantity q : all_quantities()) {
    if (q == Quantity::prob) continue;  // heralding probability lives in `prob`
    out << format_g12(st.s) << ',' << format_g12(st.t) << ',' << n << ','
        << quantity_name(q) << ',' << format_g12(eval_quantity(params, n, st, q)) << '\n';
  }
}

int cmd_stats(double s, double t, int n, const std::string& format,
              const std::string& out_path, std::ostream& out) {
  const ModelParams params(s, t);
  const HeraldStats st = compute_stats(params, n);
  OutputTarget target(out_path, out);
  if (format == "table") {
    render_stats_table(st, target.get());
  } else if (format == "json-like-record") {
    render_stats_record(st, target.get());
  } else {
    render_stats_csv(params, n, st, target.get());
  }
  return kExitOk;
}

int cmd_state(double s, double t, int n, double cutoff, const std::string& out_path,
              std::ostream& out) {
  const ModelParams params(s, t);
  const FockVector v = heralded_amplitudes(params, n, cutoff);
  OutputTarget target(out_path, out);
  std::ostream& os = target.get();
  os << "# herald state listing\n";
  os << "# s=" << format_g12(s) << " t=" << format_g12(t) << " n=" << n
     << " cutoff=" << format_g12(cutoff) << '\n';
  os << "# trunc_n=" << v.trunc_n << " tail_bound=" << format_g12(v.tail_bound) << '\n';
  os << "# columns=fock_number,amplitude\n";
  for (std::size_t k = 0; k < v.amps.size(); ++k) {
    os << v.fock_number(k) << ',' << format_g17(v.amps[k]) << '\n';
  }
  return kExitOk;
}

int cmd_prob(double s, double t, int n_max, const std::string& out_path, std::ostream& out) {
  const ModelParams params(s, t);
  const HeraldDistribution dist = herald_distribution(params, n_max);
  OutputTarget target(out_path, out);
  std::ostream& os = target.get();
  os << "# herald probability listing\n";
  os << "# s=" << format_g12(s) << " t=" << format_g12(t) << " nmax=" << n_max << '\n';
  os << "# columns=n,probability\n";
  for (std::size_t n = 0; n < dist.probs.size(); ++n) {
    os << n << ',' << format_g17(dist.probs[n]) << '\n';
  }
  os << "tail," << format_g17(dist.tail) << '\n';
  return kExitOk;
}

int cmd_figure(const std::string& id, const std::string& out_dir, double s_min, double s_max,
               double s_step, std::ostream& out, std::ostream& err) {
  const auto spec = find_figure(id);
  if (!spec) {
    err << "unknown figure id '" << id << "'; valid ids:";
    for (const FigureSpec& f : figure_table()) err << ' ' << f.id;
    err << '\n';
    return kExitUsage;
  }
  if (!(s_min > 0.0) || !(s_max >= s_min) || !(s_step > 0.0)) {
    err << "invalid s grid\n";
    return kExitUsage;
  }
  fs::create_directories(out_dir);
  const fs::path path = fs::path(out_dir) / ("fig_" + spec->id + ".csv");
  std::ofstream os(path);
  if (!os) throw DomainError("cannot open output file '" + path.string() + "'");

  os << "# herald figure dataset\n";
  os << "# version=1\n";
  os << "# figure=" << spec->id << '\n';
  os << "# quantity=" << quantity_name(spec->quantity) << '\n';
  os << "# t=" << format_g12(spec->t) << '\n';
  os << "# n=" << spec->n_first << ".." << spec->n_last << " step " << spec->n_step << '\n';
  os << "# s=" << format_g12(s_min) << ".." << format_g12(s_max) << " step "
     << format_g12(s_step) << '\n';
  os << "# schema=s,t,n,quantity,value\n";
  os << "s,t,n,quantity,value\n";
  const int steps = static_cast<int>((s_max - s_min) / s_step + 1e-9);
  for (int i = 0; i <= steps; ++i) {
    const double s = s_min + i * s_step;
    const ModelParams params(s, spec->t);
    for (int n = spec->n_first; n <= spec->n_last; n += spec->n_step) {
      const HeraldStats st = compute_stats(params, n);
      os << format_g12(s) << ',' << format_g12(spec->t) << ',' << n << ','
         << quantity_name(spec->quantity) << ','
         << format_g12(eval_quantity(params, n, st, spec->quantity)) << '\n';
    }
  }
  out << path.string() << '\n';
  return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& out_path, std::ostream& out) {
  std::ifstream in(config_path);
  if (!in) {
    throw DomainError("cannot read sweep spec '" + config_path + "'");
  }
  const SweepSpec spec = parse_sweep_spec(in);
  std::string path = out_path;
  if (path.empty()) path = spec.output_path;
  if (path.empty()) path = (fs::path(default_out_dir()) / "sweep.csv").string();
  std::ofstream os(path);
  if (!os) throw DomainError("cannot open output file '" + path + "'");
  write_sweep_csv(spec, os);
  out << path << '\n';
  return kExitOk;
}

int cmd_validate(bool deep, double perturb, std::ostream& out) {
  ValidateOptions options;
  options.deep = deep;
  options.perturb = perturb;
  const auto results = run_validation(options);
  bool all_pass = true;
  for (const CheckResult& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.group << ": " << r.detail << '\n';
    all_pass = all_pass && r.pass;
  }
  out << (all_pass ? "validation passed" : "validation FAILED") << " (" << results.size()
      << " groups)\n";
  return all_pass ? kExitOk : kExitValidation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"numerics for photon-subtraction-heralded squeezed vacuum states"};
  app.name("herald");
  app.require_subcommand(1);

  double s = 1.0, t = 1.0;
  int n = 0, n_max = 32;
  double cutoff = 1e-12;
  std::string format = "table", out_path, figure_id, config_path;
  std::string out_dir = default_out_dir();
  double s_min = 0.05, s_max = 3.0, s_step = 0.05;
  bool deep = false;
  double perturb = 0.0;

  auto* stats_cmd = app.add_subcommand("stats", "statistics record for one (s, t, n)");
  stats_cmd->add_option("--s", s, "squeezing amplitude (> 0)")->required();
  stats_cmd->add_option("--t", t, "beam-splitter transmittance in (0, 1]")->required();
  stats_cmd->add_option("--n", n, "detected photon count (>= 0)")->required();
  stats_cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json-like-record", "csv"}));
  stats_cmd->add_option("--out", out_path, "write to file instead of stdout");

  auto* state_cmd = app.add_subcommand("state", "amplitude listing of a heralded state");
  state_cmd->add_option("--s", s, "squeezing amplitude (> 0)")->required();
  state_cmd->add_option("--t", t, "beam-splitter transmittance in (0, 1]")->required();
  state_cmd->add_option("--n", n, "detected photon count (>= 0)")->required();
  state_cmd->add_option("--cutoff", cutoff, "certified truncation tail (default 1e-12)");
  state_cmd->add_option("--out", out_path, "write to file instead of stdout");

  auto* prob_cmd = app.add_subcommand("prob", "heralding probability distribution");
  prob_cmd->add_option("--s", s, "squeezing amplitude (> 0)")->required();
  prob_cmd->add_option("--t", t, "beam-splitter transmittance in (0, 1]")->required();
  prob_cmd->add_option("--nmax", n_max, "largest detected count listed")->required();
  prob_cmd->add_option("--out", out_path, "write to file instead of stdout");

  auto* figure_cmd = app.add_subcommand("figure", "regenerate a figure dataset");
  figure_cmd->add_option("--id", figure_id, "panel id, e.g. 3a")->required();
  figure_cmd->add_option("--out", out_dir, "output directory (default HERALD_OUT_DIR or .)");
  figure_cmd->add_option("--smin", s_min, "s grid start (default 0.05)");
  figure_cmd->add_option("--smax", s_max, "s grid end (default 3.0)");
  figure_cmd->add_option("--sstep", s_step, "s grid step (default 0.05)");

  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a grid from a spec file");
  sweep_cmd->add_option("--config", config_path, "sweep spec file")->required();
  sweep_cmd->add_option("--out", out_path, "output CSV (default from spec or HERALD_OUT_DIR)");

  auto* validate_cmd = app.add_subcommand("validate", "run the invariant suite");
  validate_cmd->add_flag("--deep", deep, "extend the oracle grid (s = 1.5)");
  validate_cmd->add_option("--perturb", perturb,
                           "test hook: offset one amplitude before the oracle comparison");

  std::vector<const char*> argv;
  argv.push_back("herald");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (stats_cmd->parsed()) return cmd_stats(s, t, n, format, out_path, out);
    if (state_cmd->parsed()) return cmd_state(s, t, n, cutoff, out_path, out);
    if (prob_cmd->parsed()) return cmd_prob(s, t, n_max, out_path, out);
    if (figure_cmd->parsed()) return cmd_figure(figure_id, out_dir, s_min, s_max, s_step, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(config_path, out_path, out);
    if (validate_cmd->parsed()) return cmd_validate(deep, perturb, out);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace herald::cli
