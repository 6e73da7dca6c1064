#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "herald/errors.hpp"

namespace herald::cli {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

double parse_real(const std::string& s, const std::string& key) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == nullptr || *end != '\0') {
    throw UsageError("sweep spec: cannot parse '" + s + "' in list '" + key + "'");
  }
  return v;
}

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

int thread_count(std::size_t work_items) {
  unsigned n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("HERALD_THREADS")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) n = static_cast<unsigned>(parsed);
  }
  n = std::min<unsigned>(std::max(1u, n), 8u);
  return static_cast<int>(std::min<std::size_t>(n, std::max<std::size_t>(1, work_items)));
}

}  // namespace

SweepSpec parse_sweep_spec(std::istream& in) {
  SweepSpec spec;
  bool version_seen = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("sweep spec line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!version_seen) {
      if (key != "version" || value != "1") {
        throw UsageError("sweep spec must start with 'version = 1'");
      }
      version_seen = true;
      continue;
    }
    if (key == "s") {
      for (const auto& item : split_list(value)) spec.s_values.push_back(parse_real(item, key));
    } else if (key == "t") {
      for (const auto& item : split_list(value)) spec.t_values.push_back(parse_real(item, key));
    } else if (key == "n") {
      for (const auto& item : split_list(value)) {
        spec.n_values.push_back(static_cast<int>(parse_real(item, key)));
      }
    } else if (key == "quantities") {
      for (const auto& item : split_list(value)) {
        const auto q = parse_quantity(item);
        if (!q) throw UsageError("sweep spec: unknown quantity '" + item + "'");
        spec.quantities.push_back(*q);
      }
    } else if (key == "out") {
      spec.output_path = value;
    } else {
      throw UsageError("sweep spec: unknown key '" + key + "'");
    }
  }
  if (!version_seen) throw UsageError("sweep spec must start with 'version = 1'");
  if (spec.s_values.empty() || spec.t_values.empty() || spec.n_values.empty() ||
      spec.quantities.empty()) {
    throw UsageError("sweep spec needs nonempty s, t, n and quantities lists");
  }
  sort_unique(spec.s_values);
  sort_unique(spec.t_values);
  sort_unique(spec.n_values);
  std::sort(spec.quantities.begin(), spec.quantities.end(),
            [](Quantity a, Quantity b) {
              return std::string(quantity_name(a)) < quantity_name(b);
            });
  spec.quantities.erase(std::unique(spec.quantities.begin(), spec.quantities.end()),
                        spec.quantities.end());
  return spec;
}

void write_sweep_csv(const SweepSpec& spec, std::ostream& out) {
  struct Point {
    double s, t;
    int n;
    HeraldStats stats;
  };
  std::vector<Point> points;
  for (const double s : spec.s_values) {
    for (const double t : spec.t_values) {
      for (const int n : spec.n_values) {
        ModelParams params(s, t);  // validates the grid up front
        if (n < 0) throw UsageError("sweep spec: herald count must be >= 0");
        points.push_back({s, t, n, {}});
      }
    }
  }

  // Grid points are independent; rows are emitted strictly in grid order
  // afterwards, so scheduling cannot leak into the file.
  const int workers = thread_count(points.size());
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      Point& p = points[i];
      p.stats = compute_stats(ModelParams(p.s, p.t), p.n);
    }
  };
  if (workers > 1) {
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  } else {
    work();
  }

  out << "# herald sweep dataset\n";
  out << "# version=1\n";
  out << "# schema=s,t,n,quantity,value\n";
  out << "s,t,n,quantity,value\n";
  for (const Point& p : points) {
    const ModelParams params(p.s, p.t);
    for (const Quantity q : spec.quantities) {
      out << format_g12(p.s) << ',' << format_g12(p.t) << ',' << p.n << ','
          << quantity_name(q) << ',' << format_g12(eval_quantity(params, p.n, p.stats, q))
          << '\n';
    }
  }
}

}  // namespace herald::cli
