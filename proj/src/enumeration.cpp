#include "threshold/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>

#include "threshold/analysis.hpp"
#include "threshold/spectrum.hpp"

namespace threshold {

namespace {

std::string string_from_mask(int n, std::uint64_t mask) {
  std::string b(static_cast<std::size_t>(n), '0');
  b.back() = '1';
  for (int i = 0; i < n - 2; ++i)
    if (mask >> (n - 3 - i) & 1) b[static_cast<std::size_t>(i) + 1] = '1';
  return b;
}

void check_order(int n, int cap) {
  if (n < 2) throw std::invalid_argument("enumeration needs n >= 2");
  if (n > cap) throw std::invalid_argument("order exceeds the enumeration cap");
  if (cap > 62) throw std::invalid_argument("enumeration cap exceeds 62");
}

// Tolerances fixed for scan checks: numeric theorem inequalities may bind,
// so they get a small negative slack; conjecture margins below the same
// slack become counterexample records.
constexpr double kSlack = 1e-8;
constexpr double kCounterexampleSlack = 1e-9;

struct PartialReport {
  std::vector<ScanViolation> violations;
  std::vector<ScanViolation> counterexamples;
  std::map<std::string, ExtremalEntry> extremal;
};

struct CheckSet {
  bool inertia = false;
  bool omega_free = false;
  bool refined_interval = false;
  bool multiplicities = false;
  bool simple_nontrivial = false;
  bool conjecture = false;
  bool bounds = false;
  bool sandwich = false;
};

struct ScanContext {
  int n = 0;
  CheckSet checks;
  std::vector<Spectrum> antiregular_spectra;  // index by order, 2..n (and n itself)
  std::optional<double> an_mu_minus;
  double an_mu_plus = 0.0;
  std::string an_string;
};

// smaller-is-better when minimize, with lexicographic tie-break
void update_extremal(std::map<std::string, ExtremalEntry>& ext, const std::string& key,
                     const std::string& graph, double value, bool minimize) {
  auto it = ext.find(key);
  if (it == ext.end()) {
    ext.emplace(key, ExtremalEntry{graph, value});
    return;
  }
  ExtremalEntry& best = it->second;
  const bool better = minimize ? value < best.value : value > best.value;
  if (better || (value == best.value && graph < best.graph)) best = ExtremalEntry{graph, value};
}

void scan_one(const ScanContext& ctx, const Graph& g, const std::string& b, PartialReport& out) {
  const Spectrum s = eigenvalues(adjacency(g));
  const double tol = s.tol;

  update_extremal(out.extremal, "min_lambda_min", b, s.min(), true);
  update_extremal(out.extremal, "max_lambda_max", b, s.max(), false);
  const double mp = mu_plus(s);
  update_extremal(out.extremal, "min_mu_plus", b, mp, true);
  const auto mm = mu_minus(s);
  if (mm) update_extremal(out.extremal, "max_mu_minus", b, *mm, false);

  if (ctx.checks.inertia) {
    const Inertia formula = inertia_formula(g);
    const Inertia numeric = inertia_numeric(s);
    if (!(formula == numeric)) {
      const double diff = std::abs(formula.negatives - numeric.negatives) +
                          std::abs(formula.zeros - numeric.zeros) +
                          std::abs(formula.positives - numeric.positives);
      out.violations.push_back({b, "inertia", -diff});
    }
  }

  if (ctx.checks.multiplicities) {
    const TrivialMultiplicities tm = trivial_multiplicities(g);
    const int m1 = multiplicity(s, -1.0);
    const int m0 = multiplicity(s, 0.0);
    if (m1 != tm.minus_one || m0 != tm.zero) {
      const double diff = std::abs(m1 - tm.minus_one) + std::abs(m0 - tm.zero);
      out.violations.push_back({b, "multiplicities", -diff});
    }
  }

  if (ctx.checks.omega_free) {
    const auto [olo, ohi] = omega();
    double worst = 0.0;
    for (double v : s.values) {
      if (std::fabs(v + 1.0) <= tol || std::fabs(v) <= tol) continue;
      if (v >= olo + tol && v <= ohi - tol)
        worst = std::min(worst, -std::min(v - (olo + tol), (ohi - tol) - v));
    }
    if (worst < 0.0) out.violations.push_back({b, "omega_free", worst});
  }

  if (ctx.checks.refined_interval) {
    const int k = g.block_count();
    const int m = g.blocks().front().zeros == 1 ? 2 * k : 2 * k + 1;
    double lo;
    double hi;
    if (m == 2) {
      lo = omega().first;
      hi = 1.0;
    } else {
      const Spectrum& sm = ctx.antiregular_spectra[static_cast<std::size_t>(m)];
      lo = *mu_minus(sm);
      hi = mu_plus(sm);
    }
    double worst = 0.0;
    for (double v : s.values) {
      // forbidden zones: (lo+tol, -1-tol), (-1+tol, -tol), (tol, hi-tol)
      if (v > lo + tol && v < -1.0 - tol)
        worst = std::min(worst, -std::min(v - (lo + tol), (-1.0 - tol) - v));
      if (v > -1.0 + tol && v < -tol)
        worst = std::min(worst, -std::min(v - (-1.0 + tol), -tol - v));
      if (v > tol && v < hi - tol) worst = std::min(worst, -std::min(v - tol, (hi - tol) - v));
    }
    if (worst < 0.0) out.violations.push_back({b, "refined_interval", worst});
  }

  if (ctx.checks.simple_nontrivial) {
    int worst_cluster = 1;
    for (double v : s.values) {
      if (std::fabs(v + 1.0) <= tol || std::fabs(v) <= tol) continue;
      worst_cluster = std::max(worst_cluster, multiplicity(s, v));
    }
    if (worst_cluster > 1)
      out.violations.push_back({b, "simple_nontrivial", -(worst_cluster - 1.0)});
  }

  if (ctx.checks.conjecture && b != ctx.an_string) {
    const double pos_margin = mp - ctx.an_mu_plus;
    if (pos_margin < -kCounterexampleSlack)
      out.counterexamples.push_back({b, "conjecture_pos", pos_margin});
    if (mm && ctx.an_mu_minus) {
      const double neg_margin = *ctx.an_mu_minus - *mm;
      if (neg_margin < -kCounterexampleSlack)
        out.counterexamples.push_back({b, "conjecture_neg", neg_margin});
    }
  }

  if (ctx.checks.bounds) {
    const BoundsReport br = spectral_bounds(g);
    const double slack =
        std::min(s.max() - br.lower_bound_lambda_max, br.upper_bound_lambda_min - s.min());
    if (slack < -kSlack) out.violations.push_back({b, "bounds", slack});
  }

  if (ctx.checks.sandwich) {
    const CheckResult r = sandwich_check(g, kSlack);
    if (!r.pass) out.violations.push_back({b, "sandwich", r.min_slack});
  }
}

CheckSet parse_checks(const std::vector<std::string>& names) {
  CheckSet cs;
  for (const std::string& name : names) {
    if (name == "inertia")
      cs.inertia = true;
    else if (name == "omega_free")
      cs.omega_free = true;
    else if (name == "refined_interval")
      cs.refined_interval = true;
    else if (name == "multiplicities")
      cs.multiplicities = true;
    else if (name == "simple_nontrivial")
      cs.simple_nontrivial = true;
    else if (name == "conjecture")
      cs.conjecture = true;
    else if (name == "bounds")
      cs.bounds = true;
    else if (name == "sandwich")
      cs.sandwich = true;
    else
      throw std::invalid_argument("unknown check name: " + name);
  }
  return cs;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n, int cap) {
  check_order(n, cap);
  const std::uint64_t total = n == 2 ? 1 : std::uint64_t{1} << (n - 2);
  std::vector<Graph> graphs;
  graphs.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    graphs.push_back(Graph::parse(string_from_mask(n, mask)));
  return graphs;
}

CriticalList critical_graphs(int n) {
  if (n < 4) throw std::invalid_argument("critical graphs need n >= 4");
  CriticalList list;
  list.n = n;
  const int k = n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2;
  const int base_s1 = n % 2 == 0 ? 2 : 1;
  // Entries t_1, s_2, t_2, ..., s_k, t_k in string order; bump one to 2.
  for (int pos = 0; pos < 2 * k - 1; ++pos) {
    std::vector<Block> blocks(static_cast<std::size_t>(k), Block{1, 1});
    blocks[0].zeros = base_s1;
    if (pos % 2 == 0)
      blocks[static_cast<std::size_t>(pos / 2)].ones = 2;
    else
      blocks[static_cast<std::size_t>(pos / 2) + 1].zeros = 2;
    list.strings.push_back(Graph(std::move(blocks)).compact());
  }
  if (n % 2 == 0) {
    std::vector<Block> blocks(static_cast<std::size_t>(k), Block{1, 1});
    blocks[0].zeros = 3;
    list.strings.push_back(Graph(std::move(blocks)).compact());
  }
  return list;
}

const std::vector<std::string>& scan_check_names() {
  static const std::vector<std::string> names = {
      "inertia",           "omega_free", "refined_interval", "multiplicities",
      "simple_nontrivial", "conjecture", "bounds",           "sandwich"};
  return names;
}

ScanReport scan(int n, const std::vector<std::string>& checks, int jobs, int cap) {
  check_order(n, cap);
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  ScanContext ctx;
  ctx.n = n;
  ctx.checks = parse_checks(checks);
  ctx.antiregular_spectra.resize(static_cast<std::size_t>(n) + 1);
  for (int m = 2; m <= n; ++m)
    ctx.antiregular_spectra[static_cast<std::size_t>(m)] = eigenvalues(adjacency(antiregular(m)));
  const Spectrum& an = ctx.antiregular_spectra[static_cast<std::size_t>(n)];
  ctx.an_mu_minus = mu_minus(an);
  ctx.an_mu_plus = mu_plus(an);
  ctx.an_string = antiregular(n).expanded();

  const std::uint64_t total = n == 2 ? 1 : std::uint64_t{1} << (n - 2);
  const int workers = static_cast<int>(std::min<std::uint64_t>(total, jobs));
  std::vector<PartialReport> parts(static_cast<std::size_t>(workers));

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi, PartialReport& out) {
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      const std::string b = string_from_mask(n, mask);
      scan_one(ctx, Graph::parse(b), b, out);
    }
  };

  if (workers == 1) {
    run_range(0, total, parts[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t hi = std::min(total, lo + chunk);
      pool.emplace_back(run_range, lo, hi, std::ref(parts[static_cast<std::size_t>(w)]));
    }
    for (auto& th : pool) th.join();
  }

  ScanReport report;
  report.n = n;
  report.graphs_scanned = static_cast<std::int64_t>(total);
  report.checks_run = checks;
  for (const PartialReport& part : parts) {
    report.violations.insert(report.violations.end(), part.violations.begin(),
                             part.violations.end());
    report.counterexamples.insert(report.counterexamples.end(), part.counterexamples.begin(),
                                  part.counterexamples.end());
    for (const auto& [key, entry] : part.extremal) {
      const bool minimize = key.starts_with("min_");
      update_extremal(report.extremal, key, entry.graph, entry.value, minimize);
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::pair<Graph, double> extremal_min_eigenvalue(int n, int cap) {
  if (n < 3) throw std::invalid_argument("extremal search needs n >= 3");
  check_order(n, cap);
  std::optional<Graph> best;
  double best_value = std::numeric_limits<double>::infinity();
  const std::uint64_t total = std::uint64_t{1} << (n - 2);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = Graph::parse(string_from_mask(n, mask));
    const double lm = eigenvalues(adjacency(g)).min();
    if (lm < best_value) {
      best_value = lm;
      best = std::move(g);
    }
  }
  return {*best, best_value};
}

}  // namespace threshold
