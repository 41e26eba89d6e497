#include "threshold/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace threshold {

namespace {

Spectrum graph_spectrum(const Graph& g) { return eigenvalues(adjacency(g)); }

}  // namespace

Inertia inertia_formula(const Graph& g) {
  const int k = g.block_count();
  const int s = g.isolated_total();
  const int t = g.dominating_total();
  return Inertia{t, s - k, k};
}

TrivialMultiplicities trivial_multiplicities(const Graph& g) {
  const int k = g.block_count();
  const int s = g.isolated_total();
  const int t = g.dominating_total();
  const bool s1_is_one = g.blocks().front().zeros == 1;
  return TrivialMultiplicities{s1_is_one ? t - k + 1 : t - k, s - k};
}

NontrivialCounts nontrivial_counts(const Graph& g) {
  const int k = g.block_count();
  const bool s1_is_one = g.blocks().front().zeros == 1;
  return NontrivialCounts{s1_is_one ? k - 1 : k, k};
}

MuIndices mu_indices(const Graph& g) {
  const int n = g.order();
  const int k = g.block_count();
  const bool s1_is_one = g.blocks().front().zeros == 1;
  MuIndices mi;
  mi.plus = n - k + 1;
  if (s1_is_one) {
    if (k >= 2) mi.minus = k - 1;
  } else {
    mi.minus = k;
  }
  return mi;
}

std::pair<double, double> omega() {
  const double lo = (-1.0 - std::sqrt(2.0)) / 2.0;
  return {lo, -1.0 - lo};  // hi defined as -1 - lo so that lo + hi == -1 exactly
}

FreeInterval free_interval(const Graph& g) {
  const int k = g.block_count();
  const int m = g.blocks().front().zeros == 1 ? 2 * k : 2 * k + 1;
  if (m == 2) return FreeInterval{omega().first, 1.0, 2};
  const Spectrum s = graph_spectrum(antiregular(m));
  return FreeInterval{*mu_minus(s), mu_plus(s), m};
}

CheckResult verify_interlacing(const Embedding& e, double tol) {
  if (!e.valid()) throw std::invalid_argument("embedding does not witness an induced subgraph");
  const Spectrum host = graph_spectrum(e.host);
  const Spectrum guest = graph_spectrum(e.guest);
  const int n = host.size();
  const int m = guest.size();
  double min_slack = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= m; ++i) {
    const double lower = guest.values[i - 1] - host.values[i - 1];
    const double upper = host.values[n - m + i - 1] - guest.values[i - 1];
    min_slack = std::min({min_slack, lower, upper});
  }
  return CheckResult{min_slack >= -tol, min_slack};
}

std::vector<ParityRow> parity_sequences(int k_max) {
  if (k_max < 2) throw std::invalid_argument("parity table needs k_max >= 2");
  std::vector<ParityRow> rows;
  rows.reserve(static_cast<std::size_t>(k_max) - 1);
  for (int k = 2; k <= k_max; ++k) {
    const Spectrum even = graph_spectrum(antiregular(2 * k));
    const Spectrum odd = graph_spectrum(antiregular(2 * k + 1));
    rows.push_back(ParityRow{k, *mu_minus(even), mu_plus(even), *mu_minus(odd), mu_plus(odd)});
  }
  return rows;
}

std::pair<Graph, Graph> sandwich(const Graph& g) {
  int min_s = g.blocks().front().zeros, min_t = g.blocks().front().ones;
  int max_s = min_s, max_t = min_t;
  for (const Block& b : g.blocks()) {
    min_s = std::min(min_s, b.zeros);
    min_t = std::min(min_t, b.ones);
    max_s = std::max(max_s, b.zeros);
    max_t = std::max(max_t, b.ones);
  }
  const auto k = static_cast<std::size_t>(g.block_count());
  return {Graph(std::vector<Block>(k, Block{min_s, min_t})),
          Graph(std::vector<Block>(k, Block{max_s, max_t}))};
}

CheckResult sandwich_check(const Graph& g, double tol) {
  const auto [inner, outer] = sandwich(g);
  const Spectrum sg = graph_spectrum(g);
  const Spectrum si = graph_spectrum(inner);
  const Spectrum so = graph_spectrum(outer);
  const int k = g.block_count();
  const int n = sg.size();
  const int ni = si.size();
  const int no = so.size();
  double min_slack = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= k; ++i) {
    min_slack = std::min(min_slack, sg.values[i - 1] - so.values[i - 1]);
    min_slack = std::min(min_slack, si.values[i - 1] - sg.values[i - 1]);
  }
  for (int j = 0; j <= k - 1; ++j) {
    min_slack = std::min(min_slack, sg.values[n - 1 - j] - si.values[ni - 1 - j]);
    min_slack = std::min(min_slack, so.values[no - 1 - j] - sg.values[n - 1 - j]);
  }
  return CheckResult{min_slack >= -tol, min_slack};
}

std::pair<double, double> closed_form_extremes(int sigma, int tau) {
  if (sigma < 1 || tau < 1) throw std::invalid_argument("block sizes must be positive");
  const double tm1 = tau - 1.0;
  const double root = std::sqrt(tm1 * tm1 + 4.0 * tau * static_cast<double>(sigma));
  return {(tm1 - root) / 2.0, (tm1 + root) / 2.0};
}

BoundsReport spectral_bounds(const Graph& g) {
  BoundsReport report;
  const int k = g.block_count();
  int suffix_ones = g.dominating_total();
  int prefix_zeros = 0;
  report.per_block.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    prefix_zeros += g.blocks()[static_cast<std::size_t>(i)].zeros;
    const auto [lo, hi] = closed_form_extremes(prefix_zeros, suffix_ones);
    report.per_block.push_back(BlockBound{prefix_zeros, suffix_ones, lo, hi});
    suffix_ones -= g.blocks()[static_cast<std::size_t>(i)].ones;
  }
  report.lower_bound_lambda_max = report.per_block.front().hi;
  report.upper_bound_lambda_min = report.per_block.front().lo;
  for (const BlockBound& b : report.per_block) {
    report.lower_bound_lambda_max = std::max(report.lower_bound_lambda_max, b.hi);
    report.upper_bound_lambda_min = std::min(report.upper_bound_lambda_min, b.lo);
  }
  return report;
}

ConjectureMargins conjecture_margins(const Graph& g) {
  const Spectrum sg = graph_spectrum(g);
  const Spectrum sa = graph_spectrum(antiregular(g.order()));
  ConjectureMargins m;
  m.pos = mu_plus(sg) - mu_plus(sa);
  const auto g_minus = mu_minus(sg);
  const auto a_minus = mu_minus(sa);
  if (g_minus && a_minus) m.neg = *a_minus - *g_minus;
  return m;
}

}  // namespace threshold
