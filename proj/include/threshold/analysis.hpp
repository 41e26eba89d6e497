#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "threshold/embedding.hpp"
#include "threshold/graph.hpp"
#include "threshold/spectrum.hpp"

namespace threshold {

// Inertia (negatives, zeros, positives) = (t, s - k, k) straight from the
// block form; must agree with inertia_numeric of the computed spectrum.
Inertia inertia_formula(const Graph& g);

struct TrivialMultiplicities {
  int minus_one = 0;  // multiplicity of eigenvalue -1
  int zero = 0;       // multiplicity of eigenvalue 0
  friend bool operator==(const TrivialMultiplicities&, const TrivialMultiplicities&) = default;
};

// (t - k, s - k) when s_1 >= 2 and (t - k + 1, s - k) when s_1 = 1.
TrivialMultiplicities trivial_multiplicities(const Graph& g);

struct NontrivialCounts {
  int negatives = 0;
  int positives = 0;
  friend bool operator==(const NontrivialCounts&, const NontrivialCounts&) = default;
};

// k negative / k positive non-trivial eigenvalues when s_1 >= 2;
// (k - 1) negative / k positive when s_1 = 1.
NontrivialCounts nontrivial_counts(const Graph& g);

struct MuIndices {
  std::optional<int> minus;  // 1-based position of mu^- in the sorted spectrum
  int plus = 0;              // 1-based position of mu^+
};

// mu^- sits at lambda_k (s_1 >= 2) or lambda_{k-1} (s_1 = 1, absent when
// k = 1); mu^+ sits at lambda_{n-k+1}.
MuIndices mu_indices(const Graph& g);

// The interval [(-1 - sqrt 2)/2, (-1 + sqrt 2)/2]; no threshold graph has a
// non-trivial eigenvalue inside it.  lo + hi == -1 exactly.
std::pair<double, double> omega();

struct FreeInterval {
  double lo = 0.0;
  double hi = 0.0;
  int source = 0;  // order m of the anti-regular graph the interval came from
};

// Refinement of the omega interval: [mu^-(A_m), mu^+(A_m)] where A_m is the
// largest anti-regular induced subgraph of g.  For m = 2 (complete graphs)
// A_2 has no mu^-, so the interval degenerates to [omega.lo, mu^+(A_2)].
FreeInterval free_interval(const Graph& g);

struct CheckResult {
  bool pass = false;
  double min_slack = 0.0;  // most binding inequality; negative means violated
};

// Verifies both interlacing chains lambda_i(host) <= lambda_i(guest) <=
// lambda_{n-m+i}(host) for a valid embedding; throws std::invalid_argument
// on an invalid one.
CheckResult verify_interlacing(const Embedding& e, double tol = kClassifyTol);

struct ParityRow {
  int k = 0;
  double mu_minus_even = 0.0;  // mu^-(A_{2k})
  double mu_plus_even = 0.0;   // mu^+(A_{2k})
  double mu_minus_odd = 0.0;   // mu^-(A_{2k+1})
  double mu_plus_odd = 0.0;    // mu^+(A_{2k+1})
};

// Rows for k = 2..k_max, computed from numeric anti-regular spectra.  The
// mu^- columns increase strictly toward (-1 - sqrt 2)/2 and the mu^+ columns
// decrease strictly toward (-1 + sqrt 2)/2.
std::vector<ParityRow> parity_sequences(int k_max);

// Uniform-block companions of g: g' repeats (0^min s_i 1^min t_i) k times
// and is an induced subgraph of g; g'' repeats (0^max s_i 1^max t_i) k times
// and contains g.
std::pair<Graph, Graph> sandwich(const Graph& g);

// Evaluates the 2k two-sided eigenvalue inequalities between g and its
// sandwich companions.
CheckResult sandwich_check(const Graph& g, double tol = kClassifyTol);

// The two non-trivial eigenvalues ((tau - 1) -+ sqrt((tau - 1)^2 + 4 tau
// sigma)) / 2 of the graph 0^sigma 1^tau, whose full spectrum is
// {lo, -1 x(tau - 1), 0 x(sigma - 1), hi}.  For sigma = tau = 1 (a single
// edge) lo equals -1 instead of lying strictly below it.
std::pair<double, double> closed_form_extremes(int sigma, int tau);

struct BlockBound {
  int sigma = 0;  // cumulative zero count sum_{j<=i} s_j
  int tau = 0;    // suffix one count sum_{j>=i} t_j
  double lo = 0.0;
  double hi = 0.0;
};

struct BoundsReport {
  std::vector<BlockBound> per_block;
  double lower_bound_lambda_max = 0.0;  // max hi_i <= lambda_max(g)
  double upper_bound_lambda_min = 0.0;  // min lo_i >= lambda_min(g)
};

BoundsReport spectral_bounds(const Graph& g);

struct ConjectureMargins {
  std::optional<double> neg;  // mu^-(A_n) - mu^-(g), absent when g has no mu^-
  double pos = 0.0;           // mu^+(g) - mu^+(A_n)
};

// Evidence for the optimality conjecture: among n-vertex threshold graphs
// A_n is expected to attain the smallest mu^+ and largest mu^-, so both
// margins should be nonnegative.
ConjectureMargins conjecture_margins(const Graph& g);

}  // namespace threshold
