#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "threshold/graph.hpp"

namespace threshold {

// Default enumeration cap: 2^(14-2) = 4096 graphs, each with a small dense
// eigensolve, keeps a full scan well under a minute.
inline constexpr int kDefaultScanCap = 14;

// All 2^(n-2) connected threshold graphs on n vertices, in lexicographic
// order of the expanded creation string.
std::vector<Graph> enumerate_connected(int n, int cap = kDefaultScanCap);

// The n - 2 nearly-anti-regular graphs per order whose optimality is not
// settled by interlacing.  Even n = 2k + 2: s_1 = 2 with exactly one of
// t_1, s_2, t_2, ..., s_k, t_k equal to 2 (in that order), then s_1 = 3 with
// all other entries 1.  Odd n = 2k + 1: s_1 = 1 with exactly one of
// t_1, s_2, t_2, ..., s_k, t_k equal to 2.
struct CriticalList {
  int n = 0;
  std::vector<std::string> strings;  // compact notation
};
CriticalList critical_graphs(int n);

struct ScanViolation {
  std::string graph;  // expanded creation string
  std::string check;
  double margin = 0.0;
};

struct ExtremalEntry {
  std::string graph;
  double value = 0.0;
};

struct ScanReport {
  int n = 0;
  std::int64_t graphs_scanned = 0;
  std::vector<std::string> checks_run;
  std::vector<ScanViolation> violations;
  // Conjecture evidence with negative margin; reported, never a failure.
  std::vector<ScanViolation> counterexamples;
  // Keys: min_mu_plus, max_mu_minus, min_lambda_min, max_lambda_max.
  // Ties go to the lexicographically smallest creation string.
  std::map<std::string, ExtremalEntry> extremal;
  double wall_seconds = 0.0;
};

// The eight per-graph checks scan() understands.
const std::vector<std::string>& scan_check_names();

// Runs the selected checks on every connected threshold graph of order n.
// The string space may be split across jobs worker threads; results are
// merged in enumeration order, so the report is identical for any job
// count.  Throws std::invalid_argument on an unknown check name or an out of
// range order.
ScanReport scan(int n, const std::vector<std::string>& checks, int jobs = 1,
                int cap = kDefaultScanCap);

// The graph attaining the minimal least eigenvalue over the full
// enumeration (ties broken lexicographically) and that eigenvalue.
std::pair<Graph, double> extremal_min_eigenvalue(int n, int cap = kDefaultScanCap);

}  // namespace threshold
