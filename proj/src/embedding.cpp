#include "threshold/embedding.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace threshold {

namespace {

// Leftmost match of target as a subsequence of host; empty when no match.
// Matching every character at its earliest feasible position yields the
// lexicographically smallest witnessing index set.
std::vector<int> greedy_subsequence(const std::string& target, const std::string& host) {
  std::vector<int> indices;
  indices.reserve(target.size());
  std::size_t p = 0;
  for (char c : target) {
    while (p < host.size() && host[p] != c) ++p;
    if (p == host.size()) return {};
    indices.push_back(static_cast<int>(p) + 1);
    ++p;
  }
  return indices;
}

}  // namespace

bool Embedding::valid() const {
  const int m = guest.order();
  if (static_cast<int>(indices.size()) != m) return false;
  int prev = 0;
  for (int v : indices) {
    if (v <= prev || v > host.order()) return false;
    prev = v;
  }
  const std::string hb = host.expanded();
  const std::string gb = guest.expanded();
  auto adjacent = [](const std::string& b, int u, int v) {
    return u != v && b[static_cast<std::size_t>(std::max(u, v)) - 1] == '1';
  };
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      if (adjacent(hb, indices[a - 1], indices[b - 1]) != adjacent(gb, a, b)) return false;
  return true;
}

Embedding largest_antiregular_subgraph(const Graph& g) {
  const int k = g.block_count();
  const int m = g.blocks().front().zeros == 1 ? 2 * k : 2 * k + 1;
  Graph am = antiregular(m);
  auto indices = greedy_subsequence(am.expanded(), g.expanded());
  if (indices.empty())
    throw std::logic_error("no alternating subsequence of the guaranteed length");
  return Embedding{g, std::move(am), std::move(indices)};
}

Embedding smallest_antiregular_supergraph(const Graph& g) {
  const int n = g.order();
  const int k = g.block_count();
  const int nn = g.blocks().front().zeros == 1 ? 2 * (n - k) : 2 * (n - k) - 1;
  Graph an = antiregular(nn);
  auto indices = greedy_subsequence(g.expanded(), an.expanded());
  if (indices.empty())
    throw std::logic_error("creation string does not fit in the guaranteed supergraph");
  return Embedding{std::move(an), g, std::move(indices)};
}

}  // namespace threshold
