#pragma once

#include <vector>

#include "threshold/graph.hpp"

namespace threshold {

// Witness that guest is an induced subgraph of host: indices maps guest
// vertex j to host vertex indices[j-1] (1-based, strictly increasing).
struct Embedding {
  Graph host;
  Graph guest;
  std::vector<int> indices;

  // Entrywise check that the host adjacency submatrix on indices equals the
  // guest adjacency matrix.
  bool valid() const;
};

// The largest anti-regular graph A_m contained in g as an induced subgraph:
// m = 2k when s_1 = 1 and m = 2k + 1 when s_1 >= 2.  Among all witnessing
// index sets the lexicographically smallest is returned (leftmost greedy).
Embedding largest_antiregular_subgraph(const Graph& g);

// The smallest anti-regular graph A_N containing g as an induced subgraph:
// N = 2(n - k) when s_1 = 1 and N = 2(n - k) - 1 when s_1 >= 2; always
// N <= 2n - 2.  Returns the leftmost-greedy embedding of g into A_N.
Embedding smallest_antiregular_supergraph(const Graph& g);

}  // namespace threshold
