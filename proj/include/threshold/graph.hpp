#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "threshold/matrix.hpp"

namespace threshold {

// One run of a creation string: zeros isolated-vertex additions followed by
// ones dominating-vertex additions.
struct Block {
  int zeros = 0;
  int ones = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

// A connected threshold graph, stored as the run-length block form of its
// creation string b = 0^{s_1} 1^{t_1} ... 0^{s_k} 1^{t_k}.
//
// The expanded string b_1..b_n always has b_1 = 0 and b_n = 1.  Vertex v_j
// was added as a dominating vertex when b_j = 1 and as an isolated vertex
// when b_j = 0; hence for i < j, v_i ~ v_j exactly when b_j = 1.  Vertices
// are numbered 1..n in construction order in every interface.
class Graph {
 public:
  explicit Graph(std::vector<Block> blocks);

  // Accepts either an expanded binary string ("00101") or compact caret
  // notation ("0^2 1^1 0^1 1^1").  Rejects strings that start with 1 or end
  // with 0 (the latter encodes a disconnected graph).
  static Graph parse(std::string_view text);

  const std::vector<Block>& blocks() const { return blocks_; }
  int order() const { return n_; }                                    // n
  int block_count() const { return static_cast<int>(blocks_.size()); }  // k
  int isolated_total() const;                                         // s
  int dominating_total() const;                                       // t

  char bit(int v) const;  // '0' or '1' for vertex v, 1-based
  bool adjacent(int u, int v) const;

  std::string expanded() const;
  std::string compact() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Block> blocks_;
  int n_ = 0;
};

// Degree partition U_1, V_1, ..., U_k, V_k in construction order, where U_i
// holds the i-th run of isolated vertices and V_i the i-th run of dominating
// vertices.  When s_1 = 1 the first two cells collapse into one merged cell
// U_1 ∪ V_1 (v_1 then has the same closed neighborhood as the V_1 vertices).
struct DegreePartition {
  struct Cell {
    enum class Kind { independent, clique, merged };
    Kind kind = Kind::independent;
    int block = 0;              // 1-based block index i
    std::vector<int> vertices;  // 1-based, ascending
  };
  std::vector<Cell> cells;
};

// The connected anti-regular graph A_n: 0101...01 for even n, 00101...01 for
// odd n.
Graph antiregular(int n);

SymmetricMatrix adjacency(const Graph& g);

DegreePartition degree_partition(const Graph& g);

// Induced subgraph on a nonempty strictly increasing 1-based vertex set.
// The character substring is extracted, its first character is normalized to
// 0, and a result ending in 0 (a disconnected graph) is rejected.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Maximal classes of mutually duplicate vertices (equal open neighborhoods;
// the U_i cells) and of mutually co-duplicate vertices (adjacent with equal
// punctured neighborhoods; the V_i cells, absorbing U_1 when s_1 = 1).
// Every class X forces eigenvalue 0 resp. -1 with multiplicity >= |X| - 1.
std::vector<std::vector<int>> duplicate_classes(const Graph& g);
std::vector<std::vector<int>> coduplicate_classes(const Graph& g);

// Sum of (|class| - 1): the induced lower bound on the multiplicity of the
// trivial eigenvalue associated with the classes.
int class_multiplicity_bound(const std::vector<std::vector<int>>& classes);

}  // namespace threshold
