#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "oracle.hpp"
#include "threshold/embedding.hpp"
#include "threshold/graph.hpp"

using namespace threshold;

namespace {

std::vector<std::string> all_strings(int n) {
  std::vector<std::string> out;
  const std::uint64_t total = n == 2 ? 1 : std::uint64_t{1} << (n - 2);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::string b(static_cast<std::size_t>(n), '0');
    b.back() = '1';
    for (int i = 0; i < n - 2; ++i)
      if (mask >> (n - 3 - i) & 1) b[static_cast<std::size_t>(i) + 1] = '1';
    out.push_back(b);
  }
  return out;
}

const std::string kBigExpanded = "00011000011111100000111";  // 0^3 1^2 0^4 1^6 0^5 1^3, n = 23

}  // namespace

TEST_CASE("parse expanded strings") {
  const Graph g = Graph::parse("0101");
  CHECK(g.blocks() == std::vector<Block>{{1, 1}, {1, 1}});
  CHECK(g.order() == 4);
  CHECK(g.block_count() == 2);

  const Graph big = Graph::parse(kBigExpanded);
  CHECK(big.blocks() == std::vector<Block>{{3, 2}, {4, 6}, {5, 3}});
  CHECK(big.order() == 23);
  CHECK(big.block_count() == 3);
}

TEST_CASE("parse compact notation") {
  CHECK(Graph::parse("0^3 1^2 0^4 1^6 0^5 1^3") == Graph::parse(kBigExpanded));
  CHECK(Graph::parse("0^2 1^1") == Graph::parse("001"));
  CHECK(Graph::parse("0 1") == Graph::parse("01"));        // bare runs count as 1
  CHECK(Graph::parse("0^1 0^1 1^2") == Graph::parse("0011"));  // adjacent runs merge
}

TEST_CASE("parse rejections") {
  CHECK_THROWS_AS(Graph::parse("10"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse("0110"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse("0"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse("01a1"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse("0^0 1^1"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse("0^ 1"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse("1^2 0^1 1^1"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse("0^9999999 1^1"), std::invalid_argument);  // order cap
}

TEST_CASE("expanded round-trips") {
  CHECK(Graph(std::vector<Block>{{1, 1}}).expanded() == "01");
  CHECK(Graph(std::vector<Block>{{2, 1}, {1, 1}}).expanded() == "00101");
  CHECK(Graph::parse("0^3 1^2 0^4 1^6 0^5 1^3").expanded() == kBigExpanded);

  for (int n = 2; n <= 10; ++n)
    for (const std::string& b : all_strings(n)) {
      const Graph g = Graph::parse(b);
      CHECK(g.expanded() == b);
      CHECK(Graph::parse(g.expanded()) == g);
      CHECK(Graph::parse(g.compact()) == g);
    }
}

TEST_CASE("round-trip on random large block forms") {
  std::mt19937 rng(7162534);
  for (int rep = 0; rep < 300; ++rep) {
    std::vector<Block> blocks(1 + rng() % 12);
    for (Block& b : blocks) {
      b.zeros = 1 + static_cast<int>(rng() % 40);
      b.ones = 1 + static_cast<int>(rng() % 40);
    }
    const Graph g(blocks);
    CHECK(Graph::parse(g.expanded()) == g);
    CHECK(Graph::parse(g.compact()) == g);
    CHECK(static_cast<int>(g.expanded().size()) == g.order());
  }
}

TEST_CASE("block validation") {
  CHECK_THROWS_AS(Graph(std::vector<Block>{}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(std::vector<Block>{{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(std::vector<Block>{{1, 0}}), std::invalid_argument);
}

TEST_CASE("adjacency examples") {
  const SymmetricMatrix k2 = adjacency(Graph::parse("01"));
  CHECK(k2(0, 0) == 0.0);
  CHECK(k2(0, 1) == 1.0);
  CHECK(k2(1, 0) == 1.0);
  CHECK(k2(1, 1) == 0.0);

  // edges of 0101: {12, 14, 24, 34}
  const SymmetricMatrix a4 = adjacency(Graph::parse("0101"));
  const std::set<std::pair<int, int>> expected = {{1, 2}, {1, 4}, {2, 4}, {3, 4}};
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      CHECK(a4(i - 1, j - 1) == (expected.count({i, j}) ? 1.0 : 0.0));

  // star: one dominating vertex
  const SymmetricMatrix star = adjacency(Graph::parse("0001"));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(star(i, j) == 0.0);
  for (int i = 0; i < 3; ++i) CHECK(star(i, 3) == 1.0);
}

TEST_CASE("adjacency properties") {
  for (int n = 2; n <= 8; ++n)
    for (const std::string& b : all_strings(n)) {
      const Graph g = Graph::parse(b);
      const SymmetricMatrix a = adjacency(g);
      CHECK(a == oracle::adjacency_by_construction(b));
      int deg_last = 0;
      for (int i = 0; i < n; ++i) {
        CHECK(a(i, i) == 0.0);
        if (a(i, n - 1) != 0.0) ++deg_last;
        for (int j = 0; j < n; ++j) {
          CHECK(a(i, j) == a(j, i));
          CHECK(a(i, j) == (g.adjacent(i + 1, j + 1) ? 1.0 : 0.0));
        }
      }
      CHECK(deg_last == n - 1);  // v_n dominates
    }
}

TEST_CASE("antiregular strings") {
  CHECK(antiregular(4).expanded() == "0101");
  CHECK(antiregular(5).expanded() == "00101");
  CHECK(antiregular(2).expanded() == "01");
  CHECK_THROWS_AS(antiregular(1), std::invalid_argument);
  for (int n = 2; n <= 40; ++n) {
    const Graph a = antiregular(n);
    CHECK(a.order() == n);
    CHECK(a.block_count() == n / 2);
    CHECK((a.blocks().front().zeros == 2) == (n % 2 == 1));
  }
}

TEST_CASE("degree partition examples") {
  const DegreePartition dp1 = degree_partition(Graph::parse("0011"));
  REQUIRE(dp1.cells.size() == 2);
  CHECK(dp1.cells[0].vertices == std::vector<int>{1, 2});
  CHECK(dp1.cells[0].kind == DegreePartition::Cell::Kind::independent);
  CHECK(dp1.cells[1].vertices == std::vector<int>{3, 4});
  CHECK(dp1.cells[1].kind == DegreePartition::Cell::Kind::clique);

  const DegreePartition dp2 = degree_partition(Graph::parse("0101"));
  REQUIRE(dp2.cells.size() == 3);
  CHECK(dp2.cells[0].vertices == std::vector<int>{1, 2});
  CHECK(dp2.cells[0].kind == DegreePartition::Cell::Kind::merged);
  CHECK(dp2.cells[1].vertices == std::vector<int>{3});
  CHECK(dp2.cells[2].vertices == std::vector<int>{4});

  const DegreePartition dp3 = degree_partition(Graph::parse(kBigExpanded));
  REQUIRE(dp3.cells.size() == 6);
  const std::vector<std::size_t> sizes = {3, 2, 4, 6, 5, 3};
  for (std::size_t i = 0; i < 6; ++i) CHECK(dp3.cells[i].vertices.size() == sizes[i]);
}

TEST_CASE("degree partition matches adjacency structure") {
  for (int n = 2; n <= 9; ++n)
    for (const std::string& b : all_strings(n)) {
      const Graph g = Graph::parse(b);
      const SymmetricMatrix a = adjacency(g);
      const DegreePartition dp = degree_partition(g);

      std::vector<int> seen;
      for (const auto& cell : dp.cells)
        seen.insert(seen.end(), cell.vertices.begin(), cell.vertices.end());
      std::sort(seen.begin(), seen.end());
      std::vector<int> everything(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) everything[static_cast<std::size_t>(i)] = i + 1;
      CHECK(seen == everything);  // cells partition 1..n

      // all clique-side vertices together form a clique
      std::vector<int> clique_side;
      for (const auto& cell : dp.cells)
        if (cell.kind != DegreePartition::Cell::Kind::independent)
          clique_side.insert(clique_side.end(), cell.vertices.begin(), cell.vertices.end());
      for (int u : clique_side)
        for (int v : clique_side)
          if (u != v) CHECK(a(u - 1, v - 1) == 1.0);

      for (const auto& cell : dp.cells) {
        if (cell.kind != DegreePartition::Cell::Kind::independent) continue;
        // U_i is independent and adjacent to exactly V_i ∪ ... ∪ V_k
        for (int u : cell.vertices)
          for (int v : cell.vertices)
            if (u != v) CHECK(a(u - 1, v - 1) == 0.0);
        std::set<int> expected_nbrs;
        for (const auto& other : dp.cells)
          if (other.kind != DegreePartition::Cell::Kind::independent &&
              other.block >= cell.block)
            expected_nbrs.insert(other.vertices.begin(), other.vertices.end());
        for (int u : cell.vertices) {
          std::set<int> nbrs;
          for (int v = 1; v <= n; ++v)
            if (a(u - 1, v - 1) != 0.0) nbrs.insert(v);
          CHECK(nbrs == expected_nbrs);
        }
      }
    }
}

TEST_CASE("induced subgraph") {
  const Graph g = Graph::parse("0101");
  CHECK(induced_subgraph(g, {1, 2}) == Graph::parse("01"));
  CHECK(induced_subgraph(g, {2, 4}) == Graph::parse("01"));  // "11" normalizes to "01"
  CHECK_THROWS_AS(induced_subgraph(g, {1, 3}), std::invalid_argument);  // "00" disconnected
  CHECK_THROWS_AS(induced_subgraph(g, {}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(g, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(g, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(g, {3, 5}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(g, {3}), std::invalid_argument);  // single vertex
}

TEST_CASE("induced subgraph equals host submatrix") {
  std::mt19937 rng(20240817);
  for (int n = 3; n <= 10; ++n) {
    const auto strings = all_strings(n);
    for (int rep = 0; rep < 200; ++rep) {
      const Graph g = Graph::parse(strings[rng() % strings.size()]);
      std::vector<int> verts;
      for (int v = 1; v <= n; ++v)
        if (rng() % 2) verts.push_back(v);
      if (verts.size() < 2) continue;
      const SymmetricMatrix sub =
          adjacency(g).submatrix(std::span<const int>(verts.data(), verts.size()));
      if (g.bit(verts.back()) == '0') {
        CHECK_THROWS_AS(induced_subgraph(g, verts), std::invalid_argument);
      } else {
        CHECK(adjacency(induced_subgraph(g, verts)) == sub);
      }
    }
  }
}

TEST_CASE("duplicate and co-duplicate classes") {
  const auto dup_star = duplicate_classes(Graph::parse("0001"));
  REQUIRE(dup_star.size() == 1);
  CHECK(dup_star[0] == std::vector<int>{1, 2, 3});
  CHECK(class_multiplicity_bound(dup_star) == 2);

  // complete graph: every vertex is co-duplicate with every other, v_1 included
  const auto codup_k4 = coduplicate_classes(Graph::parse("0111"));
  REQUIRE(codup_k4.size() == 1);
  CHECK(codup_k4[0] == std::vector<int>{1, 2, 3, 4});
  CHECK(class_multiplicity_bound(codup_k4) == 3);
  CHECK(duplicate_classes(Graph::parse("0111")).empty());

  const Graph a6 = antiregular(6);
  CHECK(class_multiplicity_bound(coduplicate_classes(a6)) == 1);
  CHECK(class_multiplicity_bound(duplicate_classes(a6)) == 0);
  CHECK(coduplicate_classes(a6)[0] == std::vector<int>{1, 2});
}

TEST_CASE("class members really are duplicates / co-duplicates") {
  for (int n = 2; n <= 9; ++n)
    for (const std::string& b : all_strings(n)) {
      const Graph g = Graph::parse(b);
      const SymmetricMatrix a = adjacency(g);
      auto same_neighborhood = [&](int u, int v, bool closed) {
        for (int w = 1; w <= n; ++w) {
          if (w == u || w == v) continue;
          if (a(u - 1, w - 1) != a(v - 1, w - 1)) return false;
        }
        return !closed || a(u - 1, v - 1) == 1.0;
      };
      for (const auto& cls : duplicate_classes(g))
        for (std::size_t i = 0; i + 1 < cls.size(); ++i)
          CHECK(same_neighborhood(cls[i], cls[i + 1], false));
      for (const auto& cls : coduplicate_classes(g))
        for (std::size_t i = 0; i < cls.size(); ++i)
          for (std::size_t j = i + 1; j < cls.size(); ++j)
            CHECK(same_neighborhood(cls[i], cls[j], true));
    }
}

TEST_CASE("largest anti-regular subgraph") {
  const Embedding fixed = largest_antiregular_subgraph(antiregular(6));
  CHECK(fixed.guest.order() == 6);
  CHECK(fixed.indices == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(fixed.valid());

  const Embedding big = largest_antiregular_subgraph(Graph::parse(kBigExpanded));
  CHECK(big.guest.order() == 7);  // k = 3, s_1 >= 2
  CHECK(big.guest == antiregular(7));
  CHECK(big.valid());

  const Embedding small = largest_antiregular_subgraph(Graph::parse("011"));
  CHECK(small.guest.order() == 2);
  CHECK(small.valid());
}

TEST_CASE("smallest anti-regular supergraph") {
  const Embedding fixed = smallest_antiregular_supergraph(antiregular(5));
  CHECK(fixed.host.order() == 5);
  CHECK(fixed.indices == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(fixed.valid());

  const Embedding big = smallest_antiregular_supergraph(Graph::parse(kBigExpanded));
  CHECK(big.host.order() == 2 * (23 - 3) - 1);  // 39
  CHECK(big.valid());

  const Embedding small = smallest_antiregular_supergraph(Graph::parse("011"));
  CHECK(small.host.order() == 4);
  CHECK(small.indices == std::vector<int>{1, 2, 4});
  CHECK(small.valid());
}

TEST_CASE("leftmost-greedy supergraph embedding is the lexicographically smallest witness") {
  // exhaust all 3-subsets of A_4 for guest 011
  const Graph guest = Graph::parse("011");
  const Graph host = antiregular(4);
  std::vector<std::vector<int>> witnesses;
  for (int a = 1; a <= 4; ++a)
    for (int b = a + 1; b <= 4; ++b)
      for (int c = b + 1; c <= 4; ++c) {
        const Embedding e{host, guest, {a, b, c}};
        if (e.valid()) witnesses.push_back({a, b, c});
      }
  REQUIRE(!witnesses.empty());
  std::sort(witnesses.begin(), witnesses.end());
  CHECK(witnesses.front() == std::vector<int>{1, 2, 4});
}

TEST_CASE("embedding theorems across the small sweep") {
  for (int n = 2; n <= 10; ++n)
    for (const std::string& b : all_strings(n)) {
      const Graph g = Graph::parse(b);
      const int k = g.block_count();
      const bool s1_one = g.blocks().front().zeros == 1;

      const Embedding sub = largest_antiregular_subgraph(g);
      CHECK(sub.guest.order() == (s1_one ? 2 * k : 2 * k + 1));
      CHECK(sub.valid());

      const Embedding super = smallest_antiregular_supergraph(g);
      CHECK(super.host.order() == (s1_one ? 2 * (n - k) : 2 * (n - k) - 1));
      CHECK(super.host.order() <= 2 * n - 2);
      CHECK(super.valid());
    }
}

TEST_CASE("embedding validity detects mismatches") {
  const Embedding wrong{antiregular(4), Graph::parse("011"), {1, 2, 3}};
  CHECK(!wrong.valid());
  const Embedding short_list{antiregular(4), Graph::parse("011"), {1, 2}};
  CHECK(!short_list.valid());
  const Embedding not_increasing{antiregular(4), Graph::parse("011"), {2, 2, 4}};
  CHECK(!not_increasing.valid());
}
