#include "threshold/graph.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace threshold {

namespace {

std::vector<Block> run_length_encode(std::string_view expanded) {
  std::vector<Block> blocks;
  std::size_t i = 0;
  while (i < expanded.size()) {
    Block b;
    while (i < expanded.size() && expanded[i] == '0') {
      ++b.zeros;
      ++i;
    }
    while (i < expanded.size() && expanded[i] == '1') {
      ++b.ones;
      ++i;
    }
    blocks.push_back(b);
  }
  return blocks;
}

std::string expand_compact(std::string_view text) {
  std::string expanded;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const char c = text[i];
    if (c != '0' && c != '1') throw std::invalid_argument("invalid character in creation string");
    ++i;
    long count = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw std::invalid_argument("missing run count after '^'");
      const auto res = std::from_chars(text.data() + start, text.data() + i, count);
      if (res.ec != std::errc{} || count < 1)
        throw std::invalid_argument("run count must be a positive integer");
    }
    if (static_cast<long>(expanded.size()) + count > kMaxOrder)
      throw std::invalid_argument("creation string exceeds the maximum supported order");
    expanded.append(static_cast<std::size_t>(count), c);
  }
  return expanded;
}

}  // namespace

Graph::Graph(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw std::invalid_argument("block list is empty");
  for (const Block& b : blocks_) {
    if (b.zeros < 1 || b.ones < 1)
      throw std::invalid_argument("every block needs at least one 0 and one 1");
    n_ += b.zeros + b.ones;
  }
  if (n_ > kMaxOrder)
    throw std::invalid_argument("graph order exceeds the maximum supported order");
}

Graph Graph::parse(std::string_view text) {
  std::string expanded;
  if (!text.empty() && text.find_first_not_of("01") == std::string_view::npos)
    expanded = text;
  else
    expanded = expand_compact(text);

  if (expanded.size() < 2)
    throw std::invalid_argument("creation string needs at least 2 characters");
  if (expanded.front() != '0')
    throw std::invalid_argument("creation string must start with 0");
  if (expanded.back() != '1')
    throw std::invalid_argument("creation string ends with 0 (disconnected graph)");
  return Graph(run_length_encode(expanded));
}

int Graph::isolated_total() const {
  int s = 0;
  for (const Block& b : blocks_) s += b.zeros;
  return s;
}

int Graph::dominating_total() const {
  int t = 0;
  for (const Block& b : blocks_) t += b.ones;
  return t;
}

char Graph::bit(int v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex index out of range");
  int pos = v;
  for (const Block& b : blocks_) {
    if (pos <= b.zeros) return '0';
    pos -= b.zeros;
    if (pos <= b.ones) return '1';
    pos -= b.ones;
  }
  return '1';  // unreachable
}

bool Graph::adjacent(int u, int v) const {
  if (u == v) return false;
  return bit(std::max(u, v)) == '1';
}

std::string Graph::expanded() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(n_));
  for (const Block& b : blocks_) {
    out.append(static_cast<std::size_t>(b.zeros), '0');
    out.append(static_cast<std::size_t>(b.ones), '1');
  }
  return out;
}

std::string Graph::compact() const {
  std::string out;
  for (const Block& b : blocks_) {
    if (!out.empty()) out += ' ';
    out += "0^" + std::to_string(b.zeros) + " 1^" + std::to_string(b.ones);
  }
  return out;
}

Graph antiregular(int n) {
  if (n < 2) throw std::invalid_argument("anti-regular graph needs n >= 2");
  std::vector<Block> blocks;
  if (n % 2 == 0) {
    blocks.assign(static_cast<std::size_t>(n / 2), Block{1, 1});
  } else {
    blocks.push_back(Block{2, 1});
    blocks.insert(blocks.end(), static_cast<std::size_t>((n - 3) / 2), Block{1, 1});
  }
  return Graph(std::move(blocks));
}

SymmetricMatrix adjacency(const Graph& g) {
  const int n = g.order();
  SymmetricMatrix a(n);
  const std::string b = g.expanded();
  for (int j = 0; j < n; ++j) {
    if (b[static_cast<std::size_t>(j)] != '1') continue;
    for (int i = 0; i < j; ++i) a.set(i, j, 1.0);
  }
  return a;
}

DegreePartition degree_partition(const Graph& g) {
  DegreePartition dp;
  int next = 1;
  const bool merge_first = g.blocks().front().zeros == 1;
  for (int i = 0; i < g.block_count(); ++i) {
    const Block& b = g.blocks()[static_cast<std::size_t>(i)];
    DegreePartition::Cell u;
    u.kind = DegreePartition::Cell::Kind::independent;
    u.block = i + 1;
    for (int c = 0; c < b.zeros; ++c) u.vertices.push_back(next++);
    DegreePartition::Cell v;
    v.kind = DegreePartition::Cell::Kind::clique;
    v.block = i + 1;
    for (int c = 0; c < b.ones; ++c) v.vertices.push_back(next++);
    if (i == 0 && merge_first) {
      DegreePartition::Cell merged;
      merged.kind = DegreePartition::Cell::Kind::merged;
      merged.block = 1;
      merged.vertices = u.vertices;
      merged.vertices.insert(merged.vertices.end(), v.vertices.begin(), v.vertices.end());
      dp.cells.push_back(std::move(merged));
    } else {
      dp.cells.push_back(std::move(u));
      dp.cells.push_back(std::move(v));
    }
  }
  return dp;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("vertex set is empty");
  std::string chars;
  int prev = 0;
  for (int v : vertices) {
    if (v <= prev) throw std::invalid_argument("vertex set must be strictly increasing");
    if (v < 1 || v > g.order()) throw std::invalid_argument("vertex index out of range");
    chars += g.bit(v);
    prev = v;
  }
  chars.front() = '0';
  if (chars.back() == '1') return Graph(run_length_encode(chars));
  throw std::invalid_argument("induced subgraph is disconnected (substring ends with 0)");
}

std::vector<std::vector<int>> duplicate_classes(const Graph& g) {
  std::vector<std::vector<int>> classes;
  for (const auto& cell : degree_partition(g).cells)
    if (cell.kind == DegreePartition::Cell::Kind::independent) classes.push_back(cell.vertices);
  return classes;
}

std::vector<std::vector<int>> coduplicate_classes(const Graph& g) {
  std::vector<std::vector<int>> classes;
  for (const auto& cell : degree_partition(g).cells)
    if (cell.kind != DegreePartition::Cell::Kind::independent) classes.push_back(cell.vertices);
  return classes;
}

int class_multiplicity_bound(const std::vector<std::vector<int>>& classes) {
  int bound = 0;
  for (const auto& c : classes) bound += static_cast<int>(c.size()) - 1;
  return bound;
}

}  // namespace threshold
