#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdtree {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Self-loops and out-of-range endpoints throw;
  /// repeated edges collapse to one.
  Graph(std::size_t vertex_count, std::span<const Edge> edges)
      : adjacency_(vertex_count) {
    for (auto [u, v] : edges) {
      if (u >= vertex_count || v >= vertex_count)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop");
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
  }

  Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  [[nodiscard]] std::size_t vertex_count() const noexcept { return adjacency_.size(); }

  [[nodiscard]] std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& nbrs : adjacency_) twice += nbrs.size();
    return twice / 2;
  }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_.at(v);
  }

  [[nodiscard]] std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  /// Edges as (u, v) with u < v, ascending.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < adjacency_.size(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

/// One "u v" line per edge, ascending.
inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

/// Number of vertices of the complete m-ary tree of height h.
inline std::size_t complete_tree_size(std::size_t m, std::size_t h) {
  std::size_t total = 0;
  std::size_t level = 1;
  for (std::size_t d = 0; d <= h; ++d) {
    total += level;
    level *= m;
  }
  return total;
}

struct LevelIndex {
  std::size_t depth;
  std::size_t rank;  // position within its level, left to right
};

/// Complete m-ary tree in BFS labelling: root 0, children of v are
/// m*v+1 .. m*v+m.
class CompleteTree {
 public:
  CompleteTree(int arity, int height) {
    if (arity < 2) throw std::invalid_argument("arity must be at least 2");
    if (height < 0) throw std::invalid_argument("height must be nonnegative");
    m_ = static_cast<std::size_t>(arity);
    h_ = static_cast<std::size_t>(height);
    const std::size_t n = complete_tree_size(m_, h_);
    std::vector<Edge> edges;
    edges.reserve(n ? n - 1 : 0);
    for (Vertex v = 1; v < n; ++v) edges.emplace_back((v - 1) / m_, v);
    graph_ = Graph(n, edges);
  }

  [[nodiscard]] std::size_t arity() const noexcept { return m_; }
  [[nodiscard]] std::size_t height() const noexcept { return h_; }
  [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
  [[nodiscard]] std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  [[nodiscard]] static constexpr Vertex root() noexcept { return 0; }

  [[nodiscard]] std::size_t level_start(std::size_t depth) const {
    return complete_tree_size(m_, depth) - ipow(m_, depth);
  }

  [[nodiscard]] LevelIndex level_index(Vertex v) const {
    if (v >= vertex_count()) throw std::out_of_range("vertex out of range");
    std::size_t depth = 0;
    while (level_start(depth + 1) <= v) ++depth;
    return {depth, v - level_start(depth)};
  }

  [[nodiscard]] Vertex vertex_at(std::size_t depth, std::size_t rank) const {
    if (depth > h_ || rank >= ipow(m_, depth))
      throw std::out_of_range("no vertex at that position");
    return level_start(depth) + rank;
  }

  [[nodiscard]] bool is_leaf(Vertex v) const { return level_index(v).depth == h_; }

  [[nodiscard]] Vertex parent(Vertex v) const {
    if (v == 0) throw std::out_of_range("root has no parent");
    if (v >= vertex_count()) throw std::out_of_range("vertex out of range");
    return (v - 1) / m_;
  }

  [[nodiscard]] std::vector<Vertex> children(Vertex v) const {
    if (v >= vertex_count()) throw std::out_of_range("vertex out of range");
    std::vector<Vertex> out;
    if (is_leaf(v)) return out;
    for (std::size_t j = 1; j <= m_; ++j) out.push_back(m_ * v + j);
    return out;
  }

  static std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) r *= base;
    return r;
  }

 private:
  std::size_t m_ = 2;
  std::size_t h_ = 0;
  Graph graph_;
};

inline CompleteTree build_complete_tree(int m, int h) { return CompleteTree(m, h); }

/// Complete tree plus a pendant stem attached to the root. The stem takes
/// the last id.
class ExtendedTree {
 public:
  explicit ExtendedTree(CompleteTree base) : base_(std::move(base)) {
    auto edges = base_.graph().edges();
    edges.emplace_back(CompleteTree::root(), stem());
    graph_ = Graph(base_.vertex_count() + 1, edges);
  }

  [[nodiscard]] const CompleteTree& base() const noexcept { return base_; }
  [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
  [[nodiscard]] std::size_t arity() const noexcept { return base_.arity(); }
  [[nodiscard]] std::size_t height() const noexcept { return base_.height(); }
  [[nodiscard]] std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  [[nodiscard]] static constexpr Vertex root() noexcept { return 0; }
  [[nodiscard]] Vertex stem() const noexcept { return base_.vertex_count(); }

 private:
  CompleteTree base_;
  Graph graph_;
};

inline ExtendedTree extend(const CompleteTree& tree) { return ExtendedTree(tree); }

inline ExtendedTree build_extended_tree(int m, int h) {
  return ExtendedTree(CompleteTree(m, h));
}

/// The i-th extended subtree (1-based) of a tree of height >= 1: the child
/// r_i with its descendants, plus the root r acting as stem. Canonical labels
/// are those of T+_{m,h-1}; vertex_map sends them to ids in the parent tree.
class SubtreeView {
 public:
  SubtreeView(const CompleteTree& parent, std::size_t index)
      : m_(parent.arity()), h_(parent.height()), index_(index) {
    if (h_ == 0) throw std::invalid_argument("height-0 tree has no extended subtrees");
    if (index < 1 || index > m_) throw std::out_of_range("subtree index out of range");
    const CompleteTree shape(static_cast<int>(m_), static_cast<int>(h_ - 1));
    map_.reserve(shape.vertex_count() + 1);
    for (std::size_t depth = 0; depth < h_; ++depth) {
      const std::size_t width = CompleteTree::ipow(m_, depth);
      for (std::size_t rank = 0; rank < width; ++rank)
        map_.push_back(parent.vertex_at(depth + 1, (index - 1) * width + rank));
    }
    map_.push_back(CompleteTree::root());
  }

  SubtreeView(const ExtendedTree& parent, std::size_t index)
      : SubtreeView(parent.base(), index) {}

  [[nodiscard]] std::size_t index() const noexcept { return index_; }
  [[nodiscard]] std::size_t arity() const noexcept { return m_; }
  /// Height of the subtree itself (parent height minus one).
  [[nodiscard]] std::size_t height() const noexcept { return h_ - 1; }
  [[nodiscard]] std::size_t size() const noexcept { return map_.size(); }
  [[nodiscard]] std::span<const Vertex> vertex_map() const noexcept { return map_; }
  [[nodiscard]] Vertex to_parent(Vertex local) const { return map_.at(local); }
  [[nodiscard]] Vertex subtree_root() const noexcept { return map_.front(); }
  [[nodiscard]] Vertex subtree_stem() const noexcept { return map_.back(); }

  /// Induced subgraph of `g` on the image, relabelled canonically.
  [[nodiscard]] Graph induced(const Graph& g) const {
    std::vector<Vertex> local(g.vertex_count(), npos);
    for (Vertex i = 0; i < map_.size(); ++i) local[map_[i]] = i;
    std::vector<Edge> edges;
    for (Vertex i = 0; i < map_.size(); ++i)
      for (Vertex w : g.neighbors(map_[i]))
        if (local[w] != npos && i < local[w]) edges.emplace_back(i, local[w]);
    return Graph(map_.size(), edges);
  }

 private:
  static constexpr Vertex npos = static_cast<Vertex>(-1);
  std::size_t m_;
  std::size_t h_;
  std::size_t index_;
  std::vector<Vertex> map_;
};

inline SubtreeView extended_subtree(const ExtendedTree& tree, std::size_t i) {
  return SubtreeView(tree, i);
}

inline SubtreeView extended_subtree(const CompleteTree& tree, std::size_t i) {
  return SubtreeView(tree, i);
}

}  // namespace pdtree
