#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdtree/combinatorics.hpp"
#include "pdtree/graph.hpp"
#include "pdtree/propagation.hpp"

// Exhaustive subset enumeration with no pruning or symmetry reduction.

namespace pdtree {

inline constexpr std::size_t kDefaultOracleCap = 25;

class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::size_t vertices, std::size_t cap)
      : std::runtime_error("oracle enumeration refused: " + std::to_string(vertices) +
                           " vertices exceeds cap of " + std::to_string(cap)) {}
};

struct OracleReport {
  int m = 0;
  int h = 0;
  std::vector<BigCount> counts_by_k;  // index k = 0..n
  BigCount total = 0;
  std::optional<std::size_t> gamma_p;
};

/// Type I, Type II and Type 0 counts for T+_{m,h}, indexed by |S|.
struct EHTable {
  std::vector<BigCount> exit;
  std::vector<BigCount> help;
  std::vector<BigCount> zero;
};

namespace detail {

inline void check_capacity(std::size_t vertices, std::size_t cap) {
  if (vertices > cap || vertices > 63) throw CapacityError(vertices, cap);
}

/// Visits every k-subset of {0..n-1} as a bitmask, colex order.
template <class F>
void for_each_k_subset(std::size_t n, std::size_t k, F&& fn) {
  if (k > n) return;
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  const std::uint64_t last = k == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1) << (n - k);
  for (std::uint64_t s = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;;) {
    fn(s);
    if (s == last) return;
    // next subset of the same size (Gosper)
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t ripple = s + low;
    s = (((ripple ^ s) >> 2) / low) | ripple;
  }
}

}  // namespace detail

/// Number of k-subsets of V(g) that power dominate g.
inline BigCount oracle_count_pds(const Graph& g, std::size_t k, std::size_t cap = kDefaultOracleCap) {
  detail::check_capacity(g.vertex_count(), cap);
  const MaskPropagator prop(g);
  std::uint64_t count = 0;
  detail::for_each_k_subset(g.vertex_count(), k, [&](std::uint64_t s) {
    if (prop.dominates(s)) ++count;
  });
  return count;
}

/// Counts for every size 0..n in a single pass over all 2^n subsets.
inline std::vector<BigCount> oracle_counts_by_size(const Graph& g,
                                                   std::size_t cap = kDefaultOracleCap) {
  const std::size_t n = g.vertex_count();
  detail::check_capacity(n, cap);
  const MaskPropagator prop(g);
  std::vector<std::uint64_t> counts(n + 1, 0);
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < end; ++s)
    if (prop.dominates(s)) ++counts[static_cast<std::size_t>(std::popcount(s))];
  return {counts.begin(), counts.end()};
}

inline OracleReport oracle_report(const CompleteTree& tree, std::size_t cap = kDefaultOracleCap) {
  OracleReport r;
  r.m = static_cast<int>(tree.arity());
  r.h = static_cast<int>(tree.height());
  r.counts_by_k = oracle_counts_by_size(tree.graph(), cap);
  for (std::size_t k = 0; k < r.counts_by_k.size(); ++k) {
    r.total += r.counts_by_k[k];
    if (!r.gamma_p && r.counts_by_k[k] > 0) r.gamma_p = k;
  }
  return r;
}

/// Classifies every S in V(T+_{m,h}) minus the stem.
inline EHTable oracle_eh_table(int m, int h, std::size_t cap = kDefaultOracleCap) {
  const ExtendedTree t = build_extended_tree(m, h);
  detail::check_capacity(t.vertex_count(), cap);
  const MaskPropagator prop(t.graph());
  const std::size_t n = t.vertex_count() - 1;
  const std::uint64_t stem_bit = std::uint64_t{1} << t.stem();
  EHTable out{std::vector<BigCount>(n + 1), std::vector<BigCount>(n + 1),
              std::vector<BigCount>(n + 1)};
  std::vector<std::uint64_t> e(n + 1), hh(n + 1), z(n + 1);
  for (std::uint64_t s = 0; s < stem_bit; ++s) {
    const auto k = static_cast<std::size_t>(std::popcount(s));
    if (prop.dominates(s))
      ++e[k];
    else if (prop.dominates(s | stem_bit))
      ++hh[k];
    else
      ++z[k];
  }
  for (std::size_t k = 0; k <= n; ++k) {
    out.exit[k] = e[k];
    out.help[k] = hh[k];
    out.zero[k] = z[k];
  }
  return out;
}

/// For every Type II set S of T+_{m,h} (h >= 1), checks which vertices of
/// N[r] stay unobserved: {stem, r_i} for a single child r_i when h is odd,
/// {stem, r} when h is even.
inline bool oracle_frontier_check(int m, int h, std::size_t cap = kDefaultOracleCap) {
  if (h < 1) throw std::invalid_argument("frontier check needs height >= 1");
  const ExtendedTree t = build_extended_tree(m, h);
  detail::check_capacity(t.vertex_count(), cap);
  const MaskPropagator prop(t.graph());
  const std::uint64_t stem_bit = std::uint64_t{1} << t.stem();
  const std::uint64_t root_bit = 1;
  std::uint64_t closed_root = root_bit;
  for (Vertex w : t.graph().neighbors(ExtendedTree::root())) closed_root |= std::uint64_t{1} << w;
  const std::uint64_t children = closed_root & ~root_bit & ~stem_bit;
  for (std::uint64_t s = 0; s < stem_bit; ++s) {
    if (prop.dominates(s) || !prop.dominates(s | stem_bit)) continue;
    const std::uint64_t missing = closed_root & ~prop.observed(s);
    if (h % 2 == 1) {
      const std::uint64_t child = missing & ~stem_bit;
      if (!(missing & stem_bit) || std::popcount(child) != 1 || !(child & children)) return false;
    } else if (missing != (stem_bit | root_bit)) {
      return false;
    }
  }
  return true;
}

/// Power domination number by exhaustive search over increasing sizes.
inline std::size_t oracle_gamma_p(const Graph& g, std::size_t cap = kDefaultOracleCap) {
  detail::check_capacity(g.vertex_count(), cap);
  for (std::size_t k = 0; k <= g.vertex_count(); ++k)
    if (oracle_count_pds(g, k, cap) > 0) return k;
  return g.vertex_count();
}

}  // namespace pdtree
