#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pdtree/graph.hpp"
#include "pdtree/vertex_set.hpp"

namespace pdtree {

/// x forced y in the given round (round 1 is the first round after N[S]).
struct Force {
  std::size_t round;
  Vertex from;
  Vertex to;
  friend bool operator==(const Force&, const Force&) = default;
};

/// Fixpoint of the observation rounds P^0 = N[S], P^k = P^{k-1} u N*(P^{k-1}).
struct PropagationState {
  VertexSet observed;
  /// Index of the last round that added a vertex.
  std::size_t round = 0;
  std::vector<Force> trace;
  /// levels[k] is P^k; the last entry equals `observed`.
  std::vector<VertexSet> levels;
};

enum class SetType { TypeI, TypeII, Type0 };

inline const char* to_string(SetType t) {
  switch (t) {
    case SetType::TypeI: return "TypeI";
    case SetType::TypeII: return "TypeII";
    case SetType::Type0: return "Type0";
  }
  return "?";
}

namespace detail {

inline void require_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count())
    throw std::invalid_argument("vertex set universe does not match graph");
}

inline constexpr Vertex npos = static_cast<Vertex>(-1);

/// The unique neighbor of x outside `obs`, or npos when there are zero or
/// several.
inline Vertex sole_unobserved_neighbor(const Graph& g, const VertexSet& obs, Vertex x) {
  Vertex found = npos;
  for (Vertex y : g.neighbors(x)) {
    if (obs.contains(y)) continue;
    if (found != npos) return npos;
    found = y;
  }
  return found;
}

}  // namespace detail

inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  detail::require_universe(g, s);
  VertexSet out = s;
  for (Vertex v : s.members())
    for (Vertex w : g.neighbors(v)) out.insert(w);
  return out;
}

/// Round-synchronous propagation: every eligible force of a round fires
/// against the previous round's observed set.
inline PropagationState propagate(const Graph& g, const VertexSet& s) {
  PropagationState st;
  st.observed = closed_neighborhood(g, s);
  st.levels.push_back(st.observed);
  for (std::size_t round = 1;; ++round) {
    const VertexSet& prev = st.levels.back();
    VertexSet next = prev;
    bool grew = false;
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      if (!prev.contains(x)) continue;
      const Vertex y = detail::sole_unobserved_neighbor(g, prev, x);
      if (y == detail::npos) continue;
      st.trace.push_back({round, x, y});
      next.insert(y);
      grew = true;
    }
    if (!grew) break;
    st.round = round;
    st.levels.push_back(std::move(next));
  }
  st.observed = st.levels.back();
  return st;
}

inline bool is_power_dominating(const Graph& g, const VertexSet& s) {
  return propagate(g, s).observed.is_full();
}

/// Fires one eligible force at a time, chosen uniformly at random, until
/// none remain. Returns the final observed set.
template <class URBG>
VertexSet propagate_random_order(const Graph& g, const VertexSet& s, URBG& rng) {
  VertexSet obs = closed_neighborhood(g, s);
  std::vector<Vertex> eligible;
  for (;;) {
    eligible.clear();
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      if (!obs.contains(x)) continue;
      const Vertex y = detail::sole_unobserved_neighbor(g, obs, x);
      if (y != detail::npos) eligible.push_back(y);
    }
    if (eligible.empty()) return obs;
    std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
    obs.insert(eligible[pick(rng)]);
  }
}

/// TypeI if s alone power dominates the extended tree, TypeII if it does
/// once the stem is added, Type0 otherwise.
inline SetType classify(const ExtendedTree& t, const VertexSet& s) {
  detail::require_universe(t.graph(), s);
  if (s.contains(t.stem())) throw std::invalid_argument("monitor set contains the stem");
  if (is_power_dominating(t.graph(), s)) return SetType::TypeI;
  VertexSet with_stem = s;
  with_stem.insert(t.stem());
  return is_power_dominating(t.graph(), with_stem) ? SetType::TypeII : SetType::Type0;
}

/// A chain is valid when every consecutive pair (x, y) is a forcing pair:
/// y is the only neighbor of x outside some round's observed set P^k with x
/// in P^k. A monitor whose sole neighbor outside S is y also counts as
/// forcing y, so two monitors sharing one neighbor both force it. A single
/// vertex is a valid chain iff it ends up observed.
inline bool forcing_chain_valid(const Graph& g, const VertexSet& s,
                                std::span<const Vertex> chain) {
  if (chain.empty()) throw std::invalid_argument("forcing chain must be nonempty");
  const PropagationState st = propagate(g, s);
  if (chain.size() == 1) return st.observed.contains(chain.front());
  auto is_pair = [&](Vertex x, Vertex y) {
    if (s.contains(x) && detail::sole_unobserved_neighbor(g, s, x) == y) return true;
    for (const auto& f : st.trace)
      if (f.from == x && f.to == y) return true;
    return false;
  };
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!is_pair(chain[i], chain[i + 1])) return false;
  return true;
}

/// "round x->y" per force, in firing order.
inline std::string format_trace(const PropagationState& st) {
  std::ostringstream os;
  for (const auto& f : st.trace) os << f.round << ' ' << f.from << "->" << f.to << '\n';
  return os.str();
}

/// Bitmask propagation for graphs with at most 64 vertices. Same semantics
/// as `propagate`, without the trace.
class MaskPropagator {
 public:
  explicit MaskPropagator(const Graph& g) : n_(g.vertex_count()), nbr_(g.vertex_count()) {
    if (n_ > 64) throw std::invalid_argument("mask propagation supports at most 64 vertices");
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) nbr_[v] |= std::uint64_t{1} << w;
    full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
  [[nodiscard]] std::uint64_t full_mask() const noexcept { return full_; }

  [[nodiscard]] std::uint64_t closed_neighborhood(std::uint64_t s) const {
    std::uint64_t obs = s;
    for (std::uint64_t rest = s; rest; rest &= rest - 1)
      obs |= nbr_[static_cast<std::size_t>(std::countr_zero(rest))];
    return obs;
  }

  [[nodiscard]] std::uint64_t observed(std::uint64_t s) const {
    std::uint64_t obs = closed_neighborhood(s);
    for (;;) {
      std::uint64_t added = 0;
      for (std::uint64_t rest = obs; rest; rest &= rest - 1) {
        const std::uint64_t out = nbr_[static_cast<std::size_t>(std::countr_zero(rest))] & ~obs;
        if (out && !(out & (out - 1))) added |= out;
      }
      if (!added) return obs;
      obs |= added;
    }
  }

  [[nodiscard]] bool dominates(std::uint64_t s) const { return observed(s) == full_; }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> nbr_;
  std::uint64_t full_ = 0;
};

}  // namespace pdtree
