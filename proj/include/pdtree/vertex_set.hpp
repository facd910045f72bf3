#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "pdtree/graph.hpp"

namespace pdtree {

/// Subset of {0, ..., universe-1}, stored as packed 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64) {}

  VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("mask form holds at most 64 vertices");
    if (universe < 64 && (mask >> universe) != 0)
      throw std::invalid_argument("mask has bits beyond the universe");
    VertexSet s(universe);
    if (universe) s.words_[0] = mask;
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  [[nodiscard]] std::size_t universe() const noexcept { return universe_; }

  [[nodiscard]] bool contains(Vertex v) const {
    return v < universe_ && ((words_[v / 64] >> (v % 64)) & 1u);
  }

  void insert(Vertex v) {
    if (v >= universe_) throw std::out_of_range("vertex outside set universe");
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }

  void erase(Vertex v) {
    if (v >= universe_) throw std::out_of_range("vertex outside set universe");
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  [[nodiscard]] std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  [[nodiscard]] bool empty() const noexcept { return count() == 0; }
  [[nodiscard]] bool is_full() const noexcept { return count() == universe_; }

  [[nodiscard]] bool subset_of(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

  /// Members not in `other`.
  [[nodiscard]] VertexSet minus(const VertexSet& other) const {
    check_same_universe(other);
    VertexSet out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
    return out;
  }

  [[nodiscard]] std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < universe_; ++v)
      if (contains(v)) out.push_back(v);
    return out;
  }

  [[nodiscard]] std::uint64_t to_mask() const {
    if (universe_ > 64) throw std::logic_error("set too large for a 64-bit mask");
    return universe_ ? words_[0] : 0;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check_same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_) throw std::invalid_argument("vertex set universes differ");
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace pdtree
