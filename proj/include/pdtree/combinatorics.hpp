#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pdtree {

using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& x) { return x.str(); }

/// C(n, r); zero outside 0 <= r <= n.
inline BigCount binomial(long long n, long long r) {
  if (n < 0 || r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigCount acc = 1;
  for (long long i = 1; i <= r; ++i) {
    acc *= n - r + i;
    acc /= i;
  }
  return acc;
}

inline BigCount factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigCount acc = 1;
  for (long long i = 2; i <= n; ++i) acc *= i;
  return acc;
}

/// n! / prod(parts!) computed as a product of binomials.
inline BigCount multinomial(long long n, std::span<const long long> parts) {
  long long sum = 0;
  for (long long p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial part is negative");
    sum += p;
  }
  if (sum != n) throw std::invalid_argument("multinomial parts do not sum to n");
  BigCount acc = 1;
  long long remaining = n;
  for (long long p : parts) {
    acc *= binomial(remaining, p);
    remaining -= p;
  }
  return acc;
}

inline BigCount multinomial(long long n, std::initializer_list<long long> parts) {
  return multinomial(n, std::span<const long long>(parts.begin(), parts.size()));
}

/// Generating polynomial of a count table: coefficient k is the number of
/// sets of size k. Reads past the end are zero.
class CountPoly {
 public:
  CountPoly() = default;
  explicit CountPoly(std::vector<BigCount> coefficients) : c_(std::move(coefficients)) {}
  CountPoly(std::initializer_list<long long> coefficients) {
    for (long long v : coefficients) c_.emplace_back(v);
  }

  [[nodiscard]] BigCount at(long long k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return 0;
    return c_[static_cast<std::size_t>(k)];
  }

  void set(std::size_t k, BigCount v) {
    if (k >= c_.size()) c_.resize(k + 1);
    c_[k] = std::move(v);
  }

  [[nodiscard]] std::size_t size() const noexcept { return c_.size(); }
  [[nodiscard]] const std::vector<BigCount>& coefficients() const noexcept { return c_; }

  /// Copy with trailing zeros removed.
  [[nodiscard]] CountPoly trimmed() const {
    CountPoly out = *this;
    while (!out.c_.empty() && out.c_.back() == 0) out.c_.pop_back();
    return out;
  }

  /// Copy keeping only coefficients 0..max_degree.
  [[nodiscard]] CountPoly truncated(std::size_t max_degree) const {
    CountPoly out = *this;
    if (out.c_.size() > max_degree + 1) out.c_.resize(max_degree + 1);
    return out;
  }

  [[nodiscard]] BigCount sum() const {
    BigCount s = 0;
    for (const auto& v : c_) s += v;
    return s;
  }

  CountPoly& operator+=(const CountPoly& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
    for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
    return *this;
  }

  CountPoly& operator*=(const BigCount& scalar) {
    for (auto& v : c_) v *= scalar;
    return *this;
  }

  /// Coefficients shifted up by one degree (multiplication by x).
  [[nodiscard]] CountPoly shifted() const {
    std::vector<BigCount> out;
    out.reserve(c_.size() + 1);
    out.emplace_back(0);
    out.insert(out.end(), c_.begin(), c_.end());
    return CountPoly(std::move(out));
  }

  /// Trailing zeros are insignificant.
  friend bool operator==(const CountPoly& a, const CountPoly& b) {
    return a.trimmed().c_ == b.trimmed().c_;
  }

 private:
  std::vector<BigCount> c_;
};

/// Schoolbook product, keeping degrees <= max_degree.
inline CountPoly multiply(const CountPoly& a, const CountPoly& b, std::size_t max_degree) {
  if (a.size() == 0 || b.size() == 0) return CountPoly{};
  const std::size_t deg = std::min(a.size() + b.size() - 2, max_degree);
  std::vector<BigCount> out(deg + 1);
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  for (std::size_t i = 0; i < ac.size() && i <= deg; ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size() && i + j <= deg; ++j)
      if (bc[j] != 0) out[i + j] += ac[i] * bc[j];
  }
  return CountPoly(std::move(out));
}

/// p^e truncated to degree max_degree; p^0 = 1.
inline CountPoly power(const CountPoly& p, std::size_t e, std::size_t max_degree) {
  CountPoly acc{1};
  for (std::size_t i = 0; i < e; ++i) acc = multiply(acc, p, max_degree);
  return acc;
}

/// Sizes i_1..i_m with i_1 <= ... <= i_split and i_{split+1} <= ... <= i_m.
struct TwoBlockTuple {
  std::vector<long long> sizes;
  std::size_t split = 0;

  /// Counts of each value 0..max_value inside the first block.
  [[nodiscard]] std::vector<long long> head_multiplicities(long long max_value) const {
    return multiplicities(0, split, max_value);
  }

  /// Counts of each value 0..max_value inside the second block.
  [[nodiscard]] std::vector<long long> tail_multiplicities(long long max_value) const {
    return multiplicities(split, sizes.size(), max_value);
  }

  friend bool operator==(const TwoBlockTuple&, const TwoBlockTuple&) = default;

 private:
  [[nodiscard]] std::vector<long long> multiplicities(std::size_t from, std::size_t to,
                                                      long long max_value) const {
    std::vector<long long> mult(static_cast<std::size_t>(max_value + 1), 0);
    for (std::size_t j = from; j < to; ++j) ++mult.at(static_cast<std::size_t>(sizes[j]));
    return mult;
  }
};

namespace detail {

/// Calls fn(seq) for every non-decreasing sequence of `length` values, each
/// at least `lo`, summing to `total`, in lexicographic order.
template <class F>
void for_each_nondecreasing(std::vector<long long>& seq, std::size_t length, long long lo,
                            long long total, F& fn) {
  if (length == 0) {
    if (total == 0) fn(seq);
    return;
  }
  if (length == 1) {
    if (total >= lo) {
      seq.push_back(total);
      fn(seq);
      seq.pop_back();
    }
    return;
  }
  for (long long first = lo; first * static_cast<long long>(length) <= total; ++first) {
    seq.push_back(first);
    for_each_nondecreasing(seq, length - 1, first, total - first, fn);
    seq.pop_back();
  }
}

}  // namespace detail

/// Visits every two-block tuple of m sizes with split `split` and sum k
/// exactly once. Order: first-block sum ascending, then each block
/// lexicographically.
template <class F>
void for_each_two_block_tuple(std::size_t m, std::size_t split, long long k, F&& fn) {
  if (split > m) throw std::invalid_argument("split exceeds the number of blocks");
  if (k < 0) return;
  TwoBlockTuple tuple;
  tuple.split = split;
  std::vector<long long> head;
  for (long long head_sum = 0; head_sum <= k; ++head_sum) {
    auto on_head = [&](const std::vector<long long>& h) {
      std::vector<long long> tail;
      auto on_tail = [&](const std::vector<long long>& t) {
        tuple.sizes = h;
        tuple.sizes.insert(tuple.sizes.end(), t.begin(), t.end());
        fn(static_cast<const TwoBlockTuple&>(tuple));
      };
      detail::for_each_nondecreasing(tail, m - split, 0, k - head_sum, on_tail);
    };
    detail::for_each_nondecreasing(head, split, 0, head_sum, on_head);
  }
}

inline std::vector<TwoBlockTuple> two_block_tuples(std::size_t m, std::size_t split, long long k) {
  std::vector<TwoBlockTuple> out;
  for_each_two_block_tuple(m, split, k, [&](const TwoBlockTuple& t) { out.push_back(t); });
  return out;
}

/// Ways to distribute k monitors over m subtrees so that exactly `split`
/// of them get a set counted by `help` and the rest a set counted by
/// `exit`. Sums over sorted two-block tuples and restores orderings with
/// the binomial and the two multiplicity multinomials.
inline BigCount bracket_literal(const CountPoly& help, const CountPoly& exit, std::size_t m,
                                std::size_t split, long long k) {
  if (split > m) throw std::invalid_argument("split exceeds arity");
  if (k < 0) return 0;
  const BigCount choose_blocks = binomial(static_cast<long long>(m), static_cast<long long>(split));
  BigCount total = 0;
  for_each_two_block_tuple(m, split, k, [&](const TwoBlockTuple& t) {
    BigCount product = 1;
    for (std::size_t j = 0; j < m && product != 0; ++j)
      product *= j < split ? help.at(t.sizes[j]) : exit.at(t.sizes[j]);
    if (product == 0) return;
    const auto s = t.head_multiplicities(k);
    const auto u = t.tail_multiplicities(k);
    total += choose_blocks * multinomial(static_cast<long long>(split), s) *
             multinomial(static_cast<long long>(m - split), u) * product;
  });
  return total;
}

/// C(m, split) * help(x)^split * exit(x)^(m - split), up to degree max_degree.
inline CountPoly bracket_poly(const CountPoly& help, const CountPoly& exit, std::size_t m,
                              std::size_t split, std::size_t max_degree) {
  if (split > m) throw std::invalid_argument("split exceeds arity");
  CountPoly p = multiply(power(help, split, max_degree), power(exit, m - split, max_degree),
                         max_degree);
  p *= binomial(static_cast<long long>(m), static_cast<long long>(split));
  return p;
}

/// Same value as bracket_literal, read off the product polynomial.
inline BigCount bracket_convolution(const CountPoly& help, const CountPoly& exit, std::size_t m,
                                    std::size_t split, long long k) {
  if (split > m) throw std::invalid_argument("split exceeds arity");
  if (k < 0) return 0;
  return bracket_poly(help, exit, m, split, static_cast<std::size_t>(k)).at(k);
}

/// Partitions of k into at most m parts, from the exact-parts recurrence
/// p(k, j) = p(k-1, j-1) + p(k-j, j).
inline BigCount partition_count(long long k, long long m) {
  if (k < 0 || m < 0) return 0;
  const auto K = static_cast<std::size_t>(k);
  const auto J = static_cast<std::size_t>(std::min(k, m));
  // exact[n][j]: partitions of n into exactly j parts
  std::vector<std::vector<BigCount>> exact(K + 1, std::vector<BigCount>(J + 1, 0));
  exact[0][0] = 1;
  for (std::size_t n = 1; n <= K; ++n)
    for (std::size_t j = 1; j <= std::min(n, J); ++j)
      exact[n][j] = exact[n - 1][j - 1] + exact[n - j][j];
  BigCount total = 0;
  for (std::size_t j = 0; j <= J; ++j) total += exact[K][j];
  return total;
}

}  // namespace pdtree
