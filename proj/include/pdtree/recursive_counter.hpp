#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pdtree/combinatorics.hpp"
#include "pdtree/graph.hpp"

namespace pdtree {

enum class BracketMethod { Convolution, Literal };

/// E and H counts for the extended tree T+_{m,h}, known for k <= k_max.
///   exit (E): sets that power dominate T+ without the stem's help
///   help (H): sets that fail alone but succeed once the stem is added
struct CountTable {
  std::size_t m = 2;
  std::size_t h = 0;
  std::size_t k_max = 0;
  CountPoly exit;
  CountPoly help;

  [[nodiscard]] bool odd_height() const noexcept { return h % 2 == 1; }

  /// Every nonzero coefficient is present.
  [[nodiscard]] bool complete() const { return k_max >= complete_tree_size(m, h); }
};

/// Exact fraction in lowest terms with a positive denominator.
class ExactRatio {
 public:
  ExactRatio() = default;
  ExactRatio(BigCount num, BigCount den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::invalid_argument("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const BigCount g = boost::multiprecision::gcd(num_ < 0 ? BigCount(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  [[nodiscard]] const BigCount& numerator() const noexcept { return num_; }
  [[nodiscard]] const BigCount& denominator() const noexcept { return den_; }

  /// Decimal expansion with `digits` fractional digits, rounded half to even.
  /// Nonnegative values only.
  [[nodiscard]] std::string approx(unsigned digits) const {
    if (num_ < 0) throw std::domain_error("approximation of a negative ratio");
    BigCount scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    BigCount q = num_ * scale / den_;
    const BigCount r = num_ * scale % den_;
    const BigCount twice = 2 * r;
    if (twice > den_ || (twice == den_ && (q & 1) != 0)) q += 1;
    const BigCount whole = q / scale;
    std::string out = whole.str();
    if (digits == 0) return out;
    std::string frac = BigCount(q % scale).str();
    out += '.';
    out.append(digits - frac.size(), '0');
    out += frac;
    return out;
  }

  friend bool operator==(const ExactRatio&, const ExactRatio&) = default;

 private:
  BigCount num_ = 0;
  BigCount den_ = 1;
};

namespace detail {

inline void require_arity(int m) {
  if (m < 2) throw std::invalid_argument("arity must be at least 2");
}

inline std::size_t tree_size(int m, int h) {
  return complete_tree_size(static_cast<std::size_t>(m), static_cast<std::size_t>(h));
}

/// brackets[l] = C(m,l) help^l exit^(m-l) for l in 0..m, coefficients up to k_max.
inline std::vector<CountPoly> brackets(const CountTable& t, std::size_t k_max,
                                       BracketMethod method) {
  std::vector<CountPoly> out(t.m + 1);
  if (method == BracketMethod::Convolution) {
    std::vector<CountPoly> help_pow(t.m + 1), exit_pow(t.m + 1);
    help_pow[0] = exit_pow[0] = CountPoly{1};
    for (std::size_t e = 1; e <= t.m; ++e) {
      help_pow[e] = multiply(help_pow[e - 1], t.help, k_max);
      exit_pow[e] = multiply(exit_pow[e - 1], t.exit, k_max);
    }
    for (std::size_t l = 0; l <= t.m; ++l) {
      out[l] = multiply(help_pow[l], exit_pow[t.m - l], k_max);
      out[l] *= binomial(static_cast<long long>(t.m), static_cast<long long>(l));
    }
  } else {
    for (std::size_t l = 0; l <= t.m; ++l)
      for (std::size_t k = 0; k <= k_max; ++k)
        out[l].set(k, bracket_literal(t.help, t.exit, t.m, l, static_cast<long long>(k)));
  }
  return out;
}

/// Root in S: any mix of Type I/II subtrees with k-1 monitors below.
inline CountPoly root_in_term(const std::vector<CountPoly>& b, std::size_t k_max) {
  CountPoly all;
  for (const auto& p : b) all += p;
  return all.shifted().truncated(k_max);
}

}  // namespace detail

/// Closed forms for heights 0 and 1.
inline CountTable base_table(int m, int h) {
  detail::require_arity(m);
  CountTable t;
  t.m = static_cast<std::size_t>(m);
  t.h = static_cast<std::size_t>(h);
  if (h == 0) {
    t.k_max = 1;
    t.exit = CountPoly{0, 1};
    t.help = CountPoly{1, 0};
  } else if (h == 1) {
    const auto mm = static_cast<long long>(m);
    t.k_max = t.m + 1;
    for (long long k = 0; k <= mm + 1; ++k) {
      t.help.set(static_cast<std::size_t>(k), k == mm - 1 ? BigCount(mm) : BigCount(0));
      t.exit.set(static_cast<std::size_t>(k), k == mm ? BigCount(mm + 1) : binomial(mm, k - 1));
    }
  } else {
    throw std::invalid_argument("base tables exist only for heights 0 and 1");
  }
  return t;
}

/// Table for height prev.h + 1, coefficients up to k_max. Odd heights leave
/// the root's children as the frontier of a Type II set, even heights the
/// root itself, which decides how many Type II subtrees each case admits.
inline CountTable lift_table(const CountTable& prev, std::size_t k_max,
                             BracketMethod method = BracketMethod::Convolution) {
  if (k_max > prev.k_max && !prev.complete())
    throw std::invalid_argument("previous table is not known up to the requested size");
  CountTable t;
  t.m = prev.m;
  t.h = prev.h + 1;
  t.k_max = k_max;
  const auto b = detail::brackets(prev, k_max, method);
  CountPoly exit = detail::root_in_term(b, k_max);
  if (t.odd_height()) {
    t.help = b[1];
    exit += b[0];
  } else {
    t.help = b[t.m];
    for (std::size_t l = 0; l < t.m; ++l) exit += b[l];
  }
  t.exit = exit.truncated(k_max);
  t.help = t.help.truncated(k_max);
  return t;
}

/// Tables for T+_{m,h}, built bottom-up; each level keeps coefficients up to
/// min(k_max, that level's vertex count).
inline CountTable build_table(int m, int h, std::size_t k_max,
                              BracketMethod method = BracketMethod::Convolution) {
  detail::require_arity(m);
  if (h < 0) throw std::invalid_argument("height must be nonnegative");
  CountTable t = base_table(m, std::min(h, 1));
  for (int level = 2; level <= h; ++level) {
    t = lift_table(t, std::min(k_max, detail::tree_size(m, level)), method);
  }
  return t;
}

/// N(m,h,k) for k = 0..min(k_max, n) as one polynomial.
inline CountPoly count_polynomial(int m, int h, std::size_t k_max,
                                  BracketMethod method = BracketMethod::Convolution) {
  detail::require_arity(m);
  if (h < 0) throw std::invalid_argument("height must be nonnegative");
  const std::size_t n = detail::tree_size(m, h);
  k_max = std::min(k_max, n);
  CountPoly out;
  if (h == 0) {
    out = CountPoly{0, 1};
  } else if (h == 1) {
    const auto mm = static_cast<long long>(m);
    for (long long k = 0; k <= mm + 1; ++k) {
      BigCount v = binomial(mm, k - 1);
      if (k == mm - 1 || k == mm) v += binomial(mm, k);
      out.set(static_cast<std::size_t>(k), v);
    }
  } else {
    const CountTable below = build_table(m, h - 1, k_max, method);
    const auto b = detail::brackets(below, k_max, method);
    out = detail::root_in_term(b, k_max);
    if (h % 2 == 0) {
      for (std::size_t l = 0; l < below.m; ++l) out += b[l];
    } else {
      out += b[0];
      out += b[1];
    }
  }
  return out.truncated(k_max);
}

/// Number of size-k power dominating sets of T_{m,h}; zero for k outside [0, n].
inline BigCount count_pds(int m, int h, long long k,
                          BracketMethod method = BracketMethod::Convolution) {
  detail::require_arity(m);
  if (h < 0) throw std::invalid_argument("height must be nonnegative");
  if (k < 0 || static_cast<std::size_t>(k) > detail::tree_size(m, h)) return 0;
  return count_polynomial(m, h, static_cast<std::size_t>(k), method).at(k);
}

/// Probability that a uniform k-subset of T_{m,h} power dominates it.
inline ExactRatio probability(int m, int h, long long k,
                              BracketMethod method = BracketMethod::Convolution) {
  detail::require_arity(m);
  if (h < 0) throw std::invalid_argument("height must be nonnegative");
  const std::size_t n = detail::tree_size(m, h);
  if (k < 0 || static_cast<std::size_t>(k) > n) throw std::out_of_range("k outside [0, n]");
  return ExactRatio(count_pds(m, h, k, method), binomial(static_cast<long long>(n), k));
}

/// Power dominating sets of every size.
inline BigCount total_pds(int m, int h, BracketMethod method = BracketMethod::Convolution) {
  return count_polynomial(m, h, detail::tree_size(m, h), method).sum();
}

/// Smallest k with N(m,h,k) > 0.
inline std::size_t gamma_p_via_counts(int m, int h,
                                      BracketMethod method = BracketMethod::Convolution) {
  detail::require_arity(m);
  const std::size_t n = detail::tree_size(m, h);
  for (std::size_t k_max = 1;; k_max = std::min(2 * k_max, n)) {
    const CountPoly p = count_polynomial(m, h, k_max, method);
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p.at(static_cast<long long>(k)) != 0) return k;
    if (k_max == n) throw std::logic_error("no power dominating set found");
  }
}

}  // namespace pdtree
