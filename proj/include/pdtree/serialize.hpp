#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdtree/brute_oracle.hpp"
#include "pdtree/combinatorics.hpp"
#include "pdtree/recursive_counter.hpp"

namespace pdtree {

using Json = nlohmann::ordered_json;

enum class Format { Plain, Json, Csv };

/// Count report shared by the recursion and the oracle, so the two can be
/// diffed directly. Counts are decimal strings.
struct CountReport {
  std::string source;
  int m = 0;
  int h = 0;
  std::vector<BigCount> counts_by_k;
  BigCount total = 0;
  std::optional<std::size_t> gamma_p;
};

inline CountReport make_report(std::string source, int m, int h, std::vector<BigCount> counts) {
  CountReport r{std::move(source), m, h, std::move(counts), 0, std::nullopt};
  for (std::size_t k = 0; k < r.counts_by_k.size(); ++k) {
    r.total += r.counts_by_k[k];
    if (!r.gamma_p && r.counts_by_k[k] > 0) r.gamma_p = k;
  }
  return r;
}

inline CountReport recursion_report(int m, int h,
                                    BracketMethod method = BracketMethod::Convolution) {
  const std::size_t n = complete_tree_size(static_cast<std::size_t>(m), static_cast<std::size_t>(h));
  const CountPoly p = count_polynomial(m, h, n, method);
  std::vector<BigCount> counts(n + 1);
  for (std::size_t k = 0; k <= n; ++k) counts[k] = p.at(static_cast<long long>(k));
  return make_report("recursion", m, h, std::move(counts));
}

inline CountReport to_report(const OracleReport& o) {
  return make_report("oracle", o.m, o.h, o.counts_by_k);
}

inline Json decimal_array(const std::vector<BigCount>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(to_decimal(v));
  return arr;
}

inline Json to_json(const CountReport& r) {
  Json j;
  j["source"] = r.source;
  j["m"] = r.m;
  j["h"] = r.h;
  j["counts_by_k"] = decimal_array(r.counts_by_k);
  j["total"] = to_decimal(r.total);
  j["gamma_p"] = r.gamma_p ? Json(*r.gamma_p) : Json(nullptr);
  return j;
}

/// Inverse of to_json. Throws on malformed documents.
inline CountReport report_from_json(const Json& j) {
  CountReport r;
  r.source = j.at("source").get<std::string>();
  r.m = j.at("m").get<int>();
  r.h = j.at("h").get<int>();
  for (const auto& v : j.at("counts_by_k")) r.counts_by_k.emplace_back(v.get<std::string>());
  r.total = BigCount(j.at("total").get<std::string>());
  if (!j.at("gamma_p").is_null()) r.gamma_p = j.at("gamma_p").get<std::size_t>();
  return r;
}

inline bool operator==(const CountReport& a, const CountReport& b) {
  return a.m == b.m && a.h == b.h && a.counts_by_k == b.counts_by_k && a.total == b.total &&
         a.gamma_p == b.gamma_p;
}

inline Json to_json(const ExactRatio& r, unsigned digits) {
  Json j;
  j["num"] = to_decimal(r.numerator());
  j["den"] = to_decimal(r.denominator());
  j["approx"] = r.approx(digits);
  return j;
}

struct TableRow {
  std::size_t k;
  BigCount count;
  BigCount binom;
  ExactRatio prob;
};

inline std::vector<TableRow> table_rows(int m, int h, std::size_t k_max,
                                        BracketMethod method = BracketMethod::Convolution) {
  const std::size_t n = complete_tree_size(static_cast<std::size_t>(m), static_cast<std::size_t>(h));
  k_max = std::min(k_max, n);
  const CountPoly p = count_polynomial(m, h, k_max, method);
  std::vector<TableRow> rows;
  rows.reserve(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    const auto kk = static_cast<long long>(k);
    BigCount binom = binomial(static_cast<long long>(n), kk);
    rows.push_back({k, p.at(kk), binom, ExactRatio(p.at(kk), binom)});
  }
  return rows;
}

/// CSV header "k,N,binom,prob_num,prob_den,prob_approx"; JSON is an array of
/// objects with the same keys; plain is space separated.
inline void emit_table(std::ostream& os, const std::vector<TableRow>& rows, Format format,
                       unsigned digits) {
  switch (format) {
    case Format::Csv:
      os << "k,N,binom,prob_num,prob_den,prob_approx\n";
      for (const auto& r : rows)
        os << r.k << ',' << r.count << ',' << r.binom << ',' << r.prob.numerator() << ','
           << r.prob.denominator() << ',' << r.prob.approx(digits) << '\n';
      break;
    case Format::Json: {
      Json arr = Json::array();
      for (const auto& r : rows) {
        Json row;
        row["k"] = r.k;
        row["N"] = to_decimal(r.count);
        row["binom"] = to_decimal(r.binom);
        row["prob_num"] = to_decimal(r.prob.numerator());
        row["prob_den"] = to_decimal(r.prob.denominator());
        row["prob_approx"] = r.prob.approx(digits);
        arr.push_back(std::move(row));
      }
      os << arr.dump() << '\n';
      break;
    }
    case Format::Plain:
      os << "k N binom prob\n";
      for (const auto& r : rows)
        os << r.k << ' ' << r.count << ' ' << r.binom << ' ' << r.prob.numerator() << '/'
           << r.prob.denominator() << ' ' << r.prob.approx(digits) << '\n';
      break;
  }
}

}  // namespace pdtree
