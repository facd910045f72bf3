#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pdtree/brute_oracle.hpp"
#include "pdtree/recursive_counter.hpp"
#include "pdtree/serialize.hpp"

namespace pdtree {

enum class Command { Count, Table, Prob, Sum, Verify, Bench };

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInvalidArgs = 2;
inline constexpr int kCapacity = 3;
}  // namespace exit_code

struct RunConfig {
  Command command = Command::Count;
  int m = 2;
  int h = 0;
  std::optional<long long> k;
  std::optional<long long> k_max;
  Format format = Format::Plain;
  unsigned digits = 12;
  std::size_t oracle_cap = kDefaultOracleCap;
  BracketMethod bracket = BracketMethod::Convolution;
};

namespace detail {

struct InvalidArgs : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::size_t vertex_count_of(const RunConfig& cfg) {
  return complete_tree_size(static_cast<std::size_t>(cfg.m), static_cast<std::size_t>(cfg.h));
}

inline void validate(const RunConfig& cfg) {
  if (cfg.m < 2) throw InvalidArgs("--m must be at least 2");
  if (cfg.h < 0) throw InvalidArgs("--h must be nonnegative");
  const bool needs_k = cfg.command == Command::Count || cfg.command == Command::Prob;
  if (needs_k && !cfg.k) throw InvalidArgs("--k is required");
  if (cfg.command == Command::Prob &&
      (*cfg.k < 0 || static_cast<std::size_t>(*cfg.k) > vertex_count_of(cfg)))
    throw InvalidArgs("--k must lie in [0, n]");
  if (cfg.k_max && *cfg.k_max < 0) throw InvalidArgs("--k-max must be nonnegative");
}

inline void emit_count(std::ostream& out, const RunConfig& cfg, const BigCount& n) {
  switch (cfg.format) {
    case Format::Plain: out << n << '\n'; break;
    case Format::Csv: out << "m,h,k,N\n" << cfg.m << ',' << cfg.h << ',' << *cfg.k << ',' << n << '\n'; break;
    case Format::Json: {
      Json j;
      j["m"] = cfg.m;
      j["h"] = cfg.h;
      j["k"] = *cfg.k;
      j["N"] = to_decimal(n);
      out << j.dump() << '\n';
      break;
    }
  }
}

inline void emit_prob(std::ostream& out, const RunConfig& cfg, const ExactRatio& p) {
  switch (cfg.format) {
    case Format::Plain:
      out << p.numerator() << '/' << p.denominator() << ' ' << p.approx(cfg.digits) << '\n';
      break;
    case Format::Csv:
      out << "num,den,approx\n"
          << p.numerator() << ',' << p.denominator() << ',' << p.approx(cfg.digits) << '\n';
      break;
    case Format::Json: out << to_json(p, cfg.digits).dump() << '\n'; break;
  }
}

inline void emit_sum(std::ostream& out, const RunConfig& cfg, const BigCount& total) {
  switch (cfg.format) {
    case Format::Plain: out << total << '\n'; break;
    case Format::Csv: out << "m,h,total\n" << cfg.m << ',' << cfg.h << ',' << total << '\n'; break;
    case Format::Json: {
      Json j;
      j["m"] = cfg.m;
      j["h"] = cfg.h;
      j["total"] = to_decimal(total);
      out << j.dump() << '\n';
      break;
    }
  }
}

/// Recursion against exhaustive enumeration: N for every k, plus the E/H
/// tables when the extended tree also fits under the cap.
inline int run_verify(std::ostream& out, const RunConfig& cfg) {
  const CompleteTree tree(cfg.m, cfg.h);
  const CountReport oracle = to_report(oracle_report(tree, cfg.oracle_cap));
  const CountReport rec = recursion_report(cfg.m, cfg.h, cfg.bracket);

  std::vector<std::size_t> bad_k;
  for (std::size_t k = 0; k < oracle.counts_by_k.size(); ++k)
    if (k >= rec.counts_by_k.size() || rec.counts_by_k[k] != oracle.counts_by_k[k])
      bad_k.push_back(k);
  bool counts_ok = bad_k.empty() && rec == oracle;

  const bool tables_checked = tree.vertex_count() + 1 <= cfg.oracle_cap;
  std::vector<std::size_t> bad_table_k;
  if (tables_checked) {
    const EHTable eh = oracle_eh_table(cfg.m, cfg.h, cfg.oracle_cap);
    const CountTable t = build_table(cfg.m, cfg.h, eh.exit.size() - 1, cfg.bracket);
    for (std::size_t k = 0; k < eh.exit.size(); ++k) {
      const auto kk = static_cast<long long>(k);
      if (t.exit.at(kk) != eh.exit[k] || t.help.at(kk) != eh.help[k]) bad_table_k.push_back(k);
    }
  }
  const bool ok = counts_ok && bad_table_k.empty();

  switch (cfg.format) {
    case Format::Json: {
      Json j;
      j["m"] = cfg.m;
      j["h"] = cfg.h;
      j["oracle_cap"] = cfg.oracle_cap;
      j["recursion"] = to_json(rec);
      j["oracle"] = to_json(oracle);
      j["count_mismatches"] = bad_k;
      j["tables_checked"] = tables_checked;
      j["table_mismatches"] = bad_table_k;
      j["match"] = ok;
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv:
      out << "k,recursion,oracle,match\n";
      for (std::size_t k = 0; k < oracle.counts_by_k.size(); ++k) {
        const BigCount r = k < rec.counts_by_k.size() ? rec.counts_by_k[k] : BigCount(0);
        out << k << ',' << r << ',' << oracle.counts_by_k[k] << ','
            << (r == oracle.counts_by_k[k] ? 1 : 0) << '\n';
      }
      break;
    case Format::Plain:
      for (std::size_t k = 0; k < oracle.counts_by_k.size(); ++k) {
        const BigCount r = k < rec.counts_by_k.size() ? rec.counts_by_k[k] : BigCount(0);
        out << "k=" << k << " recursion=" << r << " oracle=" << oracle.counts_by_k[k]
            << (r == oracle.counts_by_k[k] ? "" : "  MISMATCH") << '\n';
      }
      out << "tables: "
          << (tables_checked ? (bad_table_k.empty() ? "match" : "MISMATCH") : "skipped (cap)")
          << '\n';
      out << "verify: " << (ok ? "OK" : "FAILED") << '\n';
      break;
  }
  return ok ? exit_code::kOk : exit_code::kMismatch;
}

inline int run_bench(std::ostream& out, const RunConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  const std::size_t n = vertex_count_of(cfg);
  std::vector<std::size_t> ks;
  if (cfg.k) {
    if (*cfg.k >= 0 && static_cast<std::size_t>(*cfg.k) <= n) ks.push_back(static_cast<std::size_t>(*cfg.k));
  } else {
    const std::size_t top = cfg.k_max ? std::min<std::size_t>(static_cast<std::size_t>(*cfg.k_max), n) : n;
    for (std::size_t k = 0; k <= top; ++k) ks.push_back(k);
  }
  const bool csv = cfg.format == Format::Csv;
  Json rows = Json::array();
  if (csv) out << "method,k,N,micros\n";
  for (std::size_t k : ks) {
    for (auto method : {BracketMethod::Literal, BracketMethod::Convolution}) {
      const auto start = Clock::now();
      const BigCount value = count_pds(cfg.m, cfg.h, static_cast<long long>(k), method);
      const auto micros =
          std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
      const char* name = method == BracketMethod::Literal ? "literal" : "convolution";
      if (cfg.format == Format::Json) {
        Json row;
        row["method"] = name;
        row["k"] = k;
        row["N"] = to_decimal(value);
        row["micros"] = micros;
        rows.push_back(std::move(row));
      } else if (csv) {
        out << name << ',' << k << ',' << value << ',' << micros << '\n';
      } else {
        out << name << " k=" << k << " N=" << value << " " << micros << "us\n";
      }
    }
  }
  if (cfg.format == Format::Json) out << rows.dump() << '\n';
  return exit_code::kOk;
}

}  // namespace detail

/// Executes one command, writing the document to `out` and diagnostics to
/// `err`. Returns the process exit status.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    detail::validate(cfg);
    switch (cfg.command) {
      case Command::Count:
        detail::emit_count(out, cfg, count_pds(cfg.m, cfg.h, *cfg.k, cfg.bracket));
        return exit_code::kOk;
      case Command::Prob:
        detail::emit_prob(out, cfg, probability(cfg.m, cfg.h, *cfg.k, cfg.bracket));
        return exit_code::kOk;
      case Command::Table: {
        const std::size_t n = detail::vertex_count_of(cfg);
        const std::size_t k_max = cfg.k_max ? static_cast<std::size_t>(*cfg.k_max) : n;
        emit_table(out, table_rows(cfg.m, cfg.h, k_max, cfg.bracket), cfg.format, cfg.digits);
        return exit_code::kOk;
      }
      case Command::Sum:
        detail::emit_sum(out, cfg, total_pds(cfg.m, cfg.h, cfg.bracket));
        return exit_code::kOk;
      case Command::Verify: return detail::run_verify(out, cfg);
      case Command::Bench: return detail::run_bench(out, cfg);
    }
  } catch (const detail::InvalidArgs& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInvalidArgs;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kCapacity;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kInvalidArgs;
  }
  return exit_code::kInvalidArgs;
}

/// Parses argv into `cfg`. Returns nullopt when the command should run,
/// otherwise the exit status (0 after --help, 2 on bad arguments).
inline std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& cfg,
                                             std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact power domination counts for complete m-ary trees", "pdcount"};
  app.require_subcommand(1);
  // -h would clash with --h
  app.set_help_flag("--help", "print this help and exit");

  const std::map<std::string, Format> formats{
      {"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}};
  const std::map<std::string, BracketMethod> methods{
      {"convolution", BracketMethod::Convolution}, {"literal", BracketMethod::Literal}};
  const std::vector<std::pair<std::string, Command>> commands{
      {"count", Command::Count}, {"table", Command::Table}, {"prob", Command::Prob},
      {"sum", Command::Sum},     {"verify", Command::Verify}, {"bench", Command::Bench}};
  const std::map<std::string, std::string> blurbs{
      {"count", "number of power dominating sets of size k"},
      {"table", "counts and probabilities for every size up to --k-max"},
      {"prob", "probability that a random k-subset power dominates"},
      {"sum", "power dominating sets of every size"},
      {"verify", "compare the recursion with exhaustive enumeration"},
      {"bench", "time the literal and convolution brackets"}};

  long long k = 0;
  long long k_max = 0;
  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name, blurbs.at(name));
    sub->set_help_flag("--help", "print this help and exit");
    sub->add_option("--m", cfg.m, "arity (>= 2)")->required();
    sub->add_option("--h", cfg.h, "height (>= 0)")->required();
    sub->add_option("--k", k, "set size");
    sub->add_option("--k-max", k_max, "largest set size for table");
    sub->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
        ->type_name("plain|json|csv");
    sub->add_option("--digits", cfg.digits, "fractional digits of approximations");
    sub->add_option("--oracle-cap", cfg.oracle_cap, "largest graph the oracle enumerates");
    sub->add_option("--bracket", cfg.bracket, "bracket evaluation")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case).description(""))
        ->type_name("convolution|literal");
    sub->callback([&cfg, command = command] { cfg.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kInvalidArgs;
  }
  for (CLI::App* sub : app.get_subcommands()) {
    if (sub->count("--k") > 0) cfg.k = k;
    if (sub->count("--k-max") > 0) cfg.k_max = k_max;
  }
  return std::nullopt;
}

}  // namespace pdtree
