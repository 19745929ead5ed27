#pragma once

#include "sixfold/basis.hpp"
#include "sixfold/engine.hpp"
#include "sixfold/oracle.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sixfold {

enum class Format { Text, Json, Csv };

/// "text", "json" or "csv"; nullopt otherwise.
std::optional<Format> parse_format(std::string_view name);

/// Everything `count` prints. nu0/k0 describe the 6m + 1 side basis.
struct CountReport {
  CountSummary summary;
  IndexBounds bounds;
  u64 nu0 = 0;
  u64 k0 = 0;
};

CountReport make_count_report(u64 m);

/// Keys in fixed order: m, nu, k, r, nu0, k0, p_plus, pi_plus, p_minus,
/// pi_minus, pi_total, levels. Integers only.
nlohmann::ordered_json to_json(const CountReport& report);
std::string render_count(const CountReport& report, Format format);

struct TermRow {
  SieveTerm term;
  u64 count = 0;
};

struct TermTable {
  CoefficientBasis basis;
  std::vector<TermRow> rows;
  std::vector<LevelTally> tallies;
};

/// Terms of one side with their class counts, optionally cut at level max_q.
TermTable make_term_table(u64 m, ResidueSide side, std::optional<unsigned> max_q = std::nullopt);

/// CSV columns: factors,d,q,s,residue,sign,count. Term rows list factors
/// joined by ';'. Each level then contributes two tally rows whose factors
/// field reads "gamma", d holds the binomial-formula value and count the
/// enumerated number of products in that residue class.
std::string render_terms(const TermTable& table, Format format);

struct VerifyRecord {
  u64 m = 0;
  CountSummary engine;
  CountSummary oracle;
  bool match = false;
  std::optional<std::string> first_divergent_field;
};

/// Compares the five counts; fills match and first_divergent_field.
VerifyRecord compare_counts(const CountSummary& engine, const CountSummary& oracle);

struct VerifyReport {
  u64 m_max = 0;
  u64 checked = 0;
  u64 matched = 0;
  std::vector<VerifyRecord> mismatches;
  std::optional<VerifyRecord> last;  ///< record for the final m checked

  bool ok() const noexcept { return checked == m_max && matched == checked; }
};

/// Engine vs oracle for every m in [1, m_max], one shared sieve.
/// fail_fast stops at the first mismatch.
VerifyReport verify_sweep(u64 m_max, bool fail_fast, u64 oracle_cap = oracle::kDefaultCap);

std::string render_verify(const VerifyReport& report, Format format);

struct BenchPath {
  std::string name;
  double mean_ms = 0;
  double min_ms = 0;
  u64 pi_total = 0;
};

struct BenchResult {
  u64 m = 0;
  unsigned repetitions = 0;
  u64 engine_terms = 0;  ///< terms enumerated across both sides, per run
  bool terms_stable = true;
  BenchPath engine;
  BenchPath oracle;
};

BenchResult run_bench(u64 m, unsigned repetitions, u64 oracle_cap = oracle::kDefaultCap);
std::string render_bench(const BenchResult& result, Format format);

}  // namespace sixfold
