#include "sixfold/report.hpp"

#include "sixfold/errors.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>

namespace sixfold {

namespace {

using nlohmann::ordered_json;

ordered_json levels_json(std::string_view side, const std::vector<LevelSubtotal>& levels) {
  ordered_json out = ordered_json::array();
  for (const LevelSubtotal& level : levels) {
    out.push_back(ordered_json{{"side", side},
                               {"q", level.q},
                               {"terms", level.terms},
                               {"count_sum", level.count_sum},
                               {"signed_sum", level.signed_sum}});
  }
  return out;
}

std::string join_factors(const std::vector<u64>& factors, char sep) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(factors[i]);
  }
  return out;
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  return std::nullopt;
}

CountReport make_count_report(u64 m) {
  CountReport report;
  report.summary = summarize(m);
  const CoefficientBasis basis = build_basis(m, ResidueSide::PlusOne);
  report.bounds = basis.bounds;
  report.nu0 = basis.nu0();
  report.k0 = basis.k0();
  return report;
}

nlohmann::ordered_json to_json(const CountReport& report) {
  const CountSummary& s = report.summary;
  ordered_json levels = levels_json("plus", s.levels_plus);
  for (auto& entry : levels_json("minus", s.levels_minus)) levels.push_back(entry);
  return ordered_json{{"m", s.m},
                      {"nu", report.bounds.nu},
                      {"k", report.bounds.k},
                      {"r", report.bounds.r},
                      {"nu0", report.nu0},
                      {"k0", report.k0},
                      {"p_plus", s.p_plus},
                      {"pi_plus", s.pi_plus},
                      {"p_minus", s.p_minus},
                      {"pi_minus", s.pi_minus},
                      {"pi_total", s.pi_total},
                      {"levels", std::move(levels)}};
}

std::string render_count(const CountReport& report, Format format) {
  const CountSummary& s = report.summary;
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      os << to_json(report).dump(2) << '\n';
      break;
    case Format::Csv:
      os << "m,nu,k,r,nu0,k0,p_plus,pi_plus,p_minus,pi_minus,pi_total\n"
         << s.m << ',' << report.bounds.nu << ',' << report.bounds.k << ',' << report.bounds.r << ','
         << report.nu0 << ',' << report.k0 << ',' << s.p_plus << ',' << s.pi_plus << ',' << s.p_minus
         << ',' << s.pi_minus << ',' << s.pi_total << '\n';
      break;
    case Format::Text:
      os << "m = " << s.m << " (6m-1 = " << 6 * s.m - 1 << ", 6m+1 = " << 6 * s.m + 1 << ")\n"
         << "nu = " << report.bounds.nu << ", k = " << report.bounds.k << ", r = " << report.bounds.r
         << ", nu0 = " << report.nu0 << ", k0 = " << report.k0 << '\n'
         << "P+ = " << s.p_plus << ", pi+ = " << s.pi_plus << ", P- = " << s.p_minus
         << ", pi- = " << s.pi_minus << ", pi = " << s.pi_total << '\n';
      break;
  }
  return os.str();
}

TermTable make_term_table(u64 m, ResidueSide side, std::optional<unsigned> max_q) {
  TermTable table;
  table.basis = build_basis(m, side);
  for_each_term(table.basis, [&](const TermView& t) {
    if (max_q && t.q() > *max_q) return;
    table.rows.push_back(TermRow{t.materialize(), class_count(t.d, t.q(), side, m)});
  });
  table.tallies = level_tallies(table.basis);
  if (max_q) {
    std::erase_if(table.tallies, [&](const LevelTally& t) { return t.q > *max_q; });
  }
  return table;
}

std::string render_terms(const TermTable& table, Format format) {
  std::ostringstream os;
  const CoefficientBasis& b = table.basis;
  switch (format) {
    case Format::Json: {
      ordered_json rows = ordered_json::array();
      for (const TermRow& row : table.rows) {
        rows.push_back(ordered_json{{"factors", row.term.factors},
                                    {"d", row.term.d},
                                    {"q", row.term.q},
                                    {"s", row.term.s},
                                    {"residue", row.term.d_residue},
                                    {"sign", row.term.sign()},
                                    {"count", row.count}});
      }
      ordered_json tallies = ordered_json::array();
      for (const LevelTally& t : table.tallies) {
        tallies.push_back(ordered_json{{"q", t.q},
                                       {"gamma_minus", t.gamma_minus},
                                       {"gamma_plus", t.gamma_plus},
                                       {"gamma_minus_formula", t.gamma_minus_formula},
                                       {"gamma_plus_formula", t.gamma_plus_formula}});
      }
      const ordered_json doc{{"m", b.m},
                             {"side", to_string(b.side)},
                             {"limit", b.limit},
                             {"minus_primes", b.minus_primes},
                             {"plus_primes", b.plus_primes},
                             {"terms", std::move(rows)},
                             {"levels", std::move(tallies)}};
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "factors,d,q,s,residue,sign,count\n";
      for (const TermRow& row : table.rows) {
        os << join_factors(row.term.factors, ';') << ',' << row.term.d << ',' << row.term.q << ','
           << row.term.s << ',' << row.term.d_residue << ',' << row.term.sign() << ',' << row.count
           << '\n';
      }
      for (const LevelTally& t : table.tallies) {
        const int sign = t.q % 2 == 1 ? 1 : -1;
        os << "gamma," << t.gamma_minus_formula << ',' << t.q << ",,-1," << sign << ',' << t.gamma_minus
           << '\n';
        os << "gamma," << t.gamma_plus_formula << ',' << t.q << ",,1," << sign << ',' << t.gamma_plus
           << '\n';
      }
      break;
    case Format::Text:
      os << "side " << to_string(b.side) << ", m = " << b.m << ", limit = " << b.limit << '\n'
         << "minus primes {" << join_factors(b.minus_primes, ',') << "}, plus primes {"
         << join_factors(b.plus_primes, ',') << "}\n";
      if (b.empty()) {
        os << "empty basis: no terms\n";
        break;
      }
      os << std::left << std::setw(24) << "factors" << std::right << std::setw(12) << "d"
         << std::setw(4) << "q" << std::setw(4) << "s" << std::setw(5) << "res" << std::setw(6)
         << "sign" << std::setw(10) << "count" << '\n';
      for (const TermRow& row : table.rows) {
        os << std::left << std::setw(24) << join_factors(row.term.factors, '*') << std::right
           << std::setw(12) << row.term.d << std::setw(4) << row.term.q << std::setw(4) << row.term.s
           << std::setw(5) << (row.term.d_residue > 0 ? "+1" : "-1") << std::setw(6)
           << (row.term.sign() > 0 ? "+" : "-") << std::setw(10) << row.count << '\n';
      }
      os << "levels:\n";
      for (const LevelTally& t : table.tallies) {
        os << "  q = " << t.q << ": gamma(-) = " << t.gamma_minus << " of " << t.gamma_minus_formula
           << ", gamma(+) = " << t.gamma_plus << " of " << t.gamma_plus_formula << '\n';
      }
      break;
  }
  return os.str();
}

VerifyRecord compare_counts(const CountSummary& engine, const CountSummary& oracle) {
  VerifyRecord record;
  record.m = engine.m;
  record.engine = engine;
  record.oracle = oracle;
  const std::pair<const char*, bool> fields[] = {
      {"m", engine.m == oracle.m},
      {"p_plus", engine.p_plus == oracle.p_plus},
      {"pi_plus", engine.pi_plus == oracle.pi_plus},
      {"p_minus", engine.p_minus == oracle.p_minus},
      {"pi_minus", engine.pi_minus == oracle.pi_minus},
      {"pi_total", engine.pi_total == oracle.pi_total},
  };
  for (const auto& [name, equal] : fields) {
    if (!equal) {
      record.first_divergent_field = name;
      break;
    }
  }
  record.match = !record.first_divergent_field.has_value();
  return record;
}

VerifyReport verify_sweep(u64 m_max, bool fail_fast, u64 oracle_cap) {
  if (m_max == 0) throw DomainError("m_max must be positive");
  if (m_max > (oracle_cap - 1) / 6) {
    throw ResourceError("6 * m_max + 1 exceeds the oracle cap " + std::to_string(oracle_cap));
  }
  const oracle::PrimalityTable table = oracle::sieve_upto(6 * m_max + 1, oracle_cap);
  VerifyReport report;
  report.m_max = m_max;
  for (u64 m = 1; m <= m_max; ++m) {
    VerifyRecord record = compare_counts(summarize(m), oracle::oracle_counts(table, m));
    ++report.checked;
    if (record.match) {
      ++report.matched;
    } else {
      report.mismatches.push_back(record);
    }
    const bool stop = fail_fast && !record.match;
    if (m == m_max || stop) report.last = std::move(record);
    if (stop) break;
  }
  return report;
}

std::string render_verify(const VerifyReport& report, Format format) {
  const auto record_json = [](const VerifyRecord& r) {
    const auto counts = [](const CountSummary& s) {
      return ordered_json{{"p_plus", s.p_plus},
                          {"pi_plus", s.pi_plus},
                          {"p_minus", s.p_minus},
                          {"pi_minus", s.pi_minus},
                          {"pi_total", s.pi_total}};
    };
    return ordered_json{{"m", r.m},
                        {"match", r.match},
                        {"first_divergent_field", r.first_divergent_field ? ordered_json(*r.first_divergent_field)
                                                                          : ordered_json(nullptr)},
                        {"engine", counts(r.engine)},
                        {"oracle", counts(r.oracle)}};
  };
  const auto record_line = [](const VerifyRecord& r) {
    std::ostringstream os;
    os << "m = " << r.m << ": engine (" << r.engine.p_plus << ", " << r.engine.pi_plus << ", "
       << r.engine.p_minus << ", " << r.engine.pi_minus << ", " << r.engine.pi_total << ") oracle ("
       << r.oracle.p_plus << ", " << r.oracle.pi_plus << ", " << r.oracle.p_minus << ", "
       << r.oracle.pi_minus << ", " << r.oracle.pi_total << ") "
       << (r.match ? "match" : "MISMATCH at " + r.first_divergent_field.value_or("?"));
    return os.str();
  };

  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      ordered_json mismatches = ordered_json::array();
      for (const VerifyRecord& r : report.mismatches) mismatches.push_back(record_json(r));
      ordered_json doc{{"m_max", report.m_max},
                       {"checked", report.checked},
                       {"matched", report.matched},
                       {"ok", report.ok()},
                       {"mismatches", std::move(mismatches)},
                       {"last", report.last ? record_json(*report.last) : ordered_json(nullptr)}};
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      os << "m,match,first_divergent_field,engine_p_plus,engine_pi_plus,engine_p_minus,engine_pi_minus,"
            "engine_pi_total,oracle_p_plus,oracle_pi_plus,oracle_p_minus,oracle_pi_minus,oracle_pi_total\n";
      std::vector<const VerifyRecord*> rows;
      for (const VerifyRecord& r : report.mismatches) rows.push_back(&r);
      if (report.last && report.last->match) rows.push_back(&*report.last);
      for (const VerifyRecord* r : rows) {
        os << r->m << ',' << (r->match ? 1 : 0) << ',' << r->first_divergent_field.value_or("") << ','
           << r->engine.p_plus << ',' << r->engine.pi_plus << ',' << r->engine.p_minus << ','
           << r->engine.pi_minus << ',' << r->engine.pi_total << ',' << r->oracle.p_plus << ','
           << r->oracle.pi_plus << ',' << r->oracle.p_minus << ',' << r->oracle.pi_minus << ','
           << r->oracle.pi_total << '\n';
      }
      break;
    }
    case Format::Text:
      for (const VerifyRecord& r : report.mismatches) os << record_line(r) << '\n';
      if (report.last && report.last->match) os << record_line(*report.last) << '\n';
      os << report.matched << '/' << report.m_max << " match\n";
      break;
  }
  return os.str();
}

BenchResult run_bench(u64 m, unsigned repetitions, u64 oracle_cap) {
  if (repetitions == 0) throw DomainError("repetitions must be positive");
  using clock = std::chrono::steady_clock;
  const auto elapsed_ms = [](clock::time_point start) {
    return std::chrono::duration<double, std::milli>(clock::now() - start).count();
  };

  BenchResult result;
  result.m = m;
  result.repetitions = repetitions;
  result.engine.name = "inclusion-exclusion";
  result.oracle.name = "eratosthenes";
  double engine_total = 0;
  double oracle_total = 0;
  for (unsigned rep = 0; rep < repetitions; ++rep) {
    auto start = clock::now();
    const u64 terms = count_terms(build_basis(m, ResidueSide::PlusOne)) +
                      count_terms(build_basis(m, ResidueSide::MinusOne));
    const u64 engine_pi = prime_count_total(m);
    const double engine_ms = elapsed_ms(start);

    start = clock::now();
    const u64 oracle_pi = oracle::oracle_counts(m, oracle_cap).pi_total;
    const double oracle_ms = elapsed_ms(start);

    if (rep == 0) {
      result.engine_terms = terms;
      result.engine.min_ms = engine_ms;
      result.oracle.min_ms = oracle_ms;
    } else if (terms != result.engine_terms) {
      result.terms_stable = false;
    }
    result.engine.pi_total = engine_pi;
    result.oracle.pi_total = oracle_pi;
    result.engine.min_ms = std::min(result.engine.min_ms, engine_ms);
    result.oracle.min_ms = std::min(result.oracle.min_ms, oracle_ms);
    engine_total += engine_ms;
    oracle_total += oracle_ms;
  }
  result.engine.mean_ms = engine_total / repetitions;
  result.oracle.mean_ms = oracle_total / repetitions;
  return result;
}

std::string render_bench(const BenchResult& result, Format format) {
  std::ostringstream os;
  const BenchPath* paths[] = {&result.engine, &result.oracle};
  switch (format) {
    case Format::Json: {
      ordered_json rows = ordered_json::array();
      for (const BenchPath* p : paths) {
        rows.push_back(ordered_json{{"path", p->name},
                                    {"mean_ms", format_ms(p->mean_ms)},
                                    {"min_ms", format_ms(p->min_ms)},
                                    {"pi_total", p->pi_total}});
      }
      const ordered_json doc{{"m", result.m},
                             {"repetitions", result.repetitions},
                             {"engine_terms", result.engine_terms},
                             {"terms_stable", result.terms_stable},
                             {"paths", std::move(rows)}};
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "path,m,repetitions,mean_ms,min_ms,pi_total,terms\n";
      for (const BenchPath* p : paths) {
        os << p->name << ',' << result.m << ',' << result.repetitions << ',' << format_ms(p->mean_ms)
           << ',' << format_ms(p->min_ms) << ',' << p->pi_total << ','
           << (p == &result.engine ? std::to_string(result.engine_terms) : "") << '\n';
      }
      break;
    case Format::Text:
      os << "m = " << result.m << ", repetitions = " << result.repetitions
         << ", engine terms = " << result.engine_terms
         << (result.terms_stable ? "" : " (unstable across repetitions)") << '\n';
      os << std::left << std::setw(22) << "path" << std::right << std::setw(14) << "mean ms"
         << std::setw(14) << "min ms" << std::setw(12) << "pi" << '\n';
      for (const BenchPath* p : paths) {
        os << std::left << std::setw(22) << p->name << std::right << std::setw(14) << format_ms(p->mean_ms)
           << std::setw(14) << format_ms(p->min_ms) << std::setw(12) << p->pi_total << '\n';
      }
      break;
  }
  return os.str();
}

}  // namespace sixfold
