#include "sixfold/paper_check.hpp"

#include "sixfold/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace sixfold {

namespace {

using nlohmann::ordered_json;

constexpr u64 kExampleM = 50;

/// A printed floor [(m + offset) / (f1 * f2 * ...)].
struct PrintedFloor {
  const char* anchor;
  std::vector<u64> factors;
  std::int64_t offset;
  unsigned level;
};

u64 product(const std::vector<u64>& factors) {
  u64 d = 1;
  for (u64 f : factors) d *= f;
  return d;
}

std::string floor_label(const PrintedFloor& f) {
  std::ostringstream os;
  os << f.anchor << " [(m" << (f.offset < 0 ? "-" : "+") << (f.offset < 0 ? -f.offset : f.offset) << ")/(";
  for (std::size_t i = 0; i < f.factors.size(); ++i) os << (i ? "*" : "") << f.factors[i];
  os << ")]";
  return os.str();
}

u64 printed_value(const PrintedFloor& f, u64 m) {
  const std::int64_t numerator = static_cast<std::int64_t>(m) + f.offset;
  return numerator < 0 ? 0 : static_cast<u64>(numerator) / product(f.factors);
}

/// Engine value of one floor; products past the limit must be absent from
/// the enumeration and then count as zero.
std::string engine_value(const PrintedFloor& f, ResidueSide side, u64 m, const std::vector<SieveTerm>& terms) {
  const u64 d = product(f.factors);
  const CoefficientBasis basis = build_basis(m, side);
  if (d > basis.limit) {
    const bool listed = std::any_of(terms.begin(), terms.end(), [&](const SieveTerm& t) { return t.d == d; });
    return listed ? "enumerated past limit" : "0 (pruned)";
  }
  return std::to_string(class_count(d, f.level, side, m));
}

std::string strip_pruned(std::string s) {
  const auto pos = s.find(" (pruned)");
  if (pos != std::string::npos) s.erase(pos);
  return s;
}

void check_floors(std::vector<AnchorResult>& out, const std::vector<PrintedFloor>& floors, ResidueSide side) {
  const std::vector<SieveTerm> terms = enumerate_terms(build_basis(kExampleM, side));
  for (const PrintedFloor& f : floors) {
    const std::string expected = std::to_string(printed_value(f, kExampleM));
    const std::string got = engine_value(f, side, kExampleM, terms);
    out.push_back({floor_label(f), expected, got, strip_pruned(got) == expected});
  }
}

std::string join(const std::vector<u64>& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + "}";
}

void check_value(std::vector<AnchorResult>& out, std::string anchor, u64 expected, u64 got) {
  out.push_back({std::move(anchor), std::to_string(expected), std::to_string(got), expected == got});
}

void check_text(std::vector<AnchorResult>& out, std::string anchor, std::string expected, std::string got) {
  const bool pass = expected == got;
  out.push_back({std::move(anchor), std::move(expected), std::move(got), pass});
}

// Printed level-1 vector of Example 2 and the legible level-2 terms.
const std::vector<PrintedFloor>& example2_level1() {
  static const std::vector<PrintedFloor> floors = {
      {"Example 2 level-1", {5}, -1, 1},
      {"Example 2 level-1", {11}, -2, 1},
      {"Example 2 level-1", {7}, 1, 1},
      {"Example 2 level-1", {13}, 2, 1},
  };
  return floors;
}

const std::vector<PrintedFloor>& example2_level2() {
  static const std::vector<PrintedFloor> floors = {
      {"Example 2 level-2", {5, 7}, 29, 2},   {"Example 2 level-2", {5, 13}, 54, 2},
      {"Example 2 level-2", {7, 11}, 64, 2},  {"Example 2 level-2", {11, 13}, 119, 2},
      {"Example 2 level-2", {5, 11}, 9, 2},   {"Example 2 level-2", {7, 13}, 15, 2},
  };
  return floors;
}

u64 oracle_composites_in_class(u64 limit, u64 residue) {
  const oracle::PrimalityTable table = oracle::sieve_upto(limit);
  u64 count = 0;
  for (u64 n = 5; n <= limit; ++n) {
    if (n % 6 == residue && !table.is_prime(n)) ++count;
  }
  return count;
}

u64 oracle_primes_in_class(u64 limit, u64 residue) {
  const oracle::PrimalityTable table = oracle::sieve_upto(limit);
  u64 count = 0;
  for (u64 n = 5; n <= limit; ++n) {
    if (n % 6 == residue && table.is_prime(n)) ++count;
  }
  return count;
}

u64 plain_floor(std::int64_t numerator, std::int64_t denominator) {
  return numerator < 0 ? 0 : static_cast<u64>(numerator / denominator);
}

std::vector<ErrataEntry> build_errata() {
  constexpr std::int64_t m = kExampleM;
  std::vector<ErrataEntry> out;
  out.push_back({"Theorem 3.1, first sum (6i-1 primes, 6m-1 side)",
                 "[(6m + K1(i)(-) + 1) / (6 K1(i)(-))]",
                 "[(6m - d - 1) / (6d)]",
                 "mes(C1) = [(m-1)/5] and the Example 2 values 9, 4 at m = 50",
                 [] {
                   const u64 truth = oracle::oracle_class_count(5, 1, ResidueSide::MinusOne, m);
                   return truth == 9 && floor_form_count(5, 1, 1, ResidueSide::MinusOne, m) == truth &&
                          plain_floor(6 * m + 5 + 1, 30) != truth &&
                          floor_form_count(11, 1, 1, ResidueSide::MinusOne, m) == 4;
                 }});
  out.push_back({"Theorem 3.1, second sum (6j+1 primes, 6m-1 side)",
                 "[(6m - K1(j)(+) + 1) / (6 K1(j)(+))]",
                 "[(6m + d - 1) / (6d)]",
                 "mes(D2) = [(m+2)/13] = 4 in Example 2; the printed form gives 3",
                 [] {
                   const u64 truth = oracle::oracle_class_count(13, 1, ResidueSide::MinusOne, m);
                   return truth == 4 && floor_form_count(13, 1, 0, ResidueSide::MinusOne, m) == truth &&
                          plain_floor(6 * m - 13 + 1, 78) == 3;
                 }});
  out.push_back({"mes(D1), mes(D2) closed forms",
                 "[(6m + K1(j)(+) - 1) / (6m)]",
                 "[(6m + d - 1) / (6d)]",
                 "[(m+1)/7] = 7 at m = 50; denominator 6m would give 1",
                 [] {
                   return floor_form_count(7, 1, 0, ResidueSide::MinusOne, m) == 7 &&
                          oracle::oracle_class_count(7, 1, ResidueSide::MinusOne, m) == 7 &&
                          plain_floor(6 * m + 7 - 1, 6 * m) == 1;
                 }});
  out.push_back({"(2.8) constant a",
                 "a = 1 if s is an add number",
                 "a = 1 if s is odd, 5 if s is even",
                 "level-2 floors of Example 1: 35 (s = 1) uses offset 6, 55 (s = 2) uses offset 46",
                 [] {
                   for (u64 mm = 6; mm <= 200; ++mm) {
                     if (floor_form_count(35, 2, 1, ResidueSide::PlusOne, mm) !=
                             oracle::oracle_class_count(35, 2, ResidueSide::PlusOne, mm) ||
                         (55 <= 6 * mm + 1 && floor_form_count(55, 2, 2, ResidueSide::PlusOne, mm) !=
                                                  oracle::oracle_class_count(55, 2, ResidueSide::PlusOne, mm))) {
                       return false;
                     }
                   }
                   return true;
                 }});
  out.push_back({"(2.12), last term",
                 "[m37/(13*17)]",
                 "[(m+37)/(13*17)], the term for d = 221",
                 "37 = (221 + 1)/6; value 0 at m = 50",
                 [] {
                   return (221 + 1) / 6 == 37 && plain_floor(m + 37, 221) == 0 &&
                          class_count(221, 2, ResidueSide::PlusOne, m) == 0;
                 }});
  out.push_back({"(2.12), fifth term",
                 "[(m+20)/(7*11)]",
                 "[(m+20)/(7*17)], the term for d = 119",
                 "20 = (119 + 1)/6 while 7*11 = 77 already appears with offset 13",
                 [] {
                   return (119 + 1) / 6 == 20 && (77 + 1) / 6 == 13 &&
                          class_count(119, 2, ResidueSide::PlusOne, m) == plain_floor(m + 20, 119);
                 }});
  out.push_back({"(2.15), third term denominator",
                 "[(m+1091)/(7*11*13)]",
                 "[(m+1091)/(7*11*17)], the term for d = 1309",
                 "1091 = (5*1309 + 1)/6; 5*1001 + 1 is not divisible by 6",
                 [] { return (5 * 1309 + 1) % 6 == 0 && (5 * 1309 + 1) / 6 == 1091 && (5 * 1001 + 1) % 6 != 0; }});
  out.push_back({"(2.16), first term denominator",
                 "[(m+1091)/(5*7*11*13)]",
                 "[(m+1091)/(5*7*11*17)], the term for d = 6545",
                 "1091 = (6545 + 1)/6; 5*7*11*13 = 5005 is 1 mod 6 and so not in K4(-)",
                 [] { return (6545 + 1) / 6 == 1091 && 5005 % 6 == 1 && 6545 % 6 == 5; }});
  out.push_back({"(2.17), third term numerator",
                 "[(m+1418)/(7*11*13*17)]",
                 "[(m+14181)/(7*11*13*17)]",
                 "(5*17017 + 1)/6 = 14181",
                 [] { return (5 * 17017 + 1) / 6 == 14181 && (5 * 17017 + 1) % 6 == 0; }});
  out.push_back({"(2.20), argument label",
                 "pi(+)(306)",
                 "pi(+)(301), since 6*50 + 1 = 301",
                 "oracle count of primes 6t + 1 up to 301 is 28",
                 [] { return 6 * m + 1 == 301 && oracle_primes_in_class(301, 1) == 28 && prime_count_plus(m) == 28; }});
  out.push_back({"Example 2, level-3 term for 5*7*13",
                 "[(50+327)/(5*7*13)]",
                 "[(50+379)/(5*7*13)]",
                 "(5*455 - 1)/6 = 379; value 0 either way",
                 [] { return (5 * 455 - 1) / 6 == 379 && plain_floor(m + 379, 455) == 0 && 455 > 6 * m - 1; }});
  out.push_back({"Example 2, argument label",
                 "P(-)(301)",
                 "P(-)(299), since 6*50 - 1 = 299",
                 "oracle count of composites 6t - 1 up to 299 is 18",
                 [] { return oracle_composites_in_class(299, 5) == 18 && composite_count_minus(m) == 18; }});
  out.push_back({"Example 2, level-2 bracket",
                 "-(-[(50+29)/(5*7)] + [(50+54)/(5*13)] + ...)",
                 "-([(50+29)/(5*7)] + [(50+54)/(5*13)] + ...)",
                 "the printed total (2+1+1+1+1) = 6 takes every level-2 term positive",
                 [] {
                   const SideCount side = composite_count(ResidueSide::MinusOne, m);
                   return side.levels.size() >= 2 && side.levels[1].count_sum == 6;
                 }});
  out.push_back({"Definition of H1, H2",
                 "H1 = N \\ M1, where H1 and M1 intersect",
                 "H1 and M1 are disjoint (complements)",
                 "m1_witness presence agrees with compositeness of 6m + 1 for m <= 2000",
                 [] {
                   const oracle::PrimalityTable table = oracle::sieve_upto(6 * 2000 + 1);
                   for (u64 mm = 1; mm <= 2000; ++mm) {
                     if (m1_witness(mm).has_value() == table.is_prime(6 * mm + 1)) return false;
                   }
                   return true;
                 }});
  out.push_back({"Size of K2(-), stated next to K1",
                 "nu2(-) = C(nu0,1) C(k0,1)",
                 "gamma2(-) = C(nu0,1) C(k0,1)",
                 "gamma2(-) = 6 in Example 1",
                 [] { return gamma(2, 3, 2).minus == 6; }});
  return out;
}

}  // namespace

bool PaperCheckReport::ok() const {
  const bool anchors_ok = std::all_of(anchors.begin(), anchors.end(), [](const AnchorResult& a) { return a.pass; });
  const bool errata_ok = std::all_of(errata_confirmed.begin(), errata_confirmed.end(), [](bool b) { return b; });
  return anchors_ok && errata_ok;
}

const std::vector<ErrataEntry>& errata_entries() {
  static const std::vector<ErrataEntry> entries = build_errata();
  return entries;
}

PaperCheckReport run_paper_check() {
  PaperCheckReport report;
  auto& out = report.anchors;
  const u64 m = kExampleM;

  // Example 1: the 6m + 1 side.
  const CoefficientBasis plus = build_basis(m, ResidueSide::PlusOne);
  check_text(out, "Example 1 nu, k", "nu=3, k=2",
             "nu=" + std::to_string(plus.bounds.nu) + ", k=" + std::to_string(plus.bounds.k));
  check_text(out, "Example 1 K1(-)", "{5,11,17}", join(plus.minus_primes));
  check_text(out, "Example 1 K1(+)", "{7,13}", join(plus.plus_primes));

  check_floors(out,
               {{"(2.11)", {5}, 1, 1},
                {"(2.11)", {11}, 2, 1},
                {"(2.11)", {17}, 3, 1},
                {"(2.11)", {7}, -1, 1},
                {"(2.11)", {13}, -2, 1},
                {"(2.12)", {5, 7}, 6, 2},
                {"(2.12)", {5, 13}, 11, 2},
                {"(2.12)", {7, 11}, 13, 2},
                {"(2.12)", {11, 13}, 24, 2},
                {"(2.13)", {5, 11}, 46, 2},
                {"(2.13)", {5, 17}, 71, 2},
                {"(2.13)", {11, 17}, 156, 2},
                {"(2.13)", {7, 13}, 76, 2},
                {"(2.14)", {5, 11, 17}, 156, 3},
                {"(2.14)", {5, 7, 13}, 76, 3},
                {"(2.14)", {7, 11, 13}, 167, 3},
                {"(2.14)", {7, 13, 17}, 258, 3},
                {"(2.15)", {5, 7, 11}, 321, 3},
                {"(2.15)", {5, 7, 17}, 496, 3},
                {"(2.15)", {5, 11, 13}, 596, 3},
                {"(2.15)", {5, 13, 17}, 921, 3},
                {"(2.15)", {11, 13, 17}, 2026, 3},
                {"(2.16)", {5, 11, 13, 17}, 2026, 4},
                {"(2.17)", {5, 7, 11, 13}, 4171, 4},
                {"(2.17)", {5, 7, 13, 17}, 6446, 4},
                {"(2.18)", {5, 7, 11, 13, 17}, 14181, 5}},
               ResidueSide::PlusOne);

  // Printed cardinalities, checked against the binomial formula and against
  // the residues of the actual products.
  const std::vector<GammaPair> unpruned = unpruned_level_counts(plus);
  const struct {
    const char* anchor;
    unsigned q;
    bool minus;
    u64 printed;
  } gammas[] = {
      {"gamma2(-)", 2, true, 6}, {"gamma2(+)", 2, false, 4}, {"gamma3(-)", 3, true, 4},
      {"gamma3(+)", 3, false, 6}, {"gamma4(-)", 4, true, 2}, {"gamma4(+)", 4, false, 3},
      {"gamma5(-)", 5, true, 1}, {"K5(+) empty", 5, false, 0},
  };
  for (const auto& g : gammas) {
    const GammaPair formula = gamma(g.q, plus.nu0(), plus.k0());
    const GammaPair counted = unpruned.at(g.q - 1);
    const u64 formula_value = g.minus ? formula.minus : formula.plus;
    const u64 counted_value = g.minus ? counted.minus : counted.plus;
    out.push_back({std::string("Example 1 ") + g.anchor, std::to_string(g.printed),
                   std::to_string(formula_value) + " (enumerated " + std::to_string(counted_value) + ")",
                   formula_value == g.printed && counted_value == g.printed});
  }

  const SideCount plus_count = composite_count(ResidueSide::PlusOne, m);
  check_value(out, "(2.19) P(+)(301)", 22, plus_count.composites);
  check_value(out, "(2.20) pi(+)(301)", 28, m - plus_count.composites);

  // Example 2: the 6m - 1 side.
  const CoefficientBasis minus = build_basis(m, ResidueSide::MinusOne);
  check_value(out, "Example 2 r", 2, minus.bounds.r);
  check_text(out, "Example 2 K(-)", "{5,11}", join(minus.minus_primes));
  check_text(out, "Example 2 K(+)", "{7,13}", join(minus.plus_primes));

  check_floors(out, example2_level1(), ResidueSide::MinusOne);
  check_floors(out, example2_level2(), ResidueSide::MinusOne);
  check_floors(out,
               {{"Example 2 level-3", {7, 11, 13}, 834, 3},
                {"Example 2 level-3", {5, 7, 11}, 64, 3},
                {"Example 2 level-3", {5, 11, 13}, 119, 3},
                {"Example 2 level-4", {5, 7, 11, 13}, 834, 4}},
               ResidueSide::MinusOne);

  const SideCount minus_count = composite_count(ResidueSide::MinusOne, m);
  std::string level1 = "(";
  for (std::size_t i = 0; i < example2_level1().size(); ++i) {
    level1 += (i ? "," : "") + std::to_string(printed_value(example2_level1()[i], m));
  }
  level1 += ")";
  std::string got_level1 = "(";
  for (std::size_t i = 0; i < example2_level1().size(); ++i) {
    const u64 d = example2_level1()[i].factors.front();
    got_level1 += (i ? "," : "") + std::to_string(class_count(d, 1, ResidueSide::MinusOne, m));
  }
  got_level1 += ")";
  check_text(out, "Example 2 level-1 vector", level1, got_level1);
  check_value(out, "Example 2 level-1 sum (9+4+7+4)", 24,
              minus_count.levels.empty() ? 0 : minus_count.levels[0].count_sum);
  check_value(out, "Example 2 level-2 sum (2+1+1+1+1)", 6,
              minus_count.levels.size() < 2 ? 0 : minus_count.levels[1].count_sum);
  check_value(out, "Example 2 P(-)", 18, minus_count.composites);
  check_value(out, "Example 2 pi(-) = 50-18", 32, m - minus_count.composites);

  check_value(out, "Theorem 4 pi = 2*50-(22+18)", 60, prime_count_total(m));

  report.errata = errata_entries();
  for (const ErrataEntry& e : report.errata) report.errata_confirmed.push_back(e.confirm());
  return report;
}

std::string render_paper_check(const PaperCheckReport& report, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      ordered_json anchors = ordered_json::array();
      for (const AnchorResult& a : report.anchors) {
        anchors.push_back(ordered_json{{"anchor", a.anchor}, {"expected", a.expected}, {"got", a.got}, {"pass", a.pass}});
      }
      ordered_json errata = ordered_json::array();
      for (std::size_t i = 0; i < report.errata.size(); ++i) {
        const ErrataEntry& e = report.errata[i];
        errata.push_back(ordered_json{{"location", e.location},
                                      {"printed_form", e.printed_form},
                                      {"normative_form", e.normative_form},
                                      {"evidence", e.evidence},
                                      {"confirmed", static_cast<bool>(report.errata_confirmed[i])}});
      }
      const ordered_json doc{{"ok", report.ok()}, {"anchors", std::move(anchors)}, {"errata", std::move(errata)}};
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      const auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
        return out + "\"";
      };
      os << "kind,anchor,expected,got,pass\n";
      for (const AnchorResult& a : report.anchors) {
        os << "anchor," << quote(a.anchor) << ',' << quote(a.expected) << ',' << quote(a.got) << ','
           << (a.pass ? "pass" : "FAIL") << '\n';
      }
      for (std::size_t i = 0; i < report.errata.size(); ++i) {
        const ErrataEntry& e = report.errata[i];
        os << "errata," << quote(e.location) << ',' << quote(e.normative_form) << ',' << quote(e.printed_form)
           << ',' << (report.errata_confirmed[i] ? "pass" : "FAIL") << '\n';
      }
      break;
    }
    case Format::Text: {
      std::size_t passed = 0;
      for (const AnchorResult& a : report.anchors) {
        os << (a.pass ? "pass " : "FAIL ") << a.anchor << ": expected " << a.expected << ", got " << a.got << '\n';
        passed += a.pass ? 1 : 0;
      }
      os << passed << '/' << report.anchors.size() << " anchors pass\n\nerrata (" << report.errata.size()
         << " entries, not asserted as printed):\n";
      for (std::size_t i = 0; i < report.errata.size(); ++i) {
        const ErrataEntry& e = report.errata[i];
        os << "  ERRATA " << e.location << ": printed " << e.printed_form << " -> " << e.normative_form << " ["
           << (report.errata_confirmed[i] ? "confirmed" : "NOT CONFIRMED") << "]\n";
      }
      break;
    }
  }
  return os.str();
}

std::string render_errata_markdown() {
  std::ostringstream os;
  os << "# Errata\n\n"
     << "Misprints in the reference formulas and worked examples (m = 50), with the\n"
     << "reading this library implements. Each normative form is re-derived by\n"
     << "`sixfold paper-check`. This file is generated by `sixfold paper-check --errata`.\n";
  for (const ErrataEntry& e : errata_entries()) {
    os << "\n## " << e.location << "\n\n"
       << "- printed: `" << e.printed_form << "`\n"
       << "- normative: `" << e.normative_form << "`\n"
       << "- evidence: " << e.evidence << '\n';
  }
  return os.str();
}

}  // namespace sixfold
