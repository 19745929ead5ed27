#include "sixfold/cli.hpp"

#include "sixfold/errors.hpp"
#include "sixfold/paper_check.hpp"
#include "sixfold/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

namespace sixfold::cli {

namespace {

struct Options {
  std::string format = "text";
  std::string out_file;
  u64 oracle_cap = oracle::kDefaultCap;

  u64 m = 0;
  std::string side = "plus";
  std::optional<unsigned> max_q;
  bool fail_fast = false;
  unsigned repetitions = 1;
  bool errata = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_positive_m(u64 m) {
  if (m == 0) throw UsageError("m must be a positive integer");
}

}  // namespace

int verify_exit_code(const VerifyReport& report) { return report.ok() ? kExitOk : kExitMismatch; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact prime counting in the progressions 6t+1 and 6t-1", "sixfold"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", opt.out_file, "Write output to FILE instead of stdout");
  app.add_option("--oracle-cap", opt.oracle_cap, "Largest sieve limit the oracle may allocate")
      ->capture_default_str();

  auto* count = app.add_subcommand("count", "Composite and prime counts for one m");
  count->add_option("m", opt.m, "Index m (counts run up to 6m+1)")->required();

  auto* terms = app.add_subcommand("terms", "Inclusion-exclusion terms for one side");
  terms->add_option("m", opt.m, "Index m")->required();
  terms->add_option("--side", opt.side, "plus (6t+1) or minus (6t-1)")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  terms->add_option("--max-q", opt.max_q, "Highest level to list");

  auto* verify = app.add_subcommand("verify", "Compare the engine against the sieve oracle for m = 1..M");
  verify->add_option("m_max", opt.m, "Largest m to check")->required();
  verify->add_flag("--fail-fast", opt.fail_fast, "Stop at the first mismatch");

  auto* paper = app.add_subcommand("paper-check", "Check the m = 50 worked examples and list errata");
  paper->add_flag("--errata", opt.errata, "Print the errata ledger as markdown");

  auto* bench = app.add_subcommand("bench", "Time engine vs oracle");
  bench->add_option("m", opt.m, "Index m")->required();
  bench->add_option("repetitions", opt.repetitions, "Number of runs")->default_val(1);

  // Global options are accepted after the subcommand too.
  for (CLI::App* sub : {count, terms, verify, paper, bench}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "sixfold: " << e.what() << '\n' << "run 'sixfold --help' for usage\n";
    return kExitUsage;
  }

  const Format format = parse_format(opt.format).value_or(Format::Text);
  std::string text;
  int code = kExitOk;
  try {
    if (count->parsed()) {
      require_positive_m(opt.m);
      text = render_count(make_count_report(opt.m), format);
    } else if (terms->parsed()) {
      require_positive_m(opt.m);
      if (opt.max_q && *opt.max_q == 0) throw UsageError("--max-q must be positive");
      const ResidueSide side = opt.side == "plus" ? ResidueSide::PlusOne : ResidueSide::MinusOne;
      text = render_terms(make_term_table(opt.m, side, opt.max_q), format);
    } else if (verify->parsed()) {
      require_positive_m(opt.m);
      const VerifyReport report = verify_sweep(opt.m, opt.fail_fast, opt.oracle_cap);
      text = render_verify(report, format);
      code = verify_exit_code(report);
    } else if (paper->parsed()) {
      if (opt.errata) {
        text = render_errata_markdown();
      } else {
        const PaperCheckReport report = run_paper_check();
        text = render_paper_check(report, format);
        code = report.ok() ? kExitOk : kExitMismatch;
      }
    } else if (bench->parsed()) {
      require_positive_m(opt.m);
      if (opt.repetitions == 0) throw UsageError("repetitions must be positive");
      text = render_bench(run_bench(opt.m, opt.repetitions, opt.oracle_cap), format);
    }
  } catch (const UsageError& e) {
    err << "sixfold: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "sixfold: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "sixfold: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "sixfold: " << e.what() << " (raise --oracle-cap)\n";
    return kExitUsage;
  }

  if (opt.out_file.empty()) {
    out << text;
  } else {
    std::ofstream file(opt.out_file, std::ios::binary);
    if (!file) {
      err << "sixfold: cannot open " << opt.out_file << " for writing\n";
      return kExitUsage;
    }
    file << text;
  }
  return code;
}

}  // namespace sixfold::cli
