// platonic: command-line front end for the platonic-number library.
//
// Exit status: 0 success, 2 usage or domain error, 3 divisibility violation,
// 4 internal consistency failure, 5 conjecture counterexample found.

#include "platonic/format.hpp"
#include "platonic/platonic.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace platonic;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotDivisible = 3;
constexpr int kExitConsistency = 4;
constexpr int kExitCounterexample = 5;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PlatonicKind kind_arg(const std::string& text) {
  if (auto kind = parse_kind(text)) return *kind;
  throw UsageError("unknown platonic kind '" + text + "'");
}

std::uint64_t unsigned_arg(const std::string& text) {
  const Integer value = parse_integer(text);
  if (value < 0 || value > std::numeric_limits<std::uint64_t>::max()) {
    throw UsageError("expected a non-negative integer, got '" + text + "'");
  }
  return value.convert_to<std::uint64_t>();
}

// "a..b" or a single "a".
std::pair<std::uint64_t, std::uint64_t> range_arg(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = unsigned_arg(text);
    return {v, v};
  }
  return {unsigned_arg(text.substr(0, dots)), unsigned_arg(text.substr(dots + 2))};
}

struct Output {
  std::ostringstream text;
  int status = kExitOk;
};

Output cmd_gen(const std::string& kind_text, const std::string& range_text,
               bool check_recurrence, OutputFormat format) {
  const PlatonicKind kind = kind_arg(kind_text);
  const auto [from, to] = range_arg(range_text);
  if (from < 1 || from > to) {
    throw UsageError("index range must satisfy 1 <= from <= to");
  }
  Output out;
  const Sequence seq = platonic_range(kind, from, to);
  if (check_recurrence) {
    const Sequence rec = platonic_values_by_recurrence(kind, to);
    for (std::uint64_t n = from; n <= to; ++n) {
      if (rec.at_index(n) != seq.at_index(n)) {
        throw ConsistencyError("recurrence disagrees with closed form at n = " +
                               std::to_string(n));
      }
    }
  }
  out.text << render(seq, format);
  return out;
}

Output cmd_difftable(const std::string& kind_text, std::uint64_t rows,
                     OutputFormat format) {
  Output out;
  out.text << render(difference_table(kind_arg(kind_text), rows), format);
  return out;
}

Output cmd_represent(const std::string& kind_text, const std::string& m_text,
                     OutputFormat format) {
  Output out;
  const Representation r = represent_multiple(kind_arg(kind_text), parse_integer(m_text));
  if (evaluate_representation(r) != r.target) {
    throw ConsistencyError("representation does not evaluate to its target");
  }
  out.text << render(r, format);
  return out;
}

Output cmd_period(const std::string& kind_text, const std::string& range_text,
                  OutputFormat format) {
  std::vector<PlatonicKind> kinds;
  if (kind_text == "all") {
    kinds.assign(kAllKinds.begin(), kAllKinds.end());
  } else {
    kinds.push_back(kind_arg(kind_text));
  }
  const auto [lo, hi] = range_arg(range_text);
  if (lo < 2 || lo > hi) throw UsageError("moduli must satisfy 2 <= from <= to");

  Output out;
  if (format == OutputFormat::Csv) out.text << period_csv_header();
  if (format == OutputFormat::Table) out.text << period_table_header();
  for (PlatonicKind kind : kinds) {
    for (std::uint64_t d = lo; d <= hi; ++d) {
      out.text << period_row(check_period_claim(kind, d), format);
    }
  }
  return out;
}

struct PollockArgs {
  std::string limit = "1";
  std::size_t max_terms = 5;
  bool witnesses = false;
  bool strict_distinct = false;
  unsigned threads = 1;
  std::uint64_t ceiling = kDefaultScanCeiling;
};

Output cmd_pollock(const PollockArgs& args, OutputFormat format) {
  ScanOptions options;
  options.max_terms = args.max_terms;
  options.keep_witnesses = args.witnesses;
  options.policy = args.strict_distinct ? TermPolicy::Distinct : TermPolicy::Repetition;
  options.threads = args.threads;
  options.ceiling = args.ceiling;
  const ScanReport report = scan_conjecture(parse_integer(args.limit), options);
  Output out;
  out.text << render(report, format);
  if (!report.conjecture_holds()) out.status = kExitCounterexample;
  return out;
}

Output cmd_verify_identities(std::uint64_t max_n, OutputFormat format) {
  if (max_n < 1) throw UsageError("--max-n must be at least 1");
  std::vector<IdentityCheck> checks;
  bool all_hold = true;
  for (PlatonicKind kind : kAllKinds) {
    for (int order = 1; order <= 4; ++order) {
      for (std::uint64_t n = 1; n <= max_n; ++n) {
        checks.push_back(identity_residual(kind, order, n));
        all_hold = all_hold && checks.back().holds;
      }
    }
  }
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    all_hold = all_hold && combined_residual_tetrahedral(n) == n;
  }
  Output out;
  out.text << render(std::span<const IdentityCheck>(checks), format);
  if (!all_hold) out.status = kExitConsistency;
  return out;
}

Output cmd_reference_tables(const std::string& golden) {
  Output out;
  const std::string text = reference_tables();
  if (!golden.empty()) {
    std::ifstream in(golden, std::ios::binary);
    if (!in) throw UsageError("cannot read golden file " + golden);
    std::ostringstream expected;
    expected << in.rdbuf();
    if (expected.str() != text) {
      throw ConsistencyError("regenerated tables differ from " + golden);
    }
  }
  out.text << text;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Platonic numbers: sequences, difference identities, "
               "representations, modular periods and sum-of-platonic scans"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_text = "table";
  std::string out_path;
  app.add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", out_path, "Write output to FILE instead of stdout");

  std::string kind_text;
  std::string range_text;
  std::string m_text;
  std::uint64_t rows = 10;
  std::uint64_t max_n = 20;
  bool check_recurrence = false;
  std::string golden;
  PollockArgs pollock;

  auto* gen = app.add_subcommand("gen", "Print values at indices FROM..TO");
  gen->add_option("kind", kind_text)->required();
  gen->add_option("range", range_text, "FROM..TO or a single index")->required();
  gen->add_flag("--check-recurrence", check_recurrence,
                "Cross-check against the linear recurrence");

  auto* difftable = app.add_subcommand("difftable", "Forward-difference table");
  difftable->add_option("kind", kind_text)->required();
  difftable->add_option("rows", rows)->required();

  auto* represent = app.add_subcommand("represent", "Four-term integer combination");
  represent->add_option("kind", kind_text)->required();
  represent->add_option("m", m_text)->required();

  auto* period = app.add_subcommand("period", "Closed-form vs empirical periods");
  period->add_option("kind", kind_text, "A kind or 'all'")->required();
  period->add_option("moduli", range_text, "D or FROM..TO")->required();

  auto* scan = app.add_subcommand("pollock", "Sums of at most K platonic numbers up to N");
  scan->add_option("N", pollock.limit)->required();
  scan->add_option("--max-terms", pollock.max_terms, "Term budget")->capture_default_str();
  scan->add_flag("--witnesses", pollock.witnesses, "Emit a witness per integer");
  scan->add_flag("--strict-distinct", pollock.strict_distinct,
                 "Require pairwise distinct term values");
  scan->add_option("--threads", pollock.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  scan->add_option("--ceiling", pollock.ceiling, "Largest accepted N")
      ->capture_default_str();

  auto* identities = app.add_subcommand("verify-identities",
                                        "Residual table of the difference identities");
  identities->add_option("--max-n", max_n, "Largest index checked")->capture_default_str();

  auto* tables = app.add_subcommand("paper-tables",
                                    "Regenerate the reference lists and difference tables");
  tables->add_option("--check", golden, "Compare against a golden file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const OutputFormat format = *parse_format(format_text);
  Output result;
  try {
    if (*gen) {
      result = cmd_gen(kind_text, range_text, check_recurrence, format);
    } else if (*difftable) {
      result = cmd_difftable(kind_text, rows, format);
    } else if (*represent) {
      result = cmd_represent(kind_text, m_text, format);
    } else if (*period) {
      result = cmd_period(kind_text, range_text, format);
    } else if (*scan) {
      result = cmd_pollock(pollock, format);
    } else if (*identities) {
      result = cmd_verify_identities(max_n, format);
    } else if (*tables) {
      result = cmd_reference_tables(golden);
    }
  } catch (const NotDivisible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotDivisible;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency error: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::exception& e) {
    // UsageError, DomainError, ResourceLimit
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (out_path.empty()) {
    std::cout << result.text.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    file << result.text.str();
  }
  return result.status;
}
