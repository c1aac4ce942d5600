// binx — command-line workbench for finite binary systems.
//
// Subcommands:
//   classify FILE                     report structural properties of a table
//   box A B [-o FILE]                 product of two tables
//   center enumerate N [--masks]      the locally-zero family of order N
//   center count N [--iso]            family size (and isomorphism classes)
//   center bruteforce N [--masks]     center members found by definition scan
//   verify ID|all [--n N] [--sample K] [--seed S]
//   linear compose a b c d e f --mod m
//
// FILE arguments accept '-' for standard input; `box - -` reads two tables
// back to back from the same stream.  Exit codes: 0 success, 1 a verification
// check failed (a counterexample is printed), 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "binx/center.hpp"
#include "binx/groupoid.hpp"
#include "binx/linear.hpp"
#include "binx/table_io.hpp"
#include "binx/verify.hpp"

namespace {

using binx::Groupoid;

/// Reads tables named on the command line.  '-' taps standard input; the
/// reader is shared so two '-' arguments consume consecutive tables.
class TableSource {
 public:
  Groupoid read(const std::string& spec) {
    if (spec == "-") {
      if (!stdin_reader_) stdin_reader_.emplace(std::cin, "<stdin>");
      return stdin_reader_->read_table();
    }
    std::ifstream file(spec);
    if (!file) throw std::runtime_error("cannot open '" + spec + "'");
    binx::TableReader reader(file, spec);
    Groupoid g = reader.read_table();
    reader.expect_end();
    return g;
  }

  /// Rejects trailing content on standard input once all reads are done.
  void finish() {
    if (stdin_reader_) stdin_reader_->expect_end();
  }

 private:
  std::optional<binx::TableReader> stdin_reader_;
};

/// Returns the stream the subcommand should write to: a file when -o was
/// given, standard output otherwise.
std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  return file;
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

int run_classify(const std::string& input) {
  TableSource source;
  const Groupoid g = source.read(input);
  source.finish();

  std::ostringstream out;
  out << "order: " << g.order() << "\n";
  out << "idempotent: " << yes_no(is_idempotent(g)) << "\n";
  out << "commutative: " << yes_no(is_commutative(g)) << "\n";
  if (const auto witness = binx::associativity_witness(g)) {
    out << "associative: no (witness: " << (*witness)[0] << " " << (*witness)[1]
        << " " << (*witness)[2] << ")\n";
  } else {
    out << "associative: yes\n";
  }
  out << "left-zero: " << yes_no(is_left_zero(g)) << "\n";
  out << "right-zero: " << yes_no(is_right_zero(g)) << "\n";
  out << "orientation: " << yes_no(has_orientation_property(g)) << "\n";
  out << "travel: " << yes_no(is_travel_groupoid(g)) << "\n";
  const bool locally_zero = binx::is_locally_zero(g);
  out << "locally-zero: " << yes_no(locally_zero) << "\n";
  if (locally_zero) out << "mask: " << binx::to_mask(g).letters() << "\n";
  // Membership by definition needs a scan over every table of the same
  // order, which is only practical for small orders.
  if (g.order() <= 3)
    out << "center: " << yes_no(binx::is_in_center_bruteforce(g)) << "\n";
  std::cout << out.str();
  return 0;
}

int run_box(const std::string& lhs, const std::string& rhs,
            const std::string& out_path) {
  TableSource source;
  const Groupoid a = source.read(lhs);
  const Groupoid b = source.read(rhs);
  source.finish();
  const Groupoid product = binx::box(a, b);
  std::ofstream file;
  open_sink(out_path, file) << binx::render_table(product);
  return 0;
}

void write_tables(std::ostream& out, const std::vector<Groupoid>& tables,
                  bool as_masks) {
  bool first = true;
  for (const Groupoid& g : tables) {
    if (as_masks) {
      out << binx::render_mask_text(binx::to_mask(g)) << "\n";
    } else {
      if (!first) out << "\n";
      out << binx::render_table(g);
    }
    first = false;
  }
}

int run_center_enumerate(int order, bool masks, const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_sink(out_path, file);
  binx::LocallyZeroStream stream(order);
  bool first = true;
  while (auto g = stream.next()) {
    if (masks) {
      out << binx::render_mask_text(binx::to_mask(*g)) << "\n";
    } else {
      if (!first) out << "\n";
      out << binx::render_table(*g);
    }
    first = false;
  }
  return 0;
}

int run_center_count(int order, bool iso) {
  if (order < 1 || order > binx::Groupoid::kMaxOrder)
    throw std::invalid_argument("order out of range [1, 16]");
  const int pairs = order * (order - 1) / 2;
  if (pairs > 63) throw std::invalid_argument("family too large to count");
  const std::uint64_t total = std::uint64_t{1} << pairs;
  if (iso) {
    std::cout << total << " total, " << binx::count_iso_classes(order)
              << " classes\n";
  } else {
    std::cout << total << "\n";
  }
  return 0;
}

int run_center_bruteforce(int order, bool masks, const std::string& out_path) {
  const std::vector<Groupoid> members = binx::center_bruteforce(order);
  std::ofstream file;
  write_tables(open_sink(out_path, file), members, masks);
  return 0;
}

void print_report(const binx::TheoremReport& report) {
  std::cout << binx::render_report_line(report) << "\n";
  if (report.counterexample)
    std::cout << binx::render_counterexample(*report.counterexample);
}

int run_verify(const std::string& id_arg, int order,
               std::optional<std::uint64_t> sample, std::uint64_t seed) {
  if (id_arg == "all") {
    const auto reports = binx::run_all(order, seed, sample);
    for (const auto& report : reports) print_report(report);
    return binx::exit_code_for(reports);
  }
  const auto id = binx::theorem_id_from_string(id_arg);
  if (!id) throw std::invalid_argument("unknown check id '" + id_arg + "'");
  binx::RunOptions options;
  options.order = order;
  options.seed = seed;
  if (sample) {
    options.mode = binx::CheckMode::sampled;
    options.budget = *sample;
  }
  const binx::TheoremReport report = binx::run_check(*id, options);
  print_report(report);
  return report.passed ? 0 : 1;
}

int run_linear_compose(const std::vector<std::int64_t>& coeffs,
                       std::int64_t modulus) {
  const binx::LinearCoeffs p =
      binx::make_linear(modulus, coeffs[0], coeffs[1], coeffs[2]);
  const binx::LinearCoeffs q =
      binx::make_linear(modulus, coeffs[3], coeffs[4], coeffs[5]);
  const binx::LinearCoeffs result = binx::compose(p, q);
  std::cout << result.a << " " << result.b << " " << result.c << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite binary systems"};
  app.require_subcommand(1);

  // classify
  std::string classify_input;
  CLI::App* classify = app.add_subcommand("classify", "report table properties");
  classify->add_option("FILE", classify_input, "table file, or - for stdin")
      ->required();

  // box
  std::string box_lhs, box_rhs, box_out;
  CLI::App* box_cmd = app.add_subcommand("box", "product of two tables");
  box_cmd->add_option("A", box_lhs, "first table")->required();
  box_cmd->add_option("B", box_rhs, "second table")->required();
  box_cmd->add_option("-o,--output", box_out, "write the result to a file");

  // center
  CLI::App* center = app.add_subcommand("center", "the commuting family");
  center->require_subcommand(1);
  int enum_order = 0;
  bool enum_masks = false;
  std::string enum_out;
  CLI::App* enumerate =
      center->add_subcommand("enumerate", "list the locally-zero family");
  enumerate->add_option("N", enum_order, "table order")->required();
  enumerate->add_flag("--masks", enum_masks, "print mask text instead of tables");
  enumerate->add_option("-o,--output", enum_out, "write the list to a file");

  int count_order = 0;
  bool count_iso = false;
  CLI::App* count = center->add_subcommand("count", "family size");
  count->add_option("N", count_order, "table order")->required();
  count->add_flag("--iso", count_iso, "also count isomorphism classes");

  int brute_order = 0;
  bool brute_masks = false;
  std::string brute_out;
  CLI::App* brute =
      center->add_subcommand("bruteforce", "scan every table by definition");
  brute->add_option("N", brute_order, "table order")->required();
  brute->add_flag("--masks", brute_masks, "print mask text instead of tables");
  brute->add_option("-o,--output", brute_out, "write the list to a file");

  // verify
  std::string verify_id;
  int verify_order = 3;
  std::uint64_t verify_sample = 0;
  std::uint64_t verify_seed = 0;
  CLI::App* verify = app.add_subcommand("verify", "run the check suite");
  verify->add_option("ID", verify_id, "check id, or 'all'")->required();
  verify->add_option("--n", verify_order, "table order (default 3)");
  CLI::Option* sample_opt = verify->add_option(
      "--sample", verify_sample, "random trials instead of exhaustion");
  verify->add_option("--seed", verify_seed, "seed for sampled runs");

  // linear
  CLI::App* linear = app.add_subcommand("linear", "coefficient arithmetic");
  linear->require_subcommand(1);
  std::vector<std::int64_t> compose_coeffs;
  std::int64_t compose_mod = 0;
  CLI::App* compose_cmd =
      linear->add_subcommand("compose", "compose two coefficient triples");
  compose_cmd
      ->add_option("COEFFS", compose_coeffs, "a b c d e f (two triples)")
      ->required()
      ->expected(6);
  compose_cmd->add_option("--mod", compose_mod, "modulus")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify) return run_classify(classify_input);
    if (*box_cmd) return run_box(box_lhs, box_rhs, box_out);
    if (*enumerate) return run_center_enumerate(enum_order, enum_masks, enum_out);
    if (*count) return run_center_count(count_order, count_iso);
    if (*brute) return run_center_bruteforce(brute_order, brute_masks, brute_out);
    if (*verify) {
      std::optional<std::uint64_t> sample;
      if (sample_opt->count() > 0) sample = verify_sample;
      return run_verify(verify_id, verify_order, sample, verify_seed);
    }
    if (*compose_cmd) return run_linear_compose(compose_coeffs, compose_mod);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
