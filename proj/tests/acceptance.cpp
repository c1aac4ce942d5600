// Acceptance harness: one PASS/FAIL line per numbered criterion, a note under
// every failure, exit code = number of failed criteria.
//
// Three criteria fail by design, and the failures are kept red on purpose:
// they encode the expectation that every locally-zero table is central, which
// is false at order 3 — tables mixing left- and right-zero pairs do not
// box-commute with every partner (see the notes printed below).  The checks
// here measure reality rather than the expectation.

#include <stdlib.h>
#include <sys/wait.h>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "binx/center.hpp"
#include "binx/groupoid.hpp"
#include "binx/linear.hpp"
#include "binx/table_io.hpp"
#include "binx/verify.hpp"

using namespace binx;

namespace {

int failures = 0;

void report(int number, bool passed, const std::string& text,
            const std::string& note = "") {
  std::cout << (passed ? "PASS" : "FAIL") << " criterion " << number << ": "
            << text << "\n";
  if (!passed) {
    ++failures;
    if (!note.empty()) std::cout << "     note: " << note << "\n";
  }
}

Groupoid swapped_box(const Groupoid& f, const Groupoid& g) { return box(g, f); }

std::set<std::string> table_set(const std::vector<Groupoid>& tables) {
  std::set<std::string> out;
  for (const Groupoid& g : tables) out.insert(render_table(g));
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string format_seconds(double s) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << s << " s";
  return out.str();
}

bool check_passed(TheoremId id, const RunOptions& o,
                  std::uint64_t expected_cases) {
  const TheoremReport r = run_check(id, o);
  return r.passed && r.cases_checked == expected_cases;
}

// ---- criteria ---------------------------------------------------------------

void criterion_1() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Groupoid> members = center_bruteforce(3);
  const double elapsed = seconds_since(start);

  std::vector<Groupoid> family;
  LocallyZeroStream stream(3);
  while (auto g = stream.next()) family.push_back(*g);

  const bool within_time = elapsed < 10.0;
  const bool matches_family = table_set(members) == table_set(family);

  std::ostringstream text;
  text << "order-3 scan of all 19683 tables must return the full eight-member "
          "locally-zero family (found "
       << members.size() << " in " << format_seconds(elapsed) << ")";
  report(1, within_time && matches_family, text.str(),
         "only the left- and right-projection tables box-commute with every "
         "partner; each of the six tables mixing L and R pairs has an "
         "explicit partner h with box(g, h) != box(h, g), so no correct scan "
         "can return all eight");
}

void criterion_2() {
  const std::vector<Groupoid> members = center_bruteforce(2);
  const bool ok = members.size() == 2 && members[0] == left_zero(2) &&
                  members[1] == right_zero(2);
  report(2, ok,
         "order-2 scan of all 16 tables returns exactly the left-zero and "
         "right-zero tables (2 = 2^1 members)");
}

void criterion_3() {
  bool ok = check_passed(TheoremId::T1_1_assoc,
                         {2, CheckMode::exhaustive, 0, 0}, 4096);
  ok = ok && check_passed(TheoremId::T1_1_identity,
                          {2, CheckMode::exhaustive, 0, 0}, 16);
  ok = ok && check_passed(TheoremId::T1_1_assoc,
                          {3, CheckMode::sampled, 100000, 2026}, 100000);
  ok = ok && check_passed(TheoremId::T1_1_identity,
                          {3, CheckMode::sampled, 100000, 2026}, 100000);
  report(3, ok,
         "box is associative and left-zero is a two-sided box identity: "
         "exhaustive over all 4096 order-2 triples and every order-2 table, "
         "plus 100000 seeded order-3 triples and tables");
}

void criterion_4() {
  bool ok = check_passed(TheoremId::C3_3, {4, CheckMode::exhaustive, 0, 0},
                         4096);
  ok = ok && check_passed(TheoremId::C3_3, {16, CheckMode::sampled, 10000, 2026},
                          10000);
  for (int n = 1; n <= 5; ++n)
    ok = ok && run_check(TheoremId::P3_6, {n, CheckMode::exhaustive, 0, 0})
                   .passed;
  report(4, ok,
         "masks compose under xor: to_mask(box(g, h)) equals the xor of the "
         "masks for all 4096 order-4 pairs and 10000 seeded order-16 pairs, "
         "and every mask xored with itself is all-L up to order 5");
}

void criterion_5() {
  bool ok = true;
  const std::uint64_t sizes[] = {0, 0, 0, 8, 64, 1024};
  for (int n = 3; n <= 5; ++n) {
    const TheoremReport r =
        run_check(TheoremId::P3_5, {n, CheckMode::exhaustive, 0, 0});
    ok = ok && r.passed && r.cases_checked == sizes[n] &&
         r.detail == "2 associative";
  }
  // Independent recount at order 4, straight from the definition.
  int associative = 0;
  bool projections_only = true;
  for (const Groupoid& g : enumerate_locally_zero(4)) {
    if (!associativity_witness(g)) {
      ++associative;
      projections_only =
          projections_only && (g == left_zero(4) || g == right_zero(4));
    }
  }
  ok = ok && associative == 2 && projections_only;
  report(5, ok,
         "exactly 2 of 8 / 64 / 1024 locally-zero tables are associative at "
         "orders 3, 4, 5 — the all-L and all-R masks, re-counted directly at "
         "order 4");
}

void criterion_6() {
  const bool ok =
      check_passed(TheoremId::P2_7, {2, CheckMode::exhaustive, 0, 0}, 16) &&
      check_passed(TheoremId::P2_7, {3, CheckMode::exhaustive, 0, 0}, 5832);
  report(6, ok,
         "box(star, g) = star for every commutative star and every "
         "locally-zero g (a family containing the center): 8 x 2 pairs at "
         "order 2 and 729 x 8 at order 3, zero failures");
}

void criterion_7() {
  const TheoremReport z5 =
      run_check(TheoremId::E1_2_linear, {5, CheckMode::exhaustive, 0, 0});
  const TheoremReport z3 =
      run_check(TheoremId::E1_2_linear, {3, CheckMode::exhaustive, 0, 0});
  bool ok = z5.passed && z3.passed;
  // The order-5 run covers the 125 x 125 = 15625 coefficient pairs; the
  // order-3 run covers the 27^3 = 19683 composition triples.
  ok = ok && z5.cases_checked == 15625ull + 1953125ull + 125ull;
  ok = ok && z3.cases_checked == 729ull + 19683ull + 27ull;
  ok = ok && compose(make_linear(5, 0, 1, 0), make_linear(5, 0, 1, 0)) ==
                 make_linear(5, 1, 0, 0);
  report(7, ok,
         "affine tables over Z_m: coefficient composition matches the "
         "table-level box on all 15625 pairs over Z_5, is associative on all "
         "19683 triples over Z_3, and (0,1,0) squares to (1,0,0)");
}

void criterion_8() {
  const std::uint64_t expected[] = {0, 1, 2, 4, 11, 34};
  bool ok = true;
  for (int n = 1; n <= 5; ++n) ok = ok && count_iso_classes(n) == expected[n];

  // Cross-check order 3 by grouping the eight tables pairwise.
  const std::vector<Groupoid> family = enumerate_locally_zero(3);
  std::vector<int> cls(family.size(), -1);
  int groups = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (cls[i] != -1) continue;
    cls[i] = groups++;
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (cls[j] == -1 && are_isomorphic(family[i], family[j]))
        cls[j] = cls[i];
  }
  ok = ok && groups == 4;
  report(8, ok,
         "isomorphism classes of locally-zero tables number 1, 2, 4, 11, 34 "
         "for orders 1..5, with the order-3 count re-derived by pairwise "
         "isomorphism grouping");
}

void criterion_9() {
  const std::string dir = [] {
    std::string pattern =
        (std::filesystem::temp_directory_path() / "binx_accept_XXXXXX")
            .string();
    if (mkdtemp(pattern.data()) == nullptr) return std::string();
    return pattern;
  }();
  bool ok = !dir.empty();
  std::string out;
  if (ok) {
    const std::string table_path = dir + "/fixture.txt";
    const std::string out_path = dir + "/classify.txt";
    std::ofstream(table_path) << "3\n0 0 2\n1 1 1\n0 2 2\n";
    const std::string command = std::string(BINX_CLI_PATH) + " classify " +
                                table_path + " > " + out_path + " 2>/dev/null";
    const int status = std::system(command.c_str());
    ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
  }
  ok = ok && out.find("locally-zero: yes\n") != std::string::npos;
  ok = ok && out.find("associative: no (witness: 0 1 2)\n") != std::string::npos;
  const bool central = out.find("center: yes\n") != std::string::npos;
  report(9, ok && central,
         "classify on the order-3 fixture reports locally-zero = yes, "
         "associative = no with witness (0, 1, 2), and center membership = "
         "yes",
         "the first two claims hold, but the fixture is not central: the "
         "partner [0 0 0 | 0 0 0 | 0 2 0] separates the two products, so the "
         "classifier honestly prints 'center: no'");
}

void criterion_10() {
  const bool ok =
      check_passed(TheoremId::E1_3_op_closure,
                   {3, CheckMode::exhaustive, 0, 0}, 4096) &&
      check_passed(TheoremId::E1_3_travel_complete,
                   {3, CheckMode::exhaustive, 0, 0}, 64);
  report(10, ok,
         "the orientation property survives box across all 4096 pairs of "
         "order-3 orientation tables, and every orientation travel table "
         "extracts a symmetric complete digraph");
}

void criterion_11() {
  const TheoremReport absorb = run_check_with_box(
      TheoremId::P2_7, {3, CheckMode::exhaustive, 0, 0}, &swapped_box);
  const bool swap_detected_by_absorption = !absorb.passed;

  // What actually catches the swap: the affine coefficient law.
  const TheoremReport linear = run_check_with_box(
      TheoremId::E1_2_linear, {3, CheckMode::exhaustive, 0, 0}, &swapped_box);

  report(11, swap_detected_by_absorption,
         "swapping the box operand order must make the commutative-absorption "
         "law fail with a counterexample",
         std::string("the absorption law cannot see the swap: star is "
                     "commutative and the outer table receives the unordered "
                     "pair {x*y, y*x} either way, so the check still passes "
                     "(5832 of 5832 cases); the swap is caught instead by the "
                     "affine coefficient law, which ") +
             (linear.passed ? "unexpectedly also passed"
                            : "fails immediately with a counterexample"));
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();

  const double total = seconds_since(start);
  std::cout << "runtime: " << format_seconds(total)
            << (total < 60.0 ? " (within the 60 s budget)"
                             : " (OVER the 60 s budget)")
            << "\n";
  std::cout << failures << " of 11 criteria fail; the notes above give the "
               "witnesses\n";
  return failures;
}
