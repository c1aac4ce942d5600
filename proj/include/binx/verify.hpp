#pragma once

/// @file verify.hpp
/// A self-auditing suite: each check re-derives one catalogued claim about
/// the box product from first principles (raw definition loops over the
/// core operations, never the center module's own shortcuts) and reports
/// exactly what it examined.
///
/// The suite is a measuring instrument, not a rubber stamp: a FAIL report
/// carrying a counterexample is a legitimate, reproducible outcome.  In
/// particular the P2.5 / E2.6 / T3.1 claims below are genuinely false for
/// orders >= 3 — the only tables that box-commute with every partner are
/// the two projections, a strictly smaller family than the locally-zero
/// one — and those checks fail with explicit witnesses (they pass at
/// orders 1 and 2, where the two families coincide).
///
/// Catalog of checks and their case counts (n = order):
///
///   T1.1-assoc           box is associative.        exhaustive n <= 2: all
///                        table triples (n^(n^2))^3; sampled: `budget` seeded
///                        random triples.  cases = triples tested.
///   T1.1-identity        the left-zero table is a two-sided box identity.
///                        exhaustive n <= 2: every table; sampled: seeded
///                        random tables.  cases = tables tested.
///   E1.2-linear          affine tables over Z_n: table/coefficient
///                        homomorphism (all n^3 x n^3 coefficient pairs),
///                        coefficient composition associativity (all n^9
///                        triples), and the (1,0,0) identity (all n^3).
///                        cases = n^6 + n^9 + n^3.  exhaustive n <= 5.
///   E1.3-op-closure      orientation property is box-closed: all pairs of
///                        orientation tables.  cases = pairs.  n <= 3.
///   E1.3-travel-complete every orientation table satisfying the travel
///                        axioms extracts a symmetric complete digraph.
///                        cases = orientation tables examined.  n <= 3.
///   P2.1                 left-zero and right-zero commute with every table:
///                        cases = 2 * n^(n^2) commutation equations.  n <= 3.
///   P2.2                 every center member is idempotent.  cases =
///                        n^(n^2) membership decisions.  n <= 3.
///   T2.3                 center members satisfy {x*y, y*x} = {x, y} on
///                        every pair.  Members come from the brute-force
///                        scan at n <= 3; at n in {4, 5} the locally-zero
///                        family stands in (a superset of the center, so a
///                        clean pass still covers every member).  cases =
///                        member/pair combinations.
///   P2.4                 center members restrict to left-zero or right-zero
///                        on every pair.  cases = member/pair combinations.
///                        n <= 3.
///   P2.5                 every mask-built table box-commutes with every
///                        table.  cases = masks tested.  n <= 3.
///   E2.6                 the order-3 fixture [0 0 2 | 1 1 1 | 0 2 2] is
///                        neither left-zero nor right-zero, is locally zero,
///                        and is central.  cases = 4 assertions.  n = 3.
///   P2.7                 for every commutative * and every locally-zero
///                        table g, box(*, g) is commutative and equals *
///                        itself (needs only idempotence of g, so it holds
///                        over this whole family, which contains the center).
///                        cases = commutative/family pairs.  n <= 3.
///   T3.1                 brute-force centrality coincides with the
///                        locally-zero predicate on every table.  cases =
///                        n^(n^2) membership decisions.  n <= 3.
///   C3.2                 the locally-zero family has exactly 2^C(n,2)
///                        members, one per mask (round-trip checked);
///                        isomorphism class count reported alongside.
///                        cases = masks.  n <= 5.
///   C3.3                 to_mask(box(g, h)) = mask_box(to_mask(g),
///                        to_mask(h)) on locally-zero tables.  exhaustive
///                        n <= 4: all mask pairs; sampled n <= 16: `budget`
///                        seeded pairs.  cases = pairs.
///   P3.4                 the E2.6 fixture is locally zero yet fails
///                        associativity, first witness (0, 1, 2).
///                        cases = 2 assertions.  n = 3.
///   P3.5                 among locally-zero tables exactly two are
///                        associative: the all-L and all-R masks.  cases =
///                        masks.  n in {3, 4, 5}.
///   P3.6                 every mask xored with itself is all-L, and every
///                        locally-zero table boxed with itself is the
///                        left-zero table.  cases = masks.  n <= 5.
///   RZ-involution        box(right_zero(k), right_zero(k)) = left_zero(k)
///                        for k = 1..n.  cases = n.  n <= 16.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binx/groupoid.hpp"

namespace binx {

enum class TheoremId {
  T1_1_assoc,
  T1_1_identity,
  E1_2_linear,
  E1_3_op_closure,
  E1_3_travel_complete,
  P2_1,
  P2_2,
  T2_3,
  P2_4,
  P2_5,
  E2_6,
  P2_7,
  T3_1,
  C3_2,
  C3_3,
  P3_4,
  P3_5,
  P3_6,
  RZ_involution,
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_id_from_string(std::string_view token);
std::span<const TheoremId> all_theorem_ids();

enum class CheckMode { exhaustive, sampled };

std::string_view to_string(CheckMode mode);

struct RunOptions {
  int order = 3;
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t budget = 0;  ///< samples; required >= 1 in sampled mode
  std::uint64_t seed = 0;    ///< generator seed; recorded in sampled mode
};

/// Violation evidence: the named inputs, the violated relation, and both of
/// its sides.  `tables` and `elements` carry the same data in machine form
/// (layout varies per check) so a report can be re-evaluated through the
/// core operations.
struct Counterexample {
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string equation;
  std::string lhs;
  std::string rhs;
  std::vector<Groupoid> tables;
  std::vector<int> elements;
};

struct TheoremReport {
  TheoremId id = TheoremId::T1_1_assoc;
  int order = 0;
  CheckMode mode = CheckMode::exhaustive;
  std::uint64_t cases_checked = 0;
  std::optional<std::uint64_t> seed;  ///< present exactly in sampled mode
  bool passed = false;
  std::optional<Counterexample> counterexample;
  std::string detail;  ///< short extra facts, e.g. "center size 8"
};

/// True when the (id, order, mode) combination is within the scopes listed
/// in the catalog above.
bool is_feasible(TheoremId id, int order, CheckMode mode);

/// Runs one check.  Throws std::invalid_argument for an infeasible
/// combination, or sampled mode with budget = 0.  Deterministic: equal
/// arguments produce equal reports.
TheoremReport run_check(TheoremId id, const RunOptions& options);

/// Table-product implementation slot, for fault-injection tests: every box
/// evaluation inside the checks goes through this function.
using BoxFn = Groupoid (*)(const Groupoid&, const Groupoid&);

/// run_check with a substituted product; run_check(id, o) is equivalent to
/// run_check_with_box(id, o, &box).
TheoremReport run_check_with_box(TheoremId id, const RunOptions& options,
                                 BoxFn box_fn);

/// Runs every check at its widest feasible scope up to n_max (checks whose
/// minimum scope exceeds n_max are skipped), preferring exhaustive mode.
/// Sampled fallbacks use the given seed and per-check default budgets
/// (100000 box triples/tables, 10000 mask pairs) unless budget_override is
/// set.  Reports come back in catalog order.  Requires 2 <= n_max <= 16.
std::vector<TheoremReport> run_all(
    int n_max, std::uint64_t seed,
    std::optional<std::uint64_t> budget_override = std::nullopt);

/// One-line summary: "PASS C3.2 n=3 exhaustive cases=8 (iso classes 4)".
std::string render_report_line(const TheoremReport& report);

/// Multi-line rendering of a counterexample, two-space indented.
std::string render_counterexample(const Counterexample& ce);

/// 0 when every report passed, 1 otherwise.
int exit_code_for(std::span<const TheoremReport> reports);

}  // namespace binx
