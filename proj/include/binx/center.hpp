#pragma once

/// @file center.hpp
/// The commuting center of the box product and its combinatorial structure.
///
/// A table is *locally zero* when it is idempotent and every two-element
/// restriction is either the left-zero or the right-zero table on that pair.
/// Such tables are described exactly by one L/R flag per unordered pair of
/// elements (a PairMask), and they are precisely the tables that box-commute
/// with everything — which this module can confirm independently by brute
/// force at small orders.

#include <bitset>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "binx/groupoid.hpp"

namespace binx {

/// Classification of the restriction of a table to a two-element subset
/// {x, y}: LeftZero when x*y = x and y*x = y, RightZero when x*y = y and
/// y*x = x, Neither otherwise.  The diagonal is not consulted.
enum class SubtableKind { LeftZero, RightZero, Neither };

/// Kind of the restriction to {x, y}.  Requires x != y, both in range;
/// throws std::invalid_argument / std::out_of_range otherwise.
SubtableKind subtable_kind(const Groupoid& g, int x, int y);

/// Idempotent and every pair restriction is LeftZero or RightZero.
bool is_locally_zero(const Groupoid& g);

/// One bit per unordered pair {x, y}, x < y: false = LeftZero ("L"),
/// true = RightZero ("R").  Pairs are indexed in lexicographic order, so
/// bit 0 is the pair (0, 1).  Value type; masks of equal order xor together.
class PairMask {
 public:
  /// C(16, 2): bit capacity for the largest supported order.
  static constexpr int kMaxPairs = 120;

  /// All-L mask (the left-zero table's mask).
  explicit PairMask(int order);

  /// Lexicographic index of the pair (x, y), x < y, among all C(order, 2)
  /// pairs: x*order - x(x+1)/2 + (y - x - 1).
  static int pair_index(int order, int x, int y);

  int order() const { return order_; }
  int pair_count() const { return order_ * (order_ - 1) / 2; }

  bool is_right(int x, int y) const;        ///< flag of the pair {x, y}
  void set_right(int x, int y, bool right); ///< assign the pair's flag

  /// Letters over {L, R}, one per pair in pair_index order, e.g. "LRL".
  std::string letters() const;

  /// Parses what letters() produces.  Throws std::invalid_argument on a
  /// length mismatch or a character outside {L, R}.
  static PairMask from_letters(int order, std::string_view letters);

  friend bool operator==(const PairMask& a, const PairMask& b) {
    return a.order_ == b.order_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const PairMask& a, const PairMask& b) { return !(a == b); }

 private:
  int order_;
  std::bitset<kMaxPairs> bits_;

  friend PairMask mask_box(const PairMask&, const PairMask&);
};

/// Mask-level box product: pairwise xor of the flags (L acts as 0, R as 1).
/// Throws std::invalid_argument if the orders differ.
PairMask mask_box(const PairMask& a, const PairMask& b);

/// Mask of a locally-zero table.  Throws std::invalid_argument otherwise.
PairMask to_mask(const Groupoid& g);

/// The unique locally-zero table with the given mask: idempotent diagonal,
/// and each pair filled as its flag dictates.
Groupoid from_mask(const PairMask& m);

/// Numeric value of a mask (bit 0 = pair (0, 1) = least significant).
/// Requires pair_count() <= 63; throws otherwise.
std::uint64_t mask_value(const PairMask& m);

/// Mask with the given numeric value; inverse of mask_value.
PairMask mask_from_value(int order, std::uint64_t value);

/// Image of a mask under a relabelling of the element set: the flag of
/// {x, y} moves to the pair {perm[x], perm[y]}.  Consistent with relabel():
/// to_mask(relabel(from_mask(m), p)) == permuted_mask(m, p).
PairMask permuted_mask(const PairMask& m, std::span<const int> perm);

/// Uniformly random mask: each pair flag is an independent fair coin.
PairMask random_mask(int order, std::mt19937_64& rng);

/// Ascending stream of all 2^C(order,2) locally-zero tables, by mask value.
/// Requires C(order, 2) <= 30; throws otherwise.
class LocallyZeroStream {
 public:
  explicit LocallyZeroStream(int order);
  std::uint64_t total() const { return std::uint64_t{1} << pair_count_; }
  std::optional<Groupoid> next();

 private:
  int order_;
  int pair_count_;
  std::uint64_t counter_ = 0;
};

/// Materialized locally-zero family in stream order.  Guarded harder than
/// the stream (C(order, 2) <= 20) because it holds every table at once.
std::vector<Groupoid> enumerate_locally_zero(int order);

// ---- center membership ----------------------------------------------------

/// True iff box(g, h) == box(h, g) for every table h of the same order.
/// Exact but exponential: requires order <= 3 (19683 candidate partners);
/// throws above that.  Short-circuits on the first witness.
bool is_in_center_bruteforce(const Groupoid& g);

/// Centrality screen at any supported order: checks commutation against the
/// deterministic probes (every constant table, min, max) and then `trials`
/// seeded random tables.  A false answer is definitive — the witness found
/// is a real one; true only means no witness turned up.
bool is_in_center_sampled(const Groupoid& g, std::uint64_t trials,
                          std::uint64_t seed);

/// Every table of the given order that box-commutes with all tables of that
/// order, in ascending table-code order.  Requires order <= 3.  The scan
/// partitions across workers (see workers.hpp); results are deterministic
/// and independent of the partitioning.
std::vector<Groupoid> center_bruteforce(int order);

// ---- isomorphism ----------------------------------------------------------

/// True iff some relabelling of g equals h.  Requires equal orders <= 8
/// (full permutation search); throws otherwise.
bool are_isomorphic(const Groupoid& g, const Groupoid& h);

/// Number of isomorphism classes of locally-zero tables of the given order:
/// orbits of masks under relabelling.  Requires order <= 5.
std::uint64_t count_iso_classes(int order);

}  // namespace binx
