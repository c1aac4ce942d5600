#pragma once

/// @file groupoid.hpp
/// Finite binary systems (groupoids) represented as dense Cayley tables,
/// together with the box product  x ⊡ y := (x * y) . (y * x)  that composes
/// two tables over the same element set, and the classical predicates used
/// throughout the rest of the library.
///
/// Elements are the integers 0 .. order-1.  Tables printed in the algebra
/// literature with letters a, b, c, ... correspond to indices 0, 1, 2, ...

#include <array>
#include <cassert>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace binx {

/// Dense Cayley table over {0, .., order-1}.  Row-major: the product x*y is
/// stored at index x*order + y.  Value type, immutable after construction,
/// cheap to copy (fixed inline storage, no heap).
class Groupoid {
 public:
  /// Largest supported order.  Every exhaustive scan and sampled audit in
  /// this library is scoped at or below 16 elements.
  static constexpr int kMaxOrder = 16;

  /// The trivial one-element system.
  Groupoid() { table_.fill(0); }

  int order() const { return order_; }

  /// Unchecked product lookup; callers must pass valid element indices.
  int operator()(int x, int y) const {
    assert(x >= 0 && x < order_ && y >= 0 && y < order_);
    return table_[static_cast<std::size_t>(x) * order_ + y];
  }

  /// Bounds-checked product lookup.  Throws std::out_of_range.
  int at(int x, int y) const;

  /// Row-major view of the live order*order entries.
  std::span<const std::uint8_t> entries() const {
    return {table_.data(), static_cast<std::size_t>(order_) * order_};
  }

  /// Row-major copy of the table as plain ints (round-trips through
  /// make_groupoid).
  std::vector<int> flat() const;

  friend bool operator==(const Groupoid& a, const Groupoid& b) {
    if (a.order_ != b.order_) return false;
    const std::size_t n = static_cast<std::size_t>(a.order_) * a.order_;
    for (std::size_t i = 0; i < n; ++i)
      if (a.table_[i] != b.table_[i]) return false;
    return true;
  }
  friend bool operator!=(const Groupoid& a, const Groupoid& b) { return !(a == b); }

 private:
  explicit Groupoid(int order) : order_(order) { table_.fill(0); }

  int order_ = 1;
  std::array<std::uint8_t, kMaxOrder * kMaxOrder> table_;

  template <typename F>
  friend Groupoid tabulate(int order, F&& entry);
};

/// Trusted builder: fills a table from entry(x, y).  The callback must
/// return values in [0, order); this is only assert-checked, so validated
/// construction belongs in make_groupoid.
template <typename F>
Groupoid tabulate(int order, F&& entry) {
  assert(order >= 1 && order <= Groupoid::kMaxOrder);
  Groupoid g(order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int v = entry(x, y);
      assert(v >= 0 && v < order);
      g.table_[static_cast<std::size_t>(x) * order + y] =
          static_cast<std::uint8_t>(v);
    }
  return g;
}

/// Validated construction from a row-major entry list.  Throws
/// std::invalid_argument on bad order, wrong entry count, or an entry
/// outside [0, order).
Groupoid make_groupoid(int order, std::span<const int> entries);
Groupoid make_groupoid(int order, std::initializer_list<int> entries);

// ---- stock tables ---------------------------------------------------------

Groupoid left_zero(int order);            ///< x*y = x
Groupoid right_zero(int order);           ///< x*y = y
Groupoid constant_groupoid(int order, int value);  ///< x*y = value
Groupoid min_groupoid(int order);         ///< x*y = min(x, y)
Groupoid max_groupoid(int order);         ///< x*y = max(x, y)

// ---- the box product ------------------------------------------------------

/// Box product of two tables over the same element set:
///   result(x, y) = outer(inner(x, y), inner(y, x)).
/// The first operand supplies the inner products, the second the outer one;
/// the operand order is part of the contract and is pinned by tests.
/// Throws std::invalid_argument if the orders differ.
Groupoid box(const Groupoid& inner, const Groupoid& outer);

// ---- predicates -----------------------------------------------------------

bool is_idempotent(const Groupoid& g);    ///< x*x = x for all x
bool is_commutative(const Groupoid& g);   ///< x*y = y*x for all x, y
bool is_associative(const Groupoid& g);   ///< (x*y)*z = x*(y*z) for all x, y, z
bool is_left_zero(const Groupoid& g);     ///< g equals left_zero(order)
bool is_right_zero(const Groupoid& g);    ///< g equals right_zero(order)

/// Lexicographically first triple (x, y, z) with (x*y)*z != x*(y*z), if any.
std::optional<std::array<int, 3>> associativity_witness(const Groupoid& g);

/// Every product lands on one of its arguments: x*y ∈ {x, y}.
bool has_orientation_property(const Groupoid& g);

/// Travel axioms: (u*v)*u = u for all u, v, and (u*v)*v = u only when u = v.
bool is_travel_groupoid(const Groupoid& g);

// ---- relabelling ----------------------------------------------------------

/// Applies a permutation p of the element set: the result h satisfies
/// h(p[x], p[y]) = p[g(x, y)].  Throws std::invalid_argument unless perm is
/// a permutation of 0..order-1.
Groupoid relabel(const Groupoid& g, std::span<const int> perm);

// ---- digraph extraction ---------------------------------------------------

/// Directed graph on the element set; edges are ordered pairs (u, v), u != v.
struct Digraph {
  int order = 0;
  std::set<std::pair<int, int>> edges;

  friend bool operator==(const Digraph&, const Digraph&) = default;
};

bool is_symmetric(const Digraph& d);  ///< (u,v) ∈ E  ⟺  (v,u) ∈ E
bool is_complete(const Digraph& d);   ///< every ordered pair u != v is an edge

/// Edge set {(u, v) : u != v, u*v = v}.  Precondition: g has the orientation
/// property (throws std::invalid_argument otherwise).
Digraph extract_digraph(const Groupoid& g);

// ---- numeric codes --------------------------------------------------------

/// Encodes the table as a base-order integer, entry (0,0) most significant,
/// so numeric order equals lexicographic row-major order.  Requires
/// order <= 5 (larger tables overflow 64 bits); throws otherwise.
std::uint64_t groupoid_code(const Groupoid& g);

/// Inverse of groupoid_code.  Throws if order > 5 or code >= order^(order^2).
Groupoid groupoid_from_code(int order, std::uint64_t code);

}  // namespace binx
