#include "binx/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace binx {

namespace {

void check_order(int order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  if (order > Groupoid::kMaxOrder) {
    std::ostringstream msg;
    msg << "order " << order << " exceeds the supported maximum "
        << Groupoid::kMaxOrder;
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

int Groupoid::at(int x, int y) const {
  if (x < 0 || x >= order_ || y < 0 || y >= order_) {
    std::ostringstream msg;
    msg << "element pair (" << x << ", " << y << ") out of range for order "
        << order_;
    throw std::out_of_range(msg.str());
  }
  return (*this)(x, y);
}

std::vector<int> Groupoid::flat() const {
  const auto view = entries();
  return std::vector<int>(view.begin(), view.end());
}

Groupoid make_groupoid(int order, std::span<const int> entries) {
  check_order(order);
  const std::size_t expected = static_cast<std::size_t>(order) * order;
  if (entries.size() != expected) {
    std::ostringstream msg;
    msg << "expected " << expected << " entries for order " << order
        << ", got " << entries.size();
    throw std::invalid_argument(msg.str());
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0 || entries[i] >= order) {
      std::ostringstream msg;
      msg << "entry " << entries[i] << " at row " << i / order << ", column "
          << i % order << " out of range [0, " << order << ")";
      throw std::invalid_argument(msg.str());
    }
  }
  return tabulate(order, [&](int x, int y) { return entries[static_cast<std::size_t>(x) * order + y]; });
}

Groupoid make_groupoid(int order, std::initializer_list<int> entries) {
  return make_groupoid(order, std::span<const int>(entries.begin(), entries.size()));
}

Groupoid left_zero(int order) {
  check_order(order);
  return tabulate(order, [](int x, int) { return x; });
}

Groupoid right_zero(int order) {
  check_order(order);
  return tabulate(order, [](int, int y) { return y; });
}

Groupoid constant_groupoid(int order, int value) {
  check_order(order);
  if (value < 0 || value >= order)
    throw std::invalid_argument("constant value out of range");
  return tabulate(order, [value](int, int) { return value; });
}

Groupoid min_groupoid(int order) {
  check_order(order);
  return tabulate(order, [](int x, int y) { return std::min(x, y); });
}

Groupoid max_groupoid(int order) {
  check_order(order);
  return tabulate(order, [](int x, int y) { return std::max(x, y); });
}

Groupoid box(const Groupoid& inner, const Groupoid& outer) {
  if (inner.order() != outer.order())
    throw std::invalid_argument("box requires operands of equal order");
  return tabulate(inner.order(), [&](int x, int y) {
    return outer(inner(x, y), inner(y, x));
  });
}

bool is_idempotent(const Groupoid& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g(x, x) != x) return false;
  return true;
}

bool is_commutative(const Groupoid& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (g(x, y) != g(y, x)) return false;
  return true;
}

std::optional<std::array<int, 3>> associativity_witness(const Groupoid& g) {
  const int n = g.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (g(g(x, y), z) != g(x, g(y, z))) return std::array<int, 3>{x, y, z};
  return std::nullopt;
}

bool is_associative(const Groupoid& g) {
  return !associativity_witness(g).has_value();
}

bool is_left_zero(const Groupoid& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (g(x, y) != x) return false;
  return true;
}

bool is_right_zero(const Groupoid& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (g(x, y) != y) return false;
  return true;
}

bool has_orientation_property(const Groupoid& g) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      const int v = g(x, y);
      if (v != x && v != y) return false;
    }
  return true;
}

bool is_travel_groupoid(const Groupoid& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (g(g(u, v), u) != u) return false;           // first axiom
      if (g(g(u, v), v) == u && u != v) return false; // second axiom
    }
  return true;
}

Groupoid relabel(const Groupoid& g, std::span<const int> perm) {
  const int n = g.order();
  if (perm.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("permutation size does not match order");
  std::vector<int> inverse(n, -1);
  for (int x = 0; x < n; ++x) {
    if (perm[x] < 0 || perm[x] >= n || inverse[perm[x]] != -1)
      throw std::invalid_argument("relabel requires a permutation of 0..order-1");
    inverse[perm[x]] = x;
  }
  return tabulate(n, [&](int u, int v) { return perm[g(inverse[u], inverse[v])]; });
}

bool is_symmetric(const Digraph& d) {
  for (const auto& [u, v] : d.edges)
    if (!d.edges.count({v, u})) return false;
  return true;
}

bool is_complete(const Digraph& d) {
  for (int u = 0; u < d.order; ++u)
    for (int v = 0; v < d.order; ++v)
      if (u != v && !d.edges.count({u, v})) return false;
  return true;
}

Digraph extract_digraph(const Groupoid& g) {
  if (!has_orientation_property(g))
    throw std::invalid_argument(
        "digraph extraction requires the orientation property");
  Digraph d;
  d.order = g.order();
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (u != v && g(u, v) == v) d.edges.insert({u, v});
  return d;
}

std::uint64_t groupoid_code(const Groupoid& g) {
  if (g.order() > 5)
    throw std::invalid_argument("table codes are limited to order <= 5");
  std::uint64_t code = 0;
  for (const std::uint8_t e : g.entries())
    code = code * static_cast<std::uint64_t>(g.order()) + e;
  return code;
}

Groupoid groupoid_from_code(int order, std::uint64_t code) {
  check_order(order);
  if (order > 5)
    throw std::invalid_argument("table codes are limited to order <= 5");
  const int cells = order * order;
  std::array<std::uint8_t, 25> digits{};
  std::uint64_t rest = code;
  for (int i = cells - 1; i >= 0; --i) {
    digits[i] = static_cast<std::uint8_t>(rest % order);
    rest /= order;
  }
  if (rest != 0) throw std::invalid_argument("table code out of range");
  return tabulate(order, [&](int x, int y) { return digits[x * order + y]; });
}

}  // namespace binx
