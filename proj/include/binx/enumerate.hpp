#pragma once

/// @file enumerate.hpp
/// Deterministic streams over structured families of tables, plus seeded
/// random generation.  Every stream yields tables in ascending numeric code
/// order of the varying entries, so repeated runs visit identical sequences.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "binx/groupoid.hpp"

namespace binx {

/// All order^(order^2) tables of a given order, ascending by table code.
/// Only tractable for order <= 3 (19683 tables); larger orders throw.
class AllGroupoids {
 public:
  explicit AllGroupoids(int order) : order_(order) {
    if (order < 1 || order > 3)
      throw std::invalid_argument("full table enumeration requires order <= 3");
    digits_.assign(static_cast<std::size_t>(order) * order, 0);
  }

  std::uint64_t total() const {
    std::uint64_t t = 1;
    for (std::size_t i = 0; i < digits_.size(); ++i) t *= order_;
    return t;
  }

  std::optional<Groupoid> next() {
    if (done_) return std::nullopt;
    Groupoid g = tabulate(order_, [&](int x, int y) {
      return static_cast<int>(digits_[static_cast<std::size_t>(x) * order_ + y]);
    });
    advance();
    return g;
  }

 private:
  void advance() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < order_) return;
      digits_[i] = 0;
    }
    done_ = true;
  }

  int order_;
  bool done_ = false;
  std::vector<std::uint8_t> digits_;
};

/// All commutative tables: the diagonal and upper triangle vary freely, the
/// lower triangle mirrors.  order^(order(order+1)/2) tables; order <= 4.
class CommutativeGroupoids {
 public:
  explicit CommutativeGroupoids(int order) : order_(order) {
    if (order < 1 || order > 4)
      throw std::invalid_argument(
          "commutative table enumeration requires order <= 4");
    for (int x = 0; x < order; ++x)
      for (int y = x; y < order; ++y) cells_.push_back({x, y});
    digits_.assign(cells_.size(), 0);
  }

  std::uint64_t total() const {
    std::uint64_t t = 1;
    for (std::size_t i = 0; i < digits_.size(); ++i) t *= order_;
    return t;
  }

  std::optional<Groupoid> next() {
    if (done_) return std::nullopt;
    std::vector<int> table(static_cast<std::size_t>(order_) * order_, 0);
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const auto [x, y] = cells_[i];
      table[static_cast<std::size_t>(x) * order_ + y] = digits_[i];
      table[static_cast<std::size_t>(y) * order_ + x] = digits_[i];
    }
    Groupoid g = tabulate(order_, [&](int x, int y) {
      return table[static_cast<std::size_t>(x) * order_ + y];
    });
    advance();
    return g;
  }

 private:
  void advance() {
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (++digits_[i] < order_) return;
      digits_[i] = 0;
    }
    done_ = true;
  }

  int order_;
  bool done_ = false;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::uint8_t> digits_;
};

/// All tables with the orientation property: the diagonal is forced to
/// x*x = x, and each off-diagonal product picks one of its two arguments,
/// giving 2^(order(order-1)) tables.  order <= 5.
class OrientationGroupoids {
 public:
  explicit OrientationGroupoids(int order) : order_(order) {
    if (order < 1 || order > 5)
      throw std::invalid_argument(
          "orientation table enumeration requires order <= 5");
    for (int x = 0; x < order; ++x)
      for (int y = 0; y < order; ++y)
        if (x != y) cells_.push_back({x, y});
  }

  std::uint64_t total() const { return std::uint64_t{1} << cells_.size(); }

  std::optional<Groupoid> next() {
    if (counter_ >= total()) return std::nullopt;
    std::vector<int> table(static_cast<std::size_t>(order_) * order_, 0);
    for (int x = 0; x < order_; ++x)
      table[static_cast<std::size_t>(x) * order_ + x] = x;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const auto [x, y] = cells_[i];
      const bool second = (counter_ >> i) & 1u;
      table[static_cast<std::size_t>(x) * order_ + y] = second ? y : x;
    }
    ++counter_;
    return tabulate(order_, [&](int x, int y) {
      return table[static_cast<std::size_t>(x) * order_ + y];
    });
  }

 private:
  int order_;
  std::uint64_t counter_ = 0;
  std::vector<std::pair<int, int>> cells_;
};

/// Uniformly random table: every entry drawn independently from [0, order).
inline Groupoid random_groupoid(int order, std::mt19937_64& rng) {
  if (order < 1 || order > Groupoid::kMaxOrder)
    throw std::invalid_argument("random table order out of range");
  std::uniform_int_distribution<int> dist(0, order - 1);
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  for (int& e : table) e = dist(rng);
  return tabulate(order, [&](int x, int y) {
    return table[static_cast<std::size_t>(x) * order + y];
  });
}

}  // namespace binx
