#include "binx/center.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "binx/enumerate.hpp"
#include "binx/workers.hpp"

namespace binx {

namespace {

void check_pair(const Groupoid& g, int x, int y) {
  if (x < 0 || x >= g.order() || y < 0 || y >= g.order())
    throw std::out_of_range("pair element out of range");
  if (x == y)
    throw std::invalid_argument("pair classification requires two distinct elements");
}

/// Entrywise comparison of box(g, h) and box(h, g) with early exit; avoids
/// materializing either product in the hot membership scans.
bool boxes_commute(const Groupoid& g, const Groupoid& h) {
  const int n = g.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (h(g(x, y), g(y, x)) != g(h(x, y), h(y, x))) return false;
  return true;
}

/// The fixed probe family: every constant table, then min, then max.  For
/// an idempotent candidate the min/max probes decide the pair condition, so
/// almost every non-central table dies here instead of deep in the scan.
std::vector<Groupoid> center_probes(int order) {
  std::vector<Groupoid> probes;
  probes.reserve(static_cast<std::size_t>(order) + 2);
  for (int a = 0; a < order; ++a) probes.push_back(constant_groupoid(order, a));
  probes.push_back(min_groupoid(order));
  probes.push_back(max_groupoid(order));
  return probes;
}

bool commutes_with_everything(const Groupoid& g,
                              const std::vector<Groupoid>& probes) {
  for (const Groupoid& p : probes)
    if (!boxes_commute(g, p)) return false;
  AllGroupoids stream(g.order());
  while (auto h = stream.next())
    if (!boxes_commute(g, *h)) return false;
  return true;
}

}  // namespace

SubtableKind subtable_kind(const Groupoid& g, int x, int y) {
  check_pair(g, x, y);
  if (g(x, y) == x && g(y, x) == y) return SubtableKind::LeftZero;
  if (g(x, y) == y && g(y, x) == x) return SubtableKind::RightZero;
  return SubtableKind::Neither;
}

bool is_locally_zero(const Groupoid& g) {
  if (!is_idempotent(g)) return false;
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (subtable_kind(g, x, y) == SubtableKind::Neither) return false;
  return true;
}

PairMask::PairMask(int order) : order_(order) {
  if (order < 1 || order > Groupoid::kMaxOrder)
    throw std::invalid_argument("mask order out of range");
}

int PairMask::pair_index(int order, int x, int y) {
  if (x < 0 || y < 0 || x >= order || y >= order || x >= y)
    throw std::invalid_argument("pair index requires 0 <= x < y < order");
  return x * order - x * (x + 1) / 2 + (y - x - 1);
}

bool PairMask::is_right(int x, int y) const {
  if (x > y) std::swap(x, y);
  return bits_.test(static_cast<std::size_t>(pair_index(order_, x, y)));
}

void PairMask::set_right(int x, int y, bool right) {
  if (x > y) std::swap(x, y);
  bits_.set(static_cast<std::size_t>(pair_index(order_, x, y)), right);
}

std::string PairMask::letters() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(pair_count()));
  for (int i = 0; i < pair_count(); ++i)
    out.push_back(bits_.test(static_cast<std::size_t>(i)) ? 'R' : 'L');
  return out;
}

PairMask PairMask::from_letters(int order, std::string_view letters) {
  PairMask m(order);
  if (letters.size() != static_cast<std::size_t>(m.pair_count())) {
    std::ostringstream msg;
    msg << "mask for order " << order << " needs " << m.pair_count()
        << " letters, got " << letters.size();
    throw std::invalid_argument(msg.str());
  }
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] == 'R')
      m.bits_.set(i);
    else if (letters[i] != 'L')
      throw std::invalid_argument("mask letters must be 'L' or 'R'");
  }
  return m;
}

PairMask mask_box(const PairMask& a, const PairMask& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("mask box requires masks of equal order");
  PairMask out(a.order());
  out.bits_ = a.bits_ ^ b.bits_;
  return out;
}

PairMask to_mask(const Groupoid& g) {
  if (!is_locally_zero(g))
    throw std::invalid_argument("only locally-zero tables have a mask");
  PairMask m(g.order());
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      m.set_right(x, y, subtable_kind(g, x, y) == SubtableKind::RightZero);
  return m;
}

Groupoid from_mask(const PairMask& m) {
  return tabulate(m.order(), [&](int x, int y) {
    if (x == y) return x;
    const bool right = m.is_right(x, y);
    // RightZero sends each argument pair to its second coordinate.
    return right ? y : x;
  });
}

std::uint64_t mask_value(const PairMask& m) {
  if (m.pair_count() > 63)
    throw std::invalid_argument("mask value overflows 64 bits");
  std::uint64_t v = 0;
  for (int x = 0; x < m.order(); ++x)
    for (int y = x + 1; y < m.order(); ++y)
      if (m.is_right(x, y))
        v |= std::uint64_t{1} << PairMask::pair_index(m.order(), x, y);
  return v;
}

PairMask mask_from_value(int order, std::uint64_t value) {
  PairMask m(order);
  if (m.pair_count() > 63)
    throw std::invalid_argument("mask value overflows 64 bits");
  if (m.pair_count() < 64 && value >= (std::uint64_t{1} << m.pair_count()))
    throw std::invalid_argument("mask value out of range");
  for (int x = 0; x < order; ++x)
    for (int y = x + 1; y < order; ++y)
      m.set_right(x, y, (value >> PairMask::pair_index(order, x, y)) & 1u);
  return m;
}

PairMask permuted_mask(const PairMask& m, std::span<const int> perm) {
  const int n = m.order();
  if (perm.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("permutation size does not match mask order");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x = 0; x < n; ++x) {
    if (perm[x] < 0 || perm[x] >= n || seen[static_cast<std::size_t>(perm[x])])
      throw std::invalid_argument("permuted_mask requires a permutation");
    seen[static_cast<std::size_t>(perm[x])] = true;
  }
  PairMask out(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      out.set_right(perm[x], perm[y], m.is_right(x, y));
  return out;
}

PairMask random_mask(int order, std::mt19937_64& rng) {
  PairMask m(order);
  std::bernoulli_distribution coin(0.5);
  for (int x = 0; x < order; ++x)
    for (int y = x + 1; y < order; ++y) m.set_right(x, y, coin(rng));
  return m;
}

LocallyZeroStream::LocallyZeroStream(int order)
    : order_(order), pair_count_(order * (order - 1) / 2) {
  if (order < 1 || order > Groupoid::kMaxOrder)
    throw std::invalid_argument("locally-zero enumeration order out of range");
  if (pair_count_ > 30)
    throw std::invalid_argument(
        "locally-zero enumeration requires C(order, 2) <= 30");
}

std::optional<Groupoid> LocallyZeroStream::next() {
  if (counter_ >= total()) return std::nullopt;
  return from_mask(mask_from_value(order_, counter_++));
}

std::vector<Groupoid> enumerate_locally_zero(int order) {
  LocallyZeroStream stream(order);
  if (order * (order - 1) / 2 > 20)
    throw std::invalid_argument(
        "materialized enumeration requires C(order, 2) <= 20; use the stream");
  std::vector<Groupoid> out;
  out.reserve(static_cast<std::size_t>(stream.total()));
  while (auto g = stream.next()) out.push_back(*g);
  return out;
}

bool is_in_center_bruteforce(const Groupoid& g) {
  if (g.order() > 3)
    throw std::invalid_argument(
        "brute-force centrality requires order <= 3; use the sampled screen");
  return commutes_with_everything(g, center_probes(g.order()));
}

bool is_in_center_sampled(const Groupoid& g, std::uint64_t trials,
                          std::uint64_t seed) {
  for (const Groupoid& p : center_probes(g.order()))
    if (!boxes_commute(g, p)) return false;
  std::mt19937_64 rng(seed);
  for (std::uint64_t t = 0; t < trials; ++t)
    if (!boxes_commute(g, random_groupoid(g.order(), rng))) return false;
  return true;
}

std::vector<Groupoid> center_bruteforce(int order) {
  if (order < 1 || order > 3)
    throw std::invalid_argument("brute-force center requires order <= 3");
  const std::uint64_t total = AllGroupoids(order).total();
  const std::vector<Groupoid> probes = center_probes(order);

  const int workers = worker_count();
  std::vector<std::vector<Groupoid>> found(
      static_cast<std::size_t>(std::max(workers, 1)));
  parallel_chunks(total, workers, [&](int chunk, std::uint64_t begin,
                                      std::uint64_t end) {
    for (std::uint64_t code = begin; code < end; ++code) {
      Groupoid g = groupoid_from_code(order, code);
      if (commutes_with_everything(g, probes))
        found[static_cast<std::size_t>(chunk)].push_back(g);
    }
  });

  std::vector<Groupoid> members;  // chunk order == ascending code order
  for (const auto& part : found)
    members.insert(members.end(), part.begin(), part.end());
  return members;
}

bool are_isomorphic(const Groupoid& g, const Groupoid& h) {
  if (g.order() != h.order())
    throw std::invalid_argument("isomorphism requires tables of equal order");
  const int n = g.order();
  if (n > 8)
    throw std::invalid_argument("isomorphism search requires order <= 8");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int x = 0; x < n && match; ++x)
      for (int y = 0; y < n && match; ++y)
        if (h(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]) !=
            perm[static_cast<std::size_t>(g(x, y))])
          match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::uint64_t count_iso_classes(int order) {
  if (order < 1 || order > 5)
    throw std::invalid_argument("class counting requires order <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(static_cast<std::size_t>(order));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  const int pairs = order * (order - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  std::uint64_t classes = 0;
  for (std::uint64_t v = 0; v < total; ++v) {
    const PairMask m = mask_from_value(order, v);
    std::uint64_t canonical = v;
    for (const auto& p : perms)
      canonical = std::min(canonical, mask_value(permuted_mask(m, p)));
    if (canonical == v) ++classes;  // count each orbit at its minimum
  }
  return classes;
}

}  // namespace binx
