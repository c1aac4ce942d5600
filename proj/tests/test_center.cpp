#include "binx/center.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>
#include <vector>

#include "binx/enumerate.hpp"
#include "doctest.h"

using namespace binx;

namespace {

Groupoid e26() { return make_groupoid(3, {0, 0, 2, 1, 1, 1, 0, 2, 2}); }

PairMask mask3(const char* letters) { return PairMask::from_letters(3, letters); }

}  // namespace

TEST_CASE("pair restrictions classify as left or right zero") {
  const Groupoid g = e26();
  CHECK(subtable_kind(g, 0, 1) == SubtableKind::LeftZero);
  CHECK(subtable_kind(g, 0, 2) == SubtableKind::RightZero);
  CHECK(subtable_kind(g, 2, 0) == SubtableKind::RightZero);  // order-free
  CHECK(subtable_kind(g, 1, 2) == SubtableKind::LeftZero);
  CHECK(subtable_kind(constant_groupoid(3, 0), 1, 2) == SubtableKind::Neither);
  CHECK_THROWS_AS(subtable_kind(g, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(subtable_kind(g, 0, 3), std::out_of_range);
}

TEST_CASE("locally-zero predicate") {
  CHECK(is_locally_zero(e26()));
  CHECK(is_locally_zero(left_zero(5)));
  CHECK(is_locally_zero(right_zero(4)));
  CHECK(is_locally_zero(left_zero(1)));
  CHECK(!is_locally_zero(min_groupoid(3)));        // pairs are Neither
  CHECK(!is_locally_zero(constant_groupoid(2, 0)));  // not idempotent
}

TEST_CASE("pair indexing orders pairs lexicographically") {
  CHECK(PairMask::pair_index(3, 0, 1) == 0);
  CHECK(PairMask::pair_index(3, 0, 2) == 1);
  CHECK(PairMask::pair_index(3, 1, 2) == 2);
  CHECK(PairMask::pair_index(4, 2, 3) == 5);
  CHECK_THROWS_AS(PairMask::pair_index(3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(PairMask::pair_index(3, 2, 1), std::invalid_argument);
}

TEST_CASE("masks and tables round-trip") {
  CHECK(to_mask(e26()) == mask3("LRL"));
  CHECK(to_mask(e26()).letters() == "LRL");
  CHECK(from_mask(mask3("LLR")) ==
        make_groupoid(3, {0, 0, 0, 1, 1, 2, 2, 1, 2}));
  CHECK(from_mask(to_mask(e26())) == e26());
  CHECK(to_mask(left_zero(4)).letters() == "LLLLLL");
  CHECK_THROWS_AS(to_mask(min_groupoid(3)), std::invalid_argument);
  CHECK_THROWS_AS(PairMask::from_letters(3, "LL"), std::invalid_argument);
  CHECK_THROWS_AS(PairMask::from_letters(3, "LXL"), std::invalid_argument);
}

TEST_CASE("mask values enumerate ascending with pair (0,1) as bit zero") {
  CHECK(mask_value(mask3("RLL")) == 1);
  CHECK(mask_value(mask3("LRL")) == 2);
  CHECK(mask_value(mask3("LLR")) == 4);
  CHECK(mask_from_value(3, 5) == mask3("RLR"));
  CHECK_THROWS_AS(mask_from_value(3, 8), std::invalid_argument);

  std::vector<std::string> seen;
  LocallyZeroStream stream(3);
  while (auto g = stream.next()) seen.push_back(to_mask(*g).letters());
  CHECK(seen == std::vector<std::string>{"LLL", "RLL", "LRL", "RRL", "LLR",
                                         "RLR", "LRR", "RRR"});
}

TEST_CASE("mask xor mirrors the table-level product") {
  CHECK(mask_box(mask3("LLR"), mask3("LRL")) == mask3("LRR"));
  CHECK(mask_box(mask3("RRR"), mask3("RRR")) == mask3("LLL"));
  for (std::uint64_t a = 0; a < 8; ++a)
    for (std::uint64_t b = 0; b < 8; ++b) {
      const PairMask ma = mask_from_value(3, a);
      const PairMask mb = mask_from_value(3, b);
      const Groupoid product = box(from_mask(ma), from_mask(mb));
      REQUIRE(is_locally_zero(product));
      CHECK(to_mask(product) == mask_box(ma, mb));
    }
  CHECK_THROWS_AS(mask_box(mask3("LLL"), PairMask(2)), std::invalid_argument);
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(LocallyZeroStream(9), std::invalid_argument);  // C(9,2)=36
  CHECK_THROWS_AS(enumerate_locally_zero(8), std::invalid_argument);
  CHECK(enumerate_locally_zero(4).size() == 64);
  CHECK(enumerate_locally_zero(1).size() == 1);
}

TEST_CASE("order-2 center agrees with a from-scratch oracle") {
  // Oracle: raw definition over all 16 tables, box written out inline.
  std::vector<std::array<int, 4>> tables;
  for (int code = 0; code < 16; ++code)
    tables.push_back({(code >> 3) & 1, (code >> 2) & 1, (code >> 1) & 1,
                      code & 1});
  auto eval = [](const std::array<int, 4>& t, int x, int y) {
    return t[static_cast<std::size_t>(2 * x + y)];
  };
  auto boxed = [&](const std::array<int, 4>& f, const std::array<int, 4>& g) {
    std::array<int, 4> out{};
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        out[static_cast<std::size_t>(2 * x + y)] =
            eval(g, eval(f, x, y), eval(f, y, x));
    return out;
  };
  std::vector<std::array<int, 4>> oracle_center;
  for (const auto& g : tables) {
    bool central = true;
    for (const auto& h : tables)
      if (boxed(g, h) != boxed(h, g)) {
        central = false;
        break;
      }
    if (central) oracle_center.push_back(g);
  }
  REQUIRE(oracle_center.size() == 2);

  const std::vector<Groupoid> members = center_bruteforce(2);
  REQUIRE(members.size() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        CHECK(members[i](x, y) == eval(oracle_center[i], x, y));
  CHECK(members[0] == left_zero(2));
  CHECK(members[1] == right_zero(2));
}

TEST_CASE("order-3 center is the two projections") {
  const std::vector<Groupoid> members = center_bruteforce(3);
  REQUIRE(members.size() == 2);
  CHECK(members[0] == left_zero(3));
  CHECK(members[1] == right_zero(3));

  // Double-check each member against every partner by raw definition.
  for (const Groupoid& g : members) {
    AllGroupoids stream(3);
    while (auto h = stream.next()) CHECK(box(g, *h) == box(*h, g));
  }
  CHECK(is_in_center_bruteforce(left_zero(3)));
  CHECK(is_in_center_bruteforce(right_zero(3)));
  CHECK_THROWS_AS(is_in_center_bruteforce(left_zero(4)), std::invalid_argument);
  CHECK_THROWS_AS(center_bruteforce(4), std::invalid_argument);
}

TEST_CASE("a mixed-mask table is locally zero but not central") {
  // The counterexample shape: the fixture's {0,2} restriction is right-zero
  // while {0,1} is left-zero, and a partner mapping the former pair onto the
  // latter separates the two products.
  const Groupoid g = e26();
  REQUIRE(is_locally_zero(g));
  CHECK(!is_in_center_bruteforce(g));
  const Groupoid partner = make_groupoid(3, {0, 0, 1, 0, 0, 0, 0, 0, 0});
  CHECK(box(g, partner)(0, 2) != box(partner, g)(0, 2));
}

TEST_CASE("sampled membership screen") {
  // max_groupoid(4) commutes with constants but dies on the min probe.
  CHECK(!is_in_center_sampled(max_groupoid(4), 0, 1));
  CHECK(is_in_center_sampled(left_zero(10), 0, 99));
  CHECK(is_in_center_sampled(right_zero(7), 200, 5));
  CHECK(!is_in_center_sampled(constant_groupoid(5, 2), 0, 1));
  // Mixed-mask tables slip past the probes; a random partner catches them.
  const PairMask mixed = PairMask::from_letters(4, "RLLLLL");
  CHECK(!is_in_center_sampled(from_mask(mixed), 500, 12345));
}

TEST_CASE("isomorphism search") {
  CHECK(!are_isomorphic(left_zero(3), right_zero(3)));
  CHECK(are_isomorphic(e26(), e26()));
  const Groupoid llr = from_mask(mask3("LLR"));
  const Groupoid rll = from_mask(mask3("RLL"));
  CHECK(are_isomorphic(llr, rll));
  const std::array<int, 3> swap02{2, 1, 0};
  CHECK(relabel(llr, swap02) == rll);
  CHECK_THROWS_AS(are_isomorphic(left_zero(2), left_zero(3)),
                  std::invalid_argument);
}

TEST_CASE("relabelling a mask table matches the permuted mask") {
  const std::array<int, 4> perms_seed{0, 1, 2, 3};
  std::vector<int> perm(perms_seed.begin(), perms_seed.end());
  do {
    for (std::uint64_t v = 0; v < 64; ++v) {
      const PairMask m = mask_from_value(4, v);
      CHECK(to_mask(relabel(from_mask(m), perm)) == permuted_mask(m, perm));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK_THROWS_AS(permuted_mask(mask3("LLL"), std::array<int, 3>{0, 0, 2}),
                  std::invalid_argument);
}

TEST_CASE("isomorphism class counts match the orbit oracle") {
  CHECK(count_iso_classes(1) == 1);
  CHECK(count_iso_classes(2) == 2);
  CHECK(count_iso_classes(3) == 4);
  CHECK(count_iso_classes(4) == 11);
  CHECK(count_iso_classes(5) == 34);
  CHECK_THROWS_AS(count_iso_classes(6), std::invalid_argument);

  // Cross-check n=3 by grouping the eight tables pairwise.
  std::vector<Groupoid> family = enumerate_locally_zero(3);
  std::vector<int> cls(family.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (cls[i] != -1) continue;
    cls[i] = next++;
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (cls[j] == -1 && are_isomorphic(family[i], family[j]))
        cls[j] = cls[i];
  }
  CHECK(next == 4);
}

TEST_CASE("random masks are seed-reproducible") {
  std::mt19937_64 a(9), b(9);
  for (int i = 0; i < 8; ++i) CHECK(random_mask(6, a) == random_mask(6, b));
}
