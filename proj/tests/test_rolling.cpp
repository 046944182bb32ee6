#include <doctest.h>

#include <random>

#include "k3scroll/errors.hpp"
#include "k3scroll/rolling.hpp"

using namespace k3s;

TEST_CASE("monomial bases") {
  // cubics with ruling twist 3 on (3,1,1): ten supports, one with degree-6
  // coefficients down to constants on the last variables
  auto mb = basis(ScrollType({3, 1, 1}), 3, 3);
  CHECK(mb.monomials.size() == 10);
  i64 top = -1, bottom = 100;
  for (const auto& m : mb.monomials) {
    top = std::max(top, m.coeff_degree);
    bottom = std::min(bottom, m.coeff_degree);
  }
  CHECK(top == 6);     // Z1^3 carries P_6
  CHECK(bottom == 0);  // Z3^3 carries a constant

  // on (3,2,1) with twist 4 the last pure cube disappears
  auto mb2 = basis(ScrollType({3, 2, 1}), 3, 4);
  for (const auto& m : mb2.monomials) CHECK(!(m.idx == IVec{0, 0, 3}));
  CHECK(mb2.monomials.size() == 9);

  // twist exceeding a*e1 kills everything
  CHECK(basis(ScrollType({2, 1, 1}), 2, 5).empty());
}

TEST_CASE("forced factors") {
  // steep types force the top variable into every cubic of high twist
  for (i64 g = 8; g <= 12; ++g)
    CHECK(forced_factor(ScrollType({g - 4, 1, 1}), 3, g - 4, {1}));
  CHECK(forced_factor(ScrollType({3, 2, 2, 1, 1, 1}), 2, 5, {1}));
  // zero twist always leaves the pure power of the last variable
  CHECK_FALSE(forced_factor(ScrollType({3, 2, 2, 1, 1, 1}), 2, 0, {1}));
  CHECK_FALSE(forced_factor(ScrollType({3, 1, 1}), 3, 3, {1}));
  // monotone in the twist
  std::mt19937 rng(4);
  for (int it = 0; it < 100; ++it) {
    IVec e;
    for (int i = 0; i < 2 + int(rng() % 4); ++i) e.push_back(rng() % 4);
    std::sort(e.rbegin(), e.rend());
    ScrollType st(e);
    const i64 a = 1 + rng() % 3;
    const i64 b = rng() % 10;
    if (forced_factor(st, a, b, {1})) CHECK(forced_factor(st, a, b + 1, {1}));
  }
}

TEST_CASE("subscroll restriction") {
  // kill the three big directrices: what survives lives on the (1,1) part
  ScrollType t0({3, 2, 2, 1, 1});
  auto mb = basis(t0, 2, 1);
  auto rest = restrict_subscroll(mb, {1, 2, 3});
  for (const auto& m : rest.monomials) {
    CHECK(m.idx[0] == 0);
    CHECK(m.idx[1] == 0);
    CHECK(m.idx[2] == 0);
  }
  // structurally the same as the basis of the sub-type
  auto sub = basis(ScrollType({1, 1}), 2, 1);
  CHECK(rest.monomials.size() == sub.monomials.size());
  CHECK(rest.slots() == sub.slots());

  CHECK(restrict_subscroll(mb, {}).monomials.size() == mb.monomials.size());
  CHECK(restrict_subscroll(mb, {1, 2, 3, 4, 5}).empty());
}

TEST_CASE("cutting capacity") {
  // quadrics vanish on the (1,1) subscroll from twist 3 on
  ScrollType t0({2, 2, 2, 2, 1, 1});
  CHECK(cutting_capacity(t0, 2, {4, 3, 3, 3, 3, 3, 2, 2}, {1, 2, 3, 4}, 2));
  CHECK_FALSE(cutting_capacity(t0, 2, {3, 3, 3, 3, 3, 3, 3, 3}, {1, 2, 3, 4}, 1));
  CHECK(cutting_capacity(t0, 2, {4, 4, 4, 4}, {1, 2, 3, 4}, 0));
  CHECK_THROWS_AS(cutting_capacity(t0, 2, {2}, {1, 2}, 1), UnsupportedSubscroll);
}

TEST_CASE("pretty printer") {
  auto mb = basis(ScrollType({2, 1}), 2, 2);
  const std::string s = pretty(mb);
  CHECK(s.find("P_2(t,u) Z1^2") != std::string::npos);
  CHECK(s.find("Z1 Z2") != std::string::npos);
}
