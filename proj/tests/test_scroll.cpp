#include <doctest.h>

#include <random>

#include "k3scroll/errors.hpp"
#include "k3scroll/rolling.hpp"
#include "k3scroll/scroll.hpp"

using namespace k3s;

TEST_CASE("scroll type from dual invariants") {
  CHECK(scroll_type({3, 3, 0}) == ScrollType({1, 1, 1}));
  CHECK(scroll_type({3, 2, 1}) == ScrollType({2, 1, 0}));
  CHECK(scroll_type({2, 0}) == ScrollType({0, 0}));
  CHECK_FALSE(scroll_type({2, 0}).genuine());
  CHECK(scroll_type({3, 2, 2, 1, 1}) == ScrollType({4, 2, 0}));
  CHECK(scroll_type({6, 3, 1}) == ScrollType({2, 1, 1, 0, 0, 0}));
  CHECK_THROWS_AS(scroll_type({}), EmptyInvariants);
  CHECK_THROWS_AS(scroll_type({3, 1, 2, 0}), MonotonicityViolation);
}

TEST_CASE("scroll numerics") {
  auto n1 = scroll_numerics(ScrollType({2, 1, 1}), 6, 1, 0);
  CHECK(n1.dim == 3);
  CHECK(n1.deg == 4);
  auto n2 = scroll_numerics(ScrollType({2, 1, 1, 0, 0, 0}), 9, 2, 4);
  CHECK(n2.dim == 6);
  CHECK(n2.deg == 4);
  CHECK(n2.dim + n2.deg == 10);
  CHECK_THROWS_AS(scroll_numerics(ScrollType({2, 1, 1}), 7, 1, 0), NumericsMismatch);
}

TEST_CASE("desingularized type") {
  CHECK(t0_type(ScrollType({2, 1, 0, 0})) == ScrollType({3, 2, 1, 1}));
  CHECK(t0_type(ScrollType({1, 1, 1, 1, 0, 0})) == ScrollType({2, 2, 2, 2, 1, 1}));
  std::mt19937 rng(2);
  for (int it = 0; it < 40; ++it) {
    IVec e;
    for (int i = 0; i < 1 + int(rng() % 6); ++i) e.push_back(rng() % 5);
    std::sort(e.rbegin(), e.rend());
    ScrollType st(e);
    const ScrollType lift = t0_type(st);
    CHECK(lift.smooth());
    CHECK(lift.deg() == st.deg() + st.dim());
  }
}

TEST_CASE("section counts") {
  CHECK(h0_scroll(ScrollType({3, 2, 1}), 3, -4) == 30);
  // a = 1: h0(H + 0F) counts dim + deg coordinates
  for (const auto& st : {ScrollType({3, 2, 1}), ScrollType({2, 2, 1, 1}), ScrollType({4, 1})})
    CHECK(h0_scroll(st, 1, 0) == st.deg() + st.dim());
  CHECK(h0_scroll(ScrollType({2, 2, 1, 1}), 2, -3) == 10);
  CHECK(h0_scroll(ScrollType({2, 2, 1, 1}), 2, -5) == 0);
  CHECK(h0_scroll(ScrollType({3, 2, 1}), -1, 5) == 0);
}

TEST_CASE("euler characteristic of scroll twists is linear in b") {
  std::mt19937 rng(9);
  for (int it = 0; it < 200; ++it) {
    IVec e;
    for (int i = 0; i < 1 + int(rng() % 4); ++i) e.push_back(rng() % 5);
    std::sort(e.rbegin(), e.rend());
    ScrollType st(e);
    const i64 a = rng() % 5;
    const i64 b = i64(rng() % 25) - 12;
    const i64 chi = h0_scroll(st, a, b) - h1_scroll(st, a, b);
    const i64 lin = h0_scroll(st, a, 1000) - h0_scroll(st, a, 999);
    CHECK(h0_scroll(st, a, 1000) - chi == (1000 - b) * lin);
  }
}

TEST_CASE("section counts agree with monomial slot counts") {
  std::mt19937 rng(13);
  int done = 0;
  while (done < 500) {
    IVec e;
    for (int i = 0; i < 1 + int(rng() % 5); ++i) e.push_back(rng() % 5);
    std::sort(e.rbegin(), e.rend());
    ScrollType st(e);
    const i64 a = rng() % 5;
    const i64 b = i64(rng() % 25) - 12;
    CHECK(basis(st, a, b).slots() == h0_scroll(st, a, -b));
    ++done;
  }
}

TEST_CASE("frame conversion") {
  ScrollDivisor t{-2, 4, Frame::H0_on_T0};
  const auto pushed = t.in_frame(Frame::H_on_T0);
  CHECK(pushed.a == -2);
  CHECK(pushed.b == 2);
  CHECK(pushed.in_frame(Frame::H0_on_T0).b == 4);
}

TEST_CASE("chow classes") {
  // degree checks from the hyperplane and ruling intersections
  for (i64 c = 1; c <= 3; ++c)
    for (i64 Dsq = 0; Dsq <= c + 2; Dsq += 2)
      for (i64 g = 5; g <= 10; ++g) {
        const auto cl = chow_class_blowup(c, Dsq, g);
        CHECK(cl.m * (g + 1) + cl.n == 2 * g + 2 * c + 2 + 2 * Dsq);  // deg of the image
        CHECK(cl.m == c + 2 + Dsq);                                   // fiber curve degree
      }
  // push-down coefficient at D^2 = 0 against the hyperplane-section class
  for (i64 c = 1; c <= 4; ++c)
    for (i64 g = 5; g <= 12; ++g) {
      const auto cl = chow_class_model(c, 0, g, c + 2);
      CHECK(cl.m == c + 2);
      CHECK(cl.n == c * c + 3 * c - c * g);
    }
}

TEST_CASE("scroll type parse and print") {
  CHECK(ScrollType::parse("(3,2,1,0,0)").str() == "(3,2,1,0,0)");
  CHECK(ScrollType::parse("3,2,1") == ScrollType({3, 2, 1}));
  CHECK_THROWS_AS(ScrollType::parse("()"), ParseError);
}
