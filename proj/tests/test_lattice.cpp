#include <doctest.h>

#include <random>

#include "k3scroll/lattice.hpp"
#include "k3scroll/lattice_io.hpp"

using namespace k3s;

namespace {

LatticePtr make(IMat g) { return std::make_shared<Lattice>(std::move(g)); }

DivisorClass dc(const LatticePtr& lat, IVec v) { return {lat, std::move(v)}; }

// independent oracle: brute force over a coefficient box
std::vector<DivisorClass> brute_classes(const LatticePtr& lat, const DivisorClass& h,
                                        i64 square, i64 dmin, i64 dmax, i64 box) {
  std::vector<DivisorClass> out;
  const int n = lat->rank();
  IVec c(n, -box);
  for (;;) {
    DivisorClass x(lat, c);
    if (self_intersection(x) == square) {
      const i64 t = intersect(x, h);
      if (t >= dmin && t <= dmax) out.push_back(x);
    }
    int i = 0;
    while (i < n && c[i] == box) c[i++] = -box;
    if (i == n) break;
    ++c[i];
  }
  std::sort(out.begin(), out.end(), [&](const DivisorClass& u, const DivisorClass& v) {
    const i64 du = intersect(u, h), dv = intersect(v, h);
    if (du != dv) return du < dv;
    return u.coords < v.coords;
  });
  return out;
}

}  // namespace

TEST_CASE("intersection numbers") {
  auto lat = make({{8, 3}, {3, 0}});
  auto L = dc(lat, {1, 0});
  auto D = dc(lat, {0, 1});
  CHECK(intersect(L, L) == 8);
  CHECK(intersect(D, D) == 0);
  CHECK(intersect(L, D) == 3);

  std::mt19937 rng(7);
  std::uniform_int_distribution<i64> u(-5, 5);
  for (int it = 0; it < 50; ++it) {
    auto a = dc(lat, {u(rng), u(rng)});
    auto b = dc(lat, {u(rng), u(rng)});
    CHECK(intersect(a, b) == intersect(b, a));
  }
}

TEST_CASE("lattice mismatch is rejected") {
  auto lat1 = make({{8, 3}, {3, 0}});
  auto lat2 = make({{10, 3}, {3, 0}});
  CHECK_THROWS_AS(intersect(dc(lat1, {1, 0}), dc(lat2, {1, 0})), LatticeMismatch);
}

TEST_CASE("evenness enforced") {
  CHECK_THROWS_AS(Lattice(IMat{{3}}), OddSquare);
}

TEST_CASE("signature") {
  CHECK(signature(Lattice(IMat{{8, 3}, {3, 0}})) == Signature{1, 1, 0});
  CHECK(signature(Lattice(IMat{{-2}})) == Signature{0, 1, 0});
  CHECK(signature(Lattice(IMat{{2, 0}, {0, 2}})) == Signature{2, 0, 0});
  CHECK(signature(Lattice(IMat{{0, 2}, {2, 0}})) == Signature{1, 1, 0});
  CHECK(signature(Lattice(IMat{{2, 0}, {0, 0}})) == Signature{1, 0, 1});

  // rank-4 configuration lattice; oracle: characteristic polynomial signs
  IMat g = {{0, 2, 1, 1}, {2, -2, 0, 0}, {1, 0, -2, 0}, {1, 0, 0, -2}};
  CHECK(signature(Lattice(g)) == Signature{1, 3, 0});
  auto cp = char_poly(g);
  // real-rooted quartic: one sign variation in p(x) means one positive root
  int variations = 0, last = 0;
  for (const auto& c : cp) {
    if (c == 0) continue;
    int s = c > 0 ? 1 : -1;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  CHECK(variations == 1);
}

TEST_CASE("signature invariance under unimodular change of basis") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<i64> u(-2, 2);
  IMat g = {{0, 2, 1}, {2, -2, 0}, {1, 0, -2}};
  const Signature ref = signature(Lattice(g));
  for (int it = 0; it < 25; ++it) {
    // random unimodular by shear compositions
    IMat U = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int s = 0; s < 6; ++s) {
      int i = rng() % 3, j = rng() % 3;
      if (i == j) continue;
      i64 k = u(rng);
      for (int c = 0; c < 3; ++c) U[i][c] += k * U[j][c];
    }
    IMat h(3, IVec(3, 0));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        i64 s = 0;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) s += U[i][a] * g[a][b] * U[j][b];
        h[i][j] = s;
      }
    CHECK(signature(Lattice(h)) == ref);
  }
}

TEST_CASE("nikulin existence") {
  CHECK(nikulin_exists(Lattice(IMat{{8, 3}, {3, 0}})));
  CHECK(nikulin_exists(Lattice(IMat{{2}})));
  CHECK_FALSE(nikulin_exists(Lattice(IMat{{2, 0}, {0, 2}})));
  IMat big(11, IVec(11, 0));
  big[0][0] = 2;
  for (int i = 1; i < 11; ++i) big[i][i] = -2;
  CHECK_FALSE(nikulin_exists(Lattice(big)));
}

TEST_CASE("reflection") {
  auto lat = make({{-2, 1}, {1, 0}});
  auto gamma = dc(lat, {1, 0});
  CHECK(reflect(gamma, gamma) == -gamma);
  auto d = dc(lat, {1, 1});
  CHECK(intersect(d, gamma) == -1);
  CHECK(reflect(d, gamma) == dc(lat, {0, 1}));
  CHECK(self_intersection(reflect(d, gamma)) == self_intersection(d));

  auto nonroot = dc(lat, {0, 1});
  CHECK_THROWS_AS(reflect(d, nonroot), NotARoot);

  std::mt19937 rng(3);
  std::uniform_int_distribution<i64> u(-4, 4);
  for (int it = 0; it < 100; ++it) {
    auto a = dc(lat, {u(rng), u(rng)});
    auto b = dc(lat, {u(rng), u(rng)});
    // involution and isometry
    CHECK(reflect(reflect(a, gamma), gamma) == a);
    CHECK(intersect(reflect(a, gamma), reflect(b, gamma)) == intersect(a, b));
  }
}

TEST_CASE("riemann-roch") {
  auto lat = make({{8, 3}, {3, 0}});
  CHECK(riemann_roch_chi(dc(lat, {0, 1})) == 2);   // isotropic
  CHECK(riemann_roch_chi(dc(lat, {1, 0})) == 6);   // L^2 = 2g-2, g = 5
  auto root_lat = make({{-2}});
  CHECK(riemann_roch_chi(dc(root_lat, {1})) == 1);
  std::mt19937 rng(5);
  std::uniform_int_distribution<i64> u(-4, 4);
  for (int it = 0; it < 50; ++it) {
    auto d = dc(lat, {u(rng), u(rng)});
    CHECK(riemann_roch_chi(d) == riemann_roch_chi(-d));
  }
}

TEST_CASE("class enumeration matches brute force") {
  struct Fix {
    IMat g;
    IVec h;
  };
  std::vector<Fix> fixtures = {
      {{{8, 3}, {3, 0}}, {1, 0}},
      {{{12, 4}, {4, 0}}, {1, 0}},
      {{{0, 2, 1}, {2, -2, 0}, {1, 0, -2}}, {2, 1, 1}},
      {{{0, 1, 0, 0}, {1, -2, 1, 0}, {0, 1, -2, 1}, {0, 0, 1, -2}}, {5, 3, 2, 1}},
  };
  for (const auto& f : fixtures) {
    auto lat = make(f.g);
    DivisorClass h(lat, f.h);
    REQUIRE(self_intersection(h) > 0);
    for (i64 square : {-2, 0, 2}) {
      auto fast = enumerate_classes(lat, h, square, 0, 8);
      auto slow = brute_classes(lat, h, square, 0, 8, 20);
      CHECK(fast.size() == slow.size());
      CHECK(fast == slow);
    }
  }
}

TEST_CASE("no roots in the genus-5 rank-2 lattice") {
  auto lat = make({{8, 3}, {3, 0}});
  auto L = dc(lat, {1, 0});
  CHECK(enumerate_classes(lat, L, -2, 0, 8).empty());
  // h itself shows up at its own degree and square
  auto self = enumerate_classes(lat, L, 8, 8, 8);
  REQUIRE(!self.empty());
  CHECK(std::find(self.begin(), self.end(), L) != self.end());
  CHECK_THROWS_AS(enumerate_classes(lat, dc(lat, {0, 1}), 0, 0, 1), HeightNotBig);
}

TEST_CASE("lattice file round trip") {
  const std::string text = R"({
    "rank": 2,
    "gram": [[8, 3], [3, 0]],
    "basis_names": ["L", "D"],
    "classes": {"L": [1, 0], "D": [0, 1]}
  })";
  auto lf = parse_lattice_file(text);
  CHECK(lf.lattice->rank() == 2);
  CHECK(intersect(lf.cls("L"), lf.cls("D")) == 3);
  const std::string dumped = write_lattice_file(lf);
  auto lf2 = parse_lattice_file(dumped);
  CHECK(write_lattice_file(lf2) == dumped);
  CHECK(lf2.lattice->gram() == lf.lattice->gram());
}
