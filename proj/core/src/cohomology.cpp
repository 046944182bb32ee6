#include "k3scroll/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace k3s {

namespace {

// Declared effective degree-zero roots: the named Gamma classes.
std::vector<DivisorClass> declared_gammas(const LatticeFile& lf) {
  std::vector<DivisorClass> out;
  for (const auto& [name, d] : lf.classes)
    if (name.rfind("Gamma", 0) == 0) out.push_back(d);
  return out;
}

// Is x a non-negative integer combination of the declared gammas? The
// configurations used here have independent gamma classes, so solving the
// Gram system decides membership; a bounded search covers the rest.
bool in_gamma_cone(const std::vector<DivisorClass>& gammas, const DivisorClass& x) {
  if (x.is_zero()) return true;
  if (gammas.empty()) return false;
  const int m = static_cast<int>(gammas.size());
  // Solve sum n_i (G_i . G_j) = x . G_j exactly.
  std::vector<std::vector<Rat>> A(m, std::vector<Rat>(m + 1));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) A[j][i] = intersect(gammas[i], gammas[j]);
    A[j][m] = intersect(x, gammas[j]);
  }
  // Gaussian elimination
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < m && row < m; ++col) {
    int p = -1;
    for (int r = row; r < m; ++r)
      if (A[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(A[p], A[row]);
    for (int r = 0; r < m; ++r) {
      if (r == row || A[r][col] == 0) continue;
      const Rat f = A[r][col] / A[row][col];
      for (int c = col; c <= m; ++c) A[r][c] -= f * A[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < m; ++r)
    if (A[r][m] != 0) return false;
  std::vector<Rat> n(m, 0);
  for (int r = 0; r < row; ++r) n[pivot_col[r]] = A[r][m] / A[r][pivot_col[r]];
  // candidate solution must be a non-negative integer vector reproducing x
  IVec acc(x.coords.size(), 0);
  for (int i = 0; i < m; ++i) {
    if (n[i] < 0 || denominator(n[i]) != 1) return false;
    const i64 ni = numerator(n[i]).convert_to<i64>();
    for (size_t k = 0; k < acc.size(); ++k) acc[k] += ni * gammas[i].coords[k];
  }
  return acc == x.coords;
}

}  // namespace

K3Config K3Config::create(LatticeFile lf, i64 search_degree_bound) {
  K3Config cfg;
  cfg.lat_ = lf.lattice;
  cfg.L_ = lf.cls("L");
  cfg.file_ = std::move(lf);
  if (!nikulin_exists(*cfg.lat_)) throw Error("lattice is not a K3 Picard lattice");
  const i64 L2 = self_intersection(cfg.L_);
  if (L2 < 2 || L2 % 2 != 0) throw Error("polarization must have positive even square");
  cfg.bound_ = std::max<i64>(search_degree_bound, L2);

  // Must be nef before roots can be oriented.
  for (const auto& g : declared_gammas(cfg.file_))
    if (self_intersection(g) == -2 && intersect(cfg.L_, g) < 0)
      throw PolarizationNotNef("declared root has negative degree");

  cfg.roots_ = effective_roots(cfg);
  return cfg;
}

std::vector<DivisorClass> K3Config::contracted_roots() const {
  std::vector<DivisorClass> out;
  for (const auto& r : roots_)
    if (intersect(r, L_) == 0) out.push_back(r);
  return out;
}

std::vector<DivisorClass> effective_roots_bounded(const K3Config& cfg, i64 bound) {
  const auto gammas = declared_gammas(cfg.file());
  std::vector<DivisorClass> kept;

  auto reducible = [&](const DivisorClass& x) {
    for (const auto& a : kept) {
      DivisorClass rest = x - a;
      if (rest.is_zero()) continue;
      for (const auto& b : kept)
        if (rest == b) return true;
    }
    return false;
  };

  // Degree-zero roots: orient by the declared cone, order by height so that
  // simple classes precede their sums.
  auto deg0 = enumerate_classes(cfg.lattice(), cfg.L(), -2, 0, 0);
  std::vector<DivisorClass> eff0;
  for (auto& x : deg0)
    if (in_gamma_cone(gammas, x)) eff0.push_back(x);
  std::stable_sort(eff0.begin(), eff0.end(), [](const DivisorClass& a, const DivisorClass& b) {
    auto height = [](const DivisorClass& d) {
      i64 s = 0;
      for (i64 v : d.coords) s += std::abs(v);
      return s;
    };
    return height(a) < height(b);
  });
  for (const auto& x : eff0)
    if (!reducible(x)) kept.push_back(x);

  for (i64 deg = 1; deg <= bound; ++deg) {
    auto level = enumerate_classes(cfg.lattice(), cfg.L(), -2, deg, deg);
    for (const auto& x : level)
      if (!reducible(x)) kept.push_back(x);
  }
  return kept;
}

std::vector<DivisorClass> effective_roots(const K3Config& cfg) {
  return effective_roots_bounded(cfg, cfg.degree_bound());
}

bool is_nef(const K3Config& cfg, const DivisorClass& d) {
  for (const auto& g : cfg.roots())
    if (intersect(d, g) < 0) return false;
  return true;
}

DivisorClass make_nef(const K3Config& cfg, const DivisorClass& d, int budget) {
  if (self_intersection(d) <= 0) throw Error("make_nef needs d^2 > 0");
  DivisorClass cur = d;
  if (intersect(cur, cfg.L()) < 0) cur = -cur;
  for (int step = 0; step < budget; ++step) {
    bool reflected = false;
    for (const auto& g : cfg.roots()) {
      if (intersect(cur, g) < 0) {
        cur = reflect(cur, g);
        reflected = true;
        break;
      }
    }
    if (!reflected) return cur;
  }
  throw ReductionBudgetExceeded();
}

namespace {

// Primitive part of a nonzero class.
DivisorClass primitive(const DivisorClass& d, i64& mult) {
  i64 g = 0;
  for (i64 v : d.coords) g = std::gcd(g, std::abs(v));
  mult = g;
  IVec c = d.coords;
  for (auto& v : c) v /= g;
  return {d.lattice, c};
}

}  // namespace

bool is_base_point_free(const K3Config& cfg, const DivisorClass& d) {
  const i64 sq = self_intersection(d);
  if (sq < 0 || !is_nef(cfg, d)) throw NotNef();
  if (sq > 0) {
    // not free iff some effective isotropic E has E.d = 1
    auto es = enumerate_classes(cfg.lattice(), d, 0, 1, 1);
    for (const auto& e : es) {
      if (e.is_zero()) continue;
      if (intersect(e, cfg.L()) > 0) return false;
    }
    return true;
  }
  if (d.is_zero()) return true;
  i64 k = 0;
  DivisorClass e = primitive(d, k);
  return intersect(e, cfg.L()) > 0;
}

namespace {

// Value-only h^0 by fixed-root stripping.
std::optional<i64> h0_core(const K3Config& cfg, const DivisorClass& d,
                           std::vector<DivisorClass>* trace) {
  // fixed components have degree at most d.L: widen the list when needed
  const i64 dL0 = intersect(d, cfg.L());
  std::vector<DivisorClass> wide;
  if (dL0 > cfg.degree_bound()) wide = effective_roots_bounded(cfg, dL0);
  const auto& roots = dL0 > cfg.degree_bound() ? wide : cfg.roots();
  DivisorClass cur = d;

  // strip fixed roots: smallest L-degree first, ties by coordinates
  for (;;) {
    if (cur.is_zero()) return 1;
    if (intersect(cur, cfg.L()) < 0) return 0;  // nef degree obstruction
    const DivisorClass* pick = nullptr;
    for (const auto& g : roots) {
      if (intersect(g, cur) >= 0) continue;
      if (!pick) {
        pick = &g;
        continue;
      }
      const i64 dg = intersect(*pick, cfg.L()), dh = intersect(g, cfg.L());
      if (dh < dg || (dh == dg && g.coords < pick->coords)) pick = &g;
    }
    if (!pick) break;
    if (trace) trace->push_back(*pick);
    cur = cur - *pick;
  }

  const i64 sq = self_intersection(cur);
  const i64 dL = intersect(cur, cfg.L());
  if (dL < 0) return 0;
  if (sq < 0) {
    // an effective class is a nef moving part plus enumerated fixed roots;
    // after stripping both parts pair non-negatively with cur, so an
    // effective cur would have cur^2 >= 0
    return 0;
  }
  if (sq == 0) {
    i64 k = 0;
    DivisorClass e = primitive(cur, k);
    if (intersect(e, cfg.L()) <= 0) return 0;
    return k + 1;  // kE with E a primitive isotropic nef class
  }
  return riemann_roch_chi(cur);  // nef and big
}

}  // namespace

H0Verdict h0(const K3Config& cfg, const DivisorClass& d) {
  H0Verdict out;
  if (d.is_zero()) {
    out.value = 1;
    out.h1 = 0;
    return out;
  }
  out.value = h0_core(cfg, d, &out.reduction_trace);
  if (!out.value) return out;
  const auto neg = h0_core(cfg, -d, nullptr);
  if (neg) out.h1 = *out.value + *neg - riemann_roch_chi(d);
  return out;
}

i64 h0_value(const K3Config& cfg, const DivisorClass& d) {
  auto v = h0(cfg, d);
  if (!v.decided()) throw Abstained("h0 undecided for " + d.str());
  return v.v();
}

}  // namespace k3s
