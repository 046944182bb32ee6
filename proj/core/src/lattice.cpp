#include "k3scroll/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace k3s {

Lattice::Lattice(IMat gram, std::vector<std::string> basis_names)
    : rank_(static_cast<int>(gram.size())),
      gram_(std::move(gram)),
      basis_names_(std::move(basis_names)) {
  if (rank_ == 0) throw Error("empty Gram matrix");
  for (const auto& row : gram_)
    if (static_cast<int>(row.size()) != rank_) throw Error("Gram matrix not square");
  for (int i = 0; i < rank_; ++i) {
    if (gram_[i][i] % 2 != 0) throw OddSquare("lattice not even");
    for (int j = 0; j < i; ++j)
      if (gram_[i][j] != gram_[j][i]) throw Error("Gram matrix not symmetric");
  }
  if (basis_names_.empty()) {
    for (int i = 0; i < rank_; ++i) basis_names_.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(basis_names_.size()) != rank_)
    throw Error("basis_names length mismatch");
}

DivisorClass::DivisorClass(LatticePtr lat, IVec c)
    : lattice(std::move(lat)), coords(std::move(c)) {
  if (static_cast<int>(coords.size()) != lattice->rank())
    throw LatticeMismatch("coordinate length differs from lattice rank");
}

bool DivisorClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](i64 v) { return v == 0; });
}

static void check_same(const DivisorClass& a, const DivisorClass& b) {
  if (!a.lattice || !b.lattice || !(*a.lattice == *b.lattice))
    throw LatticeMismatch();
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  check_same(*this, o);
  IVec c(coords);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords[i];
  return {lattice, c};
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
  check_same(*this, o);
  IVec c(coords);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords[i];
  return {lattice, c};
}

DivisorClass DivisorClass::operator-() const {
  IVec c(coords);
  for (auto& v : c) v = -v;
  return {lattice, c};
}

DivisorClass DivisorClass::operator*(i64 k) const {
  IVec c(coords);
  for (auto& v : c) v *= k;
  return {lattice, c};
}

std::string DivisorClass::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ",";
    os << coords[i];
  }
  os << ")";
  return os.str();
}

i64 intersect(const DivisorClass& a, const DivisorClass& b) {
  check_same(a, b);
  const IMat& g = a.lattice->gram();
  i64 acc = 0;
  for (size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i] == 0) continue;
    i64 row = 0;
    for (size_t j = 0; j < b.coords.size(); ++j) row += g[i][j] * b.coords[j];
    acc += a.coords[i] * row;
  }
  return acc;
}

i64 self_intersection(const DivisorClass& a) { return intersect(a, a); }

std::vector<Int> char_poly(const IMat& m) {
  // Faddeev-LeVerrier; all divisions are exact over the integers.
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<Int>> M(n, std::vector<Int>(n, 0));
  std::vector<Int> coeffs(n + 1);
  coeffs[0] = 1;
  // M_0 = I
  for (int i = 0; i < n; ++i) M[i][i] = 1;
  std::vector<std::vector<Int>> AM(n, std::vector<Int>(n, 0));
  for (int k = 1; k <= n; ++k) {
    // AM = A * M
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int l = 0; l < n; ++l) s += Int(m[i][l]) * M[l][j];
        AM[i][j] = s;
      }
    Int tr = 0;
    for (int i = 0; i < n; ++i) tr += AM[i][i];
    coeffs[k] = -tr / k;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M[i][j] = AM[i][j] + (i == j ? coeffs[k] : Int(0));
  }
  return coeffs;  // lambda^n + c1 lambda^{n-1} + ... + cn
}

static Signature signature_charpoly(const IMat& m) {
  const int n = static_cast<int>(m.size());
  auto c = char_poly(m);
  // Trailing zero coefficients give the kernel dimension.
  int zeros = 0;
  while (zeros < n && c[n - zeros] == 0) ++zeros;
  // A real symmetric matrix has a real-rooted characteristic polynomial, so
  // Descartes' rule is exact: positive roots = sign variations of p(x).
  std::vector<Int> cc(c.begin(), c.end() - zeros);
  int pos = 0;
  int last = 0;
  for (const auto& a : cc) {
    if (a == 0) continue;
    int s = a > 0 ? 1 : -1;
    if (last != 0 && s != last) ++pos;
    last = s;
  }
  Signature sig;
  sig.positives = pos;
  sig.zeros = zeros;
  sig.negatives = n - pos - zeros;
  return sig;
}

Signature signature(const Lattice& lat) {
  const int n = lat.rank();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = lat.gram()[i][j];

  Signature sig;
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  int k = 0;
  while (k < n) {
    // symmetric pivot: pick a nonzero diagonal entry
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a[i][i] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      // zero diagonal block: either the whole remainder vanishes or we defer
      // to the characteristic polynomial of the original matrix
      bool all_zero = true;
      for (int i = k; i < n && all_zero; ++i)
        for (int j = k; j < n && all_zero; ++j)
          if (a[i][j] != 0) all_zero = false;
      if (all_zero) {
        sig.zeros += n - k;
        return sig;
      }
      return signature_charpoly(lat.gram());
    }
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a[piv][j], a[k][j]);
      for (int i = 0; i < n; ++i) std::swap(a[i][piv], a[i][k]);
    }
    const Rat d = a[k][k];
    if (d > 0)
      ++sig.positives;
    else
      ++sig.negatives;
    for (int i = k + 1; i < n; ++i) {
      const Rat f = a[i][k] / d;
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (int i = k + 1; i < n; ++i) a[k][i] = 0;  // keep symmetric picture
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < i; ++j) a[j][i] = a[i][j];
    ++k;
  }
  return sig;
}

bool nikulin_exists(const Lattice& lat) {
  if (lat.rank() > 10) return false;
  const Signature s = signature(lat);
  return s.positives == 1 && s.zeros == 0 && s.negatives == lat.rank() - 1;
}

DivisorClass reflect(const DivisorClass& d, const DivisorClass& gamma) {
  if (self_intersection(gamma) != -2) throw NotARoot();
  return d + gamma * intersect(d, gamma);
}

i64 riemann_roch_chi(const DivisorClass& d) {
  const i64 sq = self_intersection(d);
  if (sq % 2 != 0) throw OddSquare();
  return sq / 2 + 2;
}

namespace {

// Unimodular column operations turning a^T into (gcd, 0, ..., 0): returns V
// with a^T V = (g, 0, ..., 0).
IMat kernel_transform(const IVec& a, i64& gcd_out) {
  const int n = static_cast<int>(a.size());
  IMat V(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) V[i][i] = 1;
  IVec w = a;
  for (int j = 1; j < n; ++j) {
    // zero w[j] against w[0] by gcd steps
    while (w[j] != 0) {
      if (w[0] == 0) {
        std::swap(w[0], w[j]);
        for (int i = 0; i < n; ++i) std::swap(V[i][0], V[i][j]);
        continue;
      }
      const i64 q = w[j] / w[0];
      w[j] -= q * w[0];
      for (int i = 0; i < n; ++i) V[i][j] -= q * V[i][0];
      if (w[j] != 0) {
        std::swap(w[0], w[j]);
        for (int i = 0; i < n; ++i) std::swap(V[i][0], V[i][j]);
      }
    }
  }
  gcd_out = w[0];
  return V;
}

struct SliceEnum {
  int m;                                   // kernel rank
  std::vector<std::vector<Rat>> L;         // unit lower-triangular
  std::vector<Rat> D;                      // positive pivots
};

}  // namespace

std::vector<DivisorClass> enumerate_classes(const LatticePtr& lat,
                                            const DivisorClass& h, i64 square,
                                            i64 deg_min, i64 deg_max) {
  if (self_intersection(h) <= 0) throw HeightNotBig();
  const int n = lat->rank();
  const IMat& G = lat->gram();

  // a = G h; the slice {x : a.x = t} is x0 + ker, with the form negative
  // definite on ker by the Hodge index theorem.
  IVec a(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i] += G[i][j] * h.coords[j];

  i64 g = 0;
  IMat V = kernel_transform(a, g);
  if (g < 0) {
    g = -g;
    for (int i = 0; i < n; ++i) V[i][0] = -V[i][0];
  }
  const int m = n - 1;  // kernel rank

  // kernel basis B = columns 1..n-1 of V; M = -B^T G B positive definite
  std::vector<IVec> B(m, IVec(n));
  for (int c = 0; c < m; ++c)
    for (int i = 0; i < n; ++i) B[c][i] = V[i][c + 1];

  auto pair_with = [&](const IVec& u, const IVec& v) {
    i64 s = 0;
    for (int i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      i64 row = 0;
      for (int j = 0; j < n; ++j) row += G[i][j] * v[j];
      s += u[i] * row;
    }
    return s;
  };

  std::vector<std::vector<Rat>> M(m, std::vector<Rat>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) M[i][j] = pair_with(B[i], B[j]);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) M[i][j] = -M[i][j];

  // LDL^T of M (positive definite: no pivoting needed)
  std::vector<std::vector<Rat>> Lo(m, std::vector<Rat>(m, 0));
  std::vector<Rat> Dv(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      Rat s = M[i][j];
      for (int k = 0; k < j; ++k) s -= Lo[i][k] * Lo[j][k] * Dv[k];
      if (i == j) {
        Dv[i] = s;
        if (s <= 0) throw Error("height-perpendicular form not definite");
        Lo[i][i] = 1;
      } else {
        Lo[i][j] = s / Dv[j];
      }
    }
  }

  std::vector<DivisorClass> out;
  for (i64 t = deg_min; t <= deg_max; ++t) {
    if (t % g != 0) continue;
    IVec x0(n);
    for (int i = 0; i < n; ++i) x0[i] = V[i][0] * (t / g);
    const i64 x0sq = pair_with(x0, x0);

    if (m == 0) {
      if (x0sq == square) out.emplace_back(lat, x0);
      continue;
    }

    // Solve y^T M y - 2 q.y = x0^2 - square over the slice, q = B^T G x0.
    std::vector<Rat> q(m);
    for (int i = 0; i < m; ++i) q[i] = pair_with(B[i], x0);
    // center z = M^{-1} q via the LDL^T factors
    std::vector<Rat> z(m);
    for (int i = 0; i < m; ++i) {
      Rat s = q[i];
      for (int k = 0; k < i; ++k) s -= Lo[i][k] * Dv[k] * z[k];
      z[i] = s / Dv[i];
    }
    // back substitution of L^T
    for (int i = m - 1; i >= 0; --i) {
      Rat s = z[i];
      for (int k = i + 1; k < m; ++k) s -= Lo[k][i] * z[k];
      z[i] = s;
    }
    // (y - z)^T M (y - z) = (x0^2 - square) + z^T M z =: rho
    Rat rho = Int(x0sq - square);
    for (int i = 0; i < m; ++i) {
      Rat w = z[i];
      for (int k = i + 1; k < m; ++k) w += Lo[k][i] * z[k];
      rho += Dv[i] * w * w;
    }
    if (rho < 0) continue;

    IVec y(m, 0);
    struct Rec {
      int m;
      const std::vector<std::vector<Rat>>& Lo;
      const std::vector<Rat>& Dv;
      const std::vector<Rat>& z;
      IVec& y;
      std::vector<IVec> sols;
      void run(int i, Rat rem) {
        if (i < 0) {
          if (rem == 0) sols.push_back(y);
          return;
        }
        // offset_i = y_i - z_i + sum_{k>i} Lo[k][i] (y_k - z_k)
        Rat off = -z[i];
        for (int k = i + 1; k < m; ++k) off += Lo[k][i] * (Rat(y[k]) - z[k]);
        // d_i (y_i + off)^2 <= rem
        const Rat bound = rem / Dv[i];
        const Int r = floor_sqrt(bound);
        // |y_i + off| <= sqrt(bound): integer window around -off
        const Rat lo_r = -off - Rat(r) - 1;
        const Rat hi_r = -off + Rat(r) + 1;
        Int lo = numerator(lo_r) / denominator(lo_r) - 2;
        Int hi = numerator(hi_r) / denominator(hi_r) + 2;
        for (Int v = lo; v <= hi; ++v) {
          const Rat w = Rat(v) + off;
          const Rat used = Dv[i] * w * w;
          if (used > rem) continue;
          y[i] = v.convert_to<i64>();
          run(i - 1, rem - used);
        }
        y[i] = 0;
      }
    } rec{m, Lo, Dv, z, y, {}};
    rec.run(m - 1, rho);

    for (const auto& ys : rec.sols) {
      IVec x = x0;
      for (int c = 0; c < m; ++c)
        for (int i = 0; i < n; ++i) x[i] += B[c][i] * ys[c];
      DivisorClass d(lat, x);
      if (self_intersection(d) == square) out.push_back(std::move(d));
    }
  }

  std::sort(out.begin(), out.end(), [&](const DivisorClass& u, const DivisorClass& v) {
    const i64 du = intersect(u, h), dv = intersect(v, h);
    if (du != dv) return du < dv;
    return u.coords < v.coords;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace k3s
