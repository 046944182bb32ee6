#include "k3scroll/moduli.hpp"

#include <algorithm>

#include "k3scroll/errors.hpp"

namespace k3s {

namespace {
inline i64 pos(i64 v) { return v > 0 ? v : 0; }
}

i64 delta1(const ScrollType& st) {
  i64 s = 0;
  for (i64 ei : st.e)
    for (i64 ej : st.e) s += pos(ei - ej - 1);
  return s;
}

i64 delta2_c1(const ScrollType& st, i64 g) {
  if (st.dim() != 3) throw Error("delta2_c1 needs a 3-dimensional scroll type");
  const i64 e1 = st.e[0], e2 = st.e[1], e3 = st.e[2];
  const i64 closed = pos(e1 - e2 - 3) + pos(e1 - e3 - 3) + pos(e2 - e3 - 3) +
                     pos(e1 + e2 - 2 * e3 - 3) + pos(e1 - 2 * e2 + e3 - 3);
  // independent route: h^1 of the cubic twist, term by term
  i64 multi = 0;
  for (i64 a1 = 0; a1 <= 3; ++a1)
    for (i64 a2 = 0; a1 + a2 <= 3; ++a2) {
      const i64 a3 = 3 - a1 - a2;
      multi += pos(g - 5 - (a1 * e1 + a2 * e2 + a3 * e3));
    }
  if (closed != multi) throw NumericsMismatch("delta2 routes disagree");
  return closed;
}

ModuliC1 moduli_c1(const ScrollType& st, i64 g) {
  if (st.deg() != g - 4) throw NumericsMismatch("scroll degree must be g - 4");
  const i64 d1 = delta1(st), d2 = delta2_c1(st, g);
  ModuliC1 out;
  out.value = 18 + d2 - d1;
  out.impossible = d1 < d2;
  return out;
}

i64 moduli_c2(const ScrollType& st, i64 b1, i64 g) {
  if (st.dim() != 4) throw Error("moduli_c2 needs a 4-dimensional scroll type");
  const i64 b2 = g - 5 - b1;
  const i64 d1 = delta1(st);
  const i64 d2 = pos(b1 - b2 - 1);
  auto sym2_h1 = [&](i64 b) {
    // h^1(Sym^2 E (-b)): unordered pairs with repetition
    i64 s = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) s += pos(b - st.e[i] - st.e[j] - 1);
    return s;
  };
  const i64 d3 = sym2_h1(b1);
  const i64 d4 = sym2_h1(b2);
  return 18 - d1 - d2 + d3 + d4;
}

ModuliGeneral moduli_general(const ScrollType& st) {
  const i64 c = st.dim() - 2;
  if (c < 1) throw Error("scroll dimension must be at least 3");
  ModuliGeneral out;
  out.dim_in_scroll = (c + 2) * (c + 2) + 20;
  if (!st.maximally_balanced()) {
    out.dim_in_scroll += delta1(st);
    out.exact = false;
  }
  return out;
}

ModuliC3 moduli_c3_conjectural(const ScrollType& st, const IVec& a, i64 g) {
  if (st.dim() != 5 || a.size() != 5) throw Error("needs five entries");
  ModuliC3 out;
  // b_i = g - 6 - a_i by the self-duality of the length-five resolution
  IVec b(5);
  for (int i = 0; i < 5; ++i) b[i] = g - 6 - a[i];
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      if (i <= j) continue;
      // entry (i, j) is a section of H - (b_i - a_j) F
      const i64 t = b[i] - a[j];
      out.delta2 += h1_scroll(st, 1, -t);
      out.delta3 += pos(std::abs(a[i] - a[j]) - 1);
    }
  out.value = 45 + out.delta2 - out.delta3;
  return out;
}

}  // namespace k3s
