#pragma once

#include <optional>

#include "k3scroll/scroll.hpp"

namespace k3s {

// Scroll-family imbalance: delta1 = sum over ordered pairs of
// max(0, e_i - e_j - 1); zero exactly for maximally balanced types.
i64 delta1(const ScrollType& st);

// Cubic-section imbalance for 3-dimensional scrolls, computed both by the
// closed five-term form and by the multi-index sum over |alpha| = 3 of
// max(0, g - 5 - alpha.e); the two must agree.
i64 delta2_c1(const ScrollType& st, i64 g);

// Moduli count 18 + delta2 - delta1 of models fibered in plane cubics on
// scrolls of the given type. Types with delta1 < delta2 cannot arise.
struct ModuliC1 {
  i64 value = 0;
  bool impossible = false;
};
ModuliC1 moduli_c1(const ScrollType& st, i64 g);

// Moduli count 18 - delta1 - delta2 + delta3 + delta4 for complete
// intersections of two quadric-type divisors 2H - b1 F, 2H - b2 F.
i64 moduli_c2(const ScrollType& st, i64 b1, i64 g);

// per-scroll family dimension (c+2)^2 + 20 for maximally balanced types,
// with the delta1 upper bound marker otherwise
struct ModuliGeneral {
  i64 dim_in_scroll = 0;
  i64 num_moduli = 18;
  bool exact = true;  // false: dim_in_scroll is only an upper bound
};
ModuliGeneral moduli_general(const ScrollType& st);

// Pfaffian-case per-scroll dimension 45 + delta2 - delta3, conjectural.
struct ModuliC3 {
  i64 value = 0;
  i64 delta2 = 0;
  i64 delta3 = 0;
  bool conjectural = true;
};
ModuliC3 moduli_c3_conjectural(const ScrollType& st, const IVec& a_twists, i64 g);

}  // namespace k3s
