#pragma once

#include <string>
#include <vector>

#include "k3scroll/ints.hpp"

namespace k3s {

// A rational normal scroll type: non-increasing integers e_1 >= ... >= e_d.
struct ScrollType {
  IVec e;

  explicit ScrollType(IVec entries = {});

  int dim() const { return static_cast<int>(e.size()); }
  i64 deg() const;
  int zero_count() const;               // r = #{e_i = 0}
  bool smooth() const { return zero_count() == 0; }
  bool genuine() const { return deg() >= 2; }
  bool maximally_balanced() const;

  std::string str() const;              // "(3,2,1,0,0)"
  static ScrollType parse(const std::string& s);

  bool operator==(const ScrollType& o) const { return e == o.e; }
  bool operator<(const ScrollType& o) const { return e < o.e; }
};

// Twist a*H + b*F in one of the three frames used for scroll divisors.
// H0 is the hyperplane class upstairs; H = H0 - F its push-down partner.
enum class Frame { H_on_T, H0_on_T0, H_on_T0 };

struct ScrollDivisor {
  i64 a = 0;
  i64 b = 0;
  Frame frame = Frame::H0_on_T0;

  // exact H0 = H + F conversion between the two frames upstairs
  ScrollDivisor in_frame(Frame target) const;
  std::string str() const;
};

// Scroll type from the dual scrollar invariant sequence (d_0, d_1, ...):
// e_i = #{j : d_j >= i} - 1 for i = 1..d_0.
ScrollType scroll_type(const std::vector<i64>& d_seq);

// dim T = c + 2 + D^2/2 and deg T = g - c - 1 - D^2/2; checks dim + deg =
// g + 1 and deg = sum e_i against the supplied type.
struct ScrollNumerics {
  i64 dim = 0;
  i64 deg = 0;
};
ScrollNumerics scroll_numerics(const ScrollType& st, i64 g, i64 c, i64 Dsq);

// The desingularizing scroll: every entry grows by one; degree becomes g+1.
ScrollType t0_type(const ScrollType& st);

// h^0(aH + bF) = sum over |alpha| = a of max(0, b + alpha.e + 1), and the
// companion h^1 = sum max(0, -(b + alpha.e) - 1). Negative a gives 0.
i64 h0_scroll(const ScrollType& st, i64 a, i64 b);
i64 h1_scroll(const ScrollType& st, i64 a, i64 b);

// Chow class coefficients (m, n) of the model: class = m H^{d-2} + n H^{d-3}F.
struct ChowClass {
  i64 m = 0;
  i64 n = 0;
};
ChowClass chow_class_blowup(i64 c, i64 Dsq, i64 g);                // on T0
ChowClass chow_class_model(i64 c, i64 Dsq, i64 g, i64 dim_T);      // on T

}  // namespace k3s
