#pragma once

#include <map>
#include <utility>
#include <vector>

#include "k3scroll/ints.hpp"
#include "k3scroll/scroll.hpp"

namespace k3s {

// Graded Betti numbers of the fiber curves in their spanned projective
// space. Nonzero entries: beta(i, i+1) for 1 <= i <= c + D^2/2 and
// beta(i, i+2) for c <= i <= c + D^2/2, plus beta(0, 0) = 1.
struct BettiTable {
  i64 c = 0;
  i64 Dsq = 0;
  std::map<std::pair<i64, i64>, i64> entries;

  i64 beta(i64 i, i64 j) const;
  i64 top_row() const { return c + Dsq / 2; }
};

// Resolutions with D^2 = 0: beta_i = i C(c+1, i+1) - C(c, i-1) for
// i <= c - 1 and a single top term in degree (c, c+2).
BettiTable betti_smooth_case(i64 c);

// beta(i, i+1) - beta(i-1, i+1), which is independent of the fiber.
i64 koszul_diffs(i64 c, i64 Dsq, i64 i);

// Unique solution of the constraint system for D^2 = 2 or 4 (and the
// smooth-case table for D^2 = 0). D^2 >= 6 is underdetermined by these
// constraints and raises BettiIndeterminate.
BettiTable betti_fiber(i64 c, i64 Dsq);

// Verifies the twisted Euler characteristic identity of the fiber
// resolution at one integer n; used as an independent cross-check.
bool fiber_euler_identity_holds(const BettiTable& t, i64 n);

// Sums of ruling twists per resolution row, solved from the Euler
// characteristic identity of the model resolution by exact evaluation at
// integer points and a linear solve.
struct BSumLedger {
  Frame frame = Frame::H0_on_T0;
  std::map<std::pair<i64, i64>, Int> sums;  // (i, j) -> sum of b_{i,j}^k
  // rows (i, i+1) and (i-1, i+1) enter the identity only through their
  // difference when both are nonzero; those are recorded here instead
  std::map<i64, Int> diffs;  // i -> sum(i, i+1) - sum(i-1, i+1)
  std::vector<i64> solved_from;  // evaluation points used

  Int sum(i64 i, i64 j) const;
  Int diff(i64 i) const;  // sum(i, i+1) - sum(i-1, i+1), always available
};

BSumLedger bsum_solver(i64 g, i64 c, i64 Dsq, const BettiTable& betti);

// Admissible quadric-row twist vectors (non-increasing, in the frame of the
// desingularized scroll), filtered by section positivity, the
// fiber-point-cutting count, and declared per-case caps.
struct BVectorCase {
  ScrollType T;        // scroll of the model
  i64 g = 0, c = 0, Dsq = 0;
  i64 npoints = 0;     // n + m points met by the singular locus per fiber
  // declared constraints: at most `second` entries with b >= `first`
  std::vector<std::pair<i64, i64>> declared_max;
};

std::vector<IVec> enumerate_bvectors(const BVectorCase& cs, const BSumLedger& ledger,
                                     const BettiTable& betti);

// One free resolution, with per-degree multisets of twists.
struct ResolutionShape {
  Frame frame = Frame::H0_on_T0;
  // terms[k] = homological degree k+1; pairs (twist, multiplicity)
  std::vector<std::vector<std::pair<ScrollDivisor, i64>>> terms;

  std::string str() const;
};

struct PushdownResult {
  ResolutionShape pushed;    // frame H_on_T0 twists (push-down ready)
  bool full_ok = false;      // the whole resolution pushes down
  bool generators_ok = false;  // the ideal-generator end pushes down
};

PushdownResult pushdown_check(const ResolutionShape& shape);

}  // namespace k3s
