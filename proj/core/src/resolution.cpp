#include "k3scroll/resolution.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "k3scroll/errors.hpp"

namespace k3s {

i64 BettiTable::beta(i64 i, i64 j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

BettiTable betti_smooth_case(i64 c) {
  if (c < 1) throw Error("needs c >= 1");
  BettiTable t;
  t.c = c;
  t.Dsq = 0;
  t.entries[{0, 0}] = 1;
  for (i64 i = 1; i <= c - 1; ++i) {
    const Int b = Int(i) * binom(c + 1, i + 1) - binom(c, i - 1);
    t.entries[{i, i + 1}] = b.convert_to<i64>();
  }
  t.entries[{c, c + 2}] = 1;
  return t;
}

i64 koszul_diffs(i64 c, i64 Dsq, i64 i) {
  if (i < 1) throw Error("needs i >= 1");
  const i64 p = c + Dsq / 2;
  const Int v = binom(p, i) * (Dsq + 2 + i) + binom(p, i + 1) * (Dsq / 2 + 1 + i) -
                binom(p + 2, i + 1) * (Dsq / 2 + 1);
  return v.convert_to<i64>();
}

bool fiber_euler_identity_holds(const BettiTable& t, i64 n) {
  const i64 pp = t.c + 1 + t.Dsq / 2;  // fibers span P^pp
  Int lhs = Int(t.c + 2 + t.Dsq) * n - t.Dsq / 2;
  Int rhs = binom(Int(n) + pp, pp);
  for (i64 j = 2; j <= pp + 1; ++j) {
    const Int coeff = binom(Int(n) + pp - j, pp);
    const Int diff = Int(t.beta(j - 2, j)) - t.beta(j - 1, j);
    rhs += (j % 2 == 0 ? coeff : -coeff) * diff;
  }
  return lhs == rhs;
}

BettiTable betti_fiber(i64 c, i64 Dsq) {
  if (Dsq == 0) return betti_smooth_case(c);
  if (Dsq != 2 && Dsq != 4)
    throw BettiIndeterminate("fiber Betti numbers are pinned only for D^2 <= 4");
  if (c < 1) throw Error("needs c >= 1");
  if (Dsq > c + 2) throw BettiConflict("D^2 exceeds c + 2");

  const i64 p = c + Dsq / 2;
  BettiTable t;
  t.c = c;
  t.Dsq = Dsq;
  t.entries[{0, 0}] = 1;

  auto set_entry = [&](i64 i, i64 j, i64 v) {
    if (v < 0) throw BettiConflict("negative Betti number");
    if (v > 0) t.entries[{i, j}] = v;
  };

  // first column: the constant differences determine rows up to c
  for (i64 i = 1; i <= c; ++i) set_entry(i, i + 1, koszul_diffs(c, Dsq, i));
  if (Dsq == 2) {
    // row p = c + 1 vanishes in column one; anchors give the second column
    set_entry(c, c + 2, -koszul_diffs(c, Dsq, c + 1));
    set_entry(p, p + 2, -koszul_diffs(c, Dsq, c + 2));
  } else {
    const i64 xc1 = (c >= 3) ? 0 : 3;  // vanishing clause, or the quadric case value
    set_entry(c + 1, c + 2, xc1);
    set_entry(c, c + 2, xc1 - koszul_diffs(c, Dsq, c + 1));
    set_entry(c + 1, c + 3, -koszul_diffs(c, Dsq, c + 2));
    set_entry(p, p + 2, -koszul_diffs(c, Dsq, c + 3));
  }
  if (t.beta(p, p + 2) != Dsq / 2 + 1)
    throw BettiConflict("top Betti number must be D^2/2 + 1");
  if (t.beta(c, c + 1) == 0) throw BettiConflict("quadric strand must be nonzero");
  for (i64 n = 0; n <= p + 4; ++n)
    if (!fiber_euler_identity_holds(t, n))
      throw BettiConflict("Euler characteristic identity fails");
  return t;
}

Int BSumLedger::sum(i64 i, i64 j) const {
  auto it = sums.find({i, j});
  if (it == sums.end()) throw SumIndeterminate("no sum recorded");
  return it->second;
}

Int BSumLedger::diff(i64 i) const {
  auto it = diffs.find(i);
  if (it != diffs.end()) return it->second;
  return sum(i, i + 1) - sum(i - 1, i + 1);
}

namespace {

// One linear equation: sum(coeffs . unknowns) = rhs.
struct Row {
  std::vector<Rat> coeffs;
  Rat rhs;
};

std::vector<Rat> solve_exact(std::vector<Row> rows, size_t nunk) {
  // Gaussian elimination; requires full rank and consistency.
  size_t rank = 0;
  std::vector<int> where(nunk, -1);
  for (size_t col = 0; col < nunk && rank < rows.size(); ++col) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel].coeffs[col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r].coeffs[col] == 0) continue;
      const Rat f = rows[r].coeffs[col] / rows[rank].coeffs[col];
      for (size_t cc = 0; cc < nunk; ++cc) rows[r].coeffs[cc] -= f * rows[rank].coeffs[cc];
      rows[r].rhs -= f * rows[rank].rhs;
    }
    where[col] = static_cast<int>(rank);
    ++rank;
  }
  if (rank < nunk) throw SumIndeterminate("twist-sum system is rank deficient");
  for (size_t r = rank; r < rows.size(); ++r) {
    bool zero = true;
    for (const auto& cf : rows[r].coeffs)
      if (cf != 0) zero = false;
    if (zero && rows[r].rhs != 0) throw SumIndeterminate("inconsistent system");
  }
  std::vector<Rat> out(nunk);
  for (size_t col = 0; col < nunk; ++col)
    out[col] = rows[where[col]].rhs / rows[where[col]].coeffs[col];
  return out;
}

}  // namespace

BSumLedger bsum_solver(i64 g, i64 c, i64 Dsq, const BettiTable& betti) {
  BSumLedger ledger;
  if (Dsq == 0) {
    // model resolution on the scroll itself, ruling twists b_i^k
    ledger.frame = Frame::H_on_T;
    if (c < 2) return ledger;  // two-term resolution: nothing to solve
    std::vector<std::pair<i64, i64>> unknowns;
    for (i64 i = 1; i <= c - 1; ++i) unknowns.push_back({i, i + 1});
    const i64 f = g - c - 1;  // scroll degree
    std::vector<Row> rows;
    for (i64 n = 2; n <= c + 3; ++n) {
      Row row;
      row.coeffs.assign(unknowns.size(), 0);
      Rat lhs = Rat(binom(Int(n) + c + 1, c + 1)) * (Rat(Int(n) * f, c + 2) + 1) -
                Int(n) * n * (g - 1) - 2;
      // move the known last term across
      const Rat last = Rat(binom(Int(n) - 1, c + 1)) *
                       (Rat(Int(n - c - 2) * f, c + 2) + (g - c - 2));
      lhs -= (c % 2 == 0 ? -last : last);
      for (size_t u = 0; u < unknowns.size(); ++u) {
        const i64 i = unknowns[u].first;
        const Rat coeff = Rat(binom(Int(n) - i + c, c + 1));
        const Rat sgn = (i % 2 == 1) ? 1 : -1;
        row.coeffs[u] = sgn * coeff;
        lhs -= sgn * coeff *
               Rat(Int(n - i - 1) * f + (c + 2), c + 2) * betti.beta(i, i + 1);
      }
      row.rhs = lhs;
      rows.push_back(std::move(row));
      ledger.solved_from.push_back(n);
    }
    auto sol = solve_exact(rows, unknowns.size());
    for (size_t u = 0; u < unknowns.size(); ++u) {
      if (denominator(sol[u]) != 1) throw SumIndeterminate("non-integral twist sum");
      ledger.sums[unknowns[u]] = numerator(sol[u]);
    }
    // duality cross-check: b_{c-i} = g - c - 3 - b_i summed over the row
    for (i64 i = 1; i <= c - 1; ++i) {
      const Int lhs = ledger.sum(c - i, c - i + 1);
      const Int rhs = Int(betti.beta(i, i + 1)) * (g - c - 3) - ledger.sum(i, i + 1);
      if (lhs != rhs) throw SumIndeterminate("self-duality violated");
    }
    return ledger;
  }

  // blown-up model on the desingularized scroll
  ledger.frame = Frame::H0_on_T0;
  const i64 p = c + Dsq / 2;
  const i64 d = c + 2 + Dsq / 2;
  // rows (i, i+1) and (i-1, i+1) carry identical evaluation coefficients
  // with opposite signs, so when both are present only the difference can
  // be solved for; such pairs become one merged unknown.
  struct Unknown {
    i64 i, j;
    bool merged;  // value is sum(i, i+1) - sum(i-1, i+1)
  };
  std::vector<Unknown> unknowns;
  for (i64 i = 1; i <= p; ++i) {
    const bool first = betti.beta(i, i + 1) > 0;
    const bool second = betti.beta(i - 1, i + 1) > 0;
    if (first && second)
      unknowns.push_back({i, i + 1, true});
    else if (first)
      unknowns.push_back({i, i + 1, false});
  }
  for (i64 i = c; i <= p; ++i) {
    if (betti.beta(i, i + 2) == 0) continue;
    if (betti.beta(i + 1, i + 2) > 0) continue;  // handled by the merged pair
    unknowns.push_back({i, i + 2, false});
  }

  std::vector<Row> rows;
  for (i64 n = -1; n <= p + 4; ++n) {
    Row row;
    row.coeffs.assign(unknowns.size(), 0);
    Rat lhs = Rat(binom(Int(n) + d - 1, d - 1)) * (Rat(Int(n) * (g + 1), d) + 1) -
              Int(n) * n * (g + 1 + c + Dsq) + Rat(Int(n) * Dsq, 2) - 2;
    auto coeff_of = [&](i64 i, i64 j) {
      const Rat coeff = Rat(binom(Int(n) + d - (j - i == 1 ? i + 2 : i + 3), d - 1));
      const Rat sgn = (i % 2 == 1) ? 1 : -1;
      return sgn * coeff;
    };
    // known beta contributions move across
    for (i64 i = 1; i <= p; ++i)
      if (betti.beta(i, i + 1) > 0)
        lhs -= coeff_of(i, i + 1) * Rat(Int(n - i - 1) * (g + 1) + d, d) *
               betti.beta(i, i + 1);
    for (i64 i = c; i <= p; ++i)
      if (betti.beta(i, i + 2) > 0)
        lhs -= coeff_of(i, i + 2) * Rat(Int(n - i - 2) * (g + 1) + d, d) *
               betti.beta(i, i + 2);
    for (size_t u = 0; u < unknowns.size(); ++u)
      row.coeffs[u] = coeff_of(unknowns[u].i, unknowns[u].j);
    row.rhs = lhs;
    rows.push_back(std::move(row));
    ledger.solved_from.push_back(n);
  }
  auto sol = solve_exact(rows, unknowns.size());
  for (size_t u = 0; u < unknowns.size(); ++u) {
    if (denominator(sol[u]) != 1) throw SumIndeterminate("non-integral twist sum");
    if (unknowns[u].merged)
      ledger.diffs[unknowns[u].i] = numerator(sol[u]);
    else
      ledger.sums[{unknowns[u].i, unknowns[u].j}] = numerator(sol[u]);
  }
  // strands absent from the resolution contribute zero
  for (i64 i = 1; i <= p; ++i)
    if (betti.beta(i, i + 1) == 0) ledger.sums[{i, i + 1}] = 0;
  for (i64 i = c; i <= p; ++i)
    if (betti.beta(i, i + 2) == 0) ledger.sums[{i, i + 2}] = 0;
  // quadric-row consistency: inserting n = 2 gives the closed form
  const Int expect = Int(Dsq / 2 + c - 1) * g + (1 - c - Dsq);
  if (ledger.sum(1, 2) != expect) throw SumIndeterminate("quadric row sum mismatch");
  return ledger;
}

std::vector<IVec> enumerate_bvectors(const BVectorCase& cs, const BSumLedger& ledger,
                                     const BettiTable& betti) {
  const ScrollType t0 = t0_type(cs.T);
  const i64 count = betti.beta(1, 2);
  const Int total = ledger.sum(1, 2);
  const i64 r = cs.T.zero_count();
  // quadrics in the singular-locus fibers needed to cut the n+m points
  const i64 need = r >= 1 ? (r + 1) * r / 2 - cs.npoints : 0;
  if (need < 0) throw FilterTooStrong("more points than quadrics");

  i64 bmax = 0;
  while (h0_scroll(t0, 2, -(bmax + 1)) > 0) ++bmax;

  std::vector<IVec> out;
  IVec cur(count, 0);
  std::function<void(i64, i64, Int)> rec = [&](i64 pos, i64 cap, Int rest) {
    if (pos == count) {
      if (rest != 0) return;
      // constant-coefficient sections restricted to the exceptional subscroll
      if (r >= 1) {
        i64 constants = 0;
        for (i64 b : cur)
          if (b == 2) ++constants;
        if (constants < need) return;
      }
      for (const auto& [thr, maxcount] : cs.declared_max) {
        i64 n = 0;
        for (i64 b : cur)
          if (b >= thr) ++n;
        if (n > maxcount) return;
      }
      out.push_back(cur);
      return;
    }
    for (i64 b = std::min<i64>(cap, bmax); b >= 0; --b) {
      if (Int(b) > rest) continue;
      if (rest > Int(b) * (count - pos)) break;  // cannot reach the sum
      cur[pos] = b;
      rec(pos + 1, b, rest - b);
    }
  };
  rec(0, bmax, total);
  if (out.empty()) throw FilterTooStrong("no admissible twist vector");
  std::sort(out.begin(), out.end());
  return out;
}

std::string ResolutionShape::str() const {
  std::ostringstream os;
  os << "0";
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    os << " -> ";
    bool first = true;
    for (const auto& [twist, mult] : *it) {
      if (!first) os << " + ";
      first = false;
      os << "O(" << twist.str() << ")";
      if (mult > 1) os << "^" << mult;
    }
  }
  os << " -> O -> O_S -> 0";
  return os.str();
}

PushdownResult pushdown_check(const ResolutionShape& shape) {
  if (shape.frame != Frame::H0_on_T0) throw Error("expected a blown-up-frame shape");
  PushdownResult res;
  res.pushed.frame = Frame::H_on_T0;
  res.full_ok = true;
  res.generators_ok = true;
  int degree = 0;
  for (const auto& term : shape.terms) {
    ++degree;
    std::vector<std::pair<ScrollDivisor, i64>> conv;
    for (const auto& [twist, mult] : term) {
      const ScrollDivisor pushed = twist.in_frame(Frame::H_on_T0);
      conv.push_back({pushed, mult});
      if (pushed.b < -1) {
        res.full_ok = false;
        if (degree <= 2) res.generators_ok = false;
      }
    }
    res.pushed.terms.push_back(std::move(conv));
  }
  return res;
}

}  // namespace k3s
