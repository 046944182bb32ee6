#pragma once

#include <set>
#include <string>
#include <vector>

#include "k3scroll/scroll.hpp"

namespace k3s {

// Sections of aH - bF on a smooth scroll, represented by their monomial
// supports: a multi-index (i_1, ..., i_d) with sum a contributes when its
// coefficient degree m = -b + sum i_k e_k is non-negative, and then carries
// m + 1 coefficient slots.
struct Monomial {
  IVec idx;
  i64 coeff_degree = 0;
};

struct MonomialBasis {
  ScrollType st;
  i64 a = 0;
  i64 b = 0;
  std::vector<Monomial> monomials;

  i64 slots() const;
  bool empty() const { return monomials.empty(); }
};

MonomialBasis basis(const ScrollType& st, i64 a, i64 b);

// True iff every monomial of basis(st, a, b) involves some variable in vars
// (1-based indices), i.e. every section lies in the ideal they generate.
bool forced_factor(const ScrollType& st, i64 a, i64 b, const std::set<int>& vars);

// Restriction to the subscroll where the killed variables vanish.
MonomialBasis restrict_subscroll(const MonomialBasis& mb, const std::set<int>& kill);

// Counts entries b of b_list whose restriction to the type-(1,...,1)
// subscroll (complement of `kill`) is nonzero, and reports whether at least
// `need` such sections exist -- the necessary fiber-point-cutting condition.
bool cutting_capacity(const ScrollType& st, i64 a, const std::vector<i64>& b_list,
                      const std::set<int>& kill, i64 need);

// Documentation-level pretty printer: P_m(t,u) Z1^{i1}...Zd^{id} + ...
std::string pretty(const MonomialBasis& mb);

}  // namespace k3s
