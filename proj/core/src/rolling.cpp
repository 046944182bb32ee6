#include "k3scroll/rolling.hpp"

#include <sstream>

#include "k3scroll/errors.hpp"

namespace k3s {

i64 MonomialBasis::slots() const {
  i64 s = 0;
  for (const auto& m : monomials) s += m.coeff_degree + 1;
  return s;
}

namespace {

void gen(const ScrollType& st, i64 a, i64 b, IVec& idx, int pos, i64 rest,
         std::vector<Monomial>& out) {
  const int d = st.dim();
  if (pos == d - 1) {
    idx[pos] = rest;
    i64 m = -b;
    for (int i = 0; i < d; ++i) m += idx[i] * st.e[i];
    if (m >= 0) out.push_back({idx, m});
    return;
  }
  for (i64 v = 0; v <= rest; ++v) {
    idx[pos] = v;
    gen(st, a, b, idx, pos + 1, rest - v, out);
  }
}

}  // namespace

MonomialBasis basis(const ScrollType& st, i64 a, i64 b) {
  MonomialBasis mb{st, a, b, {}};
  if (a < 0) return mb;
  IVec idx(st.dim(), 0);
  gen(st, a, b, idx, 0, a, mb.monomials);
  return mb;
}

bool forced_factor(const ScrollType& st, i64 a, i64 b, const std::set<int>& vars) {
  if (vars.empty()) throw Error("forced_factor needs a nonempty variable set");
  const auto mb = basis(st, a, b);
  // vacuous when no sections exist; keeps the predicate monotone in b
  for (const auto& m : mb.monomials) {
    bool touched = false;
    for (int k : vars)
      if (m.idx[k - 1] > 0) {
        touched = true;
        break;
      }
    if (!touched) return false;
  }
  return true;
}

MonomialBasis restrict_subscroll(const MonomialBasis& mb, const std::set<int>& kill) {
  MonomialBasis out{mb.st, mb.a, mb.b, {}};
  for (const auto& m : mb.monomials) {
    bool keep = true;
    for (int k : kill)
      if (m.idx[k - 1] != 0) {
        keep = false;
        break;
      }
    if (keep) out.monomials.push_back(m);
  }
  return out;
}

bool cutting_capacity(const ScrollType& st, i64 a, const std::vector<i64>& b_list,
                      const std::set<int>& kill, i64 need) {
  for (int i = 1; i <= st.dim(); ++i)
    if (!kill.count(i) && st.e[i - 1] != 1)
      throw UnsupportedSubscroll("restricted subscroll must have type (1,...,1)");
  i64 count = 0;
  for (i64 b : b_list)
    if (!restrict_subscroll(basis(st, a, b), kill).empty()) ++count;
  return count >= need;
}

std::string pretty(const MonomialBasis& mb) {
  std::ostringstream os;
  bool first = true;
  for (const auto& m : mb.monomials) {
    if (!first) os << " + ";
    first = false;
    os << "P_" << m.coeff_degree << "(t,u)";
    for (size_t i = 0; i < m.idx.size(); ++i) {
      if (m.idx[i] == 0) continue;
      os << " Z" << (i + 1);
      if (m.idx[i] > 1) os << "^" << m.idx[i];
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace k3s
