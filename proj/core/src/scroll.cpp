#include "k3scroll/scroll.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "k3scroll/errors.hpp"

namespace k3s {

ScrollType::ScrollType(IVec entries) : e(std::move(entries)) {
  for (size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i] < e[i + 1]) throw Error("scroll type must be non-increasing");
  for (i64 v : e)
    if (v < 0) throw Error("scroll type entries must be non-negative");
}

i64 ScrollType::deg() const { return std::accumulate(e.begin(), e.end(), i64(0)); }

int ScrollType::zero_count() const {
  return static_cast<int>(std::count(e.begin(), e.end(), i64(0)));
}

bool ScrollType::maximally_balanced() const {
  return e.empty() || e.front() - e.back() <= 1;
}

std::string ScrollType::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) os << ",";
    os << e[i];
  }
  os << ")";
  return os.str();
}

ScrollType ScrollType::parse(const std::string& s) {
  IVec v;
  i64 cur = 0;
  bool have = false, neg = false;
  for (char ch : s) {
    if (ch == '-') {
      neg = true;
    } else if (ch >= '0' && ch <= '9') {
      cur = cur * 10 + (ch - '0');
      have = true;
    } else if (ch == ',' || ch == ')') {
      if (have) v.push_back(neg ? -cur : cur);
      cur = 0;
      have = neg = false;
    }
  }
  if (have) v.push_back(neg ? -cur : cur);
  if (v.empty()) throw ParseError("empty scroll type: " + s);
  return ScrollType(v);
}

ScrollDivisor ScrollDivisor::in_frame(Frame target) const {
  if (frame == target) return *this;
  if (frame == Frame::H0_on_T0 && target == Frame::H_on_T0)
    return {a, a + b, target};  // aH0 + bF = a(H + F) + bF
  if (frame == Frame::H_on_T0 && target == Frame::H0_on_T0)
    return {a, b - a, target};
  throw Error("unsupported frame conversion");
}

std::string ScrollDivisor::str() const {
  std::ostringstream os;
  const char* h = (frame == Frame::H0_on_T0) ? "H0" : "H";
  os << a << h;
  if (b > 0) os << "+" << b << "F";
  if (b < 0) os << b << "F";
  return os.str();
}

ScrollType scroll_type(const std::vector<i64>& d_seq) {
  if (d_seq.empty()) throw EmptyInvariants();
  const i64 d0 = d_seq[0];
  for (size_t j = 1; j + 1 < d_seq.size(); ++j)
    if (d_seq[j] < d_seq[j + 1]) throw MonotonicityViolation();
  IVec e;
  for (i64 i = 1; i <= d0; ++i) {
    i64 cnt = 0;
    for (i64 dj : d_seq)
      if (dj >= i) ++cnt;
    e.push_back(cnt - 1);
  }
  return ScrollType(e);
}

ScrollNumerics scroll_numerics(const ScrollType& st, i64 g, i64 c, i64 Dsq) {
  if (Dsq % 2 != 0) throw NumericsMismatch("odd D^2");
  ScrollNumerics out;
  out.dim = c + 2 + Dsq / 2;
  out.deg = g - c - 1 - Dsq / 2;
  if (out.dim + out.deg != g + 1) throw NumericsMismatch("dim + deg != g + 1");
  if (st.dim() != out.dim) throw NumericsMismatch("type dimension mismatch");
  if (st.deg() != out.deg) throw NumericsMismatch("type degree mismatch");
  return out;
}

ScrollType t0_type(const ScrollType& st) {
  IVec e = st.e;
  for (auto& v : e) v += 1;
  return ScrollType(e);
}

namespace {

template <typename F>
void for_multi_indices(int d, i64 a, IVec& idx, int pos, F&& f) {
  if (pos == d - 1) {
    idx[pos] = a;
    f(idx);
    return;
  }
  for (i64 v = 0; v <= a; ++v) {
    idx[pos] = v;
    for_multi_indices(d, a - v, idx, pos + 1, f);
  }
}

}  // namespace

i64 h0_scroll(const ScrollType& st, i64 a, i64 b) {
  if (a < 0) return 0;
  const int d = st.dim();
  i64 total = 0;
  IVec idx(d, 0);
  for_multi_indices(d, a, idx, 0, [&](const IVec& alpha) {
    i64 m = b + 1;
    for (int i = 0; i < d; ++i) m += alpha[i] * st.e[i];
    if (m > 0) total += m;
  });
  return total;
}

i64 h1_scroll(const ScrollType& st, i64 a, i64 b) {
  if (a < 0) return 0;
  const int d = st.dim();
  i64 total = 0;
  IVec idx(d, 0);
  for_multi_indices(d, a, idx, 0, [&](const IVec& alpha) {
    i64 m = b;
    for (int i = 0; i < d; ++i) m += alpha[i] * st.e[i];
    if (-m - 1 > 0) total += -m - 1;
  });
  return total;
}

ChowClass chow_class_blowup(i64 c, i64 Dsq, i64 g) {
  return {Dsq + c + 2, c - c * g - Dsq * (g - 1)};
}

ChowClass chow_class_model(i64 c, i64 Dsq, i64 g, i64 d) {
  return {Dsq + c + 2, Dsq * (d - 1 - g) - 4 - c * g - c + c * d + 2 * d};
}

}  // namespace k3s
