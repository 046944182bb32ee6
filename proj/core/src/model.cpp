#include "k3scroll/model.hpp"

namespace k3s {

std::vector<i64> dual_invariants(const K3Config& cfg, const CliffordData& cd) {
  if (!cd.D) throw AbstainedInvariant("no Clifford divisor");
  const DivisorClass& D = *cd.D;
  const i64 d0 = cd.c + 2 + cd.Dsq / 2;

  std::vector<i64> h0s;  // h^0(L - iD) for i = 0, 1, ...
  for (i64 i = 0;; ++i) {
    const auto v = h0(cfg, cfg.L() - D * i);
    if (!v.decided()) throw AbstainedInvariant("h0(L - iD) undecided");
    h0s.push_back(v.v());
    if (v.v() == 0) break;
  }
  std::vector<i64> d;
  for (size_t i = 0; i + 1 < h0s.size(); ++i) d.push_back(h0s[i] - h0s[i + 1]);
  if (d.empty() || d[0] != d0) throw NumericsMismatch("d_0 != c + 2 + D^2/2");
  for (size_t j = 1; j + 1 < d.size(); ++j)
    if (d[j] < d[j + 1]) throw MonotonicityViolation("dual invariants not non-increasing");
  return d;
}

i64 singular_locus_dim(const K3Config& cfg, const CliffordData& cd) {
  if (!cd.D) throw Abstained("no Clifford divisor");
  const bool twice = (cfg.L() - *cd.D * 2).is_zero();
  const i64 r = twice ? cd.Dsq - 1 : cd.Dsq + cd.h1R;
  if (cd.perfect == "yes") {
    const bool exceptional =
        cd.tag == CaseTag::E0 || cd.tag == CaseTag::E1 || cd.tag == CaseTag::E2;
    const i64 via_delta = twice ? cd.Dsq - 1
                                : (exceptional ? cd.Dsq + cd.delta_dot_D - 1
                                               : cd.Dsq + cd.delta_dot_D);
    if (via_delta != r) throw NumericsMismatch("singular locus formulas disagree");
  }
  return r;
}

ScrollType scroll_of(const K3Config& cfg, const CliffordData& cd) {
  const auto d = dual_invariants(cfg, cd);
  ScrollType st = scroll_type(d);
  scroll_numerics(st, cd.g, cd.c, cd.Dsq);
  const i64 r = singular_locus_dim(cfg, cd);
  if (st.zero_count() != r) throw NumericsMismatch("zero count differs from r");
  return st;
}

}  // namespace k3s
