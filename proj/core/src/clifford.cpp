#include "k3scroll/clifford.hpp"

#include <algorithm>
#include <sstream>

namespace k3s {

std::string tag_str(CaseTag t, i64 c, i64 Dsq) {
  std::ostringstream os;
  switch (t) {
    case CaseTag::BNGeneral: return "BN-general";
    case CaseTag::Plain: os << "{" << c << "," << Dsq << "}"; return os.str();
    case CaseTag::Q: return "(Q)";
    case CaseTag::E0: return "(E0)";
    case CaseTag::E1: return "(E1)";
    case CaseTag::E2: return "(E2)";
    case CaseTag::E3: return "(E3)";
    case CaseTag::E4: return "(E4)";
    case CaseTag::VarA: os << "{" << c << "," << Dsq << "}a"; return os.str();
    case CaseTag::VarB: os << "{" << c << "," << Dsq << "}b"; return os.str();
    case CaseTag::VarC: os << "{" << c << "," << Dsq << "}c"; return os.str();
    case CaseTag::CG1: return "CG1";
    case CaseTag::CG2: return "CG2";
    case CaseTag::CG3: return "CG3";
    case CaseTag::CG4: return "CG4";
    case CaseTag::CG5: return "CG5";
    case CaseTag::CG6: return "CG6";
    case CaseTag::CG7: return "CG7";
    case CaseTag::CG1p: return "CG1'";
    case CaseTag::CG2p: return "CG2'";
    case CaseTag::CG3p: return "CG3'";
    case CaseTag::CG4p: return "CG4'";
  }
  return "?";
}

namespace {

// all candidates x with h^0(x) >= 2 and h^0(L-x) >= 2, within the bounds
// forced by the minimizer constraints
std::vector<DivisorClass> pencil_candidates(const K3Config& cfg, i64 max_square) {
  const i64 L2 = self_intersection(cfg.L());
  std::vector<DivisorClass> out;
  for (i64 s = -2; s <= max_square; s += 2) {
    auto xs = enumerate_classes(cfg.lattice(), cfg.L(), s, 1, L2 / 2);
    for (const auto& x : xs) {
      const auto hx = h0(cfg, x);
      if (!hx.decided()) throw AbstainedCandidate("h0 undecided for " + x.str());
      if (hx.v() < 2) continue;
      const auto hy = h0(cfg, cfg.L() - x);
      if (!hy.decided()) throw AbstainedCandidate("h0 undecided for " + (cfg.L() - x).str());
      if (hy.v() < 2) continue;
      out.push_back(x);
    }
  }
  return out;
}

i64 cliff_value(const K3Config& cfg, const DivisorClass& x) {
  return intersect(x, cfg.L()) - self_intersection(x) - 2;
}

}  // namespace

CliffordData clifford_index(const K3Config& cfg,
                            const std::optional<DivisorClass>& declared) {
  CliffordData cd;
  cd.g = cfg.genus();
  const i64 c_upper = (cd.g - 1) / 2;
  if (self_intersection(cfg.L()) < 4) throw Error("needs L^2 >= 4");
  if (!is_base_point_free(cfg, cfg.L()))
    throw PolarizationNotNef("polarization is not base point free");

  auto cands = pencil_candidates(cfg, c_upper + 2);
  if (cands.empty()) {
    cd.c = c_upper;
    cd.clifford_general = true;
    cd.tag = CaseTag::BNGeneral;
    return cd;
  }
  i64 mu = cliff_value(cfg, cands.front());
  for (const auto& x : cands) mu = std::min(mu, cliff_value(cfg, x));
  cd.mu = mu;
  cd.c = std::min(mu, c_upper);
  cd.clifford_general = cd.c == c_upper;

  for (const auto& x : cands)
    if (cliff_value(cfg, x) == mu) cd.minimizers.push_back(x);

  // order: (C2) is built into the degree bound; prefer free divisors, then
  // ones not contained in a larger free minimizer, then smallest square
  std::vector<DivisorClass> free;
  for (const auto& x : cd.minimizers)
    if (is_nef(cfg, x) && is_base_point_free(cfg, x)) free.push_back(x);
  std::sort(free.begin(), free.end(), [&](const DivisorClass& a, const DivisorClass& b) {
    const i64 sa = self_intersection(a), sb = self_intersection(b);
    if (sa != sb) return sa < sb;
    const i64 da = intersect(a, cfg.L()), db = intersect(b, cfg.L());
    if (da != db) return da < db;
    return a.coords < b.coords;
  });

  if (declared) {
    const bool is_min =
        std::find(cd.minimizers.begin(), cd.minimizers.end(), *declared) != cd.minimizers.end();
    if (!(cd.clifford_general ? cliff_value(cfg, *declared) == cd.c : is_min))
      throw CaseConflict("declared divisor does not compute the Clifford index");
    cd.D = *declared;
  } else if (!free.empty() && !cd.clifford_general) {
    // maximality preference: drop candidates strictly contained in another
    // free minimizer when possible
    std::vector<DivisorClass> maximal;
    for (const auto& x : free) {
      bool contained = false;
      for (const auto& y : free) {
        if (x == y) continue;
        auto diff = h0(cfg, y - x);
        if (diff.decided() && diff.v() >= 1) contained = true;
      }
      if (!contained) maximal.push_back(x);
    }
    cd.D = maximal.empty() ? free.front() : maximal.front();
  } else if (!free.empty()) {
    cd.D = free.front();
  }
  if (cd.D) cd.Dsq = self_intersection(*cd.D);
  return cd;
}

namespace {

// fixed part of |F| as an explicit root multiset
std::vector<DivisorClass> fixed_roots(const K3Config& cfg, const DivisorClass& F) {
  std::vector<DivisorClass> out;
  DivisorClass cur = F;
  for (;;) {
    const DivisorClass* pick = nullptr;
    for (const auto& g : cfg.roots()) {
      if (intersect(g, cur) >= 0) continue;
      if (!pick || intersect(g, cfg.L()) < intersect(*pick, cfg.L()) ||
          (intersect(g, cfg.L()) == intersect(*pick, cfg.L()) && g.coords < pick->coords))
        pick = &g;
    }
    if (!pick) return out;
    out.push_back(*pick);
    cur = cur - *pick;
  }
}

DivisorClass sum_of(const K3Config& cfg, const std::vector<DivisorClass>& v) {
  DivisorClass s(cfg.lattice(), IVec(cfg.lattice()->rank(), 0));
  for (const auto& x : v) s = s + x;
  return s;
}

}  // namespace

CliffordData tag_case(const K3Config& cfg, CliffordData cd) {
  const i64 g = cd.g;
  const i64 c = cd.c;

  if (cd.clifford_general) {
    if (bn_general(cfg)) {
      cd.tag = CaseTag::BNGeneral;
      return cd;
    }
    if (!cd.D) throw CaseConflict("no divisor witnessing non-BN-generality");
  }
  if (!cd.D) throw CaseConflict("no Clifford divisor chosen");
  const DivisorClass& D = *cd.D;
  const DivisorClass R = cfg.L() - D * 2;
  const DivisorClass F = cfg.L() - D;

  {
    const auto hR = h0(cfg, R);
    if (!hR.decided() || !hR.h1) throw Abstained("h0(L-2D) undecided");
    cd.h0R = hR.v();
    cd.h1R = *hR.h1;
  }

  // contracted roots meeting D
  for (const auto& gma : cfg.contracted_roots())
    if (intersect(gma, D) > 0) {
      if (intersect(gma, D) != 1)
        throw CaseConflict("contracted curve meets the Clifford divisor twice");
      cd.R_LD.push_back(gma);
    }

  if (cd.h0R > 0) {
    cd.fixed_part = fixed_roots(cfg, F);
    const DivisorClass F0 = F - sum_of(cfg, cd.fixed_part);
    cd.A = F0 - D;
    // reduction: move roots of the fixed part pairing positively with the
    // moving complement across, one at a time
    std::vector<DivisorClass> delta = cd.fixed_part;
    DivisorClass aprime = *cd.A;
    for (;;) {
      bool moved = false;
      for (auto it = delta.begin(); it != delta.end(); ++it) {
        const i64 p = intersect(*it, aprime);
        if (p > 0) {
          if (p != 1 || intersect(*it, D) != 0)
            throw CaseConflict("reduction step out of range");
          aprime = aprime + *it;
          delta.erase(it);
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    cd.delta_prime = delta;
    cd.A_prime = aprime;
    cd.delta_dot_D = intersect(sum_of(cfg, delta), D);
    cd.aux.emplace("A", *cd.A);
    cd.aux.emplace("Aprime", aprime);

    // matrix identity between (A, Delta) and (A', Delta')
    const DivisorClass dsum = sum_of(cfg, cd.fixed_part);
    const DivisorClass dsum2 = sum_of(cfg, delta);
    const DivisorClass& A = *cd.A;
    const bool same =
        intersect(D, A) == intersect(D, aprime) && intersect(D, dsum) == intersect(D, dsum2) &&
        self_intersection(A) == self_intersection(aprime) &&
        intersect(A, dsum) == intersect(aprime, dsum2) &&
        self_intersection(dsum) == self_intersection(dsum2);
    if (!same) throw CaseConflict("reduced decomposition changes the intersection data");
  } else {
    cd.delta_dot_D = 0;  // empty fixed part
  }

  // perfectness certificate: h^1(L-2D) = Delta'.D (+ the shifted identity in
  // the exceptional shapes) with h^1(A') = 0
  i64 h1A = 0;
  if (cd.A_prime && !cd.A_prime->is_zero()) {
    const auto hA = h0(cfg, *cd.A_prime);
    if (hA.decided() && hA.h1)
      h1A = *hA.h1;
    else
      h1A = -1;
  }

  if (cd.clifford_general) {
    // Clifford general, not BN general: the scroll cases
    const bool small_R = cd.h0R == 0;
    const int r = static_cast<int>(cd.R_LD.size());
    if (g == 8) {
      if (small_R)
        cd.tag = r == 0 ? CaseTag::CG1 : CaseTag::CG2;
      else if (r == 3)
        cd.tag = CaseTag::CG3;
      else if (r == 2)
        cd.tag = CaseTag::CG4;
      else {
        // single contracted chain: depth tells the three deep cases apart
        const size_t mult = cd.delta_prime.size();
        cd.tag = mult <= 9 ? CaseTag::CG5 : (mult <= 15 ? CaseTag::CG6 : CaseTag::CG7);
      }
    } else {
      if (small_R)
        cd.tag = r == 0 ? CaseTag::CG1p : CaseTag::CG2p;
      else
        cd.tag = r == 2 ? CaseTag::CG3p : CaseTag::CG4p;
    }
    return cd;
  }

  const i64 Dsq = cd.Dsq;
  if (Dsq == c + 2) {
    cd.tag = CaseTag::Q;
    if (!(cfg.L() - D * 2).is_zero()) throw CaseConflict("expected L ~ 2D");
  } else if (Dsq == c + 1) {
    cd.tag = CaseTag::E0;
    if (self_intersection(cfg.L()) != 4 * c + 6) throw CaseConflict("expected L^2 = 4c + 6");
  } else if (Dsq == c && cd.A_prime && cd.A_prime->is_zero() && cd.h1R == 1) {
    cd.tag = cd.R_LD.size() == 2 ? CaseTag::E1 : CaseTag::E2;
  } else if (cd.h1R == 0) {
    cd.tag = CaseTag::Plain;
  } else if (cd.h1R == 1) {
    cd.tag = CaseTag::VarA;
  } else if (cd.h1R == 2) {
    cd.tag = cd.R_LD.size() == 2 ? CaseTag::VarB : CaseTag::VarC;
  } else {
    throw CaseConflict("unclassified h^1(L-2D)");
  }

  // identity check behind the certificate
  const bool exceptional =
      cd.tag == CaseTag::E0 || cd.tag == CaseTag::E1 || cd.tag == CaseTag::E2;
  const i64 expect = exceptional ? cd.delta_dot_D - 1 : cd.delta_dot_D;
  if (cd.tag == CaseTag::Q)
    cd.perfect = "yes";
  else if (h1A == 0 && cd.h1R == expect + h1A)
    cd.perfect = "yes";
  else if (h1A < 0)
    cd.perfect = "unknown";
  else
    cd.perfect = cd.h1R == expect + h1A ? "yes" : "no";
  return cd;
}

bool bn_general(const K3Config& cfg) {
  const i64 g = cfg.genus();
  const i64 L2 = self_intersection(cfg.L());
  for (i64 s = -2; s <= L2; s += 2) {
    auto xs = enumerate_classes(cfg.lattice(), cfg.L(), s, 1, L2 / 2);
    for (const auto& m : xs) {
      const auto hm = h0(cfg, m);
      if (!hm.decided()) throw Abstained("h0 undecided for " + m.str());
      if (hm.v() < 2) continue;
      const auto hn = h0(cfg, cfg.L() - m);
      if (!hn.decided()) throw Abstained("h0 undecided for " + (cfg.L() - m).str());
      if (hm.v() * hn.v() >= g + 1) return false;
    }
  }
  return true;
}

}  // namespace k3s
