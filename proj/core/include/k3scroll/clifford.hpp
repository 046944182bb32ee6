#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "k3scroll/cohomology.hpp"

namespace k3s {

enum class CaseTag {
  BNGeneral,      // Clifford general and Brill-Noether general
  Plain,          // {c, D^2} with h^1(L - 2D) = 0
  Q,              // D^2 = c + 2, L ~ 2D
  E0,             // D^2 = c + 1, L ~ 2D + Gamma
  E1,             // D^2 = c, L ~ 2D + Gamma1 + Gamma2
  E2,             // D^2 = c, L ~ 2D + chain configuration
  E3,
  E4,
  VarA,           // {c, D^2}^a: one transversally contracted root
  VarB,           // {c, D^2}^b: two disjoint ones
  VarC,           // {c, D^2}^c: one of multiplicity two
  CG1, CG2, CG3, CG4, CG5, CG6, CG7,
  CG1p, CG2p, CG3p, CG4p,
};

std::string tag_str(CaseTag t, i64 c, i64 Dsq);

struct CliffordData {
  i64 g = 0;
  i64 c = 0;
  std::optional<i64> mu;            // empty when no decomposition exists
  bool clifford_general = false;
  std::optional<DivisorClass> D;    // chosen Clifford divisor
  std::vector<DivisorClass> minimizers;

  CaseTag tag = CaseTag::Plain;
  i64 Dsq = 0;

  // derived bookkeeping (valid when D is set)
  i64 h0R = 0, h1R = 0;                       // cohomology of R = L - 2D
  std::vector<DivisorClass> fixed_part;       // Delta as a root multiset
  std::optional<DivisorClass> A;              // moving complement, F0 = D + A
  std::vector<DivisorClass> delta_prime;      // reduced Delta'
  std::optional<DivisorClass> A_prime;
  std::vector<DivisorClass> R_LD;             // contracted roots meeting D
  i64 delta_dot_D = 0;                        // Delta'.D
  std::string perfect = "unknown";            // "yes" / "no" / "unknown"

  std::map<std::string, DivisorClass> aux;
};

// Clifford index of the polarization: complete minimization of
// x.L - x^2 - 2 over classes with h^0(x) >= 2 and h^0(L - x) >= 2, then
// c = min(mu, floor((g-1)/2)). The chosen D prefers nef base-point-free
// minimizers not contained in larger ones, tie-broken by (D^2, D.L, coords).
// `declared` pins the divisor when the configuration supplies one.
CliffordData clifford_index(const K3Config& cfg,
                            const std::optional<DivisorClass>& declared = std::nullopt);

// Refines the case tag from the lattice: (Q)/(E0)-(E2) shapes, the
// {c, D^2}^{a,b,c} variants via h^1(R) = Delta'.D + h^1(A'), and the
// Clifford-general-but-not-BN-general cases.
CliffordData tag_case(const K3Config& cfg, CliffordData cd);

// True iff no nontrivial effective decomposition L ~ M + N has
// h^0(M) h^0(N) >= g + 1.
bool bn_general(const K3Config& cfg);

}  // namespace k3s
