#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3scroll/lattice.hpp"
#include "k3scroll/lattice_io.hpp"

namespace k3s {

// A polarized K3 configuration: lattice, nef polarization L, and the sign
// convention for degree-zero roots (the named Gamma classes are the declared
// effective ones). Immutable; the irreducible effective root list is
// computed once at construction.
class K3Config {
 public:
  static K3Config create(LatticeFile lf, i64 search_degree_bound = 0);

  const LatticePtr& lattice() const { return lat_; }
  const DivisorClass& L() const { return L_; }
  i64 genus() const { return self_intersection(L_) / 2 + 1; }
  i64 degree_bound() const { return bound_; }
  const LatticeFile& file() const { return file_; }

  // irreducible effective (-2)-classes with 0 <= Gamma.L <= degree bound
  const std::vector<DivisorClass>& roots() const { return roots_; }
  // the ones contracted by L (Gamma.L = 0)
  std::vector<DivisorClass> contracted_roots() const;

 private:
  K3Config() = default;
  LatticeFile file_;
  LatticePtr lat_;
  DivisorClass L_;
  i64 bound_ = 0;
  std::vector<DivisorClass> roots_;
};

struct H0Verdict {
  std::optional<i64> value;             // h^0, or nullopt when undecided
  std::optional<i64> h1;                // h^1 when determined
  std::vector<DivisorClass> reduction_trace;  // subtracted fixed roots

  bool decided() const { return value.has_value(); }
  i64 v() const { return value.value(); }
};

// All irreducible effective (-2)-classes of L-degree at most the bound:
// positive-degree roots are effective by Riemann-Roch; degree-zero roots are
// oriented by the declared Gamma cone; reducible ones (sums of two kept
// classes) are filtered out level by level.
std::vector<DivisorClass> effective_roots(const K3Config& cfg);

// Reflects d into the nef chamber. Requires d^2 > 0; the orientation is
// fixed by d.L > 0.
DivisorClass make_nef(const K3Config& cfg, const DivisorClass& d,
                      int budget = 10000);

bool is_nef(const K3Config& cfg, const DivisorClass& d);

// Base point freeness test: for d^2 > 0 checks for an effective isotropic E
// with E.d = 1; for d^2 = 0 checks that d is a multiple of a primitive
// isotropic effective class.
bool is_base_point_free(const K3Config& cfg, const DivisorClass& d);

// h^0 by fixed-root stripping. Subtracting an irreducible effective root G
// with G.d < 0 never changes h^0, so the loop reduces d until the value is
// forced: 0 when the reduced square is negative, chi for nef-and-big, k+1
// for k times a primitive isotropic class. Undecided only when the degree
// bound was too small to enumerate a relevant root.
H0Verdict h0(const K3Config& cfg, const DivisorClass& d);

i64 h0_value(const K3Config& cfg, const DivisorClass& d);  // throws Abstained if undecided

}  // namespace k3s
