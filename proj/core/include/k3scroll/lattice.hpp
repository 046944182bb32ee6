#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "k3scroll/errors.hpp"
#include "k3scroll/ints.hpp"

namespace k3s {

// An even symmetric bilinear form with named basis vectors, modeling the
// Picard lattice of a K3 surface. Immutable after construction.
class Lattice {
 public:
  Lattice(IMat gram, std::vector<std::string> basis_names = {});

  int rank() const { return rank_; }
  const IMat& gram() const { return gram_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }

  bool operator==(const Lattice& o) const { return gram_ == o.gram_; }

 private:
  int rank_;
  IMat gram_;
  std::vector<std::string> basis_names_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

// Integer divisor class, stored as coordinates in a fixed lattice basis.
struct DivisorClass {
  LatticePtr lattice;
  IVec coords;

  DivisorClass() = default;
  DivisorClass(LatticePtr lat, IVec c);

  bool is_zero() const;
  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass operator-() const;
  DivisorClass operator*(i64 k) const;
  bool operator==(const DivisorClass& o) const { return coords == o.coords; }
  bool operator<(const DivisorClass& o) const { return coords < o.coords; }

  std::string str() const;
};

struct Signature {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  bool operator==(const Signature& o) const {
    return positives == o.positives && negatives == o.negatives && zeros == o.zeros;
  }
};

i64 intersect(const DivisorClass& a, const DivisorClass& b);
i64 self_intersection(const DivisorClass& a);

// Exact eigenvalue sign counts: rational LDL^T with symmetric pivoting,
// falling back to Descartes sign counting on the characteristic polynomial
// when every remaining pivot vanishes.
Signature signature(const Lattice& lat);

// True iff the lattice is even of signature (1, rank-1) with rank <= 10,
// i.e. occurs as the Picard lattice of some algebraic K3 surface. Ranks
// above 10 are refused rather than guessed.
bool nikulin_exists(const Lattice& lat);

// Picard-Lefschetz reflection d |-> d + (d.gamma) gamma at a (-2)-class.
DivisorClass reflect(const DivisorClass& d, const DivisorClass& gamma);

// chi(O(d)) = d^2/2 + 2 on a K3 surface.
i64 riemann_roch_chi(const DivisorClass& d);

// All classes x with x^2 = square and deg_min <= x.h <= deg_max, for a big
// height class h. Exact and complete: on each affine slice x.h = t the form
// is negative definite, and the slice is enumerated by recursive descent
// with exact rational bounds. Output sorted by (x.h, coords).
std::vector<DivisorClass> enumerate_classes(const LatticePtr& lat,
                                            const DivisorClass& h, i64 square,
                                            i64 deg_min, i64 deg_max);

// Characteristic polynomial coefficients of the Gram matrix, leading
// coefficient first. Exposed for cross-checks against the LDL^T route.
std::vector<Int> char_poly(const IMat& m);

}  // namespace k3s
