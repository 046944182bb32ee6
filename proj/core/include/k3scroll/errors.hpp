#pragma once

#include <stdexcept>
#include <string>

namespace k3s {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define K3S_DEFINE_ERROR(Name)                                       \
  struct Name : Error {                                              \
    explicit Name(const std::string& what = #Name) : Error(what) {}  \
  }

K3S_DEFINE_ERROR(LatticeMismatch);
K3S_DEFINE_ERROR(NotARoot);
K3S_DEFINE_ERROR(OddSquare);
K3S_DEFINE_ERROR(HeightNotBig);
K3S_DEFINE_ERROR(PolarizationNotNef);
K3S_DEFINE_ERROR(NotNef);
K3S_DEFINE_ERROR(ReductionBudgetExceeded);
K3S_DEFINE_ERROR(AbstainedCandidate);
K3S_DEFINE_ERROR(Abstained);
K3S_DEFINE_ERROR(CaseConflict);
K3S_DEFINE_ERROR(AbstainedInvariant);
K3S_DEFINE_ERROR(MonotonicityViolation);
K3S_DEFINE_ERROR(EmptyInvariants);
K3S_DEFINE_ERROR(NumericsMismatch);
K3S_DEFINE_ERROR(UnsupportedSubscroll);
K3S_DEFINE_ERROR(BettiIndeterminate);
K3S_DEFINE_ERROR(BettiConflict);
K3S_DEFINE_ERROR(SumIndeterminate);
K3S_DEFINE_ERROR(FilterTooStrong);
K3S_DEFINE_ERROR(SingularityNotADE);
K3S_DEFINE_ERROR(FixtureGap);
K3S_DEFINE_ERROR(ParseError);

#undef K3S_DEFINE_ERROR

}  // namespace k3s
