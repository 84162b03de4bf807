#pragma once

#include <stdexcept>
#include <string>

namespace mxr {

/// Base class of all domain errors thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define MXR_DEFINE_ERROR(Name)                                         \
  class Name : public Error {                                          \
  public:                                                              \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

MXR_DEFINE_ERROR(DivergentAtZero);
MXR_DEFINE_ERROR(DivergentTail);
MXR_DEFINE_ERROR(NonPositivePoint);
MXR_DEFINE_ERROR(InsufficientSmoothness);
MXR_DEFINE_ERROR(ExistenceViolation);
MXR_DEFINE_ERROR(ForbiddenOrder);
MXR_DEFINE_ERROR(OrderOutOfRange);
MXR_DEFINE_ERROR(OutOfRangeLambda);
MXR_DEFINE_ERROR(DimsViolation);
MXR_DEFINE_ERROR(BudgetExhausted);
MXR_DEFINE_ERROR(OddField);
MXR_DEFINE_ERROR(ExtrapolationDiverged);
MXR_DEFINE_ERROR(PoleSingularity);
MXR_DEFINE_ERROR(EquatorSingularity);
MXR_DEFINE_ERROR(ClassViolation);
MXR_DEFINE_ERROR(InterpolationGap);
MXR_DEFINE_ERROR(IoError);
MXR_DEFINE_ERROR(UsageError);

#undef MXR_DEFINE_ERROR

}  // namespace mxr
