#pragma once

#include <stdexcept>
#include <string>

namespace cubiclat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CUBICLAT_DEFINE_ERROR(Name)        \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

// exact_linalg
CUBICLAT_DEFINE_ERROR(NonSquareError);
CUBICLAT_DEFINE_ERROR(NotSymmetricError);
CUBICLAT_DEFINE_ERROR(NotPositiveDefiniteError);
CUBICLAT_DEFINE_ERROR(DimensionMismatchError);
CUBICLAT_DEFINE_ERROR(RankDeficientError);

// lattice model
CUBICLAT_DEFINE_ERROR(NonSquareMultiplierError);
CUBICLAT_DEFINE_ERROR(SlotConstraintError);
CUBICLAT_DEFINE_ERROR(InvalidDiscriminantError);
CUBICLAT_DEFINE_ERROR(TupleTooLongError);
CUBICLAT_DEFINE_ERROR(UnknownCaseError);
CUBICLAT_DEFINE_ERROR(ParameterConstraintError);
CUBICLAT_DEFINE_ERROR(UnknownBasisNameError);

// certifier
CUBICLAT_DEFINE_ERROR(TupleInfeasibleError);
CUBICLAT_DEFINE_ERROR(RankExceededError);
CUBICLAT_DEFINE_ERROR(SchemaError);
CUBICLAT_DEFINE_ERROR(InfeasibleError);
CUBICLAT_DEFINE_ERROR(InvalidIncludeError);

#undef CUBICLAT_DEFINE_ERROR

}  // namespace cubiclat
