#pragma once

#include <stdexcept>
#include <string>

namespace qracah {

// Every failure the library reports derives from Error so callers (the CLI in
// particular) can turn it into a diagnostic plus nonzero exit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define QRACAH_ERROR(Name)                                                \
  class Name : public Error {                                             \
   public:                                                                \
    using Error::Error;                                                   \
    const char* kind() const noexcept override { return #Name; }          \
  };

QRACAH_ERROR(DivisionByZero)
QRACAH_ERROR(BackendMismatch)
QRACAH_ERROR(ZeroDenominator)
QRACAH_ERROR(HigherOrderPole)
QRACAH_ERROR(EvaluationAtPole)
QRACAH_ERROR(CancellationFailure)
QRACAH_ERROR(InvalidParams)
QRACAH_ERROR(ZeroArgument)
QRACAH_ERROR(NoCaseApplies)
QRACAH_ERROR(DegenerateWeight)
QRACAH_ERROR(IndexOutOfRange)
QRACAH_ERROR(NonConvergent)
QRACAH_ERROR(TooLarge)
QRACAH_ERROR(SingularOperator)
QRACAH_ERROR(DegenerateJump)
QRACAH_ERROR(InvariantViolation)
QRACAH_ERROR(RankFailure)
QRACAH_ERROR(NoSolution)
QRACAH_ERROR(ZeroDeterminant)
QRACAH_ERROR(DegenerateB21)
QRACAH_ERROR(InvolutionFixedPoint)
QRACAH_ERROR(BasePointHit)
QRACAH_ERROR(IndeterminateStep)
QRACAH_ERROR(NonDiagonalLimit)
QRACAH_ERROR(UnknownToken)
QRACAH_ERROR(InvalidKappa)
QRACAH_ERROR(ParseError)

#undef QRACAH_ERROR

}  // namespace qracah
