#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ritt {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define RITT_DEFINE_ERROR(Name)              \
    class Name : public Error {              \
    public:                                  \
        using Error::Error;                  \
    };

RITT_DEFINE_ERROR(PreconditionError)
RITT_DEFINE_ERROR(ConstantInput)
RITT_DEFINE_ERROR(ZeroDenominator)
RITT_DEFINE_ERROR(DegreeError)
RITT_DEFINE_ERROR(LengthDisagreement)
RITT_DEFINE_ERROR(MoveNotApplicable)
RITT_DEFINE_ERROR(BudgetExhausted)
RITT_DEFINE_ERROR(DomainError)
RITT_DEFINE_ERROR(UnvalidatedWeights)
RITT_DEFINE_ERROR(SampleMismatch)
RITT_DEFINE_ERROR(ZeroWitness)
RITT_DEFINE_ERROR(WitnessDisagreement)
RITT_DEFINE_ERROR(UndecidedMembership)
RITT_DEFINE_ERROR(ConsistencyFailure)
RITT_DEFINE_ERROR(UnknownFixture)
RITT_DEFINE_ERROR(TruncatedGraph)

#undef RITT_DEFINE_ERROR

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace ritt
