#pragma once

#include <stdexcept>
#include <string>

namespace cblock {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define CBLOCK_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& msg) : Error(msg) {}      \
    }

CBLOCK_DEFINE_ERROR(NotDivisible);
CBLOCK_DEFINE_ERROR(PoleAtZero);
CBLOCK_DEFINE_ERROR(ZeroDenominator);
CBLOCK_DEFINE_ERROR(NotSymmetric);
CBLOCK_DEFINE_ERROR(LevelTooLow);
CBLOCK_DEFINE_ERROR(DuplicateIndex);
CBLOCK_DEFINE_ERROR(NotTensorElement);
CBLOCK_DEFINE_ERROR(NotInvariant);
CBLOCK_DEFINE_ERROR(NotLambdaSymmetric);
CBLOCK_DEFINE_ERROR(InvalidFamily);
CBLOCK_DEFINE_ERROR(InvalidWord);
CBLOCK_DEFINE_ERROR(Inconsistent);
CBLOCK_DEFINE_ERROR(MismatchError);
CBLOCK_DEFINE_ERROR(SpreadZero);
CBLOCK_DEFINE_ERROR(LevelEqualsSpread);
CBLOCK_DEFINE_ERROR(ZeroPolynomial);
CBLOCK_DEFINE_ERROR(ParseError);
CBLOCK_DEFINE_ERROR(UsageError);

#undef CBLOCK_DEFINE_ERROR

} // namespace cblock
