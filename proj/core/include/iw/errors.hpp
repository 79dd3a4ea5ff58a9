#pragma once

#include <stdexcept>
#include <string>

namespace iw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define IW_ERROR(Name)                          \
    struct Name : Error {                       \
        explicit Name(const std::string& what)  \
            : Error(#Name ": " + what) {}       \
    }

IW_ERROR(NotPrime);
IW_ERROR(ValuationOfZero);
IW_ERROR(UnsupportedField);
IW_ERROR(DivisionByZero);
IW_ERROR(InsufficientTruncation);
IW_ERROR(InexactOperation);
IW_ERROR(ShiftOutOfDisk);
IW_ERROR(NotDistinguished);
IW_ERROR(IntervalUndecided);
IW_ERROR(WindowTooNarrow);
IW_ERROR(InsufficientLevels);
IW_ERROR(IncompatibleSystem);
IW_ERROR(InvalidLevel);
IW_ERROR(NotAdditive);
IW_ERROR(PoleCase);
IW_ERROR(ParityMismatch);
IW_ERROR(InvalidCharacter);
IW_ERROR(ParseError);
IW_ERROR(IncompatibleShapes);
IW_ERROR(EvalOutOfDisk);
IW_ERROR(ZeroSeries);
IW_ERROR(InexactValuation);
IW_ERROR(ZeroDivisor);
IW_ERROR(NonconvergentPrecision);
IW_ERROR(LevelMismatch);
IW_ERROR(UnsupportedConstantTerm);

#undef IW_ERROR

// Raised by lift_components when the theta bound fails.
struct HypothesisFailed : Error {
    HypothesisFailed(std::string lvl, std::string j, const std::string& what)
        : Error("HypothesisFailed: " + what), level(std::move(lvl)), index(std::move(j)) {}
    std::string level;
    std::string index;
};

}  // namespace iw
