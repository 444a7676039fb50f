#pragma once

#include <stdexcept>
#include <string>

namespace padicg {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DenominatorDivisibleByP : Error { using Error::Error; };
struct NoLiftInWindow : Error { using Error::Error; };
struct PrecisionExceedsTable : Error { using Error::Error; };
struct PrecisionOverflow : Error { using Error::Error; };
struct MixedRings : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NonRationalResult : Error { using Error::Error; };
struct SingularCurve : Error { using Error::Error; };
struct ExcludedJInvariant : Error { using Error::Error; };
struct WrongCongruenceClass : Error { using Error::Error; };
struct EvenPrime : Error { using Error::Error; };
struct BadParameterDenominator : Error { using Error::Error; };
struct ZeroU : Error { using Error::Error; };
struct IndexBeyondTruncation : Error { using Error::Error; };

} // namespace padicg
