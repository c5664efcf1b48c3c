#ifndef AFFPRYM_ERROR_HPP
#define AFFPRYM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace affprym {

/// Domain error with a stable machine-readable code, mapped to
/// {"error":{"code","message"}} by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

namespace errc {
inline constexpr const char* NotPrime = "NotPrime";
inline constexpr const char* BoundExceeded = "BoundExceeded";
inline constexpr const char* ZeroInverse = "ZeroInverse";
inline constexpr const char* LogOfZero = "LogOfZero";
inline constexpr const char* MixedModuli = "MixedModuli";
inline constexpr const char* NotADivisor = "NotADivisor";
inline constexpr const char* InadmissibleType = "InadmissibleType";
inline constexpr const char* NonIntegerMultiplicity = "NonIntegerMultiplicity";
inline constexpr const char* ParseError = "ParseError";
inline constexpr const char* InvalidPeriod = "InvalidPeriod";
inline constexpr const char* NotACovering = "NotACovering";
inline constexpr const char* NonIntegerDimension = "NonIntegerDimension";
inline constexpr const char* NegativeDimension = "NegativeDimension";
inline constexpr const char* NotNested = "NotNested";
inline constexpr const char* UnrealizableSignature = "UnrealizableSignature";
inline constexpr const char* BudgetExhausted = "BudgetExhausted";
inline constexpr const char* Internal = "Internal";
} // namespace errc

} // namespace affprym

#endif
