#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charcount {

enum class Errc {
    NotPrime,
    ReducibleModulus,
    FieldTooLarge,
    DivisionByZero,
    LogOfZero,
    ZeroArgument,
    SyntaxError,
    VariableOutOfRange,
    NegativeExponent,
    EmptyPolynomial,
    NonHomogeneousInput,
    DivisibilityViolation,
    IntegralityViolation,
    KernelTooLarge,
    EnumerationTooLarge,
    UnknownVariety,
    InvalidArgument,
};

/// Library-wide exception carrying a machine-checkable error code.
/// SyntaxError additionally reports the byte offset of the offending token.
class Error : public std::runtime_error {
public:
    static constexpr std::size_t no_position = static_cast<std::size_t>(-1);

    Error(Errc code, const std::string& message, std::size_t position = no_position)
        : std::runtime_error(message), code_(code), position_(position) {}

    Errc code() const noexcept { return code_; }
    std::size_t position() const noexcept { return position_; }

private:
    Errc code_;
    std::size_t position_;
};

} // namespace charcount
