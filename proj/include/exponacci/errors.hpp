#pragma once

#include <stdexcept>
#include <string>

namespace exponacci {

/// Base class for all domain violations raised by this library.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveDiscriminant : DomainError {
    explicit NonPositiveDiscriminant(double disc)
        : DomainError("restriction 1 violated: a^2 + 4b = " + std::to_string(disc) +
                      " is not positive (characteristic roots not real and distinct)") {}
};

struct DegenerateExponentialBase : DomainError {
    explicit DegenerateExponentialBase(double residual)
        : DomainError("restriction 2 violated: |d^2 - a*d - b| = " + std::to_string(residual) +
                      " vanishes (exponential base coincides with a characteristic root)") {}
};

struct ZeroB : DomainError {
    ZeroB() : DomainError("b = 0: negative-index values are undefined") {}
};

struct UndefinedNegativePower : DomainError {
    UndefinedNegativePower()
        : DomainError("d = 0 with c != 0: d^n is undefined for negative n") {}
};

struct DegenerateDenominator : DomainError {
    explicit DegenerateDenominator(const std::string& which)
        : DomainError("sum denominator " + which + " vanishes") {}
};

struct NotInwinding : DomainError {
    NotInwinding() : DomainError("operation requires an inwinding sequence (gamma < 1)") {}
};

struct NotOutwinding : DomainError {
    NotOutwinding() : DomainError("operation requires an outwinding sequence (gamma > 1)") {}
};

struct ZeroGamma : DomainError {
    ZeroGamma() : DomainError("dominant magnitude gamma is zero; slopes undefined") {}
};

struct ZeroDenominator : DomainError {
    ZeroDenominator() : DomainError("ellipticity denominator vanishes") {}
};

struct NegativeBase : DomainError {
    explicit NegativeBase(const std::string& what) : DomainError("real power of non-positive base: " + what) {}
};

} // namespace exponacci
