#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A Gaussian exp(-S x^2 / 2) with Re(S) <= 0 has no finite norm.
class NonNormalizableError : public Error {
public:
    using Error::Error;
};

/// alpha or beta vanished where their ratio is required.
class DegenerateCoefficientsError : public Error {
public:
    using Error::Error;
};

class GridError : public Error {
public:
    using Error::Error;
};

/// Fock truncation left too much weight in the highest retained levels.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what, double tail_mass)
        : Error(what), tail_mass_(tail_mass) {}
    double tail_mass() const noexcept { return tail_mass_; }

private:
    double tail_mass_;
};

/// The sampled state has not decayed at the edges of its grid.
class BoundaryDecayError : public Error {
public:
    using Error::Error;
};

class SingularTransformError : public Error {
public:
    using Error::Error;
};

/// A matrix handed to the symplectic module does not have unit determinant.
class InvariantViolationError : public Error {
public:
    using Error::Error;
};

} // namespace sqz
