#pragma once

#include <stdexcept>
#include <string>

namespace gkt {

/// Bad input: malformed data, out-of-range parameters, inconsistent shapes.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation requested on a configuration it does not support (e.g. n-d weak primitive).
class Unsupported : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Base for numerical failures (CLI exit code 3).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Linearly dependent / rank-deficient family. `index` is the first failing position (0-based).
class DegeneracyError : public NumericalError {
public:
    DegeneracyError(const std::string& what, std::size_t index)
        : NumericalError(what), index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class ConditioningError : public NumericalError {
public:
    ConditioningError(const std::string& what, double condition)
        : NumericalError(what), condition_(condition) {}
    double condition() const noexcept { return condition_; }

private:
    double condition_;
};

/// A requested function value is undefined (NaN or infinite) at a spectral breakpoint.
class DomainError : public NumericalError {
public:
    DomainError(const std::string& what, double point)
        : NumericalError(what), point_(point) {}
    double point() const noexcept { return point_; }

private:
    double point_;
};

/// The shift lies (numerically) in the spectrum.
class ResolventError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// The spectrum touches zero, so no exponential decay estimate exists.
class SpectralGapError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// An internal invariant that valid inputs can never break.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gkt
