#ifndef PF_ERRORS_HPP
#define PF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pf {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A physical precondition was violated (invalid regime, amplitude bound, ...).
/// The CLI maps these to exit code 3.
class PhysicsError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure failed to reach its requested accuracy.
/// The CLI maps these to exit code 4.
class NumericsError : public Error {
public:
    using Error::Error;
};

/// Bad user-facing configuration (CLI flags, config files). Exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

// -- physics-domain errors ---------------------------------------------------

class InvalidRegime : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class DomainError : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class RegionMismatch : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class AmplitudeTooLarge : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class TimeBeforePreparation : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class NonDecaying : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class NotNormalizable : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class InsufficientSamples : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class OutOfSlit : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class ZeroTime : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class NegativeTime : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

class NonNullAmplitude : public PhysicsError {
public:
    using PhysicsError::PhysicsError;
};

// -- numerics errors ---------------------------------------------------------

/// Adaptive integration ran out of subdivisions. Carries the best estimate
/// and the error bound it reached so callers can decide what to do.
class NonConvergent : public NumericsError {
public:
    NonConvergent(const std::string& what, double best_real, double best_imag,
                  double error_bound)
        : NumericsError(what),
          best_estimate_real(best_real),
          best_estimate_imag(best_imag),
          error_bound(error_bound) {}

    double best_estimate_real;
    double best_estimate_imag;
    double error_bound;
};

} // namespace pf

#endif // PF_ERRORS_HPP
