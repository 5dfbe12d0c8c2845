#ifndef VACQ_ERRORS_HPP
#define VACQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vacq {

/// Invalid physical or numerical parameters (non-finite, wrong sign, ...).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Operation requested outside its supported parameter regime (eta > m, eta = 0
/// where a well is required, ...).
class RegimeError : public std::domain_error {
public:
    explicit RegimeError(const std::string& what) : std::domain_error(what) {}
};

/// Evaluation point outside the region where a formula is defined (|z| >= a/2).
class OutOfRegionError : public std::domain_error {
public:
    explicit OutOfRegionError(const std::string& what) : std::domain_error(what) {}
};

/// Quadrature or extrapolation failed to meet its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// File output failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace vacq

#endif
