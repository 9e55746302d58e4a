#pragma once

#include <stdexcept>
#include <string>

namespace fpoisson {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input exceeds an enumeration or size ceiling.
class SizeLimitError : public Error {
public:
    explicit SizeLimitError(const std::string& msg) : Error(msg) {}
};

// Structurally invalid input (bad partition, loop edge, dimension mismatch, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A sequence argument is too short for the requested order.
class ArityError : public Error {
public:
    explicit ArityError(const std::string& msg) : Error(msg) {}
};

// A stated precondition does not hold for the given arguments.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Configuration that the library cannot honor (e.g. basis ensemble at lambda != 1).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Numerical backend failure (eigensolver did not converge, non-finite values, ...).
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

// Too many Monte Carlo trials aborted for the run to be trustworthy.
class ExperimentError : public Error {
public:
    explicit ExperimentError(const std::string& msg) : Error(msg) {}
};

// An ensemble failed the hypothesis gate; carries the measured diagnostic.
class HypothesisError : public Error {
public:
    explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

} // namespace fpoisson
