#pragma once

#include <stdexcept>
#include <string>

namespace tqm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside a function's domain (poles, bad parameters).
class DomainError : public Error {
public:
    using Error::Error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

// A series did not reach its tolerance within the term budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Matrix or Bell-diagonal triple that is not a valid quantum state.
class InvalidStateError : public Error {
public:
    using Error::Error;
};

// Experiment configuration rejected; message names the offending field.
class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Numerical failure while evaluating a sweep sample at time t.
class NumericalError : public Error {
public:
    NumericalError(double t, const std::string& what)
        : Error("t=" + std::to_string(t) + ": " + what), t_(t) {}

    double time() const noexcept { return t_; }

private:
    double t_;
};

}  // namespace tqm
