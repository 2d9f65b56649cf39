#pragma once

#include <stdexcept>
#include <string>

namespace sae {

/// A (weighted) design matrix without usable rank.
class SingularDesignError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An objective evaluated to NaN/Inf during a 1-D search; carries the argument.
class NonFiniteObjectiveError : public std::runtime_error {
public:
    NonFiniteObjectiveError(const std::string& what, double at)
        : std::runtime_error(what), at_(at) {}
    double at() const noexcept { return at_; }

private:
    double at_;
};

/// A model fit that cannot produce parameters at all.
class FitFailureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid scenario configuration or malformed input file. `line` is 1-based
/// when the error is anchored to a file line, 0 otherwise.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what, int line = 0)
        : std::runtime_error(what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// A Monte Carlo run that cannot produce a report (e.g. an estimator failed
/// in every replicate).
class SimulationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sae
