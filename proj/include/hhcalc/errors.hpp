#pragma once

#include <stdexcept>
#include <string>

namespace hhcalc {

/* Domain-level failures. Everything deriving from ComputationError maps to
 * CLI exit code 1; SchemaError (malformed input documents) maps to exit
 * code 2 together with plain usage errors. */

class ComputationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A dimension bookkeeping step would force a negative dimension, i.e. the
// claimed decomposition cannot exist.
class NegativeDimensionError : public ComputationError {
public:
    explicit NegativeDimensionError(int degree, const std::string& context = "")
        : ComputationError("negative dimension forced at degree " + std::to_string(degree) +
                           (context.empty() ? "" : ": " + context)),
          degree_(degree) {}

    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

// Structurally invalid variety description (nonpositive weights, d <= w_i, ...).
class InvalidSpecError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

// Inputs are well-formed but outside the regime where the formula applies.
class NotApplicableError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

// Interval propagation found a degree admitting no assignment.
class InconsistentError : public ComputationError {
public:
    explicit InconsistentError(int degree)
        : ComputationError("no consistent assignment exists at degree " + std::to_string(degree)),
          degree_(degree) {}

    int degree() const noexcept { return degree_; }

private:
    int degree_;
};

class MalformedSummandError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class MalformedDatumError : public ComputationError {
public:
    using ComputationError::ComputationError;
};

class UnknownScenarioError : public ComputationError {
public:
    explicit UnknownScenarioError(const std::string& name)
        : ComputationError("unknown scenario \"" + name + "\"") {}
};

// Malformed input document. `path` is a JSON-pointer-ish locator ("$.dims.-2").
class SchemaError : public std::runtime_error {
public:
    SchemaError(std::string path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

} // namespace hhcalc
