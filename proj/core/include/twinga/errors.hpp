#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace twinga {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bit strings of the wrong length, empty fields, out-of-range positions.
class InvalidEncoding : public Error {
public:
    using Error::Error;
};

class InvalidBounds : public Error {
public:
    using Error::Error;
};

/// Operation requested on a population that cannot support it (empty, too small).
class InvalidState : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// f_max' exceeded f_max when feeding the twin-probability controller.
class InvalidRanking : public Error {
public:
    using Error::Error;
};

/// Configuration rejected by validation. Maps to CLI exit status 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

class ExportError : public Error {
public:
    using Error::Error;
};

/// Failure inside one trial of a multi-trial run.
class TrialError : public Error {
public:
    TrialError(int trial_index, const std::string& what)
        : Error("trial " + std::to_string(trial_index) + ": " + what), trial_index_(trial_index) {}

    int trial_index() const noexcept { return trial_index_; }

private:
    int trial_index_;
};

/// Objective evaluated to NaN or infinity. Carries the decoded point.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& what, std::vector<double> variables)
        : Error(what), variables_(std::move(variables)) {}

    const std::vector<double>& variables() const noexcept { return variables_; }

private:
    std::vector<double> variables_;
};

}  // namespace twinga
