#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace liftspace {

// Base for all library errors. `name()` is the stable error-class identifier
// used by the CLI to select exit codes and by tests to match error kinds.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& message)
        : Error("DimensionMismatch", message) {}
};

class ZeroVectorDyad : public Error {
public:
    explicit ZeroVectorDyad(const std::string& message)
        : Error("ZeroVectorDyad", message) {}
};

class ZeroState : public Error {
public:
    explicit ZeroState(const std::string& message) : Error("ZeroState", message) {}
};

class FamilyTooLarge : public Error {
public:
    explicit FamilyTooLarge(const std::string& message)
        : Error("FamilyTooLarge", message) {}
};

class ArityMismatch : public Error {
public:
    explicit ArityMismatch(const std::string& message)
        : Error("ArityMismatch", message) {}
};

// Input-text errors (predicate DSL, function selectors, vector literals).
class ParseError : public Error {
public:
    ParseError(std::string name, const std::string& message)
        : Error(std::move(name), message) {}
    explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

class PredicateParseError : public ParseError {
public:
    PredicateParseError(const std::string& message, std::size_t position)
        : ParseError("PredicateParseError",
                     message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    // 1-based character offset into the predicate text.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownBasisIndex : public Error {
public:
    explicit UnknownBasisIndex(const std::string& message)
        : Error("UnknownBasisIndex", message) {}
};

class NotAPVM : public Error {
public:
    explicit NotAPVM(const std::string& violated_identity)
        : Error("NotAPVM", violated_identity) {}
};

class StateOutsideSpan : public Error {
public:
    StateOutsideSpan(const std::string& message, std::string residual_weight)
        : Error("StateOutsideSpan", message + " (residual weight " + residual_weight + ")"),
          residual_weight_(std::move(residual_weight)) {}

    // Exact rational rendering of 1 - sum of class probabilities.
    const std::string& residual_weight() const noexcept { return residual_weight_; }

private:
    std::string residual_weight_;
};

// Raised when a lifting run exceeds its configured per-entry size budget.
// Not part of the mathematical contract; exists so scale probes can stop
// cleanly instead of exhausting memory.
class LiftBudgetExceeded : public Error {
public:
    LiftBudgetExceeded(std::size_t vectors_completed, std::size_t max_bits_seen,
                       std::size_t budget_bits)
        : Error("LiftBudgetExceeded",
                "entry size reached " + std::to_string(max_bits_seen) + " bits (budget " +
                    std::to_string(budget_bits) + ") after " +
                    std::to_string(vectors_completed) + " lifted vectors"),
          vectors_completed_(vectors_completed), max_bits_seen_(max_bits_seen) {}

    std::size_t vectors_completed() const noexcept { return vectors_completed_; }
    std::size_t max_bits_seen() const noexcept { return max_bits_seen_; }

private:
    std::size_t vectors_completed_;
    std::size_t max_bits_seen_;
};

}  // namespace liftspace
