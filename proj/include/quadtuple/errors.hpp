#pragma once

#include <stdexcept>
#include <string>

namespace quadtuple {

// Invalid radicand: d < 2 or a perfect square.
class RingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// d is valid but not square-free and the override was not given.
class NonSquareFreeError : public RingError {
 public:
  using RingError::RingError;
};

// A number-theoretic hypothesis of an operation does not hold for its input
// (d mod 60, solvability of x^2 - dy^2 = -6, parity of m + k, ...).
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A structural fact that must hold under the hypotheses did not. Indicates a
// bug or a hypothesis that was not checked upstream.
class ShapeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Counterexample pipeline failure tagged with the stage that failed.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace quadtuple
