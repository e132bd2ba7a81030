#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperlin {

/// Argument outside the mathematical domain of an operation (r < 3, n < r, p outside (0,1), ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force routine was asked to exceed its documented size budget.
class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Streaming enumeration hit its hard cap. `reached` is the number of items produced
/// before giving up; `completed_order` is the last order whose result is complete (0 if none).
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t reached, int completed_order = 0)
      : std::runtime_error(what), reached_(reached), completed_order_(completed_order) {}

  std::size_t reached() const noexcept { return reached_; }
  int completed_order() const noexcept { return completed_order_; }

 private:
  std::size_t reached_;
  int completed_order_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Precondition of a checking routine did not hold (distinct from the check failing).
class PreconditionViolated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hyperlin
