#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nonroot {

// Malformed input: bad JSON field, invalid table entry, unparsable rational.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An image pair on the circle is antipodal, so no unique minor arc exists.
class AdmissibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t explored)
      : std::runtime_error("search budget exceeded after " + std::to_string(explored) + " nodes"),
        explored_(explored) {}
  std::uint64_t explored() const noexcept { return explored_; }

 private:
  std::uint64_t explored_;
};

// A comparison could not be decided at the maximum working precision.
class Indeterminate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConstructionFailure : public std::runtime_error {
 public:
  ConstructionFailure(std::string step, const std::string& what)
      : std::runtime_error(step + ": " + what), step_(std::move(step)) {}
  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

}  // namespace nonroot
