#pragma once

#include <stdexcept>
#include <string>

namespace gelp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A family constructor was applied to a code outside its hypotheses.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Division of a nonzero value by zero while evaluating a locator.
class EvaluationFault : public Error {
 public:
  using Error::Error;
};

// Two correctable patterns share a syndrome.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace gelp
