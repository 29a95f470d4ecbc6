#pragma once

#include <stdexcept>
#include <string>

namespace awi {

// Out-of-contract constructor arguments or operation inputs.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A conditioning event (observed CQI level) has zero probability under the
// current belief, so the Bayes update is undefined.
class ZeroLikelihood : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested DP horizon exceeds the evaluator's hard cap.
class HorizonTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Root finding could not bracket a sign change on the admissible interval.
class BracketFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace awi
