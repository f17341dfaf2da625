#pragma once

#include <stdexcept>
#include <string>

namespace lics {

// Scenario / input validation problems (CLI exit code 2).
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Propagation or linear-algebra failures (CLI exit code 3).
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bracketed searches that found no usable minimum (CLI exit code 4).
struct NotFoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lics
