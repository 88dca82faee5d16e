#pragma once

#include <stdexcept>
#include <string>

namespace airmas {

// Scenario/trace loading and validation failures. Messages carry the
// offending field path or line number.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Failures raised while an episode is running.
struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A target-relative agent was tasked without a live target contact.
struct MissingTargetError : SimError {
  using SimError::SimError;
};

}  // namespace airmas
