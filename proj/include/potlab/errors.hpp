#pragma once

#include <stdexcept>
#include <string>

namespace potlab {

// Input errors (bad scenario data, violated type invariants).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Domain errors (well-formed input, but the requested quantity does not exist).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quadrature detected a divergent integral on a bounded interval.
struct NonIntegrable : DomainError {
  using DomainError::DomainError;
};

// fit_two_points: the two abscissae are not separated in the nu-metric.
struct DegenerateInterval : DomainError {
  using DomainError::DomainError;
};

// weak_extend: some component I of Omega has I\E disconnected.
struct Disconnected : DomainError {
  int component = -1;
  explicit Disconnected(const std::string& msg, int comp)
      : DomainError(msg), component(comp) {}
};

struct NotRemovable : DomainError {
  using DomainError::DomainError;
};

// quasi1d reflect: one-sided limit at the pivot could not be probed.
struct LimitMissing : DomainError {
  using DomainError::DomainError;
};

// q_update: the small-Q update rule requested outside its validity range.
struct ConditionFailed : DomainError {
  using DomainError::DomainError;
};

struct NoConvergence : DomainError {
  using DomainError::DomainError;
};

struct BallTooLarge : DomainError {
  using DomainError::DomainError;
};

}  // namespace potlab
