#pragma once

#include <stdexcept>
#include <string>

namespace wendroff {

/// Invalid input parameters (λ outside the admissible set, n < 5, σ ≤ 1, a ≤ 0, ...).
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A construction step produced something the theory rules out, e.g. a
/// nonpositive recurrence coefficient. Carries the degree being built.
class ConstructionError : public std::runtime_error {
public:
  ConstructionError(const std::string& what, int degree)
      : std::runtime_error(what + " (degree " + std::to_string(degree) + ")"), degree_(degree) {}
  int degree() const { return degree_; }

private:
  int degree_;
};

/// The radius a is not past the largest zero of D_n or D_{n-1}.
class InvalidRadiusError : public ConstructionError {
public:
  using ConstructionError::ConstructionError;
};

/// Polynomial has a repeated root where simple roots are required.
class MultiplicityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A rational interval endpoint is itself a root of the polynomial.
class BoundaryRootError : public std::runtime_error {
public:
  enum class Endpoint { Lower, Upper };
  BoundaryRootError(const std::string& what, Endpoint endpoint)
      : std::runtime_error(what), endpoint_(endpoint) {}
  Endpoint endpoint() const { return endpoint_; }

private:
  Endpoint endpoint_;
};

/// Certified intervals overlap, so an ordering cannot be decided at the
/// current tolerance. Callers refine and retry; this is never a verdict.
class UndecidableOrdering : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wendroff
