#pragma once

#include <stdexcept>
#include <string>

namespace catalg {

/// Composition requested between morphisms whose endpoints do not match.
class EndpointMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap (ambient n, path count, ...) was exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Domain reduction hit an element of the target with nothing above it.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace catalg
