#pragma once

#include <stdexcept>

namespace fpp {

// Invalid run configuration: bad field/plane order, bad partition count, ...
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Operation outside its mathematical domain (inverse of zero, zero vector, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Malformed input data (bad edge line, partition id out of range, ...).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fpp
