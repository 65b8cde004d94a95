#pragma once

#include <stdexcept>
#include <string>

namespace wakesim {

/// Input outside the validity domain of a physical model.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Scene, grid or file configuration that cannot be simulated as requested.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller broke an interface contract (mismatched grids, bad sizes).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wakesim
