#pragma once
#include <stdexcept>
#include <string>

namespace ifomsim {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

struct PlacementError : std::runtime_error {
  explicit PlacementError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace ifomsim
