#pragma once

#include <stdexcept>
#include <string>

namespace airseek {

/// Raised when an operation is asked to evaluate outside its domain,
/// e.g. a field query inside the source exclusion disc.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed numeric inputs: non-finite values, non-positive
/// gains or step sizes, inconsistent sample data.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Raised while loading or interpreting an experiment configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace airseek
