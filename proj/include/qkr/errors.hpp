#pragma once

#include <stdexcept>
#include <string>

namespace qkr {

/// Invalid physical input (non-positive parameter, value outside its window).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Requested feature cannot be represented on the grid (packet narrower than 4 dx).
struct ResolutionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Banded matrix propagation lost norm beyond tolerance; band too small.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Moments requested for a state flagged as delocalized.
struct MomentUndefinedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad configuration value; `field` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error("config error [" + field + "]: " + message),
        field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// A self-check scenario (oracle comparison) failed.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qkr
