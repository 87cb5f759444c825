#ifndef SQUEEZESIM_ERRORS_HPP
#define SQUEEZESIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace squeezesim {

/// Raised when an experiment config fails validation. `field()` names the
/// offending entry (dotted path, e.g. "chain.visibility").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Raised when a state produced mid-pipeline violates the physicality bound
/// (a symplectic eigenvalue below 1 - 1e-9).
class PhysicalityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace squeezesim

#endif
