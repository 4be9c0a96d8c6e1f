#pragma once

#include <stdexcept>
#include <string>

namespace secgraph {

/// Raised when an operation receives a value outside its domain
/// (negative intensity, r <= 0, p outside [0,1], ...).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by threshold searches that cannot bracket the crossing point.
/// The message carries the probe trace.
class BracketError : public std::runtime_error {
 public:
  explicit BracketError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}
}  // namespace detail

}  // namespace secgraph
