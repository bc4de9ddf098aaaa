#pragma once

#include <stdexcept>
#include <string>

namespace shellopt {

// Thrown when a requested computation would exceed a configured capacity
// (enumeration budget, full-space bound, index range). Carries the size of
// the offending space as a decimal string so callers can name it.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& message, std::string cardinality)
      : std::runtime_error(message), cardinality_(std::move(cardinality)) {}

  const std::string& cardinality() const noexcept { return cardinality_; }

 private:
  std::string cardinality_;
};

}  // namespace shellopt
