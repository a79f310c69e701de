#pragma once

#include <stdexcept>
#include <string>

namespace bergtop {

// Thrown when an adaptive integration cannot reach its tolerance within the
// caller-supplied evaluation budget.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a truncation window is too small for the requested check to be
// meaningful (for example, smaller than the number of occupied diagonals).
struct WindowTooSmall : std::invalid_argument {
  explicit WindowTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

// Thrown by kernel evaluation when a point lies outside the closed bidisc
// |z1| <= e, |z2| <= 2 on which the partial sums are certified to converge.
struct PointOutsideSupportedRegion : std::domain_error {
  explicit PointOutsideSupportedRegion(const std::string& what) : std::domain_error(what) {}
};

}  // namespace bergtop
