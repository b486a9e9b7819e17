#pragma once

#include <stdexcept>

namespace moments {

/// Evaluation exactly on a pole (an eigenvalue, or z at 2 pi i k).
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coincident arguments where a formula has a removable singularity; use the
/// corresponding limit routine instead.
class RemovableSingularity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive quadrature did not settle within its node budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A moment determinant vanished (numerically) where a formula divides by it.
class DegenerateDeterminant : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace moments
