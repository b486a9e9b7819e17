#pragma once

#include <cstddef>
#include <vector>

namespace moments {

/// Dense row-major matrix as nested vectors; rows must share one length.
template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
bool is_square(const Matrix<T>& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) return false;
  }
  return true;
}

}  // namespace moments
