#pragma once

#include <optional>
#include <vector>

#include "r2k/scalar.hpp"

namespace r2k {

/// Dense row-major system A x = b over F.
struct LinearSystem {
  std::size_t unknowns = 0;
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;

  void add_equation(std::vector<Scalar> row, Scalar value) {
    rows.push_back(std::move(row));
    rhs.push_back(std::move(value));
  }
};

struct LinearSolution {
  std::size_t rank = 0;
  /// One solution with free unknowns set to zero.
  std::vector<Scalar> particular;
  bool unique = false;
};

/// Exact Gauss-Jordan elimination. Returns nullopt when the system is inconsistent.
std::optional<LinearSolution> solve(const LinearSystem& system);

}  // namespace r2k
