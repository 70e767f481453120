#pragma once

#include <cstddef>
#include <vector>

#include "biparam/matrix.hpp"

namespace biparam {

/// In-place LU factorization with partial pivoting of a small dense complex
/// matrix. Throws SingularResolvent when a pivot falls below
/// `relative_pivot_tol` times the largest entry of the input.
class ComplexLU {
 public:
  explicit ComplexLU(ComplexMatrix m, double relative_pivot_tol = 1e-14);

  std::size_t size() const noexcept { return lu_.size(); }

  /// Overwrites `b` (length n) with the solution of M x = b.
  void solve_in_place(std::span<Complex> b) const;

  ComplexMatrix inverse() const;

 private:
  ComplexMatrix lu_;
  std::vector<std::size_t> perm_;
};

}  // namespace biparam
