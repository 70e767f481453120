#include "biparam/linalg.hpp"

#include <utility>

#include "biparam/error.hpp"

namespace biparam {

ComplexLU::ComplexLU(ComplexMatrix m, double relative_pivot_tol) : lu_(std::move(m)), perm_(lu_.size()) {
  const std::size_t n = lu_.size();
  for (std::size_t i = 0; i < n; ++i) perm_[i] = i;

  const double scale = max_abs(lu_);
  const double floor = relative_pivot_tol * (scale > 0.0 ? scale : 1.0);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (!(best > floor))
      throw Error(ErrorCode::SingularResolvent, "pivot below relative tolerance", k, k, best);
    if (p != k) {
      std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(p).begin());
      std::swap(perm_[k], perm_[p]);
    }
    const Complex pivot = lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu_(i, k) / pivot;
      lu_(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
    }
  }
}

void ComplexLU::solve_in_place(std::span<Complex> b) const {
  const std::size_t n = lu_.size();
  std::vector<Complex> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = b[perm_[i]];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) y[i] -= lu_(i, j) * y[j];
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) y[i] -= lu_(i, j) * y[j];
    y[i] /= lu_(i, i);
  }
  std::copy(y.begin(), y.end(), b.begin());
}

ComplexMatrix ComplexLU::inverse() const {
  const std::size_t n = lu_.size();
  ComplexMatrix inv(n);
  std::vector<Complex> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(col.begin(), col.end(), Complex{});
    col[j] = 1.0;
    solve_in_place(col);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

}  // namespace biparam
