#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace biparam {

using Complex = std::complex<double>;

/// Dense row-major n x n matrix. The state spaces handled here are small
/// (tens of states), so everything is a contiguous vector with value semantics.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

  std::span<T> row(std::size_t i) noexcept { return {data_.data() + i * n_, n_}; }
  std::span<const T> row(std::size_t i) const noexcept { return {data_.data() + i * n_, n_}; }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  template <class S>
  SquareMatrix& operator*=(S s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  template <class S>
  friend SquareMatrix operator*(SquareMatrix a, S s) {
    return a *= s;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    const std::size_t n = a.n_;
    SquareMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const T aik = a(i, k);
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

using RealMatrix = SquareMatrix<double>;
using ComplexMatrix = SquareMatrix<Complex>;

/// Max absolute row sum.
template <class T>
double norm_inf(const SquareMatrix<T>& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    double s = 0.0;
    for (const auto& x : m.row(i)) s += std::abs(x);
    best = std::max(best, s);
  }
  return best;
}

/// Largest absolute entry.
template <class T>
double max_abs(const SquareMatrix<T>& m) {
  double best = 0.0;
  for (const auto& x : m.data()) best = std::max(best, static_cast<double>(std::abs(x)));
  return best;
}

inline RealMatrix make_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  RealMatrix m(rows.size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (double x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix c(m.size());
  for (std::size_t k = 0; k < m.data().size(); ++k) c.data()[k] = m.data()[k];
  return c;
}

}  // namespace biparam
