#pragma once

// Iterated one-dimensional Euler-summation inversion of double Laplace
// transforms k**(s1, s2) = int int exp(-s1 t - s2 u) k(t, u) dt du.
//
// Each 1-D stage discretizes the Bromwich integral with the trapezoid rule
// on the contour Re s = A / (2 l x), which aliases the original with error of
// order exp(-A). Nodes are taken in groups of l so that the series alternates
// in sign, and the tail is accelerated by binomial (Euler) averaging of the
// last 12 partial sums. A larger l trades extra evaluations for less
// roundoff amplification, exp(A / l) instead of exp(A) over both stages.

#include <complex>
#include <functional>

#include "biparam/chain.hpp"
#include "biparam/matrix.hpp"

namespace biparam {

struct TransformPoint {
  Complex s1;
  Complex s2;
};

/// Scalar transform evaluator. Must be deterministic and satisfy
/// k(conj s1, conj s2) = conj k(s1, s2), i.e. be the transform of a real original.
using ScalarTransform = std::function<Complex(const TransformPoint&)>;

enum class InversionOrder {
  UsageFirst,  // invert s2 -> u inside, then s1 -> t outside
  TimeFirst,   // invert s1 -> t inside, then s2 -> u outside
};

inline constexpr int kEulerAveragingTerms = 11;
/// Nodes per alternating group; roundoff grows like exp(A / l) in two dimensions.
inline constexpr int kRoundoffControl = 2;

struct InversionConfig {
  /// Index of the last Bromwich term; the first eulerTerms - 11 terms are
  /// summed directly and the remaining 11 enter the Euler average.
  int eulerTerms = 35;
  int targetDecimalDigits = 8;
  InversionOrder innerOuterOrder = InversionOrder::UsageFirst;

  /// Throws InvalidArgument unless eulerTerms >= 12 and digits in [4, 12].
  void validate() const;

  /// Contour shift A = (digits + 2) ln 10, capped at 13 ln 10 where
  /// roundoff takes over (about 1e-11 absolute for bounded originals).
  double contour_shift() const;
};

/// Inverts a scalar double transform at (t, u), t, u > 0.
/// Throws EvaluationFailure if the evaluator throws or returns a non-finite
/// value, NonConvergence if the Euler estimate with one fewer direct term
/// differs by more than 10^(-digits/2) relative to max(1, |value|).
double invert2d_scalar(const ScalarTransform& k, QueryPoint at, const InversionConfig& cfg = {});

/// Same algorithm for matrix-valued transforms, sharing the contour
/// evaluations across entries. Errors carry the offending (i, j).
RealMatrix invert2d_matrix_transform(const std::function<ComplexMatrix(const TransformPoint&)>& k,
                                     std::size_t n, QueryPoint at, const InversionConfig& cfg = {});

}  // namespace biparam
