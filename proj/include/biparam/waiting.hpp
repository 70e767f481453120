#pragma once

// Waiting regions: the (time, usage) vector (tau_i, gamma_i) until the chain
// first leaves state i.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "biparam/chain.hpp"
#include "biparam/inversion.hpp"

namespace biparam {

/// Product-exponential survival law Pr(tau > t, gamma > u) = exp(-l1 t - l2 u).
struct WaitingRegionRates {
  std::size_t state = 0;
  double lambda1 = 0.0;  // per time unit
  double lambda2 = 0.0;  // per usage unit

  /// Throws InvalidArgument on negative or non-finite rates.
  void validate() const;
};

double survival(const WaitingRegionRates& r, QueryPoint at);

/// |S(p1 + p2) - S(p1) S(p2)|, zero up to rounding for the exponential law.
double factorization_residual(const WaitingRegionRates& r, QueryPoint p1, QueryPoint p2);

/// Same residual for an arbitrary survival function; used as a negative control.
double factorization_residual(const std::function<double(QueryPoint)>& survival_fn, QueryPoint p1, QueryPoint p2);

struct WaitingDistribution {
  std::size_t fromState = 0;
  ScalarTransform densityTransform;  // f**
  ScalarTransform cdfTransform;      // F** = f** / (s1 s2)
};

/// From the renewal equations of a two-state chain:
///   p01** = f** p11**  and  p10** = g** p00**,
/// so f** and g** are ratios of resolvent entries. Returns {F for state 0, G for state 1}.
/// Throws UnsupportedStateCount unless n == 2; the evaluators throw
/// SingularRatio when the denominator vanishes.
std::pair<WaitingDistribution, WaitingDistribution> extract_waiting_transforms(const GeneratorMatrix& a);

inline constexpr double kCdfClampTol = 1e-6;

/// F(t, u) by double inversion of the cdf transform. Results in (-1e-6, 0)
/// are clamped to 0 and noted in `diagnostics` (if given); anything outside
/// [-1e-6, 1 + 1e-6] throws OutOfRange.
double waiting_cdf_at(const WaitingDistribution& w, QueryPoint at, const InversionConfig& cfg = {},
                      std::vector<std::string>* diagnostics = nullptr);

}  // namespace biparam
