#include "biparam/waiting.hpp"

#include <cmath>
#include <string>

#include "biparam/error.hpp"
#include "biparam/resolvent.hpp"

namespace biparam {

void WaitingRegionRates::validate() const {
  if (!std::isfinite(lambda1) || !std::isfinite(lambda2) || lambda1 < 0.0 || lambda2 < 0.0)
    throw Error(ErrorCode::InvalidArgument,
                "waiting-region rates must be finite and >= 0 (state " + std::to_string(state) + ")", state);
}

double survival(const WaitingRegionRates& r, QueryPoint at) {
  return std::exp(-r.lambda1 * at.t - r.lambda2 * at.u);
}

double factorization_residual(const WaitingRegionRates& r, QueryPoint p1, QueryPoint p2) {
  return std::abs(survival(r, p1 + p2) - survival(r, p1) * survival(r, p2));
}

double factorization_residual(const std::function<double(QueryPoint)>& survival_fn, QueryPoint p1, QueryPoint p2) {
  return std::abs(survival_fn(p1 + p2) - survival_fn(p1) * survival_fn(p2));
}

namespace {

// ratio of resolvent entries num / den at s.
ScalarTransform resolvent_ratio(const GeneratorMatrix& a, std::size_t ni, std::size_t nj, std::size_t di,
                                std::size_t dj) {
  return [a, ni, nj, di, dj](const TransformPoint& s) -> Complex {
    const ComplexMatrix r = resolvent_at(a, s);
    const Complex den = r(di, dj);
    if (den == Complex{} || !std::isfinite(std::abs(den)))
      throw Error(ErrorCode::SingularRatio, "resolvent entry in the denominator vanishes", di, dj);
    return r(ni, nj) / den;
  };
}

WaitingDistribution make_distribution(std::size_t state, ScalarTransform density) {
  ScalarTransform cdf = [density](const TransformPoint& s) { return density(s) / (s.s1 * s.s2); };
  return WaitingDistribution{state, std::move(density), std::move(cdf)};
}

}  // namespace

std::pair<WaitingDistribution, WaitingDistribution> extract_waiting_transforms(const GeneratorMatrix& a) {
  if (a.states() != 2)
    throw Error(ErrorCode::UnsupportedStateCount,
                "waiting-region extraction needs a 2-state chain, got " + std::to_string(a.states()));
  // f** = p01** / p11**, g** = p10** / p00**
  return {make_distribution(0, resolvent_ratio(a, 0, 1, 1, 1)), make_distribution(1, resolvent_ratio(a, 1, 0, 0, 0))};
}

double waiting_cdf_at(const WaitingDistribution& w, QueryPoint at, const InversionConfig& cfg,
                      std::vector<std::string>* diagnostics) {
  const double v = invert2d_scalar(w.cdfTransform, at, cfg);
  if (v < -kCdfClampTol || v > 1.0 + kCdfClampTol)
    throw Error(ErrorCode::OutOfRange, "waiting cdf " + std::to_string(v) + " outside [0, 1]", std::nullopt,
                std::nullopt, v);
  if (v < 0.0) {
    if (diagnostics)
      diagnostics->push_back("waiting cdf for state " + std::to_string(w.fromState) + " at (" +
                             std::to_string(at.t) + ", " + std::to_string(at.u) + ") clamped from " +
                             std::to_string(v) + " to 0");
    return 0.0;
  }
  return v;
}

}  // namespace biparam
