#include "biparam/inversion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "biparam/error.hpp"

namespace biparam {

void InversionConfig::validate() const {
  if (eulerTerms < kEulerAveragingTerms + 1)
    throw Error(ErrorCode::InvalidArgument, "eulerTerms must be >= 12, got " + std::to_string(eulerTerms));
  if (targetDecimalDigits < 4 || targetDecimalDigits > 12)
    throw Error(ErrorCode::InvalidArgument,
                "targetDecimalDigits must lie in [4, 12], got " + std::to_string(targetDecimalDigits));
}

double InversionConfig::contour_shift() const {
  // Two extra digits absorb the growth of polynomial originals at the first
  // alias point; past 13 digits double-precision roundoff dominates.
  return std::min(targetDecimalDigits + 2, 13) * std::numbers::ln10;
}

namespace {

constexpr int kM = kEulerAveragingTerms;

// Binomial weights C(m, k) / 2^m.
std::array<double, kM + 1> euler_weights() {
  std::array<double, kM + 1> w{};
  double c = 1.0;
  for (int k = 0; k <= kM; ++k) {
    w[k] = c / std::ldexp(1.0, kM);
    c = c * (kM - k) / (k + 1);
  }
  return w;
}

// Euler average of partial sums S[n..n+m].
template <class V>
V euler_average(const std::vector<V>& partial, int n, const V& zero) {
  static const auto w = euler_weights();
  V acc = zero;
  for (int k = 0; k <= kM; ++k) acc += partial[n + k] * w[k];
  return acc;
}

struct Pair {
  ComplexMatrix fine;
  ComplexMatrix coarse;
};

// Everything is carried as ComplexMatrix; the scalar case is 1x1.
using MatrixTransform = std::function<ComplexMatrix(const TransformPoint&)>;

ComplexMatrix checked_eval(const MatrixTransform& k, const TransformPoint& s, std::size_t n) {
  ComplexMatrix v;
  try {
    v = k(s);
  } catch (const std::exception& e) {
    throw Error(ErrorCode::EvaluationFailure, std::string("transform evaluator raised: ") + e.what());
  }
  if (v.size() != n) throw Error(ErrorCode::EvaluationFailure, "transform evaluator returned wrong dimension");
  for (const auto& z : v.data())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::EvaluationFailure, "transform evaluator returned a non-finite value");
  return v;
}

RealMatrix invert_impl(const MatrixTransform& k, std::size_t n, QueryPoint at, const InversionConfig& cfg) {
  cfg.validate();
  if (!(at.t > 0.0) || !(at.u > 0.0) || !std::isfinite(at.t) || !std::isfinite(at.u))
    throw Error(ErrorCode::OutOfDomain, "double inversion needs t > 0 and u > 0");

  const bool usage_first = cfg.innerOuterOrder == InversionOrder::UsageFirst;
  const double x_outer = usage_first ? at.t : at.u;
  const double x_inner = usage_first ? at.u : at.t;
  const double a = cfg.contour_shift();
  const int terms = cfg.eulerTerms;
  const int direct = terms - kM;
  constexpr int l = kRoundoffControl;
  const double pi = std::numbers::pi;

  // Bromwich nodes s_j = (A + 2 pi i j) / (2 l x) and twiddles e^{i pi j / l}.
  auto node = [a](int j, double x) { return Complex(a, 2.0 * std::numbers::pi * j) / (2.0 * l * x); };
  std::array<Complex, l + 1> twiddle{};
  for (int j = 1; j <= l; ++j) twiddle[j] = std::polar(1.0, pi * j / l);
  const ComplexMatrix zero(n);

  // Inner stage at a fixed outer node. The inner original is complex, so
  // positive and negative node indices are both summed.
  auto inner = [&](Complex s_outer) -> Pair {
    auto eval = [&](int j) {
      const Complex s_in = node(j, x_inner);
      return checked_eval(k, usage_first ? TransformPoint{s_outer, s_in} : TransformPoint{s_in, s_outer}, n);
    };
    std::vector<ComplexMatrix> partial;
    partial.reserve(terms + 1);
    ComplexMatrix running = eval(0);
    for (int m = 0; m <= terms; ++m) {
      ComplexMatrix group(n);
      for (int j = 1; j <= l; ++j) {
        group += eval(j + l * m) * twiddle[j];
        group += eval(-(j + l * m)) * std::conj(twiddle[j]);
      }
      if (m % 2 == 1) group *= -1.0;
      running += group;
      partial.push_back(running);
    }
    const double scale = std::exp(a / (2.0 * l)) / (2.0 * l * x_inner);
    return {euler_average(partial, direct, zero) * scale, euler_average(partial, direct - 1, zero) * scale};
  };

  // Outer stage: the original is real, so the negative indices are conjugates.
  std::vector<RealMatrix> fine, coarse;
  fine.reserve(terms + 1);
  coarse.reserve(terms + 1);
  auto re = [n](const ComplexMatrix& c, Complex w) {
    RealMatrix r(n);
    for (std::size_t e = 0; e < n * n; ++e) r.data()[e] = (w * c.data()[e]).real();
    return r;
  };
  const Pair origin = inner(node(0, x_outer));
  RealMatrix run_fine = re(origin.fine, 1.0), run_coarse = re(origin.coarse, 1.0);
  for (int m = 0; m <= terms; ++m) {
    RealMatrix gf(n), gc(n);
    for (int j = 1; j <= l; ++j) {
      const Pair h = inner(node(j + l * m, x_outer));
      gf += re(h.fine, twiddle[j]) * 2.0;
      gc += re(h.coarse, twiddle[j]) * 2.0;
    }
    const double sign = (m % 2 == 1) ? -1.0 : 1.0;
    run_fine += gf * sign;
    run_coarse += gc * sign;
    fine.push_back(run_fine);
    coarse.push_back(run_coarse);
  }
  const double scale = std::exp(a / (2.0 * l)) / (2.0 * l * x_outer);
  const RealMatrix rzero(n);
  RealMatrix value = euler_average(fine, direct, rzero) * scale;
  const RealMatrix rough = euler_average(coarse, direct - 1, rzero) * scale;

  const double tol = std::pow(10.0, -cfg.targetDecimalDigits / 2.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double est = std::abs(value(i, j) - rough(i, j));
      if (!(est <= tol * std::max(1.0, std::abs(value(i, j)))))
        throw Error(ErrorCode::NonConvergence,
                    "Euler partial sums disagree by " + std::to_string(est) + " at entry (" + std::to_string(i) +
                        ", " + std::to_string(j) + ")",
                    i, j, est);
    }
  return value;
}

}  // namespace

double invert2d_scalar(const ScalarTransform& k, QueryPoint at, const InversionConfig& cfg) {
  const MatrixTransform wrapped = [&k](const TransformPoint& s) {
    ComplexMatrix m(1);
    m(0, 0) = k(s);
    return m;
  };
  try {
    return invert_impl(wrapped, 1, at, cfg)(0, 0);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NonConvergence)
      throw Error(ErrorCode::NonConvergence, "Euler partial sums oscillate beyond tolerance", std::nullopt,
                  std::nullopt, e.value());
    throw;
  }
}

RealMatrix invert2d_matrix_transform(const std::function<ComplexMatrix(const TransformPoint&)>& k, std::size_t n,
                                     QueryPoint at, const InversionConfig& cfg) {
  return invert_impl(k, n, at, cfg);
}

}  // namespace biparam
