#include "biparam/chain.hpp"

#include <cmath>
#include <string>

#include "biparam/error.hpp"

namespace biparam {

void check_query_point(QueryPoint at) {
  if (!std::isfinite(at.t) || !std::isfinite(at.u) || at.t < 0.0 || at.u < 0.0)
    throw Error(ErrorCode::InvalidArgument,
                "query point must have finite t >= 0 and u >= 0, got (" + std::to_string(at.t) + ", " +
                    std::to_string(at.u) + ")");
}

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Series: return "series";
    case Method::Laplace2d: return "laplace2d";
    case Method::Pde: return "pde";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "series") return Method::Series;
  if (name == "laplace2d") return Method::Laplace2d;
  if (name == "pde") return Method::Pde;
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + std::string(name) + "'");
}

bool out_of_unit_range(const RealMatrix& p, double eps) {
  for (double x : p.data())
    if (!(x >= -eps && x <= 1.0 + eps)) return true;
  return false;
}

TransitionMatrix make_transition(RealMatrix p, QueryPoint at, Method method) {
  const bool warn = out_of_unit_range(p);
  return TransitionMatrix{std::move(p), at, method, warn};
}

ProbabilityVector::ProbabilityVector(std::vector<double> values) : pi_(std::move(values)) {
  if (pi_.empty()) throw Error(ErrorCode::InvalidArgument, "probability vector is empty");
  double sum = 0.0;
  for (std::size_t i = 0; i < pi_.size(); ++i) {
    if (!std::isfinite(pi_[i])) throw Error(ErrorCode::NonFinite, "probability entry is not finite", i);
    if (pi_[i] < 0.0) throw Error(ErrorCode::InvalidArgument, "negative probability", i, std::nullopt, pi_[i]);
    sum += pi_[i];
  }
  if (std::abs(sum - 1.0) > kProbabilityVectorTol)
    throw Error(ErrorCode::NonStochasticInput, "probabilities do not sum to one", std::nullopt, std::nullopt,
                sum - 1.0);
}

GeneratorMatrix validate_generator(const std::vector<std::vector<double>>& raw) {
  const std::size_t n = raw.size();
  if (n == 0) throw Error(ErrorCode::NonSquare, "generator has no rows");
  RealMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n)
      throw Error(ErrorCode::NonSquare,
                  "row " + std::to_string(i) + " has " + std::to_string(raw[i].size()) + " entries, expected " +
                      std::to_string(n),
                  i);
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(raw[i][j])) throw Error(ErrorCode::NonFinite, "generator entry is not finite", i, j);
      a(i, j) = raw[i][j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double x = a(i, j);
      if (i != j && x < 0.0)
        throw Error(ErrorCode::NegativeOffDiagonal,
                    "a[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + std::to_string(x), i, j, x);
      if (i == j && x > 0.0)
        throw Error(ErrorCode::PositiveDiagonal, "a[" + std::to_string(i) + "][" + std::to_string(i) + "] = " +
                                                     std::to_string(x),
                    i, i, x);
      sum += x;
    }
    if (std::abs(sum) > kGeneratorRowSumTol)
      throw Error(ErrorCode::RowSumNonZero, "row " + std::to_string(i) + " sums to " + std::to_string(sum), i,
                  std::nullopt, sum);
  }
  return GeneratorMatrix(std::move(a));
}

GeneratorMatrix validate_generator(const RealMatrix& raw) {
  std::vector<std::vector<double>> rows(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) rows[i].assign(raw.row(i).begin(), raw.row(i).end());
  return validate_generator(rows);
}

ProbabilityVector marginal_distribution(const ProbabilityVector& initial, const TransitionMatrix& p) {
  const std::size_t n = initial.size();
  if (p.states() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "initial vector has " + std::to_string(n) + " states, P has " + std::to_string(p.states()));
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (double x : p.p.row(i)) s += x;
    if (!(std::abs(s - 1.0) < kMarginalStochasticTol))
      throw Error(ErrorCode::NonStochasticInput, "row " + std::to_string(i) + " of P sums to " + std::to_string(s),
                  i, std::nullopt, s - 1.0);
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = initial[i];
    if (w == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] += w * p.p(i, j);
  }
  double total = 0.0;
  for (double x : out) total += x;
  if (!(std::abs(total - 1.0) < kMarginalStochasticTol))
    throw Error(ErrorCode::NonStochasticInput, "marginal mass deviates from one", std::nullopt, std::nullopt,
                total - 1.0);
  // Rescale to the initial mass so that stochastic P (in particular I) maps
  // pi0 to itself bit for bit.
  double mass = 0.0;
  for (double x : initial.values()) mass += x;
  if (total != mass)
    for (double& x : out) x *= mass / total;
  for (std::size_t j = 0; j < n; ++j)
    if (out[j] < 0.0) {
      // Only reachable when P itself carries a range warning.
      if (out[j] < -kRangeWarningEps)
        throw Error(ErrorCode::OutOfRange, "marginal probability is negative", j, std::nullopt, out[j]);
      out[j] = 0.0;
    }
  return ProbabilityVector(std::move(out));
}

}  // namespace biparam
