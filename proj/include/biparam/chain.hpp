#pragma once

// Core types for Markov chains indexed by a two-dimensional parameter
// (time t, usage u) and characterized by an infinitesimal transition matrix A,
// a_ij = d^2 p_ij / dt du at the origin. The chain is frozen on both axes:
// P(t, 0) = P(0, u) = I.

#include <cstddef>
#include <string_view>
#include <vector>

#include "biparam/matrix.hpp"

namespace biparam {

inline constexpr double kGeneratorRowSumTol = 1e-12;
inline constexpr double kRangeWarningEps = 1e-9;
inline constexpr double kMarginalStochasticTol = 1e-6;
inline constexpr double kProbabilityVectorTol = 1e-12;

/// Validated infinitesimal transition matrix. Only obtainable through
/// validate_generator, so holding one means the invariants hold.
class GeneratorMatrix {
 public:
  std::size_t states() const noexcept { return a_.size(); }
  const RealMatrix& matrix() const noexcept { return a_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return a_(i, j); }

 private:
  explicit GeneratorMatrix(RealMatrix a) : a_(std::move(a)) {}
  friend GeneratorMatrix validate_generator(const std::vector<std::vector<double>>& raw);

  RealMatrix a_;
};

struct QueryPoint {
  double t = 0.0;  // time
  double u = 0.0;  // usage

  friend QueryPoint operator+(QueryPoint a, QueryPoint b) { return {a.t + b.t, a.u + b.u}; }
  bool operator==(const QueryPoint&) const = default;
};

/// Throws InvalidArgument unless both coordinates are finite and >= 0.
void check_query_point(QueryPoint at);

enum class Method { Series, Laplace2d, Pde };

std::string_view to_string(Method m) noexcept;
Method parse_method(std::string_view name);

struct TransitionMatrix {
  RealMatrix p;
  QueryPoint at;
  Method method = Method::Series;
  bool rangeWarning = false;

  std::size_t states() const noexcept { return p.size(); }
};

/// True iff some entry lies outside [-eps, 1 + eps].
bool out_of_unit_range(const RealMatrix& p, double eps = kRangeWarningEps);

TransitionMatrix make_transition(RealMatrix p, QueryPoint at, Method method);

/// Nonnegative vector summing to one.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> values);

  std::size_t size() const noexcept { return pi_.size(); }
  double operator[](std::size_t i) const noexcept { return pi_[i]; }
  const std::vector<double>& values() const noexcept { return pi_; }

 private:
  std::vector<double> pi_;
};

/// Checks squareness, finiteness, sign pattern and zero row sums
/// (|row sum| <= 1e-12), in that order.
GeneratorMatrix validate_generator(const std::vector<std::vector<double>>& raw);
GeneratorMatrix validate_generator(const RealMatrix& raw);

/// pi(t,u) = pi(0,0) * P(t,u). The product is renormalized when its mass is
/// within 1e-6 of one; larger deviations are rejected.
ProbabilityVector marginal_distribution(const ProbabilityVector& initial, const TransitionMatrix& p);

}  // namespace biparam
