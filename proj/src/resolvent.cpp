#include "biparam/resolvent.hpp"

#include <cmath>
#include <string>

#include "biparam/error.hpp"
#include "biparam/goursat.hpp"
#include "biparam/linalg.hpp"

namespace biparam {

ComplexMatrix resolvent_at(const GeneratorMatrix& a, const TransformPoint& s) {
  const std::size_t n = a.states();
  const Complex z = s.s1 * s.s2;
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? z : Complex{}) - a(i, j);
  return ComplexLU(std::move(m)).inverse();
}

TransitionMatrix invert2d_matrix(const GeneratorMatrix& a, QueryPoint at, const InversionConfig& cfg) {
  auto k = [&a](const TransformPoint& s) { return resolvent_at(a, s); };
  RealMatrix p = invert2d_matrix_transform(k, a.states(), at, cfg);
  return make_transition(std::move(p), at, Method::Laplace2d);
}

TransitionMatrix series_transition(const GeneratorMatrix& a, QueryPoint at, int maxTerms, double relTol) {
  check_query_point(at);
  if (maxTerms < 1) throw Error(ErrorCode::InvalidArgument, "maxTerms must be >= 1");
  if (!(relTol > 0.0)) throw Error(ErrorCode::InvalidArgument, "relTol must be > 0");

  const std::size_t n = a.states();
  const double x = at.t * at.u;
  RealMatrix sum = RealMatrix::identity(n);
  if (x == 0.0) return make_transition(std::move(sum), at, Method::Series);

  RealMatrix term = RealMatrix::identity(n);
  for (int k = 1; k <= maxTerms; ++k) {
    term = a.matrix() * term;
    term *= x / (static_cast<double>(k) * k);
    sum += term;
    if (norm_inf(term) < relTol * norm_inf(sum)) return make_transition(std::move(sum), at, Method::Series);
  }
  throw Error(ErrorCode::MaxTermsExceeded,
              "series did not reach relTol within " + std::to_string(maxTerms) + " terms");
}

TransitionMatrix compute_transition(const GeneratorMatrix& a, QueryPoint at, const SolverOptions& opts) {
  check_query_point(at);
  if (at.t == 0.0 || at.u == 0.0) return make_transition(RealMatrix::identity(a.states()), at, opts.method);
  switch (opts.method) {
    case Method::Series: return series_transition(a, at, opts.seriesMaxTerms, opts.seriesRelTol);
    case Method::Laplace2d: return invert2d_matrix(a, at, opts.inversion);
    case Method::Pde:
      return pde_transition(a, at, opts.pdeTimeSteps, opts.pdeUsageSteps, opts.pdeRichardson);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method");
}

double ck_residual(const GeneratorMatrix& a, QueryPoint p1, QueryPoint p2, const SolverOptions& opts) {
  const RealMatrix joint = compute_transition(a, p1 + p2, opts).p;
  const RealMatrix left = compute_transition(a, p1, opts).p;
  const RealMatrix right = compute_transition(a, p2, opts).p;
  return norm_inf(joint - left * right);
}

}  // namespace biparam
