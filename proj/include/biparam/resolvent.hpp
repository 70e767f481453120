#pragma once

// Transition matrices of a two-parameter chain. With the axes frozen at the
// identity, the backward equation d^2P/dt du = A P has the double transform
// P**(s1, s2) = (s1 s2 I - A)^-1 and the entire-function solution
// P(t, u) = sum_n A^n (t u)^n / (n!)^2.

#include <cstddef>

#include "biparam/chain.hpp"
#include "biparam/inversion.hpp"
#include "biparam/matrix.hpp"

namespace biparam {

/// (s1 s2 I - A)^-1 by LU with partial pivoting.
/// Throws SingularResolvent when s1 s2 is (numerically) an eigenvalue of A.
ComplexMatrix resolvent_at(const GeneratorMatrix& a, const TransformPoint& s);

/// Entrywise double-Laplace inversion of the resolvent; method = Laplace2d.
TransitionMatrix invert2d_matrix(const GeneratorMatrix& a, QueryPoint at, const InversionConfig& cfg = {});

inline constexpr int kSeriesMaxTerms = 200;
inline constexpr double kSeriesRelTol = 1e-12;

/// Truncated Goursat series; stops once the newest term's inf-norm drops
/// below relTol times the running sum's. Throws MaxTermsExceeded otherwise.
TransitionMatrix series_transition(const GeneratorMatrix& a, QueryPoint at, int maxTerms = kSeriesMaxTerms,
                                   double relTol = kSeriesRelTol);

/// Knobs for every solver; only the ones matching `method` are read.
struct SolverOptions {
  Method method = Method::Series;
  InversionConfig inversion{};
  int seriesMaxTerms = kSeriesMaxTerms;
  double seriesRelTol = kSeriesRelTol;
  std::size_t pdeTimeSteps = 400;
  std::size_t pdeUsageSteps = 400;
  bool pdeRichardson = false;
};

/// Dispatches to the chosen solver. Points on either axis return I exactly.
TransitionMatrix compute_transition(const GeneratorMatrix& a, QueryPoint at, const SolverOptions& opts);

/// ||P(p1 + p2) - P(p1) P(p2)||_inf with the chosen solver. Diagnostic only:
/// the Goursat solution is not multiplicative in this sense.
double ck_residual(const GeneratorMatrix& a, QueryPoint p1, QueryPoint p2, const SolverOptions& opts);

}  // namespace biparam
