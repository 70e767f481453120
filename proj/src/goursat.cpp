#include "biparam/goursat.hpp"

#include <cmath>
#include <string>

#include "biparam/error.hpp"

namespace biparam {

GoursatGrid::GoursatGrid(GoursatSpec spec, std::size_t states)
    : spec_(spec), n_(states), values_((spec.nt + 1) * (spec.nu + 1) * states * states, 0.0) {}

RealMatrix GoursatGrid::node(std::size_t i, std::size_t j) const {
  RealMatrix m(n_);
  const auto c = cell(i, j);
  std::copy(c.begin(), c.end(), m.data().begin());
  return m;
}

namespace {

void check_spec(const GoursatSpec& spec, std::size_t n) {
  if (!(spec.T > 0.0) || !(spec.U > 0.0) || !std::isfinite(spec.T) || !std::isfinite(spec.U))
    throw Error(ErrorCode::InvalidArgument, "Goursat horizons must be finite and > 0");
  if (spec.nt < 2 || spec.nu < 2 || spec.nt > kGoursatMaxSteps || spec.nu > kGoursatMaxSteps)
    throw Error(ErrorCode::InvalidArgument, "Goursat step counts must lie in [2, 100000]");
  const double cells = static_cast<double>(spec.nt + 1) * static_cast<double>(spec.nu + 1) * double(n * n);
  if (cells > static_cast<double>(kGoursatBudget))
    throw Error(ErrorCode::BudgetExceeded,
                "grid needs " + std::to_string(cells) + " doubles, budget is " + std::to_string(kGoursatBudget));
}

// out = A X (backward) or X A (forward), all n x n row-major.
void apply_generator(const RealMatrix& a, std::span<const double> x, std::span<double> out, KolmogorovSide side) {
  const std::size_t n = a.size();
  std::fill(out.begin(), out.end(), 0.0);
  if (side == KolmogorovSide::Backward) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * x[k * n + j];
      }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const double xik = x[i * n + k];
        if (xik == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] += xik * a(k, j);
      }
  }
}

}  // namespace

GoursatGrid solve_goursat(const GeneratorMatrix& a, const GoursatSpec& spec, KolmogorovSide side) {
  const std::size_t n = a.states();
  check_spec(spec, n);
  GoursatGrid g(spec, n);
  const double hk = g.h() * g.k();
  const double step = hk * norm_inf(a.matrix());
  if (step > kGoursatMaxStepProduct)
    throw Error(ErrorCode::StepTooCoarse, "h k ||A|| = " + std::to_string(step) + " exceeds 0.1", std::nullopt,
                std::nullopt, step);

  const std::size_t nn = n * n;
  for (std::size_t i = 0; i <= spec.nt; ++i)
    for (std::size_t j = 0; j <= spec.nu; ++j) {
      if (i != 0 && j != 0) continue;
      auto c = g.cell(i, j);
      for (std::size_t d = 0; d < n; ++d) c[d * n + d] = 1.0;
    }

  std::vector<double> base(nn), avg(nn), m(nn);
  // Row by row is a valid topological order of the anti-diagonal dependency.
  for (std::size_t i = 0; i < spec.nt; ++i)
    for (std::size_t j = 0; j < spec.nu; ++j) {
      const auto p00 = g.cell(i, j);
      const auto p10 = g.cell(i + 1, j);
      const auto p01 = g.cell(i, j + 1);
      auto p11 = g.cell(i + 1, j + 1);
      for (std::size_t e = 0; e < nn; ++e) {
        base[e] = p10[e] + p01[e] - p00[e];
        avg[e] = 0.5 * (p10[e] + p01[e]);
      }
      // Predictor: bilinear extrapolation of the corner makes the average (p10 + p01) / 2.
      apply_generator(a.matrix(), avg, m, side);
      for (std::size_t e = 0; e < nn; ++e) p11[e] = base[e] + hk * m[e];
      // One fixed-point sweep of the trapezoidal rule.
      for (std::size_t e = 0; e < nn; ++e) avg[e] = 0.25 * (p00[e] + p10[e] + p01[e] + p11[e]);
      apply_generator(a.matrix(), avg, m, side);
      for (std::size_t e = 0; e < nn; ++e) p11[e] = base[e] + hk * m[e];
    }
  return g;
}

namespace {

// Cell index and fractional offset along one axis, snapping to nodes.
std::pair<std::size_t, double> locate(double x, double step, std::size_t steps) {
  const double r = x / step;
  const double nearest = std::round(r);
  if (std::abs(r - nearest) < 1e-9) {
    const auto idx = static_cast<std::size_t>(nearest);
    return idx == steps ? std::pair{steps - 1, 1.0} : std::pair{idx, 0.0};
  }
  auto idx = static_cast<std::size_t>(std::floor(r));
  if (idx >= steps) idx = steps - 1;
  return {idx, r - static_cast<double>(idx)};
}

}  // namespace

TransitionMatrix grid_lookup(const GoursatGrid& g, QueryPoint at) {
  const auto& s = g.spec();
  const double slack = 1e-12;
  if (!(at.t >= 0.0) || !(at.u >= 0.0) || at.t > s.T * (1.0 + slack) || at.u > s.U * (1.0 + slack))
    throw Error(ErrorCode::OutOfDomain, "(" + std::to_string(at.t) + ", " + std::to_string(at.u) +
                                            ") lies outside the grid [0, " + std::to_string(s.T) + "] x [0, " +
                                            std::to_string(s.U) + "]");
  const auto [i, fx] = locate(std::min(at.t, s.T), g.h(), s.nt);
  const auto [j, fy] = locate(std::min(at.u, s.U), g.k(), s.nu);
  const std::size_t n = g.states();
  RealMatrix p(n);

  // Exact node values when both offsets are 0 or 1.
  const auto pick = [](double f) { return f == 0.0 || f == 1.0; };
  if (pick(fx) && pick(fy)) {
    const auto c = g.cell(i + (fx == 1.0), j + (fy == 1.0));
    std::copy(c.begin(), c.end(), p.data().begin());
  } else {
    const auto c00 = g.cell(i, j), c10 = g.cell(i + 1, j), c01 = g.cell(i, j + 1), c11 = g.cell(i + 1, j + 1);
    for (std::size_t e = 0; e < n * n; ++e)
      p.data()[e] = (1 - fx) * (1 - fy) * c00[e] + fx * (1 - fy) * c10[e] + (1 - fx) * fy * c01[e] +
                    fx * fy * c11[e];
  }
  return make_transition(std::move(p), at, Method::Pde);
}

TransitionMatrix pde_transition(const GeneratorMatrix& a, QueryPoint at, std::size_t nt, std::size_t nu,
                                bool richardson, KolmogorovSide side) {
  check_query_point(at);
  if (at.t == 0.0 || at.u == 0.0) return make_transition(RealMatrix::identity(a.states()), at, Method::Pde);
  const GoursatGrid coarse = solve_goursat(a, {at.t, at.u, nt, nu}, side);
  RealMatrix p = coarse.node(nt, nu);
  if (richardson) {
    const GoursatGrid fine = solve_goursat(a, {at.t, at.u, 2 * nt, 2 * nu}, side);
    RealMatrix pf = fine.node(2 * nt, 2 * nu);
    p = (pf * 4.0 - p) * (1.0 / 3.0);
  }
  return make_transition(std::move(p), at, Method::Pde);
}

}  // namespace biparam
