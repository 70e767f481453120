#pragma once

// Finite-difference solver for the Kolmogorov equations posed as a Goursat
// problem on [0, T] x [0, U] with P = I on both axes.

#include <cstddef>
#include <vector>

#include "biparam/chain.hpp"
#include "biparam/matrix.hpp"

namespace biparam {

enum class KolmogorovSide {
  Backward,  // d^2P/dt du = A P
  Forward,   // d^2P/dt du = P A
};

struct GoursatSpec {
  double T = 1.0;
  double U = 1.0;
  std::size_t nt = 100;
  std::size_t nu = 100;
};

inline constexpr std::size_t kGoursatMaxSteps = 100000;
/// Upper bound on stored doubles, (nt + 1)(nu + 1) n^2 (512 MiB).
inline constexpr std::size_t kGoursatBudget = std::size_t{1} << 26;
/// Largest admissible h k ||A||_inf.
inline constexpr double kGoursatMaxStepProduct = 0.1;

class GoursatGrid {
 public:
  GoursatGrid(GoursatSpec spec, std::size_t states);

  const GoursatSpec& spec() const noexcept { return spec_; }
  std::size_t states() const noexcept { return n_; }
  double h() const noexcept { return spec_.T / static_cast<double>(spec_.nt); }
  double k() const noexcept { return spec_.U / static_cast<double>(spec_.nu); }

  std::span<double> cell(std::size_t i, std::size_t j) noexcept {
    return {values_.data() + (i * (spec_.nu + 1) + j) * n_ * n_, n_ * n_};
  }
  std::span<const double> cell(std::size_t i, std::size_t j) const noexcept {
    return {values_.data() + (i * (spec_.nu + 1) + j) * n_ * n_, n_ * n_};
  }
  RealMatrix node(std::size_t i, std::size_t j) const;

 private:
  GoursatSpec spec_;
  std::size_t n_;
  std::vector<double> values_;
};

/// Trapezoidal (four-corner averaged) march
///   P[i+1][j+1] = P[i+1][j] + P[i][j+1] - P[i][j] + h k M(avg of the 4 corners),
/// with the unknown corner resolved by a predictor plus one fixed-point sweep.
/// Second order in h and k.
GoursatGrid solve_goursat(const GeneratorMatrix& a, const GoursatSpec& spec,
                          KolmogorovSide side = KolmogorovSide::Backward);

/// Bilinear interpolation; method = Pde. Throws OutOfDomain outside the grid.
TransitionMatrix grid_lookup(const GoursatGrid& g, QueryPoint at);

/// P(t, u) read off the far corner of a (t, u, nt, nu) grid. With
/// `richardson`, the grid is also solved at half steps and combined as
/// (4 P_fine - P_coarse) / 3.
TransitionMatrix pde_transition(const GeneratorMatrix& a, QueryPoint at, std::size_t nt, std::size_t nu,
                                bool richardson = false, KolmogorovSide side = KolmogorovSide::Backward);

}  // namespace biparam
