#pragma once

// Two-dimensional warranty with nested rectangular coverage regions
// [0, t_k] x [0, u_k]. Only the first failure out of the working state is
// covered. Region k is charged by the corner difference
// G(t_k, u_k) - G(t_{k-1}, u_{k-1}), not by the measure of the L-shaped set.

#include <cstddef>
#include <vector>

#include "biparam/inversion.hpp"
#include "biparam/waiting.hpp"

namespace biparam {

struct CoverageRegion {
  double tLimit = 0.0;
  double uLimit = 0.0;
  double cost = 0.0;
};

struct WarrantyPolicy {
  std::size_t fromState = 1;
  double baseCost = 1.0;  // C; the EWE is usually quoted as a multiple of it
  std::vector<CoverageRegion> regions;
};

/// Throws NonPositiveLimit(k), NegativeCost(k) or NotNested(k) for the first
/// offending region k; InvalidArgument for a non-positive base cost or an
/// empty region list.
WarrantyPolicy validate_policy(std::vector<CoverageRegion> regions, std::size_t fromState = 1,
                               double baseCost = 1.0);

struct ExpenseReport {
  double ewe = 0.0;
  std::vector<double> perRegionProbabilities;
  std::vector<double> perRegionContributions;
};

/// ewe = sum_k cost_k q_k with q_1 = G(corner_1), q_k = G(corner_k) - G(corner_{k-1}).
/// Throws StateMismatch if G belongs to another state, NegativeIncrement if
/// some q_k < -1e-6.
ExpenseReport expected_warranty_expense(const WarrantyPolicy& policy, const WaitingDistribution& g,
                                        const InversionConfig& cfg = {},
                                        std::vector<std::string>* diagnostics = nullptr);

}  // namespace biparam
