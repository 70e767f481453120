#include "biparam/warranty.hpp"

#include <cmath>
#include <string>

#include "biparam/error.hpp"

namespace biparam {

WarrantyPolicy validate_policy(std::vector<CoverageRegion> regions, std::size_t fromState, double baseCost) {
  if (!(baseCost > 0.0) || !std::isfinite(baseCost))
    throw Error(ErrorCode::InvalidArgument, "base cost must be finite and > 0");
  if (regions.empty()) throw Error(ErrorCode::InvalidArgument, "policy has no coverage regions");
  for (std::size_t k = 0; k < regions.size(); ++k) {
    const auto& r = regions[k];
    if (!(r.tLimit > 0.0) || !(r.uLimit > 0.0) || !std::isfinite(r.tLimit) || !std::isfinite(r.uLimit))
      throw Error(ErrorCode::NonPositiveLimit, "region " + std::to_string(k) + " has a non-positive limit", k);
    if (!(r.cost >= 0.0) || !std::isfinite(r.cost))
      throw Error(ErrorCode::NegativeCost, "region " + std::to_string(k) + " has a negative cost", k,
                  std::nullopt, r.cost);
    if (k > 0 && !(r.tLimit > regions[k - 1].tLimit && r.uLimit > regions[k - 1].uLimit))
      throw Error(ErrorCode::NotNested, "region " + std::to_string(k) + " does not strictly contain region " +
                                            std::to_string(k - 1),
                  k);
  }
  return WarrantyPolicy{fromState, baseCost, std::move(regions)};
}

ExpenseReport expected_warranty_expense(const WarrantyPolicy& policy, const WaitingDistribution& g,
                                        const InversionConfig& cfg, std::vector<std::string>* diagnostics) {
  if (g.fromState != policy.fromState)
    throw Error(ErrorCode::StateMismatch, "waiting distribution is for state " + std::to_string(g.fromState) +
                                              ", policy covers state " + std::to_string(policy.fromState));
  ExpenseReport report;
  double previous = 0.0;
  for (std::size_t k = 0; k < policy.regions.size(); ++k) {
    const auto& r = policy.regions[k];
    const double corner = waiting_cdf_at(g, {r.tLimit, r.uLimit}, cfg, diagnostics);
    const double q = corner - previous;
    if (q < -kCdfClampTol)
      throw Error(ErrorCode::NegativeIncrement, "region " + std::to_string(k) + " has increment " + std::to_string(q),
                  k, std::nullopt, q);
    previous = corner;
    report.perRegionProbabilities.push_back(q);
    report.perRegionContributions.push_back(r.cost * q);
  }
  for (double c : report.perRegionContributions) report.ewe += c;
  return report;
}

}  // namespace biparam
