#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "padepm/types.hpp"

namespace padepm {

struct ClassifyThresholds {
  /// Unset: max(1e3 * eps, 1e-2).
  std::optional<double> system_tol;
  double doublet_tol = 0.3;
  double far_tol = 3.0;

  [[nodiscard]] double system_tol_for(double eps) const;
};

struct Doublet {
  Complex pole;
  Complex zero;
};

/// Buckets for the roots of an approximant to a noisy series.
struct RootTaxonomy {
  std::vector<Complex> system_poles;
  std::vector<Doublet> doublets;
  std::vector<Complex> far_poles;
  std::vector<Complex> far_zeros;
  std::vector<Complex> unclassified_poles;
  std::vector<Complex> unclassified_zeros;

  [[nodiscard]] int unclassified() const {
    return static_cast<int>(unclassified_poles.size() +
                            unclassified_zeros.size());
  }
};

/// Sorts poles into system poles (nearest match within system_tol, one per
/// expected location), Froissart doublets (greedy closest pole/zero pairs
/// within doublet_tol), far poles/zeros (|r| >= far_tol) and leftovers.
RootTaxonomy classify_roots(const std::vector<Complex>& poles,
                            const std::vector<Complex>& zeros,
                            const std::vector<Complex>& expected_system,
                            double eps, const ClassifyThresholds& th = {});

nlohmann::json to_json(const RootTaxonomy& tax);

}  // namespace padepm
