#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "padepm/approximant.hpp"
#include "padepm/classify.hpp"
#include "padepm/pm2.hpp"

namespace padepm {

enum class Method { kDm, kSvd, kPm1, kPm2 };

Method parse_method(const std::string& name);
std::string to_string(Method method);

/// Result of running one method on one series, in a method-neutral shape.
struct Approximation {
  Method method = Method::kDm;
  Conformation conformation;
  RationalApproximant rational;
  /// Present for the pencil methods.
  std::optional<PoleResidueForm> prf;
  std::optional<SpuriousPoleReport> report;
  /// Roots of the rational form; zeros stay empty for a zero numerator.
  PolesAndZeros roots;

  [[nodiscard]] int final_l() const;
  /// Poles reported by the method: pencil eigenvalues for PM1/PM2,
  /// denominator roots for DM/SVD.
  [[nodiscard]] std::vector<Complex> poles() const;
  [[nodiscard]] Complex operator()(Complex z) const;
};

Approximation approximate(const PowerSeries& s, Method method,
                          const Conformation& conf,
                          const FilterParams& params = {});

/// JSON document with keys method, conformation {m, k, final_l}, numer,
/// denom, poles, zeros, residues and (PM2 only) report.
nlohmann::json to_json(const Approximation& a);
nlohmann::json to_json(const SpuriousPoleReport& report);

enum class Execution { kSerial, kParallel };

struct ExperimentConfig {
  int n = 20;
  int m = 10;
  int k = -1;
  std::vector<double> eps_list{1e-3, 1e-6, 1e-10};
  int samples = 10;
  std::uint64_t seed = 1;
  /// Unset: 10^-t = eps for every noise level (geometric) or 14 (log).
  std::optional<double> t;
  Method method = Method::kPm2;
  double origin_radius = kDefaultOriginRadius;
  ClassifyThresholds thresholds;
  /// Mesh spacing for the unit-disk error (log-branch).
  double mesh_spacing = 0.02;
  int sweep_points = 500;
  Execution execution = Execution::kParallel;

  void validate() const;
};

/// Error sweep statistics for one x range.
struct RangeStats {
  double max_error = 0.0;   ///< over unflagged points
  double median_error = 0.0;
  int flagged = 0;
  /// Unflagged points outside [1.0, 1.2] with error > 100 x median.
  int spikes = 0;
};

struct SampleRow {
  int eps_index = 0;
  double eps = 0.0;
  int sample = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string failure;
  int retained_poles = 0;
  int final_l = 0;
  double system_pole_error = 0.0;  ///< |p - 1| for the pole nearest 1
  int system_poles = 0;
  int doublets = 0;
  int far_poles = 0;
  int far_zeros = 0;
  int unclassified = 0;
  RangeStats inner;   ///< [-0.9, 0.9]
  RangeStats edge;    ///< [0.9, 0.99]
  RangeStats outer;   ///< [1.1, 100], log spaced
};

struct EpsSummary {
  double eps = 0.0;
  int samples = 0;
  int failures = 0;
  double mean_system_pole_error = 0.0;
  double mean_retained_poles = 0.0;
  double mean_doublets = 0.0;
  double mean_inner_max_error = 0.0;
  double mean_edge_max_error = 0.0;
  double mean_outer_max_error = 0.0;
  int samples_with_outer_spikes = 0;
};

struct GeometricNoiseReport {
  ExperimentConfig config;
  std::vector<SampleRow> rows;   ///< ordered by (eps_index, sample)
  std::vector<EpsSummary> summary;
};

/// Noisy geometric series study: for each eps and sample, build the noisy
/// series, run the configured method and record pole error, root taxonomy
/// and error sweeps against 1/(1-z). Failed samples become failed rows.
GeometricNoiseReport run_geometric_noise(const ExperimentConfig& cfg);

std::string to_csv(const GeometricNoiseReport& report);
nlohmann::json to_json(const GeometricNoiseReport& report);

/// Classifies one computed approximation of a noisy geometric series.
SampleRow evaluate_geometric_sample(const Approximation& a, double eps,
                                    const ExperimentConfig& cfg);

/// A pole lies on the branch cut of log(1.2 - z) when it is within 0.05 of
/// the real ray x >= 1.1.
bool on_log_branch_cut(Complex p);

struct LogBranchEntry {
  Approximation approx;
  double max_mesh_error = 0.0;
  double max_error_01 = 0.0;   ///< over 500 points of [0, 1]
  int off_cut_poles = 0;
};

struct LogBranchReport {
  int n = 0;
  double t = kDefaultFilterDigits;
  int mesh_points = 0;
  double mesh_spacing = 0.0;
  LogBranchEntry dm;
  LogBranchEntry pm2;
  LogBranchEntry pm1;
  /// PM1 poles off the branch cut deleted, residues re-solved on the square
  /// system of the survivors.
  LogBranchEntry pm1_pruned;
};

/// The PM1 runs use an unguarded pencil (rank_tol = 0): the Hankel blocks of
/// this series are singular to working precision at [20/20].
///
/// Series of log(1.2 - z) approximated by DM at [(n-1)/2 / (n-1)/2], by PM1
/// (with and without spurious-pole deletion) and by PM2 at k = 0.
LogBranchReport run_log_branch(const ExperimentConfig& cfg);

nlohmann::json to_json(const LogBranchReport& report);

/// PM1 poles filtered by keep(), residues solved on the square system.
PencilResult pm1_pruned(const PowerSeries& s, const Conformation& conf,
                        bool (*keep)(Complex),
                        double rank_tol = numerics::kDefaultRankTolerance);

}  // namespace padepm
