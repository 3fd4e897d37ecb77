#pragma once

#include "creg/geom.hpp"
#include "creg/graph.hpp"
#include "creg/registration.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace creg {

// Reported translation error when a trial fails outright.
inline constexpr double kTranslationErrorSentinel = 1e9;

// Fixed transform used by default so golden outputs stay comparable:
// 60 degrees about (1,1,1)/sqrt(3), translation (0.1, -0.05, 0.2).
RigidTransform default_ground_truth();

struct SimulationSpec {
  int n_inliers = 80;
  double outlier_ratio = 0.0;  // outliers / (inliers + outliers), in [0, 1)
  double noise_sigma = 0.002;  // per-coordinate gaussian sigma on target inliers
  double rho = 0.002;          // working resolution; the default noise bound
  RigidTransform ground_truth = default_ground_truth();
  std::uint64_t seed = 42;
};

struct LabeledCorrespondences {
  CorrespondenceSet set;
  std::vector<int> inlier_ids;  // ground-truth inlier ids, sorted
};

struct TrialReport {
  double rotation_error_deg = 0.0;
  double translation_error = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double elapsed_s = 0.0;
  int consensus_size = 0;
  bool success = false;
};

/// Synthetic correspondences: source inliers uniform in a unit box, target
/// inliers transformed plus per-coordinate gaussian noise, outliers uniform
/// in the ball around the target-inlier centroid with the bounding-box
/// diagonal as radius, paired with source inliers drawn with replacement.
/// The whole set is shuffled. Pure function of the spec.
LabeledCorrespondences generate(const SimulationSpec& spec);

/// Precision/recall of the consensus against the labels plus transform errors
/// against the ground truth.
TrialReport evaluate(const RegistrationResult& result,
                     const LabeledCorrespondences& labels,
                     const SimulationSpec& spec);

/// Sentinel report for a registration that threw.
TrialReport failed_trial();

struct SweepRow {
  double ratio = 0.0;
  int trials = 0;
  double mean_rot_err_deg = 0.0;
  double mean_trans_err = 0.0;
  double mean_precision = 0.0;
  double mean_recall = 0.0;
  double mean_time_s = 0.0;
  double max_rot_err_deg = 0.0;
};

/// One row per ratio, aggregating trials_per_ratio seeded trials
/// (seed = base seed + trial index).
std::vector<SweepRow> run_trials(const SimulationSpec& base,
                                 const std::vector<double>& ratios,
                                 int trials_per_ratio,
                                 const RegistrationParams& params);

void write_rows_csv(std::ostream& os, const std::vector<SweepRow>& rows);
void write_rows_json(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace creg
