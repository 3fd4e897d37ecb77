#pragma once

#include "creg/geom.hpp"
#include "creg/graph.hpp"

#include <utility>
#include <vector>

namespace creg {

struct RegistrationParams {
  int k = 800;            // size of the reliable subset
  double delta = 0.0;     // noise bound, must be > 0
  int min_consensus = 3;  // smallest admissible consensus, endpoints included
  bool prune = true;      // skip tight evaluation when the loose bound cannot win
  int threads = 1;        // degree-stage parallelism; output identical for any value
};

// Outcome of the candidate-edge sweep over the reduced set.
struct SweepResult {
  RigidTransform transform;               // initial estimate from the best edge
  std::vector<int> consensus;             // reduced-set indices, sorted
  std::pair<int, int> best_edge{-1, -1};  // reduced-set indices
  int best_tight_degree = 0;
  long edges_loose = 0;              // edges scored with the loose constraint
  long edges_tight = 0;              // edges that reached the tight evaluation
  long tight_violations = 0;         // tight evaluations exceeding the loose degree
  std::vector<int> consensus_trace;  // consensus size after each accepted edge
};

/// Sweep candidate edges in lexicographic order, scoring the loose degree
/// first and the tight degree only when the loose bound could still beat the
/// incumbent. The first edge reaching a given tight degree wins; later ties
/// do not replace it.
SweepResult max_consensus_sweep(const CorrespondenceSet& hr,
                                const RegistrationParams& params);

struct RegistrationResult {
  RigidTransform transform;
  std::vector<int> consensus;  // original ids, sorted ascending
  RigidTransform initial_transform;
  std::pair<int, int> best_edge{-1, -1};  // original ids
  long edges_evaluated_loose = 0;
  long edges_evaluated_tight = 0;
  double elapsed_s = 0.0;
  double degrees_s = 0.0;  // stage timings
  double sweep_s = 0.0;
  double recheck_s = 0.0;
};

/// Threshold the full set against the initial transform, refit by
/// least-squares over the members, and re-threshold once with the refit
/// transform so every reported member is within delta of it.
RegistrationResult global_recheck_refit(const CorrespondenceSet& h,
                                        const RigidTransform& initial,
                                        double delta);

/// Full pipeline: node degrees -> top-K selection -> edge sweep -> global
/// recheck and refit. Deterministic for fixed input and parameters.
RegistrationResult register_correspondences(const CorrespondenceSet& h,
                                            const RegistrationParams& params);

}  // namespace creg
