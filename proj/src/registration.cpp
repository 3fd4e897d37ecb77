#include "creg/registration.hpp"

#include "creg/align.hpp"
#include "creg/errors.hpp"
#include "creg/rotsearch.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace creg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void validate(const RegistrationParams& params) {
  if (params.k < 3) throw std::invalid_argument("params.k must be >= 3");
  if (params.delta <= 0.0) throw std::invalid_argument("params.delta must be > 0");
  if (params.min_consensus < 3) {
    throw std::invalid_argument("params.min_consensus must be >= 3");
  }
  if (params.threads < 1) throw std::invalid_argument("params.threads must be >= 1");
}

}  // namespace

SweepResult max_consensus_sweep(const CorrespondenceSet& hr,
                                const RegistrationParams& params) {
  validate(params);
  if (hr.size() < 3) {
    throw NoConsensus("edge sweep: fewer than 3 correspondences");
  }
  const auto edges = candidate_edges(hr);

  SweepResult out;
  int bestcount = params.min_consensus;
  bool has_winner = false;

  for (const auto& [i, j] : edges) {
    const EdgeAlignment alignment = align_edge_pair(hr, i, j);
    const int d_loose = loose_degree(hr, alignment);
    ++out.edges_loose;
    // The loose degree bounds the tight degree from above, so an edge whose
    // whole consensus (endpoints included) cannot beat the incumbent is
    // skipped without the costlier evaluation.
    if (params.prune && d_loose + 2 < bestcount) continue;

    const auto residual = transform_residual_nodes(hr, alignment);
    const auto [d_tight, stab] = tight_degree(hr, alignment, residual, hr.delta);
    ++out.edges_tight;
    if (d_tight > d_loose) ++out.tight_violations;

    const int total = d_tight + 2;
    if (total < params.min_consensus) continue;
    if (has_winner && total <= bestcount) continue;

    bestcount = total;
    has_winner = true;

    std::vector<int> members = stab.stabbed;
    members.push_back(i);
    members.push_back(j);
    std::sort(members.begin(), members.end());

    RigidTransform best;
    best.R = axis_angle_rotation(alignment.axis_dir, stab.theta_star) *
             alignment.transform.R;
    Vec3 t_sum = Vec3::Zero();
    for (int m : members) t_sum += hr.items[m].p - best.R * hr.items[m].q;
    best.t = t_sum / static_cast<double>(members.size());

    out.transform = best;
    out.consensus = std::move(members);
    out.best_edge = {i, j};
    out.best_tight_degree = d_tight;
    out.consensus_trace.push_back(total);
  }

  if (!has_winner) {
    throw NoConsensus("edge sweep: no edge reached the minimum consensus");
  }
  return out;
}

RegistrationResult global_recheck_refit(const CorrespondenceSet& h,
                                        const RigidTransform& initial,
                                        double delta) {
  std::vector<std::pair<Vec3, Vec3>> members;
  for (const auto& c : h.items) {
    if ((c.p - initial.apply(c.q)).norm() < delta) {
      members.emplace_back(c.p, c.q);
    }
  }
  if (members.size() < 3) {
    throw DegenerateConfiguration(
        "global recheck: fewer than 3 correspondences within delta");
  }
  RegistrationResult out;
  out.initial_transform = initial;
  out.transform = procrustes_fit(members);

  // One re-threshold with the refit transform keeps the reported consensus
  // consistent with the reported transform.
  for (const auto& c : h.items) {
    if ((c.p - out.transform.apply(c.q)).norm() < delta) {
      out.consensus.push_back(c.id);
    }
  }
  std::sort(out.consensus.begin(), out.consensus.end());
  if (out.consensus.size() < 3) {
    throw DegenerateConfiguration(
        "global recheck: refit consensus fell below 3");
  }
  return out;
}

RegistrationResult register_correspondences(const CorrespondenceSet& h,
                                            const RegistrationParams& params) {
  validate(params);
  if (h.size() < 3) {
    throw EmptySet("register: need at least 3 correspondences");
  }
  const auto t0 = Clock::now();

  CorrespondenceSet working;
  working.items = h.items;
  working.delta = params.delta;

  const DegreeVector degrees = node_degrees(working, params.threads);
  const CorrespondenceSet hr = select_top_k(working, degrees, params.k);
  const double degrees_s = seconds_since(t0);

  const auto t1 = Clock::now();
  const SweepResult sweep = max_consensus_sweep(hr, params);
  const double sweep_s = seconds_since(t1);

  const auto t2 = Clock::now();
  RegistrationResult out =
      global_recheck_refit(working, sweep.transform, params.delta);
  out.recheck_s = seconds_since(t2);

  out.best_edge = {hr.items[sweep.best_edge.first].id,
                   hr.items[sweep.best_edge.second].id};
  out.edges_evaluated_loose = sweep.edges_loose;
  out.edges_evaluated_tight = sweep.edges_tight;
  out.degrees_s = degrees_s;
  out.sweep_s = sweep_s;
  out.elapsed_s = seconds_since(t0);
  return out;
}

}  // namespace creg
