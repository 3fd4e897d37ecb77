#pragma once

#include "creg/geom.hpp"
#include "creg/graph.hpp"

#include <utility>
#include <vector>

namespace creg {

// A candidate edge (i, j) of the reduced set aligned source-onto-target.
// The transform maps the source edge direction onto the target edge
// direction and averages the two endpoint translations; the remaining
// degree of freedom is a rotation about the axis line through axis_origin
// (midpoint of the target edge) with direction axis_dir.
struct EdgeAlignment {
  int i = 0;
  int j = 0;
  RigidTransform transform;
  Vec3 axis_dir = Vec3::UnitZ();
  Vec3 axis_origin = Vec3::Zero();
};

EdgeAlignment align_edge_pair(const CorrespondenceSet& hr, int i, int j);

/// (p_k, R q_k + t) for every k != i, j, in set order. Length K - 2.
std::vector<std::pair<Vec3, Vec3>> transform_residual_nodes(
    const CorrespondenceSet& hr, const EdgeAlignment& a);

/// Loose reliability of the aligned edge: the number of remaining
/// correspondences whose scalar projections onto the edge agree within delta,
/// | |(p_k - p_i) . u_P| - |(q_k - q_i) . u_Q| | < delta.
/// Necessary for alignment but not sufficient.
int loose_degree(const CorrespondenceSet& hr, const EdgeAlignment& a);

}  // namespace creg
