#pragma once

#include "creg/geom.hpp"

#include <utility>
#include <vector>

namespace creg {

// One putative match: p from the target cloud, q from the source cloud.
struct Correspondence {
  Vec3 p = Vec3::Zero();
  Vec3 q = Vec3::Zero();
  int id = 0;  // index into the original set
};

// A set of matches plus the noise bound delta used by every consistency test.
struct CorrespondenceSet {
  std::vector<Correspondence> items;
  double delta = 0.0;

  int size() const { return static_cast<int>(items.size()); }
};

using DegreeVector = std::vector<int>;

/// True iff the two matches preserve the pair distance:
/// | |p1 - p2| - |q1 - q2| | < delta.
bool edge_consistent(const Correspondence& c1, const Correspondence& c2,
                     double delta);

/// Per-node count of length-consistent partners. threads > 1 splits the row
/// loop; counts are integers so the result is identical for any thread count.
DegreeVector node_degrees(const CorrespondenceSet& set, int threads = 1);

/// The min(k, N) highest-degree correspondences, ordered by degree descending
/// with ties broken by smaller original id. Keeps original ids and delta.
CorrespondenceSet select_top_k(const CorrespondenceSet& set,
                               const DegreeVector& degrees, int k);

/// All index pairs (i, j), i < j, of the reduced set that are
/// length-consistent and whose edges are non-degenerate on both sides,
/// in lexicographic order.
std::vector<std::pair<int, int>> candidate_edges(const CorrespondenceSet& hr);

}  // namespace creg
