#include "creg/graph.hpp"

#include "creg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace creg {

bool edge_consistent(const Correspondence& c1, const Correspondence& c2,
                     double delta) {
  const double dp = (c1.p - c2.p).norm();
  const double dq = (c1.q - c2.q).norm();
  return std::abs(dp - dq) < delta;
}

DegreeVector node_degrees(const CorrespondenceSet& set, int threads) {
  const int n = set.size();
  if (n < 2) {
    throw EmptySet("node_degrees: need at least 2 correspondences");
  }
  DegreeVector degrees(n, 0);
  const auto count_rows = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      int d = 0;
      for (int j = 0; j < n; ++j) {
        if (j != i && edge_consistent(set.items[i], set.items[j], set.delta)) {
          ++d;
        }
      }
      degrees[i] = d;
    }
  };

  threads = std::clamp(threads, 1, n);
  if (threads == 1) {
    count_rows(0, n);
    return degrees;
  }
  std::vector<std::thread> pool;
  const int chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int begin = t * chunk;
    const int end = std::min(n, begin + chunk);
    if (begin < end) pool.emplace_back(count_rows, begin, end);
  }
  for (auto& th : pool) th.join();
  return degrees;
}

CorrespondenceSet select_top_k(const CorrespondenceSet& set,
                               const DegreeVector& degrees, int k) {
  if (k < 3) {
    throw std::invalid_argument("select_top_k: k must be at least 3");
  }
  if (static_cast<int>(degrees.size()) != set.size()) {
    throw std::invalid_argument("select_top_k: degree vector size mismatch");
  }
  std::vector<int> order(set.items.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (degrees[a] != degrees[b]) return degrees[a] > degrees[b];
    return set.items[a].id < set.items[b].id;
  });
  const int keep = std::min<int>(k, set.size());
  CorrespondenceSet out;
  out.delta = set.delta;
  out.items.reserve(keep);
  for (int r = 0; r < keep; ++r) out.items.push_back(set.items[order[r]]);
  return out;
}

std::vector<std::pair<int, int>> candidate_edges(const CorrespondenceSet& hr) {
  std::vector<std::pair<int, int>> edges;
  const int k = hr.size();
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const auto& a = hr.items[i];
      const auto& b = hr.items[j];
      if ((a.p - b.p).norm() < kEdgeLengthEps) continue;
      if ((a.q - b.q).norm() < kEdgeLengthEps) continue;
      if (edge_consistent(a, b, hr.delta)) edges.emplace_back(i, j);
    }
  }
  return edges;
}

}  // namespace creg
