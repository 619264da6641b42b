#pragma once

#include <utility>
#include <vector>

namespace onedraw {

// Successive shortest paths with Dijkstra on reduced costs. Arc costs must
// be non-negative. Deterministic: ties go to the smaller node index.
class MinCostFlow {
 public:
  explicit MinCostFlow(int n);
  int add_arc(int from, int to, long long cap, long long cost);
  // Sends up to `limit` units from s to t; returns (flow, cost).
  std::pair<long long, long long> run(int s, int t, long long limit);
  long long flow(int arc) const { return arcs_[2 * arc + 1].cap; }
  int num_nodes() const { return static_cast<int>(out_.size()); }

 private:
  struct Arc {
    int to;
    long long cap;
    long long cost;
  };
  std::vector<Arc> arcs_;  // arc 2i forward, 2i+1 residual
  std::vector<std::vector<int>> out_;
};

}  // namespace onedraw
