#include "onedraw/min_cost_flow.hpp"

#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

namespace onedraw {

MinCostFlow::MinCostFlow(int n) : out_(n) {}

int MinCostFlow::add_arc(int from, int to, long long cap, long long cost) {
  if (cap < 0 || cost < 0) throw std::invalid_argument("negative capacity or cost");
  int id = static_cast<int>(arcs_.size()) / 2;
  out_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, cap, cost});
  out_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, 0, -cost});
  return id;
}

std::pair<long long, long long> MinCostFlow::run(int s, int t, long long limit) {
  const long long inf = std::numeric_limits<long long>::max() / 4;
  int n = num_nodes();
  std::vector<long long> pot(n, 0), dist(n);
  std::vector<int> via(n);
  long long flow = 0, cost = 0;
  while (flow < limit) {
    dist.assign(n, inf);
    via.assign(n, -1);
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[s] = 0;
    pq.push({0, s});
    while (!pq.empty()) {
      auto [d, v] = pq.top();
      pq.pop();
      if (d != dist[v]) continue;
      for (int a : out_[v]) {
        const Arc& arc = arcs_[a];
        if (arc.cap == 0) continue;
        long long nd = d + arc.cost + pot[v] - pot[arc.to];
        if (nd < dist[arc.to]) {
          dist[arc.to] = nd;
          via[arc.to] = a;
          pq.push({nd, arc.to});
        }
      }
    }
    if (dist[t] >= inf) break;
    for (int v = 0; v < n; ++v)
      if (dist[v] < inf) pot[v] += dist[v];
    long long push = limit - flow;
    for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) push = std::min(push, arcs_[via[v]].cap);
    for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].cap -= push;
      arcs_[via[v] ^ 1].cap += push;
      cost += push * arcs_[via[v]].cost;
    }
    flow += push;
  }
  return {flow, cost};
}

}  // namespace onedraw
