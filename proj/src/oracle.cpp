#include "onedraw/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>

#include "onedraw/min_cost_flow.hpp"

namespace onedraw {

namespace {

// Port of the planar dart d at its tail.
int dart_port(const EmbeddedGraph& g, const PlanarizedGraph& gp, const PortAssignment& ports, int d) {
  const PlaneGraph& pl = gp.plane;
  int v = pl.tail(d);
  if (gp.is_dummy(v)) return pl.rot_index(d);
  int e = gp.origin[PlaneGraph::edge_of(d)];
  return static_cast<int>(ports[e][g.edges[e].u == v ? 0 : 1]);
}

int corner_angle(int in_port_back, int out_port) {
  int a = ((in_port_back - out_port) % 4 + 4) % 4;
  return a == 0 ? 4 : a;
}

}  // namespace

bool rotation_consistent(const EmbeddedGraph& g, const PortAssignment& ports) {
  if (ports.size() != g.edges.size()) return false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& rot = g.rotation[v];
    if (rot.size() > 4) return false;
    int sum = 0;
    for (std::size_t i = 0; i < rot.size(); ++i) {
      int e = rot[i], f = rot[(i + 1) % rot.size()];
      int pe = static_cast<int>(ports[e][g.edges[e].u == v ? 0 : 1]);
      int pf = static_cast<int>(ports[f][g.edges[f].u == v ? 0 : 1]);
      sum += corner_angle(pf, pe);
    }
    if (!rot.empty() && sum != 4) return false;
  }
  return true;
}

FlowNetwork flow_network(const EmbeddedGraph& g, const PlanarizedGraph& gp, const PortAssignment& ports) {
  if (!rotation_consistent(g, ports)) throw std::invalid_argument("ports are not rotation-consistent");
  const PlaneGraph& pl = gp.plane;
  FlowNetwork net;
  net.num_faces = static_cast<int>(gp.faces.darts.size());
  net.outer.resize(net.num_faces);
  net.demand.resize(net.num_faces);
  for (int f = 0; f < net.num_faces; ++f) {
    net.outer[f] = gp.is_outer(f);
    const auto& walk = gp.faces.darts[f];
    int turns = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      int d = walk[i], nd = walk[(i + 1) % walk.size()];
      turns += 2 - corner_angle(dart_port(g, gp, ports, PlaneGraph::twin(d)), dart_port(g, gp, ports, nd));
    }
    net.demand[f] = (net.outer[f] ? -4 : 4) - turns;
  }
  for (int pe = 0; pe < pl.num_edges(); ++pe) {
    int left = gp.faces.face_of[2 * pe], right = gp.faces.face_of[2 * pe + 1];
    if (left == right) continue;
    net.arcs.push_back({left, right, pe});
    net.arcs.push_back({right, left, pe});
  }
  return net;
}

FixedBends min_bends_fixed(const EmbeddedGraph& g, const PlanarizedGraph& gp, const PortAssignment& ports,
                           const std::vector<int>* part_caps) {
  FlowNetwork net = flow_network(g, gp, ports);
  const PlaneGraph& pl = gp.plane;
  int src = net.num_faces, snk = net.num_faces + 1;
  MinCostFlow mcf(net.num_faces + 2);
  const long long unlimited = 4LL * (pl.num_edges() + 4) * (pl.num_edges() + 4);
  std::vector<int> ids;
  for (const auto& a : net.arcs)
    ids.push_back(mcf.add_arc(a.from, a.to, part_caps ? (*part_caps)[a.part] : unlimited, 1));
  long long need = 0;
  for (int f = 0; f < net.num_faces; ++f) {
    if (net.demand[f] < 0) mcf.add_arc(src, f, -net.demand[f], 0);
    if (net.demand[f] > 0) {
      mcf.add_arc(f, snk, net.demand[f], 0);
      need += net.demand[f];
    }
  }
  FixedBends out;
  auto [flow, cost] = mcf.run(src, snk, need);
  if (flow < need) return out;
  out.feasible = true;

  // net left turns walking each planar edge forwards
  std::vector<int> left(pl.num_edges(), 0), right(pl.num_edges(), 0);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const auto& a = net.arcs[i];
    long long x = mcf.flow(ids[i]);
    if (a.to == gp.faces.face_of[2 * a.part]) left[a.part] += static_cast<int>(x);
    else right[a.part] += static_cast<int>(x);
  }
  for (int pe = 0; pe < pl.num_edges(); ++pe) {
    int c = std::min(left[pe], right[pe]);
    left[pe] -= c;
    right[pe] -= c;
  }

  // absolute orientation: rotate the given ports at each node so that the
  // edges join up
  int nodes = pl.num_vertices();
  std::vector<int> off(nodes, -1);
  auto port_abs = [&](int d) { return (dart_port(g, gp, ports, d) + off[pl.tail(d)]) & 3; };
  auto net_turn = [&](int d) {
    int pe = PlaneGraph::edge_of(d);
    int t = left[pe] - right[pe];
    return d & 1 ? -t : t;
  };
  for (int root = 0; root < nodes; ++root) {
    if (off[root] >= 0) continue;
    off[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int d : pl.rotation(v)) {
        int w = pl.head(d);
        int arrive = (port_abs(d) + net_turn(d) + 400) & 3;
        int want = (arrive + 2 - dart_port(g, gp, ports, PlaneGraph::twin(d)) + 8) & 3;
        if (off[w] < 0) {
          off[w] = want;
          stack.push_back(w);
        } else if (off[w] != want) {
          throw std::logic_error("bend flow does not close up");
        }
      }
    }
  }

  out.bends.assign(g.num_edges(), 0);
  out.shape.num_vertices = g.num_vertices();
  out.shape.num_crossings = static_cast<int>(g.crossings.size());
  out.shape.halves.resize(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    for (int pe : gp.parts[e]) {
      HalfShape h;
      h.from = pl.ends(pe)[0];
      h.to = pl.ends(pe)[1];
      h.start = port_abs(2 * pe);
      h.turns = std::string(left[pe], 'L') + std::string(right[pe], 'R');
      out.bends[e] += left[pe] + right[pe];
      out.shape.halves[e].push_back(h);
    }
    out.total += out.bends[e];
    out.max = std::max(out.max, out.bends[e]);
  }
  return out;
}

std::vector<PortAssignment> port_assignments(const EmbeddedGraph& g) {
  // per vertex: the ccw port sequences starting at E
  std::vector<std::vector<std::vector<int>>> options(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    int k = g.degree(v);
    if (k > 4) throw std::invalid_argument("vertex " + g.vertex_ids[v] + " has degree above 4");
    if (k == 0) {
      options[v].push_back({});
      continue;
    }
    for (int mask = 0; mask < 8; ++mask) {
      if (__builtin_popcount(mask) != k - 1) continue;
      std::vector<int> seq{0};
      for (int p = 1; p < 4; ++p)
        if (mask >> (p - 1) & 1) seq.push_back(p);
      options[v].push_back(seq);
    }
  }
  std::vector<PortAssignment> out;
  std::vector<std::size_t> pick(g.num_vertices(), 0);
  while (true) {
    PortAssignment pa(g.num_edges());
    for (int v = 0; v < g.num_vertices(); ++v) {
      const auto& rot = g.rotation[v];
      for (std::size_t i = 0; i < rot.size(); ++i) {
        int e = rot[i];
        pa[e][g.edges[e].u == v ? 0 : 1] = static_cast<Port>(options[v][pick[v]][i]);
      }
    }
    out.push_back(std::move(pa));
    int v = g.num_vertices() - 1;
    while (v >= 0 && ++pick[v] == options[v].size()) pick[v--] = 0;
    if (v < 0) break;
  }
  return out;
}

std::string ports_hash(const PortAssignment& ports) {
  std::uint32_t h = 2166136261u;
  for (const auto& p : ports)
    for (Port x : p) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 16777619u;
    }
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", h);
  return buf;
}

namespace {

struct Best {
  bool found = false;
  int max = 0;
  FixedBends bends;
};

// Smallest per-edge cap that admits a representation, and the least total
// under that cap. Crossed edges share their cap between the two halves.
Best best_for(const EmbeddedGraph& g, const PlanarizedGraph& gp, const PortAssignment& ports) {
  FixedBends free = min_bends_fixed(g, gp, ports);
  std::vector<int> crossed;
  for (int e = 0; e < g.num_edges(); ++e)
    if (gp.parts[e].size() == 2) crossed.push_back(e);
  std::vector<int> caps(gp.plane.num_edges());
  for (int k = 0; k <= free.max; ++k) {
    Best best;
    for (int e = 0; e < g.num_edges(); ++e)
      if (gp.parts[e].size() == 1) caps[gp.parts[e][0]] = k;
    // relaxation: each half alone under the cap
    for (int e : crossed) caps[gp.parts[e][0]] = caps[gp.parts[e][1]] = k;
    FixedBends relaxed = min_bends_fixed(g, gp, ports, &caps);
    if (!relaxed.feasible) continue;
    if (relaxed.max <= k) return {true, relaxed.max, std::move(relaxed)};
    std::vector<int> split(crossed.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < crossed.size(); ++i) {
        caps[gp.parts[crossed[i]][0]] = split[i];
        caps[gp.parts[crossed[i]][1]] = k - split[i];
      }
      FixedBends r = min_bends_fixed(g, gp, ports, &caps);
      if (r.feasible && (!best.found || r.total < best.bends.total)) {
        best.found = true;
        best.max = k;
        best.bends = std::move(r);
      }
      int i = static_cast<int>(crossed.size()) - 1;
      while (i >= 0 && ++split[i] > k) split[i--] = 0;
      if (i < 0) break;
    }
    if (best.found) {
      best.max = best.bends.max;
      return best;
    }
  }
  throw std::logic_error("cap search missed the unconstrained optimum");
}

}  // namespace

OracleResult min_max_bends(const EmbeddedGraph& g, int budget) {
  PlanarizedGraph gp = planarize(g);
  if (gp.plane.num_vertices() > budget)
    throw BudgetExceeded("planarization has " + std::to_string(gp.plane.num_vertices()) +
                         " nodes, budget is " + std::to_string(budget));
  OracleResult res;
  bool have = false;
  for (const auto& pa : port_assignments(g)) {
    Best b = best_for(g, gp, pa);
    res.table.push_back({ports_hash(pa), b.max, b.bends.total});
    if (!have || b.max < res.max_bends || (b.max == res.max_bends && b.bends.total < res.total_bends)) {
      have = true;
      res.max_bends = b.max;
      res.total_bends = b.bends.total;
      res.bends = b.bends.bends;
      res.ports = pa;
      res.witness = realize(b.bends.shape, g);
    }
  }
  return res;
}

int oracle_budget_from_env() {
  const char* s = std::getenv("ONEDRAW_ORACLE_BUDGET");
  if (!s || !*s) return 14;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (*end || v <= 0 || v > 1000) throw std::invalid_argument(std::string("bad ONEDRAW_ORACLE_BUDGET: ") + s);
  return static_cast<int>(v);
}

}  // namespace onedraw
