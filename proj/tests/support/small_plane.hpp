// Brute-force reference for bend minimization on small plane graphs.
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "onedraw/drawing.hpp"
#include "onedraw/graph_model.hpp"

namespace small_plane {

using Edges = std::vector<std::pair<int, int>>;

inline Edges canonical(const Edges& es, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Edges best;
  do {
    Edges cur;
    for (auto [a, b] : es) cur.push_back(std::minmax(perm[a], perm[b]));
    std::sort(cur.begin(), cur.end());
    if (best.empty() || cur < best) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline int vertex_count(const Edges& es) {
  int n = 0;
  for (auto [a, b] : es) n = std::max({n, a + 1, b + 1});
  return n;
}

// Connected simple graphs with 1..max_edges edges and maximum degree 4, one
// per isomorphism class, grown edge by edge.
inline std::vector<Edges> connected_graphs(int max_edges) {
  std::vector<Edges> all;
  std::set<Edges> level{{{0, 1}}};
  for (int m = 1; m <= max_edges; ++m) {
    all.insert(all.end(), level.begin(), level.end());
    if (m == max_edges) break;
    std::set<Edges> next;
    for (const auto& es : level) {
      int n = vertex_count(es);
      std::set<std::pair<int, int>> have(es.begin(), es.end());
      std::vector<int> deg(n + 1, 0);
      for (auto [a, b] : es) ++deg[a], ++deg[b];
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b <= n; ++b) {
          if (have.count({a, b}) || deg[a] == 4 || deg[b] == 4) continue;
          Edges grown = es;
          grown.push_back({a, b});
          next.insert(canonical(grown, std::max(n, b + 1)));
        }
    }
    level = std::move(next);
  }
  return all;
}

inline onedraw::EmbeddedGraph build(const Edges& es, const std::vector<std::vector<int>>& rot) {
  onedraw::EmbeddedGraph g;
  int n = vertex_count(es);
  for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
  for (std::size_t i = 0; i < es.size(); ++i) g.add_edge("e" + std::to_string(i), es[i].first, es[i].second);
  g.rotation = rot;
  return g;
}

// Darts 2e (u to v) and 2e+1; faces keep their darts on the left.
inline std::vector<std::vector<int>> trace_faces(const onedraw::EmbeddedGraph& g) {
  int m = g.num_edges();
  auto tail = [&](int d) { return d & 1 ? g.edges[d / 2].v : g.edges[d / 2].u; };
  auto head = [&](int d) { return d & 1 ? g.edges[d / 2].u : g.edges[d / 2].v; };
  auto out_dart = [&](int e, int v) { return g.edges[e].u == v ? 2 * e : 2 * e + 1; };
  std::vector<bool> seen(2 * m);
  std::vector<std::vector<int>> faces;
  for (int s = 0; s < 2 * m; ++s) {
    if (seen[s]) continue;
    std::vector<int> f;
    for (int d = s; !seen[d];) {
      seen[d] = true;
      f.push_back(d);
      int v = head(d);
      const auto& r = g.rotation[v];
      int i = static_cast<int>(std::find(r.begin(), r.end(), d / 2) - r.begin());
      // next dart leaves v just clockwise of the reverse of d
      int j = (i + static_cast<int>(r.size()) - 1) % static_cast<int>(r.size());
      d = out_dart(r[j], v);
    }
    faces.push_back(f);
    (void)tail;
  }
  return faces;
}

// All plane embeddings (rotation systems of genus 0).
inline std::vector<std::vector<std::vector<int>>> plane_rotations(const Edges& es) {
  int n = vertex_count(es);
  std::vector<std::vector<int>> inc(n);
  for (std::size_t i = 0; i < es.size(); ++i) {
    inc[es[i].first].push_back(static_cast<int>(i));
    inc[es[i].second].push_back(static_cast<int>(i));
  }
  std::vector<std::vector<std::vector<int>>> opts(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> rest(inc[v].begin() + 1, inc[v].end());
    do {
      std::vector<int> r{inc[v][0]};
      r.insert(r.end(), rest.begin(), rest.end());
      opts[v].push_back(r);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) rot[v] = opts[v][pick[v]];
    auto g = build(es, rot);
    if (n - static_cast<int>(es.size()) + static_cast<int>(trace_faces(g).size()) == 2) out.push_back(rot);
    int v = n - 1;
    while (v >= 0 && ++pick[v] == opts[v].size()) pick[v--] = 0;
    if (v < 0) break;
  }
  return out;
}

// Every rotation-consistent port assignment with the first edge of each
// rotation at port E.
inline std::vector<onedraw::PortAssignment> angle_choices(const onedraw::EmbeddedGraph& g) {
  std::vector<onedraw::PortAssignment> out{onedraw::PortAssignment(g.num_edges())};
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto& r = g.rotation[v];
    std::vector<std::vector<int>> seqs;
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b)
        for (int c = b; c < 4; ++c) {
          std::vector<int> s{0};
          for (int x : {a, b, c})
            if (static_cast<int>(s.size()) < static_cast<int>(r.size())) s.push_back(x);
          bool inc = true;
          for (std::size_t i = 1; i < s.size(); ++i) inc = inc && s[i] > s[i - 1];
          if (inc && std::find(seqs.begin(), seqs.end(), s) == seqs.end()) seqs.push_back(s);
        }
    std::vector<onedraw::PortAssignment> next;
    for (const auto& pa : out)
      for (const auto& s : seqs) {
        auto q = pa;
        for (std::size_t i = 0; i < r.size(); ++i) q[r[i]][g.edges[r[i]].u == v ? 0 : 1] = static_cast<onedraw::Port>(s[i]);
        next.push_back(q);
      }
    out = std::move(next);
  }
  return out;
}

// Least total of |t_e| over integer net turns t_e (left turns walking u to
// v) such that every face turns +4, the outer face (containing outer_dart)
// -4. Returns -1 if nothing within `limit`.
inline int min_total_bends(const onedraw::EmbeddedGraph& g, const onedraw::PortAssignment& ports, int outer_dart,
                           int limit = 12) {
  auto faces = trace_faces(g);
  auto port_at = [&](int d) {
    int e = d / 2;
    return static_cast<int>(ports[e][d & 1]);
  };
  int m = g.num_edges();
  std::vector<int> need(faces.size());
  std::vector<std::vector<std::pair<int, int>>> uses(faces.size());  // (edge, sign)
  std::vector<int> last_edge(faces.size(), -1);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    bool outer = std::find(faces[f].begin(), faces[f].end(), outer_dart) != faces[f].end();
    int turn = 0;
    for (std::size_t i = 0; i < faces[f].size(); ++i) {
      int d = faces[f][i], nd = faces[f][(i + 1) % faces[f].size()];
      int back = port_at(d ^ 1), fwd = port_at(nd);
      int angle = ((back - fwd) % 4 + 4) % 4;
      if (angle == 0) angle = 4;
      turn += 2 - angle;
      uses[f].push_back({d / 2, d & 1 ? -1 : 1});
      last_edge[f] = std::max(last_edge[f], d / 2);
    }
    need[f] = (outer ? -4 : 4) - turn;
  }
  std::vector<int> t(m, 0);
  std::function<bool(int, int)> go = [&](int e, int budget) -> bool {
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (last_edge[f] != e - 1) continue;
      int s = 0;
      for (auto [x, sg] : uses[f]) s += sg * t[x];
      if (s != need[f]) return false;
    }
    if (e == m) return budget == 0;
    for (int v = -budget; v <= budget; ++v) {
      t[e] = v;
      if (go(e + 1, budget - std::abs(v))) return true;
    }
    t[e] = 0;
    return false;
  };
  for (int total = 0; total <= limit; ++total)
    if (go(0, total)) return total;
  return -1;
}

}  // namespace small_plane
