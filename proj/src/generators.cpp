#include "onedraw/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

namespace onedraw {

namespace {

long long orient(const IPoint& a, const IPoint& b, const IPoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int sgn(long long v) { return (v > 0) - (v < 0); }

bool on_segment_interior(const IPoint& p, const IPoint& a, const IPoint& b) {
  if (orient(a, b, p) != 0) return false;
  long long dot1 = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
  long long len = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
  return dot1 > 0 && dot1 < len;
}

enum class Meet { None, Proper, Degenerate };

Meet segments_meet(const std::vector<IPoint>& pts, std::pair<int, int> e, std::pair<int, int> f) {
  auto [a, b] = e;
  auto [c, d] = f;
  int shared = -1;
  if (a == c || a == d) shared = a;
  if (b == c || b == d) shared = (shared >= 0) ? -2 : b;
  if (shared == -2) return Meet::Degenerate;  // parallel edges
  if (shared >= 0) {
    int x = (shared == a) ? b : a;
    int y = (shared == c) ? d : c;
    const IPoint &s = pts[shared], &p = pts[x], &q = pts[y];
    if (orient(s, p, q) == 0 && (p.x - s.x) * (q.x - s.x) + (p.y - s.y) * (q.y - s.y) > 0) return Meet::Degenerate;
    return Meet::None;
  }
  int d1 = sgn(orient(pts[c], pts[d], pts[a])), d2 = sgn(orient(pts[c], pts[d], pts[b]));
  int d3 = sgn(orient(pts[a], pts[b], pts[c])), d4 = sgn(orient(pts[a], pts[b], pts[d]));
  if (d1 * d2 < 0 && d3 * d4 < 0) return Meet::Proper;
  if (on_segment_interior(pts[a], pts[c], pts[d]) || on_segment_interior(pts[b], pts[c], pts[d]) ||
      on_segment_interior(pts[c], pts[a], pts[b]) || on_segment_interior(pts[d], pts[a], pts[b]))
    return Meet::Degenerate;
  if (d1 == 0 && d2 == 0) {
    // collinear disjoint pieces are fine
    return Meet::None;
  }
  return Meet::None;
}

// angle order in (-pi, pi]
bool angle_less(const IPoint& a, const IPoint& b) {
  auto half = [](const IPoint& p) { return (p.y < 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; };
  // half 0: (-pi, 0]; half 1: (0, pi]
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return a.x * b.y - a.y * b.x > 0;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  std::uint64_t below(std::uint64_t k) { return gen() % k; }
  bool chance(int percent) { return static_cast<int>(below(100)) < percent; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }
};

// Incremental straight-line 1-plane graph with degree cap 4.
struct Builder {
  std::vector<IPoint> pts;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> deg;
  std::vector<int> crossed_by;  // per edge, -1 if uncrossed

  explicit Builder(std::vector<IPoint> p) : pts(std::move(p)), deg(pts.size(), 0) {}

  bool adjacent(int a, int b) const {
    for (auto [u, v] : edges)
      if ((u == a && v == b) || (u == b && v == a)) return true;
    return false;
  }

  bool try_add(int a, int b) {
    if (a == b || deg[a] >= 4 || deg[b] >= 4 || adjacent(a, b)) return false;
    for (int w = 0; w < static_cast<int>(pts.size()); ++w)
      if (w != a && w != b && on_segment_interior(pts[w], pts[a], pts[b])) return false;
    int hit = -1;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      Meet m = segments_meet(pts, {a, b}, edges[e]);
      if (m == Meet::Degenerate) return false;
      if (m == Meet::Proper) {
        if (hit >= 0 || crossed_by[e] >= 0) return false;
        hit = e;
      }
    }
    int id = static_cast<int>(edges.size());
    edges.push_back({a, b});
    crossed_by.push_back(hit);
    if (hit >= 0) crossed_by[hit] = id;
    ++deg[a];
    ++deg[b];
    return true;
  }
};

std::vector<int> union_find_components(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  for (auto [u, v] : edges) p[find(u)] = find(v);
  std::vector<int> c(n);
  for (int i = 0; i < n; ++i) c[i] = find(i);
  return c;
}

}  // namespace

EmbeddedGraph straight_line_graph(const std::vector<IPoint>& pts, const std::vector<std::pair<int, int>>& edges) {
  int n = static_cast<int>(pts.size());
  int m = static_cast<int>(edges.size());
  EmbeddedGraph g;
  for (int v = 0; v < n; ++v) g.add_vertex("v" + std::to_string(v));
  for (int e = 0; e < m; ++e) {
    auto [a, b] = edges[e];
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw std::invalid_argument("bad edge endpoints");
    for (int w = 0; w < n; ++w)
      if (w != a && w != b && on_segment_interior(pts[w], pts[a], pts[b]))
        throw std::invalid_argument("edge passes through a vertex");
    g.add_edge("e" + std::to_string(e), a, b);
  }
  std::vector<int> partner(m, -1);
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f) {
      Meet k = segments_meet(pts, edges[e], edges[f]);
      if (k == Meet::Degenerate) throw std::invalid_argument("degenerate edge contact");
      if (k != Meet::Proper) continue;
      if (partner[e] >= 0 || partner[f] >= 0) throw std::invalid_argument("edge crossed twice");
      partner[e] = f;
      partner[f] = e;
      auto [a, b] = edges[e];
      auto [c, d] = edges[f];
      IPoint ab{pts[a].x - pts[b].x, pts[a].y - pts[b].y}, cb{pts[c].x - pts[b].x, pts[c].y - pts[b].y};
      bool c_after_a = ab.x * cb.y - ab.y * cb.x > 0;
      Crossing cr;
      cr.e1 = e;
      cr.e2 = f;
      cr.ends = c_after_a ? std::array<int, 4>{a, c, b, d} : std::array<int, 4>{a, d, b, c};
      g.crossings.push_back(cr);
    }
  for (int v = 0; v < n; ++v) {
    std::vector<int> inc;
    for (int e = 0; e < m; ++e)
      if (edges[e].first == v || edges[e].second == v) inc.push_back(e);
    std::sort(inc.begin(), inc.end(), [&](int e, int f) {
      int a = g.other(e, v), b = g.other(f, v);
      return angle_less({pts[a].x - pts[v].x, pts[a].y - pts[v].y}, {pts[b].x - pts[v].x, pts[b].y - pts[v].y});
    });
    g.rotation[v] = inc;
  }
  // outer face of each component: the corner facing west at its
  // lexicographically smallest vertex
  PlanarizedGraph p = planarize(g, false);
  std::vector<int> best(p.num_components, -1);
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    int c = p.component[v];
    int b = best[c];
    if (b < 0 || pts[v].x < pts[b].x || (pts[v].x == pts[b].x && pts[v].y < pts[b].y)) best[c] = v;
  }
  std::vector<int> faces;
  for (int c = 0; c < p.num_components; ++c) {
    if (best[c] < 0) continue;
    const auto& r = p.plane.rotation(best[c]);
    faces.push_back(p.faces.face_of[r.back()]);
  }
  set_outer_faces(g, p, faces);
  return g;
}

namespace {

std::vector<IPoint> parabola(int n) {
  std::vector<IPoint> p;
  for (int i = 0; i < n; ++i) p.push_back({i, static_cast<long long>(i) * i});
  return p;
}

void rename(EmbeddedGraph& g, const std::vector<std::string>& names) {
  EmbeddedGraph h;
  for (const auto& s : names) h.add_vertex(s);
  for (const auto& e : g.edges) h.add_edge(names[e.u] + "-" + names[e.v], e.u, e.v);
  h.rotation = g.rotation;
  h.crossings = g.crossings;
  for (auto w : g.outer_walks) {
    for (auto& t : w) {
      if (t[0] == '@') {
        int e = g.edge_index(t.substr(1));
        t = "@" + h.edges[e].id;
      } else {
        t = names[g.vertex_index(t)];
      }
    }
    h.outer_walks.push_back(w);
  }
  g = std::move(h);
}

EmbeddedGraph triangle_family(int t) {
  if (t < 1) throw std::invalid_argument("triangle-family needs t >= 1");
  std::vector<IPoint> pts;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> names;
  const std::vector<IPoint> copy = {{0, 0}, {20, 0}, {10, 20}, {6, 8}, {10, 4}, {14, 8}, {-2, 14}, {22, 14}, {10, 30}};
  const char* local[] = {"a", "b", "c", "d", "e", "f", "g", "k", "h"};
  // a b c d e f g1 g2 h
  const std::vector<std::pair<int, int>> copy_edges = {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 5},
                                                       {2, 3}, {3, 4}, {4, 5}, {6, 3}, {7, 5}, {6, 8}, {7, 8}};
  for (int i = 0; i < t; ++i) {
    int base = static_cast<int>(pts.size());
    for (int k = 0; k < 9; ++k) {
      pts.push_back({copy[k].x + 40LL * i, copy[k].y});
      names.push_back(std::string(local[k]) + std::to_string(i + 1));
    }
    for (auto [u, v] : copy_edges) edges.push_back({base + u, base + v});
    if (i > 0) edges.push_back({base - 9 + 7, base + 6});
  }
  EmbeddedGraph g = straight_line_graph(pts, edges);
  // close the ring through the outer face, passing above all copies
  int first_g = 6, last_k = 9 * (t - 1) + 7;
  PlanarizedGraph p = planarize(g);
  int outer = p.outer_face[0];
  int corner_g = -1, corner_k = -1;
  for (int d : p.faces.darts[outer]) {
    if (p.plane.head(d) == first_g && corner_g < 0) corner_g = p.plane.rot_index(PlaneGraph::twin(d));
    if (p.plane.head(d) == last_k && corner_k < 0) corner_k = p.plane.rot_index(PlaneGraph::twin(d));
  }
  int e = g.add_edge("e" + std::to_string(g.num_edges()), last_k, first_g);
  g.rotation[first_g].insert(g.rotation[first_g].begin() + corner_g, e);
  g.rotation[last_k].insert(g.rotation[last_k].begin() + corner_k, e);
  p = planarize(g, false);
  int pick = -1;
  for (int f = 0; f < static_cast<int>(p.faces.darts.size()); ++f) {
    bool has_edge = false, has_a = false;
    for (int d : p.faces.darts[f]) {
      if (p.origin[PlaneGraph::edge_of(d)] == e) has_edge = true;
      if (p.plane.tail(d) == 0) has_a = true;
    }
    if (has_edge && has_a) pick = f;
  }
  set_outer_faces(g, p, {pick});
  rename(g, names);
  return g;
}

}  // namespace

std::vector<std::string> named_families() {
  return {"k4", "k5-fig4a", "k4-pair-fig5", "no-sc1-fig6d", "triangle-family", "octahedron", "outer-example"};
}

EmbeddedGraph gen_named(const std::string& family, int t) {
  if (family == "k4") {
    EmbeddedGraph g = straight_line_graph({{0, 0}, {10, 0}, {10, 10}, {0, 10}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}});
    rename(g, {"a", "b", "c", "d"});
    return g;
  }
  if (family == "k5-fig4a") {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) e.push_back({i, j});
    EmbeddedGraph g = straight_line_graph({{0, 0}, {20, 0}, {10, 20}, {8, 6}, {12, 6}}, e);
    rename(g, {"a", "b", "c", "d", "e"});
    return g;
  }
  if (family == "k4-pair-fig5") {
    EmbeddedGraph g = straight_line_graph(parabola(8), {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}, {4, 5}, {5, 6}, {6, 7},
                                                        {7, 4}, {4, 6}, {5, 7}, {0, 4}, {3, 7}});
    rename(g, {"a", "b", "c", "d", "p", "q", "r", "s"});
    return g;
  }
  if (family == "no-sc1-fig6d") {
    EmbeddedGraph g = straight_line_graph(parabola(7), {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {4, 5}, {5, 6}, {6, 0}, {0, 5},
                                                        {4, 6}, {3, 4}});
    rename(g, {"s", "p1", "p2", "p3", "q1", "q2", "q3"});
    return g;
  }
  if (family == "triangle-family") return triangle_family(t);
  if (family == "octahedron") {
    EmbeddedGraph g = straight_line_graph({{0, 0}, {30, 0}, {15, 26}, {15, 6}, {10, 15}, {20, 15}},
                                          {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5}});
    rename(g, {"A", "B", "C", "a", "b", "c"});
    return g;
  }
  if (family == "outer-example") {
    return straight_line_graph(parabola(10), {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6},
                                              {6, 8}, {7, 8}, {7, 9}, {9, 0}});
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

EmbeddedGraph random_one_plane(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + 1);
  long long side = 3LL * n + 8;
  std::vector<IPoint> pts;
  while (static_cast<int>(pts.size()) < n) {
    IPoint p{static_cast<long long>(rng.below(side)), static_cast<long long>(rng.below(side))};
    bool dup = std::any_of(pts.begin(), pts.end(), [&](const IPoint& q) { return q.x == p.x && q.y == p.y; });
    if (!dup) pts.push_back(p);
  }
  Builder b(pts);
  std::vector<std::pair<long long, std::pair<int, int>>> cand;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      long long dx = pts[i].x - pts[j].x, dy = pts[i].y - pts[j].y;
      cand.push_back({dx * dx + dy * dy, {i, j}});
    }
  std::sort(cand.begin(), cand.end());
  // short candidates in random order, then connect components
  size_t pool = std::min(cand.size(), static_cast<size_t>(4 * n));
  std::vector<std::pair<int, int>> shortlist;
  for (size_t i = 0; i < pool; ++i) shortlist.push_back(cand[i].second);
  rng.shuffle(shortlist);
  int target = n - 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
  for (auto [u, v] : shortlist) {
    if (static_cast<int>(b.edges.size()) >= target) break;
    b.try_add(u, v);
  }
  for (const auto& c : cand) {
    auto comp = union_find_components(n, b.edges);
    if (comp[c.second.first] != comp[c.second.second]) b.try_add(c.second.first, c.second.second);
  }
  return straight_line_graph(b.pts, b.edges);
}

EmbeddedGraph random_outer_one_plane(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng((seed + 0x51ED2701ULL * attempt) * 0xD1B54A32D192ED03ULL + 7);
    Builder b(parabola(n));
    std::vector<std::pair<int, int>> hull;
    for (int i = 0; i < n; ++i) hull.push_back({i, (i + 1) % n});
    int keep = 70 + static_cast<int>(rng.below(31));
    for (auto [u, v] : hull)
      if (rng.chance(keep)) b.try_add(u, v);
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < n; ++i)
      for (int k = 2; k <= 4 && k < n - 1; ++k) chords.push_back({i, (i + k) % n});
    rng.shuffle(chords);
    int budget = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
    for (auto [u, v] : chords) {
      if (budget <= 0) break;
      if (b.try_add(u, v)) --budget;
    }
    EmbeddedGraph g = straight_line_graph(b.pts, b.edges);
    if (!is_biconnected(g)) {
      for (auto [u, v] : hull) b.try_add(u, v);
      g = straight_line_graph(b.pts, b.edges);
    }
    if (is_biconnected(g)) return g;
  }
}

}  // namespace onedraw
