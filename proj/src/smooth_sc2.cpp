#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "onedraw/smooth_layout.hpp"

namespace onedraw {

struct Sc2Plan {
  std::vector<Rational> t;                  // per vertex
  std::vector<std::array<Port, 2>> ports;   // at edges[e].u, edges[e].v
  std::vector<Curve> curves;                // from edges[e].u
  std::vector<std::vector<bool>> above;     // per primitive of curves[e]
  std::vector<bool> spine;
  int units = 0;
};

namespace {

RPoint diag(const Rational& t) { return {t, -t}; }

// ---------------------------------------------------------------------------
// Shapes. A core runs above the diagonal from P to Q (tP < tQ) and leaves P
// on port a, arrives at Q on port b, both E or N.

Curve core_curve(const Rational& tp, const Rational& tq, Port a, Port b) {
  Rational d = tq - tp;
  RPoint p = diag(tp), q = diag(tq);
  if (a == Port::E && b == Port::N) return {Primitive::arc({tp, -tq}, p, 1, false)};
  if (a == Port::N && b == Port::E) return {Primitive::arc({tq, -tp}, p, 3, false)};
  if (a == Port::E && b == Port::E) {
    RPoint corner{tq, -tp};
    return {Primitive::segment(p, corner), Primitive::arc({tq, -tp - d / 2}, corner, 2, false)};
  }
  if (a == Port::N && b == Port::N) {
    RPoint corner{tq, -tp};
    return {Primitive::arc({tp + d / 2, -tp}, p, 2, false), Primitive::segment(corner, q)};
  }
  throw std::logic_error("core ports must be E or N");
}

// Quarter arc below the diagonal from (tp) to (tq), tp < tq: leaves on S,
// arrives on W.
Primitive spine_arc(const Rational& tp, const Rational& tq) {
  return Primitive::arc({tq, -tp}, diag(tp), 1, true);
}

Primitive reversed_primitive(const Primitive& p) {
  if (p.is_arc()) return Primitive::arc(p.center, p.to, p.quarters, !p.ccw);
  return Primitive::segment(p.to, p.from);
}

// Edge below the diagonal from (tl) to (tr), tl < tr, leaving and arriving
// on S (drop, then semicircle) or on W (semicircle, then run).
Curve underpass(const Rational& tl, const Rational& tr, Port p) {
  Rational d = tr - tl;
  RPoint corner{tl, -tr};
  if (p == Port::S) return {Primitive::segment(diag(tl), corner), Primitive::arc({tl + d / 2, -tr}, corner, 2, true)};
  return {Primitive::arc({tl, -tl - d / 2}, diag(tl), 2, true), Primitive::segment(corner, diag(tr))};
}

int core_cost(Port a, Port b) { return a == b ? 2 : 1; }

// ---------------------------------------------------------------------------
// Exact side tests relative to the diagonal x + y = 0.

std::vector<int> quadrants(const Primitive& p) {
  std::vector<int> out;
  if (!p.is_arc()) return out;
  Rational dx = p.from.x - p.center.x, dy = p.from.y - p.center.y;
  int a = dx > 0 ? 0 : dy > 0 ? 1 : dx < 0 ? 2 : 3;
  for (int k = 0; k < p.quarters; ++k) out.push_back(p.ccw ? (a + k) % 4 : ((a - 1 - k) % 4 + 4) % 4);
  return out;
}

// Strictly on one side except possibly at its endpoints.
bool on_side(const Primitive& p, int side) {
  Rational f = side * (p.from.x + p.from.y), g = side * (p.to.x + p.to.y);
  if (f < 0 || g < 0) return false;
  if (!p.is_arc()) return f > 0 || g > 0;
  // the extreme of x + y towards the diagonal lies at 225 deg (above) or 45 deg (below)
  int q = side > 0 ? 2 : 0;
  auto qs = quadrants(p);
  if (std::find(qs.begin(), qs.end(), q) == qs.end()) return true;
  Rational s = side * (p.center.x + p.center.y);
  return s > 0 && s * s > 2 * p.radius * p.radius;
}

struct Box {
  Rational x0, y0, x1, y1;
};

Box box_of(const Curve& c) {
  Box b{c[0].from.x, c[0].from.y, c[0].from.x, c[0].from.y};
  auto add = [&](const Rational& x, const Rational& y) {
    b.x0 = std::min(b.x0, x);
    b.x1 = std::max(b.x1, x);
    b.y0 = std::min(b.y0, y);
    b.y1 = std::max(b.y1, y);
  };
  for (const Primitive& p : c) {
    add(p.to.x, p.to.y);
    if (p.is_arc()) {
      add(p.center.x - p.radius, p.center.y - p.radius);
      add(p.center.x + p.radius, p.center.y + p.radius);
    }
  }
  return b;
}

bool boxes_apart(const Box& a, const Box& b) {
  return a.x1 < b.x0 || b.x1 < a.x0 || a.y1 < b.y0 || b.y1 < a.y0;
}

// ---------------------------------------------------------------------------
// Embedding checks.

bool interleave(int p, int q, int r, int s, int n, const std::vector<int>& pos) {
  auto inside = [&](int v, int a, int b) {
    int da = (pos[v] - pos[a] + n) % n, db = (pos[b] - pos[a] + n) % n;
    return da > 0 && da < db;
  };
  if (r == p || r == q || s == p || s == q) return false;
  return inside(r, p, q) != inside(s, p, q);
}

// Do the rotations and crossings of g match a drawing with the vertices in
// convex position in the cyclic order cyc (ccw) and straight edges?
bool convex_order(const EmbeddedGraph& g, const std::vector<int>& cyc) {
  int n = g.num_vertices();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[cyc[i]] = i;
  for (int v = 0; v < n; ++v) {
    const auto& rot = g.rotation[v];
    if (rot.empty()) continue;
    std::vector<int> sorted = rot;
    auto key = [&](int e) { return (pos[g.other(e, v)] - pos[v] + n) % n; };
    std::sort(sorted.begin(), sorted.end(), [&](int a, int b) { return key(a) < key(b); });
    int k = static_cast<int>(rot.size());
    int s = static_cast<int>(std::find(rot.begin(), rot.end(), sorted[0]) - rot.begin());
    for (int i = 0; i < k; ++i)
      if (rot[(s + i) % k] != sorted[i]) return false;
  }
  for (int a = 0; a < g.num_edges(); ++a)
    for (int b = a + 1; b < g.num_edges(); ++b) {
      const Edge &ea = g.edges[a], &eb = g.edges[b];
      bool x = interleave(ea.u, ea.v, eb.u, eb.v, n, pos);
      int k = g.crossing_of(a);
      bool c = k >= 0 && (g.crossings[k].e1 == b || g.crossings[k].e2 == b);
      if (x != c) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Auxiliary graph.

struct AuxEdge {
  int u, v, origin;
  bool half;
  int crossing;
};

void build_aux(Sc2State& st, bool closers) {
  const EmbeddedGraph& g = *st.graph;
  int n = g.num_vertices(), k_count = static_cast<int>(g.crossings.size());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[st.cyc[i]] = i;
  std::vector<RPoint> model(n + k_count);
  for (int v = 0; v < n; ++v) model[v] = {Rational(pos[v]), Rational(pos[v] * pos[v])};
  for (int k = 0; k < k_count; ++k) {
    const Edge &a = g.edges[g.crossings[k].e1], &b = g.edges[g.crossings[k].e2];
    const RPoint &p = model[a.u], &q = model[a.v], &r = model[b.u], &s = model[b.v];
    Rational d1x = q.x - p.x, d1y = q.y - p.y, d2x = s.x - r.x, d2y = s.y - r.y;
    Rational den = d1x * d2y - d1y * d2x;
    Rational lam = ((r.x - p.x) * d2y - (r.y - p.y) * d2x) / den;
    model[n + k] = {p.x + lam * d1x, p.y + lam * d1y};
  }
  std::vector<AuxEdge> edges;
  for (int e = 0; e < g.num_edges(); ++e) {
    int k = g.crossing_of(e);
    const Edge& ed = g.edges[e];
    if (k < 0) {
      edges.push_back({ed.u, ed.v, e, false, -1});
    } else if (st.planar.dummy_kind[k] != DummyKind::Cut) {
      edges.push_back({ed.u, n + k, e, true, k});
      edges.push_back({n + k, ed.v, e, true, k});
    }
  }
  auto present = [&](int a, int b) {
    for (const AuxEdge& x : edges)
      if (!x.half && ((x.u == a && x.v == b) || (x.u == b && x.v == a))) return true;
    return false;
  };
  auto sorted_ends = [&](int k, const std::vector<int>& key) {
    std::array<int, 4> q = g.crossings[k].ends;
    std::sort(q.begin(), q.end(), [&](int a, int b) { return key[a] < key[b]; });
    return q;
  };
  for (int k = 0; k < k_count; ++k) {
    if (st.planar.dummy_kind[k] != DummyKind::Cut) continue;
    auto q = sorted_ends(k, pos);
    for (int i = 0; i < 4; ++i)
      if (!present(q[i], q[(i + 1) % 4])) edges.push_back({q[i], q[(i + 1) % 4], -1, false, k});
  }
  if (closers) {
    for (int k = 0; k < k_count; ++k) {
      if (st.planar.dummy_kind[k] != DummyKind::In) continue;
      auto q = sorted_ends(k, st.rank);
      if (!present(q[1], q[2])) edges.push_back({q[1], q[2], -1, false, k});
    }
  }
  PlaneGraph pg;
  for (int v = 0; v < n + k_count; ++v) pg.add_vertex();
  st.aux_origin.clear();
  st.aux_half.clear();
  st.aux_crossing.clear();
  for (const AuxEdge& x : edges) {
    pg.add_edge(x.u, x.v);
    st.aux_origin.push_back(x.origin);
    st.aux_half.push_back(x.half);
    st.aux_crossing.push_back(x.crossing);
  }
  for (int v = 0; v < n + k_count; ++v) {
    std::vector<int> darts = pg.rotation(v);
    auto dir = [&](int d) {
      const RPoint &a = model[pg.tail(d)], &b = model[pg.head(d)];
      return std::pair<Rational, Rational>(b.x - a.x, b.y - a.y);
    };
    auto half = [](const std::pair<Rational, Rational>& w) { return (w.second > 0 || (w.second == 0 && w.first > 0)) ? 0 : 1; };
    std::sort(darts.begin(), darts.end(), [&](int a, int b) {
      auto wa = dir(a), wb = dir(b);
      int ha = half(wa), hb = half(wb);
      if (ha != hb) return ha < hb;
      return wa.first * wb.second - wa.second * wb.first > 0;
    });
    pg.set_rotation(v, darts);
  }
  st.aux = pg;
  st.aux_faces = pg.faces();
  int nf = static_cast<int>(st.aux_faces.darts.size());
  st.aux_outer = -1;
  Rational best;
  for (int f = 0; f < nf; ++f) {
    Rational area = 0;
    for (int d : st.aux_faces.darts[f]) {
      const RPoint &a = model[pg.tail(d)], &b = model[pg.head(d)];
      area += a.x * b.y - a.y * b.x;
    }
    if (st.aux_outer < 0 || area < best) {
      st.aux_outer = f;
      best = area;
    }
  }
  st.caged.assign(nf, -1);
  for (int k = 0; k < k_count; ++k) {
    if (st.planar.dummy_kind[k] != DummyKind::Cut) continue;
    auto q = sorted_ends(k, pos);
    for (int a = 0; a < pg.num_edges(); ++a) {
      if (st.aux_half[a]) continue;
      auto ends = pg.ends(a);
      if (ends[0] == q[0] && ends[1] == q[1]) st.caged[st.aux_faces.face_of[2 * a]] = k;
      else if (ends[0] == q[1] && ends[1] == q[0]) st.caged[st.aux_faces.face_of[2 * a + 1]] = k;
      else continue;
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// Port plan and positions for one choice of start edge.

struct Core {
  int edge;
  int lo, hi;  // point indices
  Port a, b;   // effective ports
};

struct Unit {
  int lo, hi;
  std::vector<int> cores;
  int parent = -1;
  std::vector<int> children;
  std::vector<Rational> local;  // positions of points lo..hi in [0, 1]
};

enum class Shape { Arc, Under, Core };

bool interleaved(long a, long b, long c, long d) { return (a < c && c < b && b < d) || (c < a && a < d && d < b); }

class Planner {
 public:
  // With arc_start the start edge must be a single three-quarter arc.
  Planner(const EmbeddedGraph& g, const std::vector<int>& order, int start_edge, bool arc_start)
      : g_(g), n_(g.num_vertices()), m_(g.num_edges()), order_(order), start_(start_edge), arc_start_(arc_start) {
    rank_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) rank_[order_[i]] = i;
  }

  std::shared_ptr<Sc2Plan> run() {
    std::shared_ptr<Sc2Plan> plan;
    int leaves = 0;
    bool found = assign_ports([&] {
      plan = realize_ports();
      return plan != nullptr || ++leaves >= 64;
    });
    if (!found && leaves == 0) return failed("no port assignment");
    return plan;
  }

  const std::string& reason() const { return reason_; }

 private:
  std::shared_ptr<Sc2Plan> failed(const std::string& why) {
    reason_ = why;
    return nullptr;
  }

  int left(int e) const { return rank_[g_.edges[e].u] < rank_[g_.edges[e].v] ? g_.edges[e].u : g_.edges[e].v; }
  int right(int e) const { return g_.other(e, left(e)); }
  bool adjacent(int e) const { return rank_[right(e)] - rank_[left(e)] == 1; }

  bool crosses(int e, int f) const {
    int k = g_.crossing_of(e);
    return k >= 0 && (g_.crossings[k].e1 == f || g_.crossings[k].e2 == f);
  }

  Shape shape(int e) const {
    Port l = port_[e][0], r = port_[e][1];
    if (l == Port::S && r == Port::W) return Shape::Arc;
    if (l == r && (l == Port::S || l == Port::W)) return Shape::Under;
    return Shape::Core;
  }

  bool edge_ok(int e) const {
    Port l = port_[e][0], r = port_[e][1];
    if (l == Port::S && r == Port::W) return adjacent(e);
    if (l == Port::W && r == Port::S) return false;
    if (shape(e) == Shape::Under) return true;
    int dips = (l == Port::S || l == Port::W) + (r == Port::S || r == Port::W);
    return core_cost(effective(l), effective(r)) + dips <= 2;
  }

  static Port effective(Port p) { return p == Port::S ? Port::E : p == Port::W ? Port::N : p; }

  // Position keys along the diagonal: vertex i at 3i, a dip on W at 3i - 2,
  // a dip on S at 3i + 2.
  long end_key(int e, int side) const {
    long i = rank_[side == 0 ? left(e) : right(e)];
    Port p = port_[e][side];
    return p == Port::S ? 3 * i + 2 : p == Port::W ? 3 * i - 2 : 3 * i;
  }

  // Crossings the plan gives edges e and f (both fully assigned).
  int expected_meetings(int e, int f) const {
    Shape se = shape(e), sf = shape(f);
    if (se == Shape::Arc || sf == Shape::Arc) return 0;
    if (se == Shape::Under || sf == Shape::Under) {
      if (se != sf) return 0;
      return interleaved(rank_[left(e)], rank_[right(e)], rank_[left(f)], rank_[right(f)]) ? 1 : 0;
    }
    int count = interleaved(end_key(e, 0), end_key(e, 1), end_key(f, 0), end_key(f, 1)) ? 1 : 0;
    for (auto p : dip_keys(e))
      for (auto q : dip_keys(f))
        if (interleaved(p.first, p.second, q.first, q.second)) ++count;
    return count;
  }

  std::vector<std::pair<long, long>> dip_keys(int e) const {
    std::vector<std::pair<long, long>> out;
    for (int side = 0; side < 2; ++side) {
      long v = 3L * rank_[side == 0 ? left(e) : right(e)], k = end_key(e, side);
      if (k != v) out.push_back({std::min(k, v), std::max(k, v)});
    }
    return out;
  }

  std::shared_ptr<Sc2Plan> realize_ports() {
    cores_.clear();
    units_.clear();
    sorted_.clear();
    if (!build_points()) return failed("virtual points collide");
    if (!build_units()) return failed("edge spans do not nest");
    for (int u = static_cast<int>(sorted_.size()) - 1; u >= 0; --u)
      if (!layout_unit(sorted_[u])) {
        std::string what = "no spacing separates the edges under";
        for (int c : units_[sorted_[u]].cores) what += " " + g_.edges[cores_[c].edge].id;
        return failed(what);
      }
    return finish();
  }

  // Where an end sits in the ccw order starting from the diagonal towards later
  // vertices: above going right, above going left, below going left, below
  // going right, each ordered so that nested curves do not meet.
  std::pair<int, int> end_class(int e, int v) const {
    int side = left(e) == v ? 0 : 1;
    int d = 2 * (rank_[right(e)] - rank_[left(e)]);
    Port p = port_[e][side];
    if (p == Port::E || p == Port::N) return side == 0 ? std::pair{0, d} : std::pair{1, -d};
    Shape sh = shape(e);
    if (p == Port::S) {
      if (side == 1) return sh == Shape::Under ? std::pair{2, d} : std::pair{3, -1};
      return sh == Shape::Core ? std::pair{3, -1} : std::pair{3, -d};
    }
    if (side == 0) return sh == Shape::Under ? std::pair{3, -d} : std::pair{2, 1};
    return sh == Shape::Core ? std::pair{2, 1} : std::pair{2, d};
  }

  bool vertex_ok(int v) const {
    std::vector<std::pair<int, std::pair<int, int>>> ends;
    for (int e : g_.rotation[v]) ends.push_back({static_cast<int>(port_[e][left(e) == v ? 0 : 1]), end_class(e, v)});
    std::sort(ends.begin(), ends.end());
    for (size_t j = 1; j < ends.size(); ++j)
      if (!(ends[j - 1].second < ends[j].second)) return false;
    return true;
  }

  // Enumerates port assignments until leaf() accepts one.
  bool assign_ports(const std::function<bool()>& leaf) {
    port_.assign(m_, {Port::E, Port::E});
    std::vector<std::vector<int>> at(n_);
    std::vector<std::vector<std::vector<Port>>> options(n_);
    for (int i = 0; i < n_; ++i) {
      int v = order_[i];
      at[i] = g_.rotation[v];
      std::sort(at[i].begin(), at[i].end(), [&](int a, int b) {
        return (rank_[g_.other(a, v)] - i + n_) % n_ < (rank_[g_.other(b, v)] - i + n_) % n_;
      });
      int k = static_cast<int>(at[i].size());
      std::vector<std::pair<int, std::vector<Port>>> opts;
      for (int mask = 0; mask < 16; ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<Port> ports;
        for (int p = 0; p < 4; ++p)
          if (mask >> p & 1) ports.push_back(static_cast<Port>(p));
        for (int off = 0; off < k; ++off) {
          std::vector<Port> sel(k);
          int score = 0;
          for (int j = 0; j < k; ++j) {
            sel[j] = ports[(j + off) % k];
            int e = at[i][j];
            bool is_left = left(e) == v;
            if (adjacent(e) && ((is_left && sel[j] == Port::S) || (!is_left && sel[j] == Port::W))) score += 20;
            if (sel[j] == Port::E || sel[j] == Port::N) score += 5;
            if (sel[j] == Port::N && is_left) score += 1;
            if (sel[j] == Port::E && !is_left) score += 1;
            // the start edge as one three-quarter arc
            if (e == start_ && sel[j] == (is_left ? Port::N : Port::E)) score += 40;
          }
          bool keep = true;
          for (int j = 0; j < k; ++j)
            if (arc_start_ && at[i][j] == start_ && sel[j] != (left(start_) == v ? Port::N : Port::E)) keep = false;
          if (keep) opts.push_back({-score, sel});
        }
      }
      std::stable_sort(opts.begin(), opts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (auto& o : opts) options[i].push_back(o.second);
    }
    std::vector<std::vector<int>> complete_at(n_);
    for (int j = 0; j < n_; ++j) {
      int last = j;
      for (int e : g_.rotation[order_[j]]) last = std::max(last, rank_[g_.other(e, order_[j])]);
      complete_at[last].push_back(order_[j]);
    }
    std::vector<int> done;
    long budget = arc_start_ ? 20000 : 200000;
    std::function<bool(int)> dfs = [&](int i) -> bool {
      if (i == n_) return leaf();
      int v = order_[i];
      for (const auto& sel : options[i]) {
        if (--budget < 0) return false;
        for (size_t j = 0; j < sel.size(); ++j) {
          int e = at[i][j];
          port_[e][left(e) == v ? 0 : 1] = sel[j];
        }
        size_t mark = done.size();
        bool ok = true;
        for (int e : at[i]) {
          if (rank_[g_.other(e, v)] > i) continue;
          if (!edge_ok(e)) {
            ok = false;
            break;
          }
          for (int f : done)
            if (expected_meetings(e, f) != (crosses(e, f) ? 1 : 0)) {
              ok = false;
              break;
            }
          if (!ok) break;
          done.push_back(e);
        }
        if (ok)
          for (int w : complete_at[i])
            if (!vertex_ok(w)) {
              ok = false;
              break;
            }
        if (ok && dfs(i + 1)) return true;
        done.resize(mark);
      }
      return false;
    };
    return dfs(0);
  }

  bool build_points() {
    std::vector<long> keys;
    for (int i = 0; i < n_; ++i) keys.push_back(3L * i);
    for (int e = 0; e < m_; ++e)
      if (shape(e) == Shape::Core)
        for (int s = 0; s < 2; ++s)
          if (end_key(e, s) % 3 != 0) keys.push_back(end_key(e, s));
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) return false;
    auto index = [&](long key) { return static_cast<int>(std::lower_bound(keys.begin(), keys.end(), key) - keys.begin()); };
    point_count_ = static_cast<int>(keys.size());
    vpoint_.assign(n_, 0);
    for (int i = 0; i < n_; ++i) vpoint_[i] = index(3L * i);
    core_of_.assign(m_, -1);
    for (int e = 0; e < m_; ++e) {
      if (shape(e) != Shape::Core) continue;
      Core c{e, index(end_key(e, 0)), index(end_key(e, 1)), effective(port_[e][0]), effective(port_[e][1])};
      if (c.lo >= c.hi) return false;
      core_of_[e] = static_cast<int>(cores_.size());
      cores_.push_back(c);
    }
    return true;
  }

  bool build_units() {
    for (int e = 0; e < m_; ++e)
      for (int f = e + 1; f < m_; ++f)
        if (expected_meetings(e, f) != (crosses(e, f) ? 1 : 0)) return false;
    int c = static_cast<int>(cores_.size());
    std::vector<int> partner(c, -1);
    for (int i = 0; i < c; ++i)
      for (int j = i + 1; j < c; ++j)
        if (interleaved(cores_[i].lo, cores_[i].hi, cores_[j].lo, cores_[j].hi)) {
          if (partner[i] >= 0 || partner[j] >= 0) return false;
          partner[i] = j;
          partner[j] = i;
        }
    for (int i = 0; i < c; ++i) {
      if (partner[i] >= 0 && partner[i] < i) continue;
      Unit u;
      u.cores.push_back(i);
      if (partner[i] >= 0) {
        u.cores.push_back(partner[i]);
        if (cores_[u.cores[1]].lo < cores_[u.cores[0]].lo) std::swap(u.cores[0], u.cores[1]);
      }
      u.lo = cores_[u.cores[0]].lo;
      u.hi = cores_[u.cores.back()].hi;
      units_.push_back(u);
    }
    int top = static_cast<int>(units_.size());
    units_.push_back(Unit{0, point_count_ - 1, {}, -1, {}, {}});
    std::vector<int> rest(top);
    std::iota(rest.begin(), rest.end(), 0);
    std::sort(rest.begin(), rest.end(), [&](int a, int b) {
      const Unit &x = units_[a], &y = units_[b];
      if (x.lo != y.lo) return x.lo < y.lo;
      if (x.hi != y.hi) return x.hi > y.hi;
      return x.cores.size() < y.cores.size();
    });
    sorted_ = {top};
    sorted_.insert(sorted_.end(), rest.begin(), rest.end());
    std::vector<int> stack{top};
    for (int id : rest) {
      Unit& u = units_[id];
      while (units_[stack.back()].hi <= u.lo) stack.pop_back();
      Unit& p = units_[stack.back()];
      if (u.hi > p.hi) return false;
      if (u.lo == p.lo && u.hi == p.hi && p.cores.size() == 1 && u.cores.size() != 2) return false;
      u.parent = stack.back();
      p.children.push_back(id);
      stack.push_back(id);
    }
    return true;
  }

  // Curves of the cores of unit u with positions pos (indexed by point - base).
  std::vector<std::pair<int, Curve>> unit_curves(int u, const std::vector<Rational>& pos, int base) const {
    std::vector<std::pair<int, Curve>> out;
    for (int c : units_[u].cores) {
      const Core& k = cores_[c];
      out.push_back({c, core_curve(pos[k.lo - base], pos[k.hi - base], k.a, k.b)});
    }
    return out;
  }

  bool separate(const std::pair<int, Curve>& a, const std::pair<int, Curve>& b, const Box& ba, const Box& bb,
                const std::vector<Rational>& pos, int base, int want) const {
    if (want == 0 && boxes_apart(ba, bb)) return true;
    const Core &x = cores_[a.first], &y = cores_[b.first];
    std::vector<RPoint> shared;
    for (int p : {x.lo, x.hi})
      if (p == y.lo || p == y.hi) shared.push_back(diag(pos[p - base]));
    CurveMeeting m = curve_meeting(a.second, b.second, shared);
    return !m.contact && m.crossings == want;
  }

  bool layout_unit(int id) {
    Unit& u = units_[id];
    std::map<int, int> child_at;
    for (int c : u.children) child_at[units_[c].lo] = c;
    struct Item {
      int lo, hi, child, section;
    };
    std::vector<Item> items;
    int b1 = u.hi + 1, b2 = u.hi + 1;
    if (u.cores.size() == 2) {
      b1 = cores_[u.cores[1]].lo;
      b2 = cores_[u.cores[0]].hi;
    }
    for (int p = u.lo; p < u.hi;) {
      int sec = p < b1 ? 0 : p < b2 ? 1 : 2;
      auto it = child_at.find(p);
      if (it != child_at.end()) {
        items.push_back({p, units_[it->second].hi, it->second, sec});
        p = units_[it->second].hi;
      } else {
        items.push_back({p, p + 1, -1, sec});
        ++p;
      }
    }
    std::vector<std::array<int, 3>> patterns{{1, 1, 1}};
    if (u.cores.size() == 2) {
      for (int a : {1, 2, 4})
        for (int b : {1, 2, 4})
          for (int c : {1, 2, 4})
            if (!(a == 1 && b == 1 && c == 1)) patterns.push_back({a, b, c});
      std::stable_sort(patterns.begin(), patterns.end(),
                       [](const auto& x, const auto& y) { return x[0] + x[1] + x[2] < y[0] + y[1] + y[2]; });
    }
    auto attempt = [&](const std::vector<int>& gaps, const std::vector<std::array<int, 3>>& pats) {
    for (int gap : gaps) {
      for (const auto& pat : pats) {
        std::vector<Rational> pos(u.hi - u.lo + 1);
        Rational at = 0;
        for (const Item& it : items) {
          Rational len = it.child >= 0 ? Rational(pat[it.section]) : Rational(gap * pat[it.section]);
          if (it.child >= 0) {
            const Unit& c = units_[it.child];
            for (int p = c.lo; p <= c.hi; ++p) pos[p - u.lo] = at + len * c.local[p - c.lo];
          } else {
            pos[it.lo - u.lo] = at;
            pos[it.hi - u.lo] = at + len;
          }
          at += len;
        }
        for (auto& x : pos) x /= at;
        if (check_unit(id, pos)) {
          u.local = std::move(pos);
          return true;
        }
      }
    }
    return false;
    };
    if (attempt({2, 4, 8, 16, 32, 64}, patterns)) return true;
    if (u.cores.size() != 2) return false;
    // An outer section sometimes has to be as wide as the middle one.
    std::vector<std::array<int, 3>> wide;
    for (int a : {1, 8, 32, 128})
      for (int c : {1, 8, 32, 128})
        if (a > 4 || c > 4) wide.push_back({a, 1, c});
    return attempt({2, 8}, wide);
  }

  bool check_unit(int id, const std::vector<Rational>& pos) const {
    const Unit& u = units_[id];
    auto own = unit_curves(id, pos, u.lo);
    std::vector<std::pair<int, Curve>> kids;
    std::vector<int> kid_unit;
    for (int c : u.children)
      for (auto& x : unit_curves(c, pos, u.lo)) {
        kids.push_back(std::move(x));
        kid_unit.push_back(c);
      }
    std::vector<Box> own_box, kid_box;
    for (auto& x : own) own_box.push_back(box_of(x.second));
    for (auto& x : kids) kid_box.push_back(box_of(x.second));
    if (own.size() == 2 && !separate(own[0], own[1], own_box[0], own_box[1], pos, u.lo, 1)) return false;
    for (size_t i = 0; i < own.size(); ++i)
      for (size_t j = 0; j < kids.size(); ++j)
        if (!separate(own[i], kids[j], own_box[i], kid_box[j], pos, u.lo, 0)) return false;
    for (size_t i = 0; i < kids.size(); ++i)
      for (size_t j = i + 1; j < kids.size(); ++j) {
        if (kid_unit[i] == kid_unit[j]) continue;  // a crossing pair, checked inside the child
        if (!separate(kids[i], kids[j], kid_box[i], kid_box[j], pos, u.lo, 0)) return false;
      }
    return true;
  }

  std::shared_ptr<Sc2Plan> finish() {
    auto plan = std::make_shared<Sc2Plan>();
    const Unit& top = units_[sorted_[0]];
    Rational scale = 4 * n_;
    std::vector<Rational> t(point_count_);
    for (int p = 0; p < point_count_; ++p) t[p] = scale * top.local[p];
    plan->t.assign(n_, 0);
    for (int i = 0; i < n_; ++i) plan->t[order_[i]] = t[vpoint_[i]];
    plan->units = static_cast<int>(units_.size()) - 1;
    plan->ports.assign(m_, {Port::E, Port::E});
    plan->curves.assign(m_, {});
    plan->above.assign(m_, {});
    plan->spine.assign(m_, false);
    for (int e = 0; e < m_; ++e) {
      int l = left(e), r = right(e);
      Rational tl = t[vpoint_[rank_[l]]], tr = t[vpoint_[rank_[r]]];
      Curve c;
      std::vector<bool> above;
      switch (shape(e)) {
        case Shape::Arc:
          c.push_back(spine_arc(tl, tr));
          above.push_back(false);
          plan->spine[e] = true;
          break;
        case Shape::Under:
          c = underpass(tl, tr, port_[e][0]);
          above = {false, false};
          break;
        case Shape::Core: {
          const Core& k = cores_[core_of_[e]];
          Rational tp = t[k.lo], tq = t[k.hi];
          if (port_[e][0] == Port::S) {
            c.push_back(spine_arc(tl, tp));
            above.push_back(false);
          } else if (port_[e][0] == Port::W) {
            c.push_back(reversed_primitive(spine_arc(tp, tl)));
            above.push_back(false);
          }
          for (const Primitive& p : core_curve(tp, tq, k.a, k.b)) {
            c.push_back(p);
            above.push_back(true);
          }
          if (port_[e][1] == Port::S) {
            c.push_back(reversed_primitive(spine_arc(tr, tq)));
            above.push_back(false);
          } else if (port_[e][1] == Port::W) {
            c.push_back(spine_arc(tq, tr));
            above.push_back(false);
          }
          break;
        }
      }
      if (g_.edges[e].u == l) {
        plan->curves[e] = c;
        plan->above[e] = above;
        plan->ports[e] = port_[e];
      } else {
        plan->curves[e] = reversed(c);
        plan->above[e] = std::vector<bool>(above.rbegin(), above.rend());
        plan->ports[e] = {port_[e][1], port_[e][0]};
      }
    }
    // underpasses against everything else below the diagonal
    for (int e = 0; e < m_; ++e) {
      if (shape(e) != Shape::Under) continue;
      for (int f = 0; f < m_; ++f) {
        if (f == e || (shape(f) == Shape::Under && f < e)) continue;
        Curve below;
        for (size_t i = 0; i < plan->curves[f].size(); ++i)
          if (!plan->above[f][i]) below.push_back(plan->curves[f][i]);
        if (below.empty()) continue;
        std::vector<RPoint> shared;
        for (int a : {g_.edges[e].u, g_.edges[e].v})
          if (a == g_.edges[f].u || a == g_.edges[f].v) shared.push_back(diag(plan->t[a]));
        CurveMeeting mt = curve_meeting(plan->curves[e], below, shared);
        if (mt.contact || mt.crossings != (crosses(e, f) ? 1 : 0))
          return failed("underpass " + g_.edges[e].id + " meets " + g_.edges[f].id);
      }
    }
    return plan;
  }

  const EmbeddedGraph& g_;
  int n_, m_;
  std::vector<int> order_, rank_;
  int start_;
  bool arc_start_;
  std::vector<std::array<Port, 2>> port_;  // [left end, right end]
  std::vector<int> vpoint_, core_of_;
  int point_count_ = 0;
  std::vector<Core> cores_;
  std::vector<Unit> units_;
  std::vector<int> sorted_;  // top unit first, parents before children
  std::string reason_;
};

// ---------------------------------------------------------------------------
// Face steps.

std::vector<RPoint> shared_ends(const EmbeddedGraph& g, const SmoothDrawing& d, int e, int f) {
  std::vector<RPoint> out;
  for (int a : {g.edges[e].u, g.edges[e].v})
    if (a == g.edges[f].u || a == g.edges[f].v) out.push_back(d.positions[a]);
  return out;
}

bool crossing_pair(const EmbeddedGraph& g, int e, int f) {
  int k = g.crossing_of(e);
  return k >= 0 && (g.crossings[k].e1 == f || g.crossings[k].e2 == f);
}

void fail(bool& flag, std::string& detail, const std::string& msg) {
  flag = false;
  if (!detail.empty()) detail += "; ";
  detail += msg;
}

void check_ports(Sc2State& st, int v, Sc2StepCheck& chk) {
  const EmbeddedGraph& g = *st.graph;
  const auto& rot = g.rotation[v];
  int k = static_cast<int>(rot.size());
  std::vector<int> drawn_idx;
  for (int i = 0; i < k; ++i)
    if (st.drawn[rot[i]]) drawn_idx.push_back(i);
  if (drawn_idx.empty()) return;
  auto port_at = [&](int e) {
    int side = g.edges[e].u == v ? 0 : 1;
    return static_cast<int>(st.drawing.ports[e][side]);
  };
  int m = static_cast<int>(drawn_idx.size());
  int descents = 0;
  for (int i = 0; i < m; ++i) {
    int a = port_at(rot[drawn_idx[i]]), b = port_at(rot[drawn_idx[(i + 1) % m]]);
    if (m > 1 && a == b) {
      fail(chk.ports, chk.detail, "two edges on one port at " + g.vertex_ids[v]);
      return;
    }
    if (m > 1 && b < a) ++descents;
    int run = (drawn_idx[(i + 1) % m] - drawn_idx[i] - 1 + k) % k;
    if (m == 1) run = k - 1;
    int free = m == 1 ? 3 : (b - a - 1 + 4) % 4;
    if (run > free) fail(chk.ports, chk.detail, "not enough free ports at " + g.vertex_ids[v]);
  }
  if (m > 1 && descents != 1) fail(chk.ports, chk.detail, "port order differs from rotation at " + g.vertex_ids[v]);
}

Sc2StepCheck emit(Sc2State& st, int step, const std::vector<int>& edges) {
  const EmbeddedGraph& g = *st.graph;
  const Sc2Plan& plan = *st.plan;
  const Sc2Face& face = st.faces[step];
  Sc2StepCheck chk;
  chk.step = step;
  std::set<int> touched;
  for (int e : edges) {
    const Curve& c = plan.curves[e];
    const Edge& ed = g.edges[e];
    const std::string& id = ed.id;
    // I.1
    if (c.empty() || c.size() > 2) fail(chk.curves, chk.detail, "edge " + id + " has " + std::to_string(c.size()) + " primitives");
    if (!check_tangency(c, id).ok()) fail(chk.curves, chk.detail, "edge " + id + " not tangent-continuous");
    if (!c.empty()) {
      if (c.front().from != st.drawing.positions[ed.u] || c.back().to != st.drawing.positions[ed.v])
        fail(chk.curves, chk.detail, "edge " + id + " misses its endpoints");
      Port pu = port_of(dir_dx(c.front().start_dir()), dir_dy(c.front().start_dir()));
      Port pv = opposite(port_of(dir_dx(c.back().end_dir()), dir_dy(c.back().end_dir())));
      if (pu != plan.ports[e][0] || pv != plan.ports[e][1]) fail(chk.curves, chk.detail, "edge " + id + " ports differ from plan");
    }
    // I.3
    for (size_t i = 0; i < c.size(); ++i) {
      if (!on_side(c[i], plan.above[e][i] ? 1 : -1))
        fail(chk.sides, chk.detail, "edge " + id + " primitive " + std::to_string(i) + " on the wrong side");
      if (i + 1 < c.size() && c[i].to.x + c[i].to.y == 0 && plan.above[e][i] == plan.above[e][i + 1])
        fail(chk.sides, chk.detail, "edge " + id + " touches the diagonal at a joint");
    }
    // I.4 against everything drawn so far
    Box be = box_of(c);
    for (int f = 0; f < g.num_edges(); ++f) {
      if (!st.drawn[f] || f == e) continue;
      int want = crossing_pair(g, e, f) ? 1 : 0;
      if (want == 0 && boxes_apart(be, box_of(st.drawing.curves[f]))) continue;
      CurveMeeting m = curve_meeting(c, st.drawing.curves[f], shared_ends(g, st.drawing, e, f));
      if (m.contact || m.crossings != want)
        fail(chk.crossings, chk.detail, "edges " + id + " and " + g.edges[f].id + " meet " + std::to_string(m.crossings) +
                                            (m.contact ? " times with contact" : " times"));
    }
    st.drawn[e] = true;
    st.drawing.curves[e] = c;
    st.drawing.ports[e] = plan.ports[e];
    --st.remaining[ed.u];
    --st.remaining[ed.v];
    touched.insert(ed.u);
    touched.insert(ed.v);
  }
  // containment in the region of the reference edge
  for (int e : edges) {
    if (std::find(face.region_edges.begin(), face.region_edges.end(), e) != face.region_edges.end()) continue;
    const Edge& ed = g.edges[e];
    for (int v : {ed.u, ed.v})
      if (st.t[v] < face.lo || st.t[v] > face.hi)
        fail(chk.containment, chk.detail, "edge " + ed.id + " leaves the span of its region");
    for (int r : face.region_edges) {
      if (!st.drawn[r]) {
        fail(chk.containment, chk.detail, "region edge " + g.edges[r].id + " not drawn");
        continue;
      }
      CurveMeeting m = curve_meeting(st.drawing.curves[e], st.drawing.curves[r], shared_ends(g, st.drawing, e, r));
      if (m.contact || m.crossings != (crossing_pair(g, e, r) ? 1 : 0))
        fail(chk.containment, chk.detail, "edge " + ed.id + " meets region edge " + g.edges[r].id);
    }
  }
  // I.2
  for (int i = 0; i < g.num_vertices(); ++i) {
    int v = st.order[i];
    const RPoint& p = st.drawing.positions[v];
    if (p.x + p.y != 0 || p.x != st.t[v]) fail(chk.diagonal, chk.detail, "vertex " + g.vertex_ids[v] + " off the diagonal");
    if (i > 0 && !(st.t[st.order[i - 1]] < st.t[v])) fail(chk.diagonal, chk.detail, "vertex " + g.vertex_ids[v] + " out of order");
  }
  // P.1
  for (int v : touched) check_ports(st, v, chk);
  st.checks.push_back(chk);
  return chk;
}

std::vector<int> face_edges(const Sc2State& st, int f) {
  std::vector<int> out;
  for (int d : st.aux_faces.darts[f]) {
    int o = st.aux_origin[PlaneGraph::edge_of(d)];
    if (o >= 0 && !st.drawn[o] && std::find(out.begin(), out.end(), o) == out.end()) out.push_back(o);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Sc2State build_aux_graph(const EmbeddedGraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) > 4) throw std::invalid_argument("maximum degree exceeds 4");
  if (!is_biconnected(g)) throw std::invalid_argument("graph is not biconnected");
  if (!is_outer_one_plane(g)) throw std::invalid_argument("graph is not outer-1-plane");
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::set<int> seen;
    for (int e : g.rotation[v])
      if (!seen.insert(g.other(e, v)).second || g.other(e, v) == v)
        throw std::invalid_argument("multi-edges and loops are not supported");
  }
  Sc2State st;
  st.graph = &g;
  st.planar = planarize(g);
  int n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("graph needs at least two vertices");
  int outer = st.planar.outer_face[0];
  std::vector<int> walk;
  for (int d : st.planar.faces.darts[outer]) {
    int v = st.planar.plane.tail(d);
    if (v < n) walk.push_back(v);
  }
  std::vector<int> check = walk;
  std::sort(check.begin(), check.end());
  if (static_cast<int>(walk.size()) != n || std::adjacent_find(check.begin(), check.end()) != check.end())
    throw std::invalid_argument("outer face does not visit every vertex once");
  std::vector<int> ccw(walk.rbegin(), walk.rend());
  if (convex_order(g, ccw)) st.cyc = ccw;
  else if (convex_order(g, walk)) st.cyc = walk;
  else throw std::invalid_argument("embedding is not outer-1-plane with all vertices on the outer face");
  st.rank.assign(n, 0);
  for (int i = 0; i < n; ++i) st.rank[st.cyc[i]] = i;
  build_aux(st, false);
  return st;
}

void pick_start_edge(Sc2State& st) {
  const EmbeddedGraph& g = *st.graph;
  int n = g.num_vertices();
  std::string reasons;
  auto attempt = [&](int i, bool arc_start) {
    int a = st.cyc[i], b = st.cyc[(i + 1) % n];
    int edge = -1;
    for (int e : g.rotation[a])
      if (g.other(e, a) == b && g.crossing_of(e) < 0) edge = e;
    if (edge < 0) return false;
    std::vector<int> order;
    for (int j = 1; j <= n; ++j) order.push_back(st.cyc[(i + j) % n]);
    Planner planner(g, order, edge, arc_start);
    auto plan = planner.run();
    if (!plan) {
      if (!arc_start) reasons += "\n  start " + g.edges[edge].id + ": " + planner.reason();
      return false;
    }
    st.order = order;
    st.rank.assign(n, 0);
    for (int j = 0; j < n; ++j) st.rank[order[j]] = j;
    st.plan = plan;
    st.start.edge = edge;
    st.start.s = a;
    st.start.s_prime = b;
    st.start.curve = plan->curves[edge];
    build_aux(st, true);
    return true;
  };
  for (bool arc_start : {true, false})
    for (int i = 0; i < n; ++i)
      if (attempt(i, arc_start)) return;
  throw std::logic_error("no outer edge admits a drawing plan:" + reasons);
}

void order_faces(Sc2State& st) {
  const EmbeddedGraph& g = *st.graph;
  int n = g.num_vertices();
  const PlaneGraph& pg = st.aux;
  const auto& faces = st.aux_faces;
  int nf = static_cast<int>(faces.darts.size());
  st.faces.clear();
  int root_dart = -1;
  for (int a = 0; a < pg.num_edges(); ++a)
    if (st.aux_origin[a] == st.start.edge && !st.aux_half[a]) root_dart = pg.ends(a)[0] == st.start.s ? 2 * a : 2 * a + 1;
  const auto& t = st.plan->t;
  auto span_of = [&](std::initializer_list<int> vs, Sc2Face& f) {
    bool first = true;
    for (int v : vs) {
      if (first || t[v] < f.lo) f.lo = t[v];
      if (first || t[v] > f.hi) f.hi = t[v];
      first = false;
    }
  };
  struct Item {
    int face, ref_dart, parent;
  };
  std::vector<bool> visited(nf, false);
  std::vector<int> index_of(nf, -1), partner(nf, -1);
  std::vector<bool> paired_dummy(n + g.crossings.size(), false);
  std::vector<Item> queue;
  auto make_face = [&](const Item& it) {
    Sc2Face f;
    f.face = it.face;
    f.kind = st.caged[it.face] >= 0 ? Sc2FaceKind::Cut : partner[it.face] >= 0 ? Sc2FaceKind::Paired : Sc2FaceKind::Normal;
    f.partner = partner[it.face];
    if (it.parent < 0) {
      f.region_edges = {st.start.edge};
      span_of({st.start.s, st.start.s_prime}, f);
      return f;
    }
    int a = PlaneGraph::edge_of(it.ref_dart);
    f.reference = a;
    int u = pg.ends(a)[0], v = pg.ends(a)[1];
    if (st.aux_origin[a] >= 0 && !st.aux_half[a]) {
      f.region_edges = {st.aux_origin[a]};
      span_of({u, v}, f);
      return f;
    }
    int k = st.aux_crossing[a];
    if (!st.aux_half[a] && st.caged[it.face] == k) {
      const Sc2Face& p = st.faces[index_of[it.parent]];
      f.region_edges = p.region_edges;
      f.lo = p.lo;
      f.hi = p.hi;
      return f;
    }
    f.region_edges = {g.crossings[k].e1, g.crossings[k].e2};
    if (st.aux_half[a]) {
      const auto& e = g.crossings[k].ends;
      span_of({e[0], e[1], e[2], e[3]}, f);
    } else {
      span_of({u, v}, f);
    }
    return f;
  };
  int root = faces.face_of[root_dart];
  visited[root] = true;
  queue.push_back({root, root_dart, -1});
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Item it = queue[qi];
    index_of[it.face] = static_cast<int>(st.faces.size());
    st.faces.push_back(make_face(it));
    if (it.face == st.aux_outer) continue;  // single-edge graph
    const auto& walk = faces.darts[it.face];
    int len = static_cast<int>(walk.size());
    int s = static_cast<int>(std::find(walk.begin(), walk.end(), it.ref_dart) - walk.begin());
    for (int j = 1; j <= len; ++j) {
      int d = walk[(s + j) % len];
      int nb = faces.face_of[PlaneGraph::twin(d)];
      if (nb == st.aux_outer || visited[nb]) continue;
      visited[nb] = true;
      queue.push_back({nb, PlaneGraph::twin(d), it.face});
      int a = PlaneGraph::edge_of(d);
      if (!st.aux_half[a]) continue;
      int x = pg.ends(a)[0] >= n ? pg.ends(a)[0] : pg.ends(a)[1];
      if (st.planar.dummy_kind[x - n] != DummyKind::In || paired_dummy[x]) continue;
      paired_dummy[x] = true;
      // the other face next to this one around x joins immediately
      for (int d2 : walk) {
        int a2 = PlaneGraph::edge_of(d2);
        if (a2 == a || !st.aux_half[a2] || (pg.ends(a2)[0] != x && pg.ends(a2)[1] != x)) continue;
        int other = faces.face_of[PlaneGraph::twin(d2)];
        if (other == st.aux_outer || visited[other]) continue;
        visited[other] = true;
        queue.push_back({other, PlaneGraph::twin(d2), it.face});
        partner[nb] = other;
        partner[other] = nb;
      }
    }
  }
}

void place_vertices(Sc2State& st) {
  const EmbeddedGraph& g = *st.graph;
  int n = g.num_vertices();
  st.t = st.plan->t;
  st.drawing = SmoothDrawing{};
  st.drawing.positions.resize(n);
  for (int v = 0; v < n; ++v) st.drawing.positions[v] = diag(st.t[v]);
  st.drawing.curves.assign(g.num_edges(), {});
  st.drawing.ports.assign(g.num_edges(), {Port::E, Port::E});
  st.drawn.assign(g.num_edges(), false);
  st.remaining.assign(n, 0);
  for (int v = 0; v < n; ++v) st.remaining[v] = g.degree(v);
  st.checks.clear();
}

void draw_normal_face(Sc2State& st, int step) {
  const Sc2Face& f = st.faces[step];
  std::vector<int> edges;
  if (f.reference < 0 && !st.drawn[st.start.edge]) edges.push_back(st.start.edge);
  for (int e : face_edges(st, f.face))
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  emit(st, step, edges);
}

void draw_facial_pair(Sc2State& st, int step) {
  if (step + 1 >= static_cast<int>(st.faces.size()) || st.faces[step].partner != st.faces[step + 1].face)
    throw std::logic_error("facial pair faces are not consecutive");
  draw_normal_face(st, step);
  draw_normal_face(st, step + 1);
}

void draw_cut_face(Sc2State& st, int step) {
  const Sc2Face& f = st.faces[step];
  int k = st.caged[f.face];
  if (k < 0) throw std::logic_error("face is not a cut-face");
  const Crossing& x = st.graph->crossings[k];
  std::vector<int> edges;
  for (int e : {x.e1, x.e2})
    if (!st.drawn[e]) edges.push_back(e);
  for (int e : face_edges(st, f.face))
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  emit(st, step, edges);
}

SmoothDrawing sc2_layout(const EmbeddedGraph& g, Sc2State* trace) {
  Sc2State st = build_aux_graph(g);
  pick_start_edge(st);
  order_faces(st);
  place_vertices(st);
  for (int i = 0; i < static_cast<int>(st.faces.size());) {
    switch (st.faces[i].kind) {
      case Sc2FaceKind::Paired:
        draw_facial_pair(st, i);
        i += 2;
        break;
      case Sc2FaceKind::Cut:
        draw_cut_face(st, i);
        ++i;
        break;
      case Sc2FaceKind::Normal:
        draw_normal_face(st, i);
        ++i;
        break;
    }
  }
  std::string problems;
  for (const Sc2StepCheck& c : st.checks)
    if (!c.ok()) problems += "step " + std::to_string(c.step) + ": " + c.detail + "\n";
  for (int e = 0; e < g.num_edges(); ++e)
    if (!st.drawn[e]) problems += "edge " + g.edges[e].id + " never drawn\n";
  for (const Crossing& x : g.crossings) st.drawing.crossings.push_back({x.e1, x.e2});
  SmoothDrawing out = st.drawing;
  if (trace) {
    *trace = std::move(st);
    trace->graph = &g;
  }
  if (!problems.empty()) throw std::logic_error("SC2 invariant violated:\n" + problems);
  return out;
}

}  // namespace onedraw
