#include "onedraw/bar_visibility.hpp"

#include <algorithm>
#include <list>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace onedraw {

namespace {

constexpr long long kColumnStep = 4;

std::string fresh_edge_id(const EmbeddedGraph& g, int k) {
  std::string id = "cage" + std::to_string(k);
  while (g.edge_index(id) >= 0) id += "_";
  return id;
}

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (size_t s = 0; s < a.size(); ++s) {
    bool ok = true;
    for (size_t i = 0; i < a.size() && ok; ++i) ok = a[(s + i) % a.size()] == b[i];
    if (ok) return true;
  }
  return false;
}

// Plane graph on which the visibility representation is built: the caged
// graph without its crossing edges, plus an s-t edge and (optionally) star
// vertices making every face a simple cycle.
struct Skeleton {
  PlaneGraph h;
  int n = 0;
  std::vector<int> origin;     // per edge of h: caged edge, -1 augmentation
  std::vector<int> kite_dart;  // per crossing: dart on the kite face
  int outer_dart = -1;
  int st_edge = -1;
};

Skeleton make_skeleton(const CagedGraph& c, int s, int t, bool stars) {
  const PlanarizedGraph& p = c.planar;
  Skeleton sk;
  sk.n = p.n_real;
  for (int v = 0; v < sk.n; ++v) sk.h.add_vertex();
  std::vector<int> map(p.plane.num_edges(), -1);
  for (int e = 0; e < p.plane.num_edges(); ++e) {
    auto [a, b] = p.plane.ends(e);
    if (p.is_dummy(a) || p.is_dummy(b)) continue;
    map[e] = sk.h.add_edge(a, b);
    sk.origin.push_back(p.origin[e]);
  }
  for (int v = 0; v < sk.n; ++v) {
    std::vector<int> r;
    for (int d : p.plane.rotation(v))
      if (map[d >> 1] >= 0) r.push_back(2 * map[d >> 1] + (d & 1));
    sk.h.set_rotation(v, r);
  }
  auto dart_of = [&](int caged_edge, int from) {
    int pe = p.parts[caged_edge][0];
    return 2 * map[pe] + (p.plane.ends(pe)[0] == from ? 0 : 1);
  };
  for (const Kite& k : c.kites) sk.kite_dart.push_back(dart_of(k.sides[0], k.corners[0]));

  if (s == t) throw std::invalid_argument("s and t must differ");
  int comp = p.component[s];
  if (p.component[t] != comp) throw std::invalid_argument("s and t lie in different components");
  int of = p.outer_face[comp];
  for (int d : p.faces.darts[of]) {
    int e = d >> 1;
    if (map[e] >= 0) {
      sk.outer_dart = 2 * map[e] + (d & 1);
      break;
    }
  }
  if (sk.outer_dart < 0) throw std::logic_error("outer face has no uncrossed edge after caging");
  auto faces = sk.h.faces();
  int fo = faces.face_of[sk.outer_dart];
  int in_s = -1, in_t = -1;
  for (int d : faces.darts[fo]) {
    if (in_s < 0 && sk.h.head(d) == s) in_s = d;
    if (in_t < 0 && sk.h.head(d) == t) in_t = d;
  }
  if (in_s < 0 || in_t < 0) throw std::invalid_argument("s and t must lie on the outer face");
  sk.st_edge = sk.h.add_edge_in_corners(in_s, s, in_t, t);
  sk.origin.push_back(-1);
  sk.outer_dart = 2 * sk.st_edge + 1;

  if (stars) {
    faces = sk.h.faces();
    std::vector<bool> kite(faces.darts.size(), false);
    for (int d : sk.kite_dart) kite[faces.face_of[d]] = true;
    for (int f = 0; f < static_cast<int>(faces.darts.size()); ++f) {
      if (kite[f]) continue;
      const auto& walk = faces.darts[f];
      std::vector<int> seen;
      bool simple = true;
      for (int d : walk) {
        int v = sk.h.head(d);
        if (std::find(seen.begin(), seen.end(), v) != seen.end()) simple = false;
        seen.push_back(v);
      }
      if (simple) continue;
      int w = sk.h.add_vertex();
      for (int d : walk) {
        sk.h.add_edge_in_corners(-1, w, d, sk.h.head(d));
        sk.origin.push_back(-1);
      }
    }
  }
  return sk;
}

// Even-Tarjan st-numbering of a biconnected multigraph (s-t edge present),
// children visited in increasing vertex id.
std::vector<int> st_numbering(const PlaneGraph& h, int s, int t) {
  int n = h.num_vertices();
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, edge)
  for (int e = 0; e < h.num_edges(); ++e) {
    auto [a, b] = h.ends(e);
    adj[a].push_back({b, e});
    adj[b].push_back({a, e});
  }
  for (int v = 0; v < n; ++v) {
    std::sort(adj[v].begin(), adj[v].end(), [&](auto x, auto y) {
      if (v == s && (x.first == t) != (y.first == t)) return x.first == t;
      return x < y;
    });
  }
  std::vector<int> pre(n, -1), parent(n, -1), parent_edge(n, -1), order;
  std::vector<int> low(n);
  std::vector<size_t> it(n, 0);
  std::vector<int> stack{s};
  pre[s] = 0;
  order.push_back(s);
  while (!stack.empty()) {
    int v = stack.back();
    if (it[v] == adj[v].size()) {
      stack.pop_back();
      continue;
    }
    auto [w, e] = adj[v][it[v]++];
    if (pre[w] < 0) {
      pre[w] = static_cast<int>(order.size());
      order.push_back(w);
      parent[w] = v;
      parent_edge[w] = e;
      stack.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != n) throw std::logic_error("st-numbering: graph not connected");
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    low[v] = v;
    for (auto [w, e] : adj[v]) {
      if (e == parent_edge[v]) continue;
      int cand = parent[w] == v && parent_edge[w] == e ? low[w] : w;
      if (pre[cand] < pre[low[v]]) low[v] = cand;
    }
  }
  std::list<int> seq{s, t};
  std::vector<std::list<int>::iterator> where(n);
  where[s] = seq.begin();
  where[t] = std::next(seq.begin());
  std::vector<char> minus(n, 0);
  minus[s] = 1;
  for (int v : order) {
    if (v == s || v == t) continue;
    int p = parent[v];
    if (minus[low[v]]) {
      where[v] = seq.insert(where[p], v);
      minus[p] = 0;
    } else {
      where[v] = seq.insert(std::next(where[p]), v);
      minus[p] = 1;
    }
  }
  std::vector<int> num(n);
  int k = 0;
  for (int v : seq) num[v] = k++;
  return num;
}

StOrdering order_from_numbers(const std::vector<int>& num, int n, int s, int t, bool augmented) {
  StOrdering o;
  o.s = s;
  o.t = t;
  o.augmented = augmented;
  for (int v = 0; v < n; ++v) o.sequence.push_back(v);
  std::sort(o.sequence.begin(), o.sequence.end(), [&](int a, int b) { return num[a] < num[b]; });
  o.rank.assign(n, 0);
  for (int i = 0; i < n; ++i) o.rank[o.sequence[i]] = i;
  return o;
}

std::vector<int> outer_vertices(const CagedGraph& c) {
  const PlanarizedGraph& p = c.planar;
  std::vector<int> w;
  if (p.num_components != 1 || p.outer_face[0] < 0) return w;
  for (int d : p.faces.darts[p.outer_face[0]]) {
    int v = p.plane.tail(d);
    if (!p.is_dummy(v)) w.push_back(v);
  }
  return w;
}

}  // namespace

CagedGraph cage_crossings(const EmbeddedGraph& g) {
  CagedGraph c;
  c.num_original_edges = g.num_edges();
  PlanarizedGraph p = planarize(g);
  int n = p.n_real;
  c.graph = g;
  c.caging.assign(g.num_edges(), false);
  std::vector<int> rep(p.num_components, -1);
  for (int k = 0; k < p.num_components; ++k)
    if (p.outer_face[k] >= 0) rep[k] = p.faces.darts[p.outer_face[k]][0];
  auto faces = p.plane.faces();
  int added = 0;
  for (int i = 0; i < static_cast<int>(g.crossings.size()); ++i) {
    int x = n + i;
    Kite kite;
    kite.crossing = i;
    kite.corners = g.crossings[i].ends;
    int comp = p.component[x];
    for (int k = 0; k < 4; ++k) {
      int dk = p.plane.rotation(x)[k];
      int dk1 = p.plane.rotation(x)[(k + 1) % 4];
      int pk = p.plane.head(dk), pk1 = p.plane.head(dk1);
      int f = faces.face_of[dk];
      bool outer = rep[comp] >= 0 && faces.face_of[rep[comp]] == f;
      if (!outer && faces.darts[f].size() == 3) {
        kite.sides[k] = p.origin[p.plane.next_in_face(dk) >> 1];
        continue;
      }
      int in_v = p.plane.prev_in_face(PlaneGraph::twin(dk1));
      int e = p.plane.add_edge_in_corners(dk, pk, in_v, pk1);
      int ge = c.graph.add_edge(fresh_edge_id(c.graph, added++), pk, pk1);
      p.origin.push_back(ge);
      p.parts.push_back({e});
      c.caging.push_back(true);
      kite.sides[k] = ge;
      if (outer) rep[comp] = 2 * e + 1;
      faces = p.plane.faces();
    }
    c.kites.push_back(kite);
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> r;
    for (int d : p.plane.rotation(v)) r.push_back(p.origin[d >> 1]);
    c.graph.rotation[v] = r;
    std::vector<int> orig;
    for (int e : r)
      if (e < c.num_original_edges) orig.push_back(e);
    if (!cyclic_equal(orig, g.rotation[v])) c.embedding_preserved = false;
  }
  p.faces = faces;
  p.component = p.plane.components(&p.num_components);
  std::vector<int> outer_faces;
  for (int k = 0; k < p.num_components; ++k) {
    p.outer_face[k] = rep[k] >= 0 ? faces.face_of[rep[k]] : -1;
    if (p.outer_face[k] >= 0) outer_faces.push_back(p.outer_face[k]);
  }
  set_outer_faces(c.graph, p, outer_faces);
  c.planar = std::move(p);
  return c;
}

bool is_st_ordering(const CagedGraph& c, const StOrdering& o) {
  const EmbeddedGraph& g = c.graph;
  int n = g.num_vertices();
  if (static_cast<int>(o.rank.size()) != n) return false;
  if (n <= 1) return true;
  if (o.rank[o.s] != 0 || o.rank[o.t] != n - 1) return false;
  for (int v = 0; v < n; ++v) {
    if (v == o.s || v == o.t) continue;
    bool lower = false, higher = false;
    for (int e : g.rotation[v]) {
      if (g.crossing_of(e) >= 0) continue;
      int w = g.other(e, v);
      (o.rank[w] < o.rank[v] ? lower : higher) = true;
    }
    if (!lower || !higher) return false;
  }
  return true;
}

StOrdering st_order(const CagedGraph& c, int s, int t) {
  int n = c.graph.num_vertices();
  if (n == 1) {
    StOrdering o;
    o.sequence = {0};
    o.rank = {0};
    o.s = o.t = 0;
    return o;
  }
  Skeleton sk = make_skeleton(c, s, t, true);
  std::vector<int> num = st_numbering(sk.h, s, t);
  return order_from_numbers(num, n, s, t, true);
}

StOrdering st_order(const CagedGraph& c) {
  int n = c.graph.num_vertices();
  if (n <= 1) return st_order(c, 0, 0);
  std::vector<int> w = outer_vertices(c);
  if (w.empty()) throw std::invalid_argument("st_order needs a connected graph");
  int s = *std::min_element(w.begin(), w.end());
  size_t i = std::find(w.begin(), w.end(), s) - w.begin();
  int t = w[(i + w.size() / 2) % w.size()];
  if (t == s) {
    for (int v : w)
      if (v != s) t = v;
  }
  return st_order(c, s, t);
}

StOrdering outer_st_order(const CagedGraph& c) {
  int n = c.graph.num_vertices();
  std::vector<int> w = outer_vertices(c);
  if (n < 2 || static_cast<int>(w.size()) != n)
    throw std::invalid_argument("outer_st_order needs a biconnected outer-1-plane graph");
  std::vector<int> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("outer_st_order needs a biconnected outer-1-plane graph");
  size_t i = std::min_element(w.begin(), w.end()) - w.begin();
  size_t k = w.size();
  StOrdering o;
  o.s = w[i];
  o.t = w[(i + k / 2) % k];
  for (size_t j = 1; j < k / 2; ++j) o.left_path.push_back(w[(i + j) % k]);
  for (size_t j = k - 1; j > k / 2; --j) o.right_path.push_back(w[(i + j) % k]);
  o.sequence.push_back(o.s);
  o.sequence.insert(o.sequence.end(), o.left_path.begin(), o.left_path.end());
  o.sequence.insert(o.sequence.end(), o.right_path.begin(), o.right_path.end());
  o.sequence.push_back(o.t);
  o.rank.assign(n, 0);
  for (int j = 0; j < n; ++j) o.rank[o.sequence[j]] = j;
  if (!is_st_ordering(c, o)) throw std::logic_error("outer order is not an st-ordering");
  return o;
}

const char* color_name(EdgeColor c) {
  switch (c) {
    case EdgeColor::Planar: return "planar";
    case EdgeColor::Red: return "red";
    case EdgeColor::Blue: return "blue";
  }
  return "?";
}

const char* kite_kind_name(KiteKind k) {
  switch (k) {
    case KiteKind::LeftWing: return "left-wing";
    case KiteKind::RightWing: return "right-wing";
    case KiteKind::Diamond: return "diamond";
  }
  return "?";
}

KiteConfig classify_kite(const Crossing& c, const std::vector<int>& level) {
  const auto& p = c.ends;
  for (int v : p)
    if (v < 0 || v >= static_cast<int>(level.size())) throw std::invalid_argument("kite bars not placed");
  int ia = 0, id = 0;
  for (int k = 1; k < 4; ++k) {
    if (level[p[k]] < level[p[ia]]) ia = k;
    if (level[p[k]] > level[p[id]]) id = k;
  }
  // corners met going ccw from the source up to the sink form the right side
  int right = (id - ia + 4) % 4 - 1;
  auto edge_between = [&](int k) { return k % 2 == 0 ? c.e1 : c.e2; };
  KiteConfig cfg;
  cfg.source = p[ia];
  cfg.sink = p[id];
  if (right == 1) {
    cfg.kind = KiteKind::Diamond;
    cfg.blue = edge_between(ia);
    cfg.red = edge_between(ia + 1);
  } else {
    // wings: the middle corner adjacent to the source is b, the other c;
    // blue joins b and the sink, red joins the source and c
    cfg.kind = right == 2 ? KiteKind::RightWing : KiteKind::LeftWing;
    cfg.red = edge_between(ia);
    cfg.blue = edge_between(ia + 1);
  }
  return cfg;
}

BarVisibility build_bar_visibility(const CagedGraph& c, const StOrdering& o) {
  const EmbeddedGraph& g = c.graph;
  int n = g.num_vertices();
  int m = c.num_original_edges;
  BarVisibility bv;
  bv.order = o;
  bv.bars.assign(n, {});
  bv.routes.assign(m, {});
  bv.bottoms.assign(n, {});
  bv.tops.assign(n, {});
  bv.left_red.assign(n, -1);
  bv.right_red.assign(n, -1);
  bv.roles.assign(n, BarRole::Bottom);
  bv.extremes.assign(n, {-1, -1});
  if (c.planar.num_components > 1) throw std::invalid_argument("build_bar_visibility needs a connected graph");
  for (int v = 0; v < n; ++v) bv.bars[v].y = o.rank[v];
  if (n <= 1) return bv;

  Skeleton sk = make_skeleton(c, o.s, o.t, o.augmented);
  std::vector<int> num;
  if (o.augmented) {
    num = st_numbering(sk.h, o.s, o.t);
    StOrdering check = order_from_numbers(num, n, o.s, o.t, true);
    if (check.sequence != o.sequence) throw std::invalid_argument("ordering does not match the caged graph");
  } else {
    if (!is_st_ordering(c, o)) throw std::invalid_argument("not an st-ordering");
    num = o.rank;
  }
  const std::vector<int>& level = o.rank;

  // Dual order of the faces, outer face split into a left and a right copy.
  auto faces = sk.h.faces();
  int nf = static_cast<int>(faces.darts.size());
  int outer = faces.face_of[sk.outer_dart];
  int outer_right = nf;
  std::vector<std::vector<int>> succ(nf + 1);
  std::vector<int> indeg(nf + 1, 0);
  auto up_dart = [&](int e) {
    auto [a, b] = sk.h.ends(e);
    return num[a] < num[b] ? 2 * e : 2 * e + 1;
  };
  auto right_face = [&](int d) {
    int f = faces.face_of[PlaneGraph::twin(d)];
    return f == outer ? outer_right : f;
  };
  for (int e = 0; e < sk.h.num_edges(); ++e) {
    int d = up_dart(e);
    int lf = faces.face_of[d], rf = right_face(d);
    succ[lf].push_back(rf);
    ++indeg[rf];
  }
  std::vector<long long> psi(nf + 1, 0);
  std::queue<int> q;
  for (int f = 0; f <= nf; ++f)
    if (indeg[f] == 0) q.push(f);
  int done = 0;
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    ++done;
    for (int h : succ[f]) {
      psi[h] = std::max(psi[h], psi[f] + 1);
      if (--indeg[h] == 0) q.push(h);
    }
  }
  if (done != nf + 1) throw std::logic_error("dual of the st-graph has a cycle");

  // Vertical touch points per bar.
  std::vector<long long> lo(n, 0), hi(n, -1);
  std::vector<bool> touched(n, false);
  auto touch = [&](int v, long long x) {
    if (!touched[v]) {
      lo[v] = hi[v] = x;
      touched[v] = true;
    }
    lo[v] = std::min(lo[v], x);
    hi[v] = std::max(hi[v], x);
  };
  auto set_vertical = [&](int e, int a, int b, long long x, EdgeColor col) {
    EdgeRoute& r = bv.routes[e];
    r.color = col;
    r.low = level[a] < level[b] ? a : b;
    r.high = r.low == a ? b : a;
    r.x = x;
    r.crossing = g.crossing_of(e);
    r.pts = {{x, level[r.low]}, {x, level[r.high]}};
  };
  for (int e = 0; e < sk.h.num_edges(); ++e) {
    int ce = sk.origin[e];
    if (ce < 0 || ce >= m) continue;
    int d = up_dart(e);
    long long x = kColumnStep * psi[faces.face_of[d]];
    set_vertical(ce, sk.h.tail(d), sk.h.head(d), x, EdgeColor::Planar);
    touch(sk.h.tail(d), x);
    touch(sk.h.head(d), x);
  }
  // red edges: default attach point when the bar has no vertical touch
  std::vector<long long> red_default(m, 0);
  for (int i = 0; i < static_cast<int>(g.crossings.size()); ++i) {
    const Crossing& cr = g.crossings[i];
    KiteConfig cfg = classify_kite(cr, level);
    bv.kites.push_back(cfg);
    long long base = kColumnStep * psi[faces.face_of[sk.kite_dart[i]]];
    long long c1 = base - 3, c2 = base - 2, c3 = base - 1;
    const Edge& be = g.edges[cfg.blue];
    set_vertical(cfg.blue, be.u, be.v, c2, EdgeColor::Blue);
    touch(be.u, c2);
    touch(be.v, c2);
    const Edge& re = g.edges[cfg.red];
    set_vertical(cfg.red, re.u, re.v, 0, EdgeColor::Red);
    EdgeRoute& r = bv.routes[cfg.red];
    bool from_left;
    if (cfg.kind == KiteKind::Diamond) {
      from_left = level[r.low] < level[r.high] && [&] {
        // the lower middle corner sits on the left side
        int ia = 0;
        for (int k = 1; k < 4; ++k)
          if (level[cr.ends[k]] < level[cr.ends[ia]]) ia = k;
        return cr.ends[(ia + 3) % 4] == r.low;
      }();
    } else {
      from_left = cfg.kind == KiteKind::RightWing;
    }
    r.x = from_left ? c1 : c3;
    r.side = from_left ? -1 : 1;
    red_default[cfg.red] = from_left ? base : base - kColumnStep;
    r.pts[0].x = r.pts[1].x = r.x;
    touch(r.low, r.x);
  }
  for (int e = 0; e < m; ++e) {
    EdgeRoute& r = bv.routes[e];
    if (r.color != EdgeColor::Red) continue;
    int v = r.high;
    long long end = touched[v] ? (r.side < 0 ? lo[v] : hi[v]) : red_default[e];
    r.pts.push_back({end, level[v]});
  }
  for (int e = 0; e < m; ++e) {
    const EdgeRoute& r = bv.routes[e];
    if (r.color == EdgeColor::Red) touch(r.high, r.pts.back().x);
  }
  for (int v = 0; v < n; ++v) {
    bv.bars[v].xl = touched[v] ? lo[v] : 0;
    bv.bars[v].xr = touched[v] ? hi[v] : 0;
  }
  for (int e = 0; e < m; ++e) {
    const EdgeRoute& r = bv.routes[e];
    bv.tops[r.low].push_back(e);
    if (r.color == EdgeColor::Red)
      (r.side < 0 ? bv.left_red : bv.right_red)[r.high] = e;
    else
      bv.bottoms[r.high].push_back(e);
  }
  auto by_x = [&](int a, int b) { return bv.routes[a].x < bv.routes[b].x; };
  for (int v = 0; v < n; ++v) {
    std::sort(bv.bottoms[v].begin(), bv.bottoms[v].end(), by_x);
    std::sort(bv.tops[v].begin(), bv.tops[v].end(), by_x);
    const auto& below = bv.bottoms[v];
    const auto& above = bv.tops[v];
    if (below.empty()) {
      bv.roles[v] = BarRole::Bottom;
    } else if (above.empty()) {
      bv.roles[v] = BarRole::Top;
    } else {
      bv.roles[v] = BarRole::Middle;
      continue;
    }
    const auto& vert = below.empty() ? above : below;
    int l = bv.left_red[v] >= 0 ? bv.left_red[v] : (vert.empty() ? -1 : vert.front());
    int r = bv.right_red[v] >= 0 ? bv.right_red[v] : (vert.empty() ? -1 : vert.back());
    bv.extremes[v] = {l >= 0 ? l : r, r >= 0 ? r : l};
  }
  return bv;
}

std::string BarVisibility::dump(const EmbeddedGraph& g) const {
  std::ostringstream os;
  for (int v = 0; v < static_cast<int>(bars.size()); ++v)
    os << "bar " << g.vertex_ids[v] << " y=" << bars[v].y << " x=[" << bars[v].xl << "," << bars[v].xr << "]\n";
  for (int e = 0; e < static_cast<int>(routes.size()); ++e) {
    os << "route " << g.edges[e].id << " color=" << color_name(routes[e].color) << " pts=";
    for (size_t i = 0; i < routes[e].pts.size(); ++i)
      os << (i ? ";" : "") << routes[e].pts[i].x << "," << routes[e].pts[i].y;
    os << "\n";
  }
  return os.str();
}

std::string check_bar_visibility(const CagedGraph& c, const BarVisibility& bv) {
  const EmbeddedGraph& g = c.graph;
  int n = static_cast<int>(bv.bars.size());
  int m = static_cast<int>(bv.routes.size());
  auto name = [&](int e) { return g.edges[e].id; };
  for (int v = 0; v < n; ++v)
    if (bv.bars[v].y != bv.order.rank[v]) return "bar y differs from the order";
  // vertical pieces
  for (int e = 0; e < m; ++e) {
    const EdgeRoute& r = bv.routes[e];
    long long x = r.x, y1 = r.pts[0].y, y2 = r.pts[1].y;
    if (r.pts[0].x != x || r.pts[1].x != x || y1 >= y2) return "route " + name(e) + " is not an upward vertical";
    for (int v = 0; v < n; ++v) {
      const Bar& b = bv.bars[v];
      if (b.y < y1 || b.y > y2 || x < b.xl || x > b.xr) continue;
      bool ok = (v == r.low && b.y == y1) || (v == r.high && b.y == y2 && r.color != EdgeColor::Red);
      if (!ok) return "route " + name(e) + " stabs bar " + g.vertex_ids[v];
    }
    if (r.color == EdgeColor::Red) {
      if (r.pts.size() != 3 || r.pts[2].y != y2) return "red route " + name(e) + " malformed";
      const Bar& b = bv.bars[r.high];
      long long end = r.pts[2].x;
      if (end != (r.side < 0 ? b.xl : b.xr)) return "red route " + name(e) + " misses the bar end";
    } else if (r.pts.size() != 2) {
      return "route " + name(e) + " has a bend";
    }
    for (int f = e + 1; f < m; ++f) {
      const EdgeRoute& s = bv.routes[f];
      if (s.x != x) continue;
      long long a1 = std::max(y1, s.pts[0].y), a2 = std::min(y2, s.pts[1].y);
      if (a1 < a2) return "routes " + name(e) + " and " + name(f) + " overlap";
      if (a1 == a2) {
        int shared = (a1 == y1) ? r.low : r.high;
        const EdgeRoute& t = s;
        int other = (a1 == t.pts[0].y) ? t.low : t.high;
        if (shared != other) return "routes " + name(e) + " and " + name(f) + " touch";
      }
    }
  }
  // red horizontals
  for (int e = 0; e < m; ++e) {
    const EdgeRoute& r = bv.routes[e];
    if (r.color != EdgeColor::Red) continue;
    long long y = r.pts[2].y, xa = std::min(r.pts[1].x, r.pts[2].x), xb = std::max(r.pts[1].x, r.pts[2].x);
    for (int v = 0; v < n; ++v) {
      const Bar& b = bv.bars[v];
      if (v == r.high || b.y != y) continue;
      if (b.xr >= xa && b.xl <= xb) return "red route " + name(e) + " runs into bar " + g.vertex_ids[v];
    }
    int hits = 0, hit = -1;
    for (int f = 0; f < m; ++f) {
      if (f == e) continue;
      const EdgeRoute& s = bv.routes[f];
      if (s.x >= xa && s.x <= xb && s.pts[0].y <= y && s.pts[1].y >= y) {
        if (s.x == r.pts[2].x && s.pts[0].y == y && s.low == r.high) continue;
        if (s.x == r.pts[2].x && s.pts[1].y == y && s.high == r.high) continue;
        ++hits;
        hit = f;
      }
      if (s.color == EdgeColor::Red && s.pts[2].y == y) {
        long long sa = std::min(s.pts[1].x, s.pts[2].x), sb = std::max(s.pts[1].x, s.pts[2].x);
        bool at_bar = s.high == r.high && (std::max(sa, xa) == std::min(sb, xb));
        if (sa <= xb && xa <= sb && !at_bar) return "red routes " + name(e) + " and " + name(f) + " meet";
      }
    }
    const Crossing& cr = g.crossings[r.crossing];
    int partner = cr.e1 == e ? cr.e2 : cr.e1;
    if (hits != 1 || hit != partner) return "red route " + name(e) + " crosses " + std::to_string(hits) + " verticals";
  }
  return "";
}

}  // namespace onedraw
