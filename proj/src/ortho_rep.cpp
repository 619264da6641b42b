#include "onedraw/ortho_rep.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace onedraw {

int HalfShape::end() const {
  int d = start;
  for (char c : turns) d = (d + (c == 'L' ? 1 : 3)) & 3;
  return d;
}

int OrthoShape::bends(int e) const {
  int k = 0;
  for (const auto& h : halves[e]) k += static_cast<int>(h.turns.size());
  return k;
}

namespace {

int dir_between(GridPoint a, GridPoint b) {
  if (a == b) throw std::invalid_argument("zero-length segment");
  if (a.x != b.x && a.y != b.y) throw std::invalid_argument("segment is not axis-parallel");
  return static_cast<int>(port_of(sgn(b.x - a.x), sgn(b.y - a.y)));
}

bool strictly_inside(GridPoint p, GridPoint a, GridPoint b) {
  if (a.x == b.x) return p.x == a.x && std::min(a.y, b.y) < p.y && p.y < std::max(a.y, b.y);
  return p.y == a.y && std::min(a.x, b.x) < p.x && p.x < std::max(a.x, b.x);
}

std::string turns_of(const std::vector<int>& dirs) {
  std::string t;
  for (std::size_t i = 1; i < dirs.size(); ++i) {
    int diff = (dirs[i] - dirs[i - 1]) & 3;
    if (diff == 1) t += 'L';
    else if (diff == 3) t += 'R';
    else if (diff == 2) throw std::invalid_argument("polyline reverses");
  }
  return t;
}

}  // namespace

OrthoShape shape_of(const OrthoDrawing& d, const EmbeddedGraph& g) {
  OrthoShape s;
  s.num_vertices = g.num_vertices();
  s.num_crossings = static_cast<int>(g.crossings.size());
  s.halves.resize(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& poly = d.polylines[e];
    if (poly.size() < 2) throw std::invalid_argument("edge " + g.edges[e].id + " has no polyline");
    std::vector<int> dirs;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i) dirs.push_back(dir_between(poly[i], poly[i + 1]));
    int k = g.crossing_of(e);
    if (k < 0) {
      s.halves[e].push_back({g.edges[e].u, g.edges[e].v, dirs[0], turns_of(dirs)});
      continue;
    }
    const Crossing& c = g.crossings[k];
    const OrthoCrossing* oc = nullptr;
    for (const auto& x : d.crossings)
      if ((x.e1 == c.e1 && x.e2 == c.e2) || (x.e1 == c.e2 && x.e2 == c.e1)) oc = &x;
    if (!oc) throw std::invalid_argument("crossing of " + g.edges[e].id + " is not realized");
    std::size_t seg = poly.size();
    for (std::size_t i = 0; i + 1 < poly.size(); ++i)
      if (strictly_inside(oc->at, poly[i], poly[i + 1])) seg = i;
    if (seg == poly.size()) throw std::invalid_argument("crossing point off edge " + g.edges[e].id);
    int dummy = g.num_vertices() + k;
    std::vector<int> first(dirs.begin(), dirs.begin() + seg + 1), second(dirs.begin() + seg, dirs.end());
    s.halves[e].push_back({g.edges[e].u, dummy, first[0], turns_of(first)});
    s.halves[e].push_back({dummy, g.edges[e].v, second[0], turns_of(second)});
  }
  return s;
}

bool cancel_s_shapes(OrthoShape& s) {
  bool changed = false;
  for (auto& hs : s.halves)
    for (auto& h : hs) {
      std::string out;
      for (char c : h.turns) {
        if (!out.empty() && out.back() != c) {
          out.pop_back();
          changed = true;
        } else {
          out += c;
        }
      }
      h.turns = out;
    }
  return changed;
}

void rotate_crossing(OrthoShape& s, const EmbeddedGraph& g, int k, bool ccw) {
  for (int e : {g.crossings[k].e1, g.crossings[k].e2}) {
    auto& hs = s.halves[e];
    hs[0].turns += ccw ? 'L' : 'R';
    hs[1].turns.insert(hs[1].turns.begin(), ccw ? 'R' : 'L');
    hs[1].start = (hs[1].start + (ccw ? 1 : 3)) & 3;
  }
}

namespace {

// Nodes with up to one link per direction; link l runs from ends[l][0] to
// ends[l][1] in direction dir[l]. Dart 2l walks the link forwards, 2l+1
// backwards.
struct Net {
  std::vector<std::array<int, 4>> slot;
  std::vector<std::array<int, 2>> ends;
  std::vector<int> dir;

  int node() {
    slot.push_back({-1, -1, -1, -1});
    return static_cast<int>(slot.size()) - 1;
  }
  int link(int a, int b, int d) {
    if (slot[a][d] >= 0 || slot[b][(d + 2) & 3] >= 0) throw std::logic_error("port used twice in shape");
    int l = static_cast<int>(ends.size());
    ends.push_back({a, b});
    dir.push_back(d);
    slot[a][d] = l;
    slot[b][(d + 2) & 3] = l;
    return l;
  }
  // Puts a new node x in the middle of link l.
  int split(int l) {
    int x = node();
    int a = ends[l][0], b = ends[l][1], d = dir[l];
    slot[b][(d + 2) & 3] = -1;
    ends[l][1] = x;
    slot[x][(d + 2) & 3] = l;
    int m = static_cast<int>(ends.size());
    ends.push_back({x, b});
    dir.push_back(d);
    slot[x][d] = m;
    slot[b][(d + 2) & 3] = m;
    (void)a;
    return x;
  }
  int num_darts() const { return 2 * static_cast<int>(ends.size()); }
  int tail(int t) const { return ends[t >> 1][t & 1]; }
  int head(int t) const { return ends[t >> 1][(t & 1) ^ 1]; }
  int dart_dir(int t) const { return (dir[t >> 1] + (t & 1 ? 2 : 0)) & 3; }
  int leaving(int v, int d) const {
    int l = slot[v][d];
    return ends[l][0] == v && dir[l] == d ? 2 * l : 2 * l + 1;
  }
  // Next dart with the face on the left, and the turn taken at the corner.
  std::pair<int, int> next(int t) const {
    int v = head(t), d = dart_dir(t);
    for (int turn : {1, 0, -1, -2}) {
      int nd = (d + turn + 4) & 3;
      if (slot[v][nd] >= 0) return {leaving(v, nd), turn};
    }
    throw std::logic_error("dangling dart");
  }
};

struct Corner {
  int dart;  // arrives at the corner
  int turn;
};

std::vector<std::vector<Corner>> faces_of(const Net& net) {
  std::vector<std::vector<Corner>> faces;
  std::vector<bool> seen(net.num_darts(), false);
  for (int t0 = 0; t0 < net.num_darts(); ++t0) {
    if (seen[t0]) continue;
    std::vector<Corner> f;
    int t = t0;
    do {
      seen[t] = true;
      auto [n, turn] = net.next(t);
      f.push_back({t, turn});
      t = n;
    } while (t != t0);
    faces.push_back(f);
  }
  return faces;
}

int turn_sum(const std::vector<Corner>& f) {
  int s = 0;
  for (const auto& c : f) s += c.turn;
  return s;
}

// One cut of a face: from a reflex corner straight ahead to the side after
// the convex corners that close a rectangle. Returns false if none found.
bool refine_face(Net& net, const std::vector<Corner>& f) {
  int k = static_cast<int>(f.size());
  for (int i = 0; i < k; ++i) {
    if (f[i].turn >= 0) continue;
    int need = 1 - f[i].turn, got = 0;
    for (int j = 1; j < k; ++j) {
      const Corner& c = f[(i + j) % k];
      if (c.turn < 0) break;
      if (c.turn == 0) continue;
      if (++got == need) {
        int after = f[(i + j + 1) % k].dart;  // leaves the last convex corner
        int from = net.head(f[i].dart);
        int h = net.dart_dir(f[i].dart);
        int x = net.split(after >> 1);
        net.link(from, x, h);
        return true;
      }
    }
  }
  return false;
}

std::vector<long long> longest_paths(const Net& net, bool horizontal) {
  // classes: nodes joined by links perpendicular to the measured axis
  int n = static_cast<int>(net.slot.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto along = [&](int d) { return horizontal ? (d == 0 || d == 2) : (d == 1 || d == 3); };
  for (std::size_t l = 0; l < net.ends.size(); ++l)
    if (!along(net.dir[l])) parent[find(net.ends[l][0])] = find(net.ends[l][1]);
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (std::size_t l = 0; l < net.ends.size(); ++l) {
    if (!along(net.dir[l])) continue;
    int a = find(net.ends[l][0]), b = find(net.ends[l][1]);
    if (net.dir[l] >= 2) std::swap(a, b);  // W or S runs downwards
    out[a].push_back(b);
    ++indeg[b];
  }
  std::vector<long long> pos(n, 0);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (find(v) == v && indeg[v] == 0) queue.push_back(v);
  std::size_t done = 0;
  for (std::size_t q = 0; q < queue.size(); ++q, ++done) {
    int v = queue[q];
    for (int w : out[v]) {
      pos[w] = std::max(pos[w], pos[v] + 1);
      if (--indeg[w] == 0) queue.push_back(w);
    }
  }
  std::size_t classes = 0;
  for (int v = 0; v < n; ++v) classes += find(v) == v;
  if (done != classes) throw std::logic_error("shape is not realizable");
  std::vector<long long> res(n);
  for (int v = 0; v < n; ++v) res[v] = pos[find(v)];
  return res;
}

// Coordinates for a connected net; the first `keep` nodes are compressed
// onto consecutive rows and columns starting at 0.
std::vector<GridPoint> compact_component(Net net, int keep) {
  if (net.ends.empty()) return std::vector<GridPoint>(keep, GridPoint{0, 0});
  auto faces = faces_of(net);
  const std::vector<Corner>* outer = nullptr;
  for (const auto& f : faces)
    if (turn_sum(f) == -4) outer = &f;
  if (!outer) throw std::logic_error("shape has no outer face");
  // connector from the smallest outer node with a free outward direction
  int best = -1, cdir = 0;
  for (const auto& c : *outer) {
    if (c.turn > 0) continue;
    int v = net.head(c.dart);
    if (best < 0 || v < best) best = v, cdir = (net.dart_dir(c.dart) + 1) & 3;
  }
  std::array<int, 4> corner;  // SW, SE, NE, NW
  for (int& c : corner) c = net.node();
  std::array<int, 4> side;    // bottom (E), right (N), top (W), left (S)
  for (int i = 0; i < 4; ++i) side[i] = net.link(corner[i], corner[(i + 1) % 4], (i + 0) & 3);
  // side facing cdir: E -> right, N -> top, W -> left, S -> bottom
  static constexpr std::array<int, 4> facing{1, 2, 3, 0};
  int t = net.split(side[facing[cdir]]);
  net.link(best, t, cdir);
  for (;;) {
    bool cut = false;
    for (const auto& f : faces_of(net)) {
      if (turn_sum(f) != 4) continue;
      if (refine_face(net, f)) {
        cut = true;
        break;
      }
    }
    if (!cut) break;
  }
  std::vector<long long> xs = longest_paths(net, true), ys = longest_paths(net, false);
  auto ranks = [&](const std::vector<long long>& v) {
    std::vector<long long> u(v.begin(), v.begin() + keep);
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    std::vector<long long> r(keep);
    for (int i = 0; i < keep; ++i) r[i] = std::lower_bound(u.begin(), u.end(), v[i]) - u.begin();
    return r;
  };
  std::vector<long long> rx = ranks(xs), ry = ranks(ys);
  std::vector<GridPoint> res(keep);
  for (int i = 0; i < keep; ++i) res[i] = {rx[i], ry[i]};
  return res;
}

std::vector<GridPoint> without_straight_points(const std::vector<GridPoint>& pts) {
  std::vector<GridPoint> out;
  for (const auto& p : pts) {
    if (!out.empty() && out.back() == p) continue;
    while (out.size() >= 2) {
      const GridPoint& a = out[out.size() - 2];
      const GridPoint& b = out.back();
      bool straight = (a.x == b.x && b.x == p.x) || (a.y == b.y && b.y == p.y);
      if (!straight) break;
      out.pop_back();
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

OrthoDrawing realize(const OrthoShape& s, const EmbeddedGraph& g) {
  Net net;
  int base = s.num_vertices + s.num_crossings;
  for (int i = 0; i < base; ++i) net.node();
  std::vector<std::vector<int>> path(s.halves.size());
  for (std::size_t e = 0; e < s.halves.size(); ++e) {
    for (const auto& h : s.halves[e]) {
      int cur = h.from, d = h.start;
      if (path[e].empty()) path[e].push_back(cur);
      for (char c : h.turns) {
        int b = net.node();
        net.link(cur, b, d);
        path[e].push_back(b);
        cur = b;
        d = (d + (c == 'L' ? 1 : 3)) & 3;
      }
      net.link(cur, h.to, d);
      path[e].push_back(h.to);
    }
  }
  int total = static_cast<int>(net.slot.size());
  // components by union-find over links
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : net.ends) {
    int a = find(e[0]), b = find(e[1]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<GridPoint> pos(total);
  long long next_x = 0;
  std::map<int, std::vector<int>> comps;  // root = smallest node
  for (int v = 0; v < total; ++v) comps[find(v)].push_back(v);
  for (const auto& [root, nodes] : comps) {
    std::vector<int> local(total, -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<int>(i);
    Net sub;
    for (std::size_t i = 0; i < nodes.size(); ++i) sub.node();
    for (std::size_t l = 0; l < net.ends.size(); ++l)
      if (local[net.ends[l][0]] >= 0) sub.link(local[net.ends[l][0]], local[net.ends[l][1]], net.dir[l]);
    std::vector<GridPoint> p = compact_component(std::move(sub), static_cast<int>(nodes.size()));
    long long w = 0;
    for (const auto& q : p) w = std::max(w, q.x);
    for (std::size_t i = 0; i < nodes.size(); ++i) pos[nodes[i]] = {p[i].x + next_x, p[i].y};
    next_x += w + 1;
  }
  OrthoDrawing d;
  d.positions.assign(pos.begin(), pos.begin() + s.num_vertices);
  d.polylines.resize(s.halves.size());
  d.ports.resize(s.halves.size());
  for (std::size_t e = 0; e < s.halves.size(); ++e) {
    std::vector<GridPoint> pts;
    for (int v : path[e]) pts.push_back(pos[v]);
    d.polylines[e] = without_straight_points(pts);
    d.ports[e] = {static_cast<Port>(s.halves[e].front().start),
                  opposite(static_cast<Port>(s.halves[e].back().end()))};
  }
  for (int k = 0; k < s.num_crossings; ++k)
    d.crossings.push_back({g.crossings[k].e1, g.crossings[k].e2, pos[s.num_vertices + k]});
  return d;
}

}  // namespace onedraw
