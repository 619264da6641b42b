#include <algorithm>
#include <array>
#include <list>
#include <map>
#include <stdexcept>

#include "onedraw/ortho_layout.hpp"

namespace onedraw {

namespace {

int bar_degree(const BarVisibility& bv, int v) {
  return static_cast<int>(bv.bottoms[v].size() + bv.tops[v].size()) + (bv.left_red[v] >= 0) + (bv.right_red[v] >= 0);
}

bool needs_extreme(const BarVisibility& bv, int v) {
  return bv.roles[v] != BarRole::Middle && bar_degree(bv, v) == 4;
}

enum class ItemKind { Top, Bottom, LeftRed, RightRed, InvertedIn };

// Ports of the edges around a bar, listed ccw: right red, tops from right
// to left, left red, bottoms from left to right. Tops from left to right use
// W, N, E in this order and bottoms W, S, E; a U-turn port sits before or
// after them depending on its side.
bool ports_consistent(const std::vector<ItemKind>& kinds, const std::vector<Port>& ports,
                      const std::vector<bool>& left_end) {
  int k = static_cast<int>(ports.size());
  int used = 0;
  for (Port p : ports) {
    if (used & (1 << static_cast<int>(p))) return false;
    used |= 1 << static_cast<int>(p);
  }
  int last_top = 100, last_bottom = -100;
  for (int i = 0; i < k; ++i) {
    Port p = ports[i];
    if (kinds[i] == ItemKind::Top) {
      int rk = p == Port::W ? 0 : p == Port::N ? 1 : p == Port::E ? 2 : (left_end[i] ? -1 : 3);
      if (rk >= last_top) return false;
      last_top = rk;
    } else if (kinds[i] == ItemKind::Bottom) {
      int rk = p == Port::W ? 0 : p == Port::S ? 1 : p == Port::E ? 2 : (left_end[i] ? -1 : 3);
      if (rk <= last_bottom) return false;
      last_bottom = rk;
    }
  }
  if (k >= 3) {
    int turn = 0;
    for (int i = 0; i < k; ++i)
      turn += ((static_cast<int>(ports[(i + 1) % k]) - static_cast<int>(ports[i])) % 4 + 4) % 4;
    if (turn != 4) return false;
  }
  return true;
}

// Whether the red e can leave its lower end by north (or, for a diamond red,
// sideways past its blue partner) given the extreme edges.
bool red_leaves_straight(const BarVisibility& bv, int e, const std::vector<int>& extreme) {
  int v = bv.routes[e].low;
  int x = extreme[v];
  std::vector<ItemKind> kinds;
  std::vector<std::vector<Port>> opts;
  std::vector<bool> left;
  auto add = [&](ItemKind k, int edge, std::vector<Port> o) {
    if (edge == x) o.push_back(bv.roles[v] == BarRole::Bottom ? Port::S : Port::N);
    kinds.push_back(k);
    opts.push_back(std::move(o));
    left.push_back(edge == bv.extremes[v][0]);
  };
  if (bv.right_red[v] >= 0) add(ItemKind::RightRed, bv.right_red[v], {Port::E});
  for (auto it = bv.tops[v].rbegin(); it != bv.tops[v].rend(); ++it) {
    if (*it != e) {
      add(ItemKind::Top, *it, {Port::W, Port::N, Port::E});
      continue;
    }
    std::vector<Port> o{Port::N};
    if (bv.kites[bv.routes[e].crossing].kind == KiteKind::Diamond)
      o.push_back(bv.routes[e].side < 0 ? Port::E : Port::W);
    add(ItemKind::Top, -1, o);
  }
  if (bv.left_red[v] >= 0) add(ItemKind::LeftRed, bv.left_red[v], {Port::W});
  for (int b : bv.bottoms[v]) add(ItemKind::Bottom, b, {Port::W, Port::S, Port::E});
  int k = static_cast<int>(kinds.size());
  std::vector<int> pick(k, 0);
  while (true) {
    std::vector<Port> ports(k);
    for (int i = 0; i < k; ++i) ports[i] = opts[i][pick[i]];
    if (ports_consistent(kinds, ports, left)) return true;
    int i = 0;
    while (i < k && ++pick[i] == static_cast<int>(opts[i].size())) pick[i++] = 0;
    if (i == k) return false;
  }
}

// A red that is extreme at its upper, bottom bar enters it from below. Each
// such red of a wing kite costs a bend; one that cannot then leave its lower
// end straight would need a fourth bend and costs much more.
int assignment_cost(const BarVisibility& bv, const std::vector<int>& extreme) {
  int cost = 0;
  for (std::size_t v = 0; v < extreme.size(); ++v) {
    int e = extreme[v];
    if (e < 0) continue;
    const EdgeRoute& r = bv.routes[e];
    if (r.color != EdgeColor::Red || r.high != static_cast<int>(v) || bv.roles[v] != BarRole::Bottom) continue;
    if (!red_leaves_straight(bv, e, extreme)) cost += 100;
    else if (bv.kites[r.crossing].kind != KiteKind::Diamond) cost += 1;
  }
  return cost;
}

struct HComponent {
  std::vector<int> bars, edges;
  bool cycle = false;
  int options() const { return cycle ? 2 : static_cast<int>(bars.size()) + 1; }
  // bars[i] lies between edges[i] and edges[i + 1] (cyclically for a cycle)
  void apply(int j, std::vector<int>& extreme) const {
    int k = static_cast<int>(bars.size());
    for (int i = 0; i < k; ++i) extreme[bars[i]] = cycle ? edges[(i + j) % k] : edges[i < j ? i : i + 1];
  }
};

}  // namespace

ExtremeAssignment assign_extremes(const BarVisibility& bv) {
  int n = static_cast<int>(bv.bars.size());
  ExtremeAssignment ex;
  ex.extreme.assign(n, -1);
  std::map<int, std::vector<int>> bars_of;  // edge -> candidate bars
  for (int v = 0; v < n; ++v)
    if (needs_extreme(bv, v))
      for (int e : bv.extremes[v]) bars_of[e].push_back(v);
  std::vector<bool> seen(n, false);
  auto other_edge = [&](int v, int e) { return bv.extremes[v][0] == e ? bv.extremes[v][1] : bv.extremes[v][0]; };
  auto other_bar = [&](int e, int v) {
    const auto& b = bars_of[e];
    for (int w : b)
      if (w != v) return w;
    return -1;
  };
  std::vector<HComponent> comps;
  // paths start at an edge with a single candidate bar
  for (const auto& [e0, b] : bars_of) {
    if (b.size() != 1 || seen[b[0]]) continue;
    HComponent c;
    c.edges.push_back(e0);
    int e = e0, v = b[0];
    while (v >= 0 && !seen[v]) {
      seen[v] = true;
      c.bars.push_back(v);
      e = other_edge(v, e);
      c.edges.push_back(e);
      v = other_bar(e, v);
    }
    comps.push_back(c);
  }
  for (int s = 0; s < n; ++s) {
    if (!needs_extreme(bv, s) || seen[s]) continue;
    HComponent c;
    c.cycle = true;
    int v = s, e = bv.extremes[s][0];
    while (!seen[v]) {
      seen[v] = true;
      c.bars.push_back(v);
      c.edges.push_back(e);
      e = other_edge(v, e);
      v = other_bar(e, v);
    }
    comps.push_back(c);
  }
  for (const auto& c : comps) c.apply(0, ex.extreme);
  // improve one component at a time until nothing helps; a red that would
  // need a fourth bend may only be fixed by changing two components at once
  int cost = assignment_cost(bv, ex.extreme);
  std::size_t nc = comps.size();
  while (cost > 0) {
    for (bool improved = true; improved;) {
      improved = false;
      for (const auto& c : comps) {
        std::vector<int> best = ex.extreme;
        for (int j = 0; j < c.options(); ++j) {
          std::vector<int> trial = ex.extreme;
          c.apply(j, trial);
          int t = assignment_cost(bv, trial);
          if (t < cost) cost = t, best = trial, improved = true;
        }
        ex.extreme = best;
      }
    }
    if (cost < 100) break;
    bool found = false;
    for (std::size_t a = 0; a < nc && !found; ++a)
      for (std::size_t b = a + 1; b < nc && !found; ++b)
        for (int i = 0; i < comps[a].options() && !found; ++i)
          for (int j = 0; j < comps[b].options() && !found; ++j) {
            std::vector<int> trial = ex.extreme;
            comps[a].apply(i, trial);
            comps[b].apply(j, trial);
            int t = assignment_cost(bv, trial);
            if (t < cost) cost = t, ex.extreme = trial, found = true;
          }
    if (!found) break;
  }
  return ex;
}

std::string check_extremes(const BarVisibility& bv, const ExtremeAssignment& ex) {
  int n = static_cast<int>(bv.bars.size());
  std::map<int, int> used;
  for (int v = 0; v < n; ++v) {
    int e = ex.extreme[v];
    if (!needs_extreme(bv, v)) {
      if (e >= 0) return "vertex " + std::to_string(v) + " needs no extreme edge";
      continue;
    }
    if (e != bv.extremes[v][0] && e != bv.extremes[v][1])
      return "vertex " + std::to_string(v) + " has no leftmost/rightmost extreme";
    if (++used[e] > 1) return "edge " + std::to_string(e) + " is extreme twice";
  }
  return "";
}

// ---------------------------------------------------------------------------

namespace {

struct Item {
  int e;
  ItemKind kind;
};

struct PortChoice {
  std::vector<Port> ports;
  std::vector<bool> inverted;
  int cost = 0;
};

constexpr int kForced = 100;

class Collapser {
 public:
  Collapser(const CagedGraph& c, const BarVisibility& bv, const ExtremeAssignment& ex)
      : c_(c), bv_(bv), ex_(ex), n_(c.graph.num_vertices()), m_(c.num_original_edges) {}

  CollapseResult run();

 private:
  struct Pt {
    int col;
    long long y;
  };

  int new_col(std::list<int>::iterator pos) {
    int id = static_cast<int>(where_.size());
    where_.push_back(cols_.insert(pos, id));
    return id;
  }
  int after(int col) { return new_col(std::next(where_[col])); }
  int before(int col) { return new_col(where_[col]); }

  long long y_of(int v) const { return 3LL * bv_.order.rank[v] + 1; }
  bool is_red(int e) const { return bv_.routes[e].color == EdgeColor::Red; }
  bool diamond_red(int e) const {
    return is_red(e) && bv_.kites[bv_.routes[e].crossing].kind == KiteKind::Diamond;
  }
  // Port a diamond red leaves its lower end by when it crosses its blue
  // partner right there.
  Port inverted_port(int e) const { return bv_.routes[e].side < 0 ? Port::E : Port::W; }

  std::vector<Item> items_of(int v) const;
  PortChoice choose_ports(int v, const std::vector<Item>& items, bool relaxed) const;
  void place(int v);

  const CagedGraph& c_;
  const BarVisibility& bv_;
  const ExtremeAssignment& ex_;
  int n_, m_;
  std::list<int> cols_;
  std::vector<std::list<int>::iterator> where_;
  std::vector<int> col_;  // per edge: column of its vertical part, -1 before
  std::vector<long long> key_;
  std::vector<std::vector<Pt>> low_pts_, high_pts_;
  std::vector<int> vcol_;
  std::vector<bool> lowered_, raised_, inverted_;
  std::vector<Port> low_port_, high_port_;
  int forced_ = 0;
};

std::vector<Item> Collapser::items_of(int v) const {
  std::vector<Item> items;
  int r = bv_.right_red[v], l = bv_.left_red[v];
  if (r >= 0) items.push_back({r, inverted_[r] ? ItemKind::InvertedIn : ItemKind::RightRed});
  for (auto it = bv_.tops[v].rbegin(); it != bv_.tops[v].rend(); ++it) items.push_back({*it, ItemKind::Top});
  if (l >= 0) items.push_back({l, inverted_[l] ? ItemKind::InvertedIn : ItemKind::LeftRed});
  for (int b : bv_.bottoms[v]) items.push_back({b, ItemKind::Bottom});
  return items;
}

PortChoice Collapser::choose_ports(int v, const std::vector<Item>& items, bool relaxed) const {
  int k = static_cast<int>(items.size());
  BarRole role = bv_.roles[v];
  int ext = ex_.extreme[v];
  // options per item: (port, cost, inverted)
  struct Opt {
    Port p;
    int cost;
    bool inv;
  };
  std::vector<std::vector<Opt>> opts(k);
  for (int i = 0; i < k; ++i) {
    int e = items[i].e;
    auto& o = opts[i];
    switch (items[i].kind) {
      case ItemKind::Bottom:
        o = {{Port::S, 0, false}, {Port::W, 1, false}, {Port::E, 1, false}};
        if (role == BarRole::Top && ext == e) o.push_back({Port::N, 2, false});
        break;
      case ItemKind::InvertedIn:
        o = {{Port::S, 0, false}};
        break;
      case ItemKind::LeftRed:
      case ItemKind::RightRed: {
        Port side = items[i].kind == ItemKind::LeftRed ? Port::W : Port::E;
        o = {{side, 0, false}};
        if (ext == e) o.push_back({role == BarRole::Bottom ? Port::S : Port::N, 1, false});
        break;
      }
      case ItemKind::Top:
        if (is_red(e) && lowered_[e]) {
          // the S-shape at the upper end costs two bends
          o = {{Port::N, 2, false}};
          if (diamond_red(e)) o.push_back({inverted_port(e), 1, true});
          if (relaxed)
            for (Port p : {Port::W, Port::E})
              if (!diamond_red(e) || p != inverted_port(e)) o.push_back({p, 3 + kForced, false});
        } else {
          o = {{Port::N, 0, false}, {Port::W, 1, false}, {Port::E, 1, false}};
        }
        if (role == BarRole::Bottom && ext == e) o.push_back({Port::S, 2, false});
        break;
    }
  }
  std::vector<ItemKind> kinds(k);
  std::vector<bool> left_end(k);
  for (int i = 0; i < k; ++i) {
    kinds[i] = items[i].kind;
    left_end[i] = items[i].e == bv_.extremes[v][0];
  }
  PortChoice best;
  best.cost = -1;
  std::vector<int> pick(k, 0);
  // odometer over the option lists
  while (true) {
    std::vector<Port> ports(k);
    int cost = 0;
    for (int i = 0; i < k; ++i) {
      ports[i] = opts[i][pick[i]].p;
      cost += opts[i][pick[i]].cost;
    }
    bool ok = ports_consistent(kinds, ports, left_end);
    if (ok) {
      if (best.cost < 0 || cost < best.cost || (cost == best.cost && ports < best.ports)) {
        best.cost = cost;
        best.ports = ports;
        best.inverted.assign(k, false);
        for (int i = 0; i < k; ++i) best.inverted[i] = opts[i][pick[i]].inv;
      }
    }
    int i = 0;
    while (i < k && ++pick[i] == static_cast<int>(opts[i].size())) pick[i++] = 0;
    if (i == k) break;
  }
  return best;
}

void Collapser::place(int v) {
  std::vector<Item> items = items_of(v);
  PortChoice pc = choose_ports(v, items, false);
  if (pc.cost < 0) pc = choose_ports(v, items, true);
  if (pc.cost < 0) throw std::logic_error("no port assignment for a bar");
  if (pc.cost >= kForced) ++forced_;
  long long y = y_of(v);
  int rank = bv_.order.rank[v];

  // left / right active neighbours of the bar
  int P = -1, Q = -1;
  const Bar& bar = bv_.bars[v];
  for (int e = 0; e < m_; ++e) {
    const EdgeRoute& r = bv_.routes[e];
    if (col_[e] < 0 || bv_.order.rank[r.low] >= rank || bv_.order.rank[r.high] <= rank) continue;
    if (key_[e] < bar.xl && (P < 0 || key_[e] > key_[P])) P = e;
    if (key_[e] > bar.xr && (Q < 0 || key_[e] < key_[Q])) Q = e;
  }

  int k = static_cast<int>(items.size());
  int vc = -1;
  for (int i = 0; i < k && vc < 0; ++i)
    if ((items[i].kind == ItemKind::Bottom || items[i].kind == ItemKind::InvertedIn) && pc.ports[i] == Port::S)
      vc = col_[items[i].e];
  for (int i = 0; i < k && vc < 0; ++i)
    if (items[i].kind == ItemKind::Bottom && pc.ports[i] == Port::W) vc = after(col_[items[i].e]);
  for (int i = 0; i < k && vc < 0; ++i)
    if (items[i].kind == ItemKind::Bottom && pc.ports[i] == Port::E) vc = before(col_[items[i].e]);
  if (vc < 0) {
    if (P >= 0) vc = after(col_[P]);
    else if (Q >= 0) vc = before(col_[Q]);
    else vc = new_col(cols_.end());
  }
  vcol_[v] = vc;
  Pt at{vc, y};

  for (int i = 0; i < k; ++i) {
    int e = items[i].e;
    Port p = pc.ports[i];
    if (items[i].kind == ItemKind::Top) {
      low_port_[e] = p;
      std::vector<Pt>& pts = low_pts_[e];
      pts = {at};
      if (pc.inverted[i]) {
        inverted_[e] = true;
        int blue = bv_.kites[bv_.routes[e].crossing].blue;
        col_[e] = p == Port::E ? after(col_[blue]) : before(col_[blue]);
        key_[e] = bv_.routes[blue].x + (p == Port::E ? 1 : -1);
        pts.push_back({col_[e], y});
      } else if (p == Port::N) {
        col_[e] = vc;
        key_[e] = bv_.routes[e].x;
      } else if (p == Port::W || p == Port::E) {
        col_[e] = p == Port::W ? before(vc) : after(vc);
        key_[e] = bv_.routes[e].x;
        pts.push_back({col_[e], y});
      } else {
        // U-turn below a bottom bar
        bool left = e == bv_.extremes[v][0];
        if (left) col_[e] = P >= 0 ? after(col_[P]) : new_col(cols_.begin());
        else col_[e] = Q >= 0 ? before(col_[Q]) : new_col(cols_.end());
        key_[e] = bv_.routes[e].x;
        pts.push_back({vc, y - 1});
        pts.push_back({col_[e], y - 1});
      }
    } else {
      high_port_[e] = p;
      std::vector<Pt>& pts = high_pts_[e];
      int ce = col_[e];
      if (p == Port::S && items[i].kind == ItemKind::Bottom) {
        pts = {at};
      } else if (items[i].kind == ItemKind::InvertedIn) {
        pts = {at};
      } else if (p == Port::S) {
        lowered_[e] = true;
        pts = {{ce, y - 1}, {vc, y - 1}, at};
      } else if (p == Port::N) {
        if (is_red(e)) raised_[e] = true;
        pts = {{ce, y + 1}, {vc, y + 1}, at};
      } else {
        pts = {{ce, y}, at};
      }
    }
  }
}

CollapseResult Collapser::run() {
  col_.assign(m_, -1);
  key_.assign(m_, 0);
  low_pts_.assign(m_, {});
  high_pts_.assign(m_, {});
  vcol_.assign(n_, -1);
  lowered_.assign(m_, false);
  raised_.assign(m_, false);
  inverted_.assign(m_, false);
  low_port_.assign(m_, Port::N);
  high_port_.assign(m_, Port::S);
  // a red that is extreme at a bottom bar enters it from below
  for (int e = 0; e < m_; ++e) {
    const EdgeRoute& r = bv_.routes[e];
    if (r.color == EdgeColor::Red && ex_.extreme[r.high] == e && bv_.roles[r.high] == BarRole::Bottom)
      lowered_[e] = true;
  }
  for (int v : bv_.order.sequence) place(v);

  std::vector<long long> x(where_.size());
  long long i = 0;
  for (int id : cols_) x[id] = i++;

  CollapseResult res;
  OrthoDrawing& d = res.drawing;
  const EmbeddedGraph& g = c_.graph;
  d.positions.resize(n_);
  res.row.resize(n_);
  for (int v = 0; v < n_; ++v) {
    res.row[v] = y_of(v);
    d.positions[v] = {vcol_[v] >= 0 ? x[vcol_[v]] : 0, y_of(v)};
  }
  d.polylines.resize(m_);
  d.ports.resize(m_);
  res.edges.resize(m_);
  for (int e = 0; e < m_; ++e) {
    const EdgeRoute& r = bv_.routes[e];
    std::vector<GridPoint> pts;
    for (const auto& list : {low_pts_[e], high_pts_[e]})
      for (const Pt& p : list) {
        GridPoint q{x[p.col], p.y};
        if (!pts.empty() && pts.back() == q) continue;
        pts.push_back(q);
      }
    // drop points that are not bends
    std::vector<GridPoint> clean;
    for (const GridPoint& q : pts) {
      while (clean.size() >= 2) {
        const GridPoint& a = clean[clean.size() - 2];
        const GridPoint& b = clean.back();
        if ((a.x == b.x && b.x == q.x) || (a.y == b.y && b.y == q.y)) clean.pop_back();
        else break;
      }
      clean.push_back(q);
    }
    bool forward = g.edges[e].u == r.low;
    if (!forward) std::reverse(clean.begin(), clean.end());
    d.polylines[e] = clean;
    d.ports[e] = forward ? std::array<Port, 2>{low_port_[e], high_port_[e]}
                         : std::array<Port, 2>{high_port_[e], low_port_[e]};
    CollapsedEdge& ce = res.edges[e];
    ce.low = r.low;
    ce.high = r.high;
    ce.low_port = low_port_[e];
    ce.high_port = high_port_[e];
    ce.column = x[col_[e]];
    ce.red = r.color == EdgeColor::Red;
    ce.lowered = lowered_[e] && high_port_[e] == Port::S && !inverted_[e];
    ce.raised = raised_[e];
    ce.inverted = inverted_[e];
  }
  for (const Crossing& cr : g.crossings) {
    OrthoCrossing oc{cr.e1, cr.e2, {0, 0}};
    const auto& a = d.polylines[cr.e1];
    const auto& b = d.polylines[cr.e2];
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
      for (std::size_t j = 0; j + 1 < b.size(); ++j) {
        const GridPoint &p = a[i], &q = a[i + 1], &s = b[j], &t = b[j + 1];
        const GridPoint* hv[2][2] = {{&p, &q}, {&s, &t}};
        bool av = p.x == q.x, bv = s.x == t.x;
        if (av == bv) continue;
        const GridPoint* const* V = av ? hv[0] : hv[1];
        const GridPoint* const* H = av ? hv[1] : hv[0];
        long long xx = V[0]->x, yy = H[0]->y;
        if (std::min(H[0]->x, H[1]->x) < xx && xx < std::max(H[0]->x, H[1]->x) &&
            std::min(V[0]->y, V[1]->y) < yy && yy < std::max(V[0]->y, V[1]->y))
          oc.at = {xx, yy};
      }
    d.crossings.push_back(oc);
  }
  res.forced_side_exits = forced_;
  return res;
}

}  // namespace

CollapseResult collapse_bars(const CagedGraph& c, const BarVisibility& bv, const ExtremeAssignment& ex) {
  std::string why = check_extremes(bv, ex);
  if (!why.empty()) throw std::invalid_argument("bad extreme assignment: " + why);
  return Collapser(c, bv, ex).run();
}

}  // namespace onedraw

namespace onedraw {

ExtremeAssignment outer_port_choice(const BarVisibility& bv, const StOrdering& order) {
  if (order.left_path.size() + order.right_path.size() + 2 != order.sequence.size())
    throw std::invalid_argument("order is not of outer form");
  int n = static_cast<int>(bv.bars.size());
  std::vector<int> path(n, 0);  // -1 left (with s), +1 right (with t)
  for (int v : order.left_path) path[v] = -1;
  for (int v : order.right_path) path[v] = 1;
  path[order.s] = -1;
  path[order.t] = 1;
  ExtremeAssignment ex;
  ex.extreme.assign(n, -1);
  auto far = [&](int e, int v) { return bv.routes[e].low == v ? bv.routes[e].high : bv.routes[e].low; };
  for (int v = 0; v < n; ++v) {
    if (!needs_extreme(bv, v)) continue;
    int el = bv.extremes[v][0], er = bv.extremes[v][1];
    bool bottom = bv.roles[v] == BarRole::Bottom;
    if (path[v] < 0)
      ex.extreme[v] = bottom ? (path[far(el, v)] < 0 && far(el, v) != order.s ? el : er) : el;
    else
      ex.extreme[v] = bottom ? er : (path[far(er, v)] > 0 && far(er, v) != order.t ? er : el);
  }
  return ex;
}

}  // namespace onedraw
