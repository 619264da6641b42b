#include "onedraw/ortho_layout.hpp"
#include "onedraw/ortho_rep.hpp"

#include <algorithm>
#include <stdexcept>

namespace onedraw {

namespace {

// Shifts the parts so that each starts one unit right of the previous one
// and all start at y = 0, then writes them into a drawing of g.
template <class Part>
void place_side_by_side(const EmbeddedGraph& g, const std::vector<Subgraph>& subs, std::vector<Part>& parts,
                        OrthoDrawing& out, std::vector<GridPoint>* shifts = nullptr) {
  out.positions.assign(g.num_vertices(), {});
  out.polylines.assign(g.num_edges(), {});
  out.ports.assign(g.num_edges(), {Port::N, Port::S});
  out.crossings.clear();
  long long next_x = 0;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    const Subgraph& s = subs[k];
    OrthoDrawing& d = parts[k];
    long long minx = d.positions[0].x, maxx = minx, miny = d.positions[0].y;
    for (const auto& p : d.positions) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
    }
    for (const auto& poly : d.polylines)
      for (const auto& p : poly) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
      }
    GridPoint shift{next_x - minx, -miny};
    if (shifts) shifts->push_back(shift);
    next_x += maxx - minx + 1;
    auto mv = [&](GridPoint p) { return GridPoint{p.x + shift.x, p.y + shift.y}; };
    for (std::size_t v = 0; v < s.vertex_map.size(); ++v) out.positions[s.vertex_map[v]] = mv(d.positions[v]);
    for (std::size_t e = 0; e < s.edge_map.size(); ++e) {
      auto& poly = out.polylines[s.edge_map[e]];
      for (const auto& p : d.polylines[e]) poly.push_back(mv(p));
      out.ports[s.edge_map[e]] = d.ports[e];
    }
    for (const auto& c : d.crossings) out.crossings.push_back({s.edge_map[c.e1], s.edge_map[c.e2], mv(c.at)});
  }
  // crossings in input order
  std::vector<OrthoCrossing> sorted;
  for (const Crossing& c : g.crossings)
    for (const auto& oc : out.crossings)
      if ((oc.e1 == c.e1 && oc.e2 == c.e2) || (oc.e1 == c.e2 && oc.e2 == c.e1)) sorted.push_back(oc);
  out.crossings = sorted;
}

void check_degree(const EmbeddedGraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) > 4) throw std::invalid_argument("vertex " + g.vertex_ids[v] + " has degree above 4");
}

}  // namespace

CollapseResult oc4_collapse(const EmbeddedGraph& g) {
  check_degree(g);
  std::vector<Subgraph> subs = split_components(g);
  std::vector<OrthoDrawing> parts;
  std::vector<CollapseResult> results;
  for (const Subgraph& s : subs) {
    CagedGraph c = cage_crossings(s.graph);
    BarVisibility bv = build_bar_visibility(c, st_order(c));
    results.push_back(collapse_bars(c, bv, assign_extremes(bv)));
    parts.push_back(results.back().drawing);
  }
  CollapseResult res;
  std::vector<GridPoint> shifts;
  place_side_by_side(g, subs, parts, res.drawing, &shifts);
  res.row.assign(g.num_vertices(), 0);
  res.edges.assign(g.num_edges(), {});
  for (std::size_t k = 0; k < subs.size(); ++k) {
    const Subgraph& s = subs[k];
    for (std::size_t v = 0; v < s.vertex_map.size(); ++v) res.row[s.vertex_map[v]] = results[k].row[v] + shifts[k].y;
    for (std::size_t e = 0; e < s.edge_map.size(); ++e) {
      CollapsedEdge ce = results[k].edges[e];
      ce.low = s.vertex_map[ce.low];
      ce.high = s.vertex_map[ce.high];
      ce.column += shifts[k].x;
      res.edges[s.edge_map[e]] = ce;
    }
    res.forced_side_exits += results[k].forced_side_exits;
  }
  return res;
}

OrthoDrawing remove_s_shapes(const OrthoDrawing& d, const EmbeddedGraph& g) {
  OrthoShape s = shape_of(d, g);
  cancel_s_shapes(s);
  return realize(s, g);
}

OrthoDrawing compact(const OrthoDrawing& d, const EmbeddedGraph& g) {
  return realize(shape_of(d, g), g);
}

OrthoDrawing reduce_crossing_bends(const OrthoDrawing& d, const EmbeddedGraph& g, int crossing) {
  if (crossing < 0 || crossing >= static_cast<int>(g.crossings.size()))
    throw std::invalid_argument("no crossing " + std::to_string(crossing));
  OrthoShape s = shape_of(d, g);
  cancel_s_shapes(s);
  const Crossing& c = g.crossings[crossing];
  auto cost = [&](const OrthoShape& t) { return t.bends(c.e1) + t.bends(c.e2); };
  int before = cost(s);
  OrthoShape best;
  int best_cost = before;
  for (bool ccw : {true, false}) {
    OrthoShape t = s;
    rotate_crossing(t, g, crossing, ccw);
    cancel_s_shapes(t);
    if (cost(t) < best_cost) best = t, best_cost = cost(t);
  }
  if (best_cost == before)
    throw std::invalid_argument("rotating crossing " + g.edges[c.e1].id + "/" + g.edges[c.e2].id + " saves no bend");
  return realize(best, g);
}

OrthoDrawing oc4_layout(const EmbeddedGraph& g) {
  return remove_s_shapes(oc4_collapse(g).drawing, g);
}

}  // namespace onedraw

namespace onedraw {

OrthoDrawing outer_oc3(const EmbeddedGraph& g) {
  check_degree(g);
  if (!is_biconnected(g)) throw std::invalid_argument("graph is not biconnected");
  if (!is_outer_one_plane(g)) throw std::invalid_argument("graph is not outer-1-plane");
  CagedGraph c = cage_crossings(g);
  StOrdering order = outer_st_order(c);
  BarVisibility bv = build_bar_visibility(c, order);
  ExtremeAssignment ex = outer_port_choice(bv, order);
  std::string bad = check_extremes(bv, ex);
  if (!bad.empty()) throw std::logic_error("outer port choice: " + bad);
  OrthoDrawing d = remove_s_shapes(collapse_bars(c, bv, ex).drawing, g);
  for (int k = 0; k < static_cast<int>(g.crossings.size()); ++k) {
    const Crossing& x = g.crossings[k];
    if (bend_count(d.polylines[x.e1]) <= 2 && bend_count(d.polylines[x.e2]) <= 2) continue;
    try {
      d = reduce_crossing_bends(d, g, k);
    } catch (const std::invalid_argument&) {
      // left as is; the caller sees the bend count
    }
  }
  return d;
}

}  // namespace onedraw
