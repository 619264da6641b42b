#include <algorithm>
#include <map>
#include <stdexcept>

#include "onedraw/smooth_layout.hpp"

namespace onedraw {

Curve reversed(const Curve& c) {
  Curve out;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (it->is_arc()) out.push_back(Primitive::arc(it->center, it->to, it->quarters, !it->ccw));
    else out.push_back(Primitive::segment(it->to, it->from));
  }
  return out;
}

namespace {

Rational half_gap(long long a, long long b) { return Rational(std::abs(a - b), 2); }

}  // namespace

SmoothDrawing sc3_from_collapse(const CollapseResult& cr, const EmbeddedGraph& g) {
  const OrthoDrawing& d = cr.drawing;
  int n = g.num_vertices(), m = g.num_edges();
  std::vector<Rational> below(n), above(n);
  auto grow = [](Rational& slot, const Rational& v) {
    if (v > slot) slot = v;
  };
  for (int e = 0; e < m; ++e) {
    const CollapsedEdge& ce = cr.edges[e];
    long long c = ce.column, x = d.positions[ce.low].x, xh = d.positions[ce.high].x;
    switch (ce.low_port) {
      case Port::N:
        if (c != x) throw std::invalid_argument("edge " + g.edges[e].id + " leaves north off its column");
        break;
      case Port::S: grow(below[ce.low], half_gap(c, x)); break;
      default: grow(above[ce.low], Rational(std::abs(c - x))); break;
    }
    switch (ce.high_port) {
      case Port::N: grow(above[ce.high], half_gap(c, xh)); break;
      case Port::S: grow(below[ce.high], Rational(std::abs(c - xh))); break;
      default: grow(below[ce.high], Rational(std::abs(c - xh))); break;
    }
  }
  // one band per row; vertices of other components may share a row
  std::map<long long, std::pair<Rational, Rational>> band;
  for (int v = 0; v < n; ++v) {
    auto& b = band[cr.row[v]];
    grow(b.first, below[v]);
    grow(b.second, above[v]);
  }
  std::map<long long, Rational> level;
  Rational top = -1;
  for (const auto& [row, b] : band) {
    Rational y = top + 1 + b.first;
    level[row] = y;
    top = y + b.second;
  }
  SmoothDrawing s;
  s.positions.resize(n);
  for (int v = 0; v < n; ++v) s.positions[v] = {Rational(d.positions[v].x), level[cr.row[v]]};
  s.curves.resize(m);
  s.ports = d.ports;
  for (int e = 0; e < m; ++e) {
    const CollapsedEdge& ce = cr.edges[e];
    const RPoint& lo = s.positions[ce.low];
    const RPoint& hi = s.positions[ce.high];
    Rational c(ce.column);
    Curve curve;
    RPoint at = lo;
    switch (ce.low_port) {
      case Port::N: break;
      case Port::S: {
        Primitive p = Primitive::arc({(lo.x + c) / 2, lo.y}, lo, 2, c > lo.x);
        curve.push_back(p);
        at = p.to;
        break;
      }
      default: {
        Rational r = abs(c - lo.x);
        Primitive p = Primitive::arc({lo.x, lo.y + r}, lo, 1, c > lo.x);
        curve.push_back(p);
        at = p.to;
        break;
      }
    }
    Curve tail;
    RPoint start = hi;
    switch (ce.high_port) {
      case Port::N:
        start = {c, hi.y};
        tail.push_back(Primitive::arc({(c + hi.x) / 2, hi.y}, start, 2, c > hi.x));
        break;
      case Port::S:
        if (c != hi.x) {
          // the two radii differ by 1/2 so that the joint misses every column
          long long w = std::abs(ce.column - d.positions[ce.high].x);
          Rational r = Rational(w % 2 == 0 ? w - 1 : w, 2);
          bool right = hi.x > c;
          start = {c, hi.y - w};
          Primitive a = Primitive::arc({right ? Rational(c + r) : Rational(c - r), start.y}, start, 1, !right);
          tail.push_back(a);
          tail.push_back(Primitive::arc({a.to.x, hi.y}, a.to, 1, right));
        }
        break;
      default: {
        Rational r = abs(c - hi.x);
        start = {c, hi.y - r};
        tail.push_back(Primitive::arc({hi.x, start.y}, start, 1, c > hi.x));
        break;
      }
    }
    if (at.x != start.x || at.y > start.y)
      throw std::invalid_argument("edge " + g.edges[e].id + " does not fit its column");
    if (at != start) curve.push_back(Primitive::segment(at, start));
    curve.insert(curve.end(), tail.begin(), tail.end());
    if (g.edges[e].u != ce.low) curve = reversed(curve);
    s.curves[e] = curve;
  }
  for (const Crossing& x : g.crossings) s.crossings.push_back({x.e1, x.e2});
  return s;
}

SmoothDrawing sc3_layout(const EmbeddedGraph& g) {
  return sc3_from_collapse(oc4_collapse(g), g);
}

}  // namespace onedraw
