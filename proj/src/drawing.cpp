#include "onedraw/drawing.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace onedraw {

const char* port_name(Port p) {
  switch (p) {
    case Port::E: return "E";
    case Port::N: return "N";
    case Port::W: return "W";
    case Port::S: return "S";
  }
  return "?";
}

Port port_of(int dx, int dy) {
  if (dx > 0 && dy == 0) return Port::E;
  if (dx < 0 && dy == 0) return Port::W;
  if (dy > 0 && dx == 0) return Port::N;
  if (dy < 0 && dx == 0) return Port::S;
  throw std::invalid_argument("not an axis direction");
}

std::string to_string(const Rational& r) {
  return r.str();
}

namespace {

int dir_between(const RPoint& a, const RPoint& b) {
  return static_cast<int>(port_of(sgn(b.x - a.x), sgn(b.y - a.y)));
}

RPoint axis_point(const RPoint& c, const Rational& r, int a) {
  return {c.x + dir_dx(a) * r, c.y + dir_dy(a) * r};
}

// Angle index (0..3) of an axis point p on the circle around c, -1 if p is
// not an axis point.
int axis_index(const RPoint& c, const Rational& r, const RPoint& p) {
  for (int a = 0; a < 4; ++a)
    if (axis_point(c, r, a) == p) return a;
  return -1;
}

}  // namespace

Primitive Primitive::segment(const RPoint& a, const RPoint& b) {
  Primitive p;
  if (a.x == b.x && a.y != b.y) {
    p.kind = Kind::VSegment;
  } else if (a.y == b.y && a.x != b.x) {
    p.kind = Kind::HSegment;
  } else {
    throw std::invalid_argument("segment is not axis-parallel or is degenerate");
  }
  p.from = a;
  p.to = b;
  return p;
}

Primitive Primitive::arc(const RPoint& center, const RPoint& from, int quarters, bool ccw) {
  if (quarters < 1 || quarters > 3) throw std::invalid_argument("arc must span 1 to 3 quarters");
  Rational r = abs(from.x - center.x) + abs(from.y - center.y);
  if (r <= 0) throw std::invalid_argument("arc radius must be positive");
  int a = axis_index(center, r, from);
  if (a < 0) throw std::invalid_argument("arc start is not an axis point");
  Primitive p;
  p.kind = Kind::Arc;
  p.center = center;
  p.radius = r;
  p.quarters = quarters;
  p.ccw = ccw;
  p.from = from;
  int b = ((ccw ? a + quarters : a - quarters) % 4 + 4) % 4;
  p.to = axis_point(center, r, b);
  return p;
}

int Primitive::start_dir() const {
  if (kind != Kind::Arc) return dir_between(from, to);
  int a = axis_index(center, radius, from);
  return ((ccw ? a + 1 : a - 1) + 4) % 4;
}

int Primitive::end_dir() const {
  if (kind != Kind::Arc) return dir_between(from, to);
  int b = axis_index(center, radius, to);
  return ((ccw ? b + 1 : b - 1) + 4) % 4;
}

Curve curve_of(const std::vector<GridPoint>& poly) {
  Curve c;
  for (std::size_t i = 0; i + 1 < poly.size(); ++i)
    c.push_back(Primitive::segment({poly[i].x, poly[i].y}, {poly[i + 1].x, poly[i + 1].y}));
  return c;
}

SmoothDrawing as_smooth(const OrthoDrawing& d) {
  SmoothDrawing s;
  for (const GridPoint& p : d.positions) s.positions.push_back({p.x, p.y});
  for (const auto& poly : d.polylines) s.curves.push_back(curve_of(poly));
  s.ports = d.ports;
  for (const auto& c : d.crossings) s.crossings.push_back({c.e1, c.e2});
  return s;
}

int curve_complexity(const Curve& c) {
  if (c.empty()) throw std::invalid_argument("empty curve");
  return static_cast<int>(c.size());
}

int max_complexity(const SmoothDrawing& d) {
  int k = 0;
  for (const Curve& c : d.curves) k = std::max(k, static_cast<int>(c.size()));
  return k;
}

int max_complexity(const OrthoDrawing& d) {
  int k = 0;
  for (const auto& p : d.polylines) k = std::max(k, static_cast<int>(p.size()) - 1);
  return k;
}

ValidationReport check_tangency(const Curve& c, const std::string& edge_id) {
  ValidationReport rep;
  std::vector<std::string> el;
  if (!edge_id.empty()) el.push_back(edge_id);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Primitive& p = c[i];
    if (p.is_arc()) {
      if (p.radius <= 0 || p.quarters < 1 || p.quarters > 3 || axis_index(p.center, p.radius, p.from) < 0 ||
          axis_index(p.center, p.radius, p.to) < 0)
        rep.add("arc", el, "malformed arc at primitive " + std::to_string(i));
    } else if ((p.from.x == p.to.x) == (p.from.y == p.to.y)) {
      rep.add("segment", el, "segment " + std::to_string(i) + " is not axis-parallel");
      continue;
    }
    if (i + 1 == c.size()) break;
    const Primitive& q = c[i + 1];
    if (p.to != q.from) {
      rep.add("tangency", el, "primitives " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not meet");
    } else if (q.from.x == q.to.x && q.from.y == q.to.y) {
      rep.add("segment", el, "degenerate primitive " + std::to_string(i + 1));
    } else if (p.end_dir() != q.start_dir()) {
      rep.add("tangency", el,
              "no common tangent between primitives " + std::to_string(i) + " and " + std::to_string(i + 1));
    }
  }
  return rep;
}

ValidationReport check_orthogonal(const OrthoDrawing& d, const EmbeddedGraph& g) {
  ValidationReport rep;
  if (static_cast<int>(d.positions.size()) != g.num_vertices() ||
      static_cast<int>(d.polylines.size()) != g.num_edges() || static_cast<int>(d.ports.size()) != g.num_edges()) {
    rep.add("shape", {}, "drawing does not match the graph size");
    return rep;
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& p = d.polylines[e];
    const std::string& id = g.edges[e].id;
    if (p.size() < 2) {
      rep.add("polyline", {id}, "fewer than two points");
      continue;
    }
    if (p.front() != d.positions[g.edges[e].u] || p.back() != d.positions[g.edges[e].v])
      rep.add("polyline", {id}, "endpoints differ from the vertex positions");
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      bool h = p[i].y == p[i + 1].y, v = p[i].x == p[i + 1].x;
      if (h == v) rep.add("polyline", {id}, "segment " + std::to_string(i) + " is not axis-parallel or is empty");
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      bool h1 = p[i - 1].y == p[i].y, h2 = p[i].y == p[i + 1].y;
      if (h1 == h2) rep.add("polyline", {id}, "point " + std::to_string(i) + " is not a bend");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Exact intersection of primitives. Intersection points have coordinates
// a + b*sqrt(D) with rational a, b, D; D is shared by both coordinates.

namespace {

struct QPoint {
  Rational xa, xb, ya, yb, d;
  bool rational() const { return xb == 0 && yb == 0; }
  bool operator==(const QPoint& o) const {
    if (rational() != o.rational()) return false;
    if (rational()) return xa == o.xa && ya == o.ya;
    return d == o.d && xa == o.xa && xb == o.xb && ya == o.ya && yb == o.yb;
  }
  bool equals(const RPoint& p) const { return rational() && xa == p.x && ya == p.y; }
};

// sign of a + b sqrt(d), d >= 0
int sign_qs(const Rational& a, const Rational& b, const Rational& d) {
  int sa = sgn(a), sb = sgn(b);
  if (sb == 0 || d == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational lhs = a * a, rhs = b * b * d;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

// Exact rational square root, if any.
std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  const mpq_t& v = q.backend().data();
  if (!mpz_perfect_square_p(mpq_numref(v)) || !mpz_perfect_square_p(mpq_denref(v))) return std::nullopt;
  mpz_t n, dd;
  mpz_init(n);
  mpz_init(dd);
  mpz_sqrt(n, mpq_numref(v));
  mpz_sqrt(dd, mpq_denref(v));
  mpq_t r;
  mpq_init(r);
  mpq_set_num(r, n);
  mpq_set_den(r, dd);
  mpq_canonicalize(r);
  Rational out(r);
  mpq_clear(r);
  mpz_clear(n);
  mpz_clear(dd);
  return out;
}

QPoint make_point(Rational xa, Rational xb, Rational ya, Rational yb, const Rational& d) {
  QPoint p{std::move(xa), std::move(xb), std::move(ya), std::move(yb), d};
  if (d == 0) {
    p.xb = 0;
    p.yb = 0;
  } else if (auto s = rational_sqrt(d)) {
    p.xa += p.xb * *s;
    p.ya += p.yb * *s;
    p.xb = 0;
    p.yb = 0;
  }
  if (p.rational()) p.d = 0;
  return p;
}

// Quarter circle piece: quadrant q covers angles [q*90, (q+1)*90].
struct Piece {
  bool arc = false;
  RPoint a, b;  // segment endpoints
  RPoint c;
  Rational r;
  int q = 0;
};

int qsx(int q) { return (q == 0 || q == 3) ? 1 : -1; }
int qsy(int q) { return (q == 0 || q == 1) ? 1 : -1; }

std::vector<Piece> pieces_of(const Primitive& p) {
  std::vector<Piece> out;
  if (!p.is_arc()) {
    Piece s;
    s.a = p.from;
    s.b = p.to;
    out.push_back(s);
    return out;
  }
  int a = axis_index(p.center, p.radius, p.from);
  for (int k = 0; k < p.quarters; ++k) {
    Piece s;
    s.arc = true;
    s.c = p.center;
    s.r = p.radius;
    s.q = p.ccw ? (a + k) % 4 : ((a - 1 - k) % 4 + 4) % 4;
    out.push_back(s);
  }
  return out;
}

bool in_closed(const Rational& v, const Rational& a, const Rational& b) {
  return (a <= v && v <= b) || (b <= v && v <= a);
}

// Is a + b sqrt(d) within [lo, hi] (lo <= hi)?
bool qs_in(const Rational& a, const Rational& b, const Rational& d, const Rational& lo, const Rational& hi) {
  return sign_qs(a - lo, b, d) >= 0 && sign_qs(a - hi, b, d) <= 0;
}

struct Hit {
  QPoint p;
  bool tangent = false;
};

struct Hits {
  std::vector<Hit> points;
  bool overlap = false;
};

void seg_seg(const Piece& s, const Piece& t, Hits& out) {
  bool sv = s.a.x == s.b.x, tv = t.a.x == t.b.x;
  if (sv == tv) {
    // parallel
    if (sv) {
      if (s.a.x != t.a.x) return;
      Rational lo = std::max(std::min(s.a.y, s.b.y), std::min(t.a.y, t.b.y));
      Rational hi = std::min(std::max(s.a.y, s.b.y), std::max(t.a.y, t.b.y));
      if (lo < hi) out.overlap = true;
      else if (lo == hi) out.points.push_back({make_point(s.a.x, 0, lo, 0, 0), true});
    } else {
      if (s.a.y != t.a.y) return;
      Rational lo = std::max(std::min(s.a.x, s.b.x), std::min(t.a.x, t.b.x));
      Rational hi = std::min(std::max(s.a.x, s.b.x), std::max(t.a.x, t.b.x));
      if (lo < hi) out.overlap = true;
      else if (lo == hi) out.points.push_back({make_point(lo, 0, s.a.y, 0, 0), true});
    }
    return;
  }
  const Piece& v = sv ? s : t;
  const Piece& h = sv ? t : s;
  if (in_closed(v.a.x, h.a.x, h.b.x) && in_closed(h.a.y, v.a.y, v.b.y))
    out.points.push_back({make_point(v.a.x, 0, h.a.y, 0, 0), false});
}

void seg_quarter(const Piece& s, const Piece& q, Hits& out) {
  bool vertical = s.a.x == s.b.x;
  // work in coordinates where the segment is vertical: u along the fixed
  // coordinate, w along the segment
  const Rational& cu = vertical ? q.c.x : q.c.y;
  const Rational& cw = vertical ? q.c.y : q.c.x;
  int su = vertical ? qsx(q.q) : qsy(q.q);
  int sw = vertical ? qsy(q.q) : qsx(q.q);
  Rational u = vertical ? s.a.x : s.a.y;
  Rational w1 = vertical ? s.a.y : s.a.x, w2 = vertical ? s.b.y : s.b.x;
  Rational du = u - cu;
  if (sgn(du) == -su) return;
  Rational dd = q.r * q.r - du * du;
  if (dd < 0) return;
  Rational lo = std::min(w1, w2) - cw, hi = std::max(w1, w2) - cw;
  // w - cw = sw * sqrt(dd)
  if (!qs_in(0, sw, dd, lo, hi)) return;
  QPoint p = vertical ? make_point(u, 0, cw, sw, dd) : make_point(cw, sw, u, 0, dd);
  out.points.push_back({p, dd == 0});
}

bool on_quarter(const QPoint& p, const Piece& q) {
  int sx = sign_qs(p.xa - q.c.x, p.xb, p.d), sy = sign_qs(p.ya - q.c.y, p.yb, p.d);
  return sx != -qsx(q.q) && sy != -qsy(q.q);
}

void quarter_quarter(const Piece& s, const Piece& t, Hits& out) {
  if (s.c == t.c) {
    if (s.r != t.r) return;
    if (s.q == t.q) {
      out.overlap = true;
    } else if ((s.q + 1) % 4 == t.q || (t.q + 1) % 4 == s.q) {
      int a = (s.q + 1) % 4 == t.q ? t.q : s.q;  // shared axis angle
      RPoint p = axis_point(s.c, s.r, a);
      out.points.push_back({make_point(p.x, 0, p.y, 0, 0), true});
    }
    return;
  }
  Rational dx = t.c.x - s.c.x, dy = t.c.y - s.c.y;
  Rational len = dx * dx + dy * dy;
  Rational tt = (s.r * s.r - t.r * t.r + len) / (2 * len);
  Rational dd = s.r * s.r / len - tt * tt;
  if (dd < 0) return;
  Rational bx = s.c.x + tt * dx, by = s.c.y + tt * dy;
  for (int sign : {1, -1}) {
    QPoint p = make_point(bx, -sign * dy, by, sign * dx, dd);
    if (on_quarter(p, s) && on_quarter(p, t)) {
      bool dup = false;
      for (const Hit& h : out.points) dup = dup || h.p == p;
      if (!dup) out.points.push_back({p, dd == 0});
    }
    if (dd == 0) break;
  }
}

Hits intersect(const Primitive& a, const Primitive& b) {
  Hits out;
  for (const Piece& s : pieces_of(a))
    for (const Piece& t : pieces_of(b)) {
      Hits h;
      if (!s.arc && !t.arc) seg_seg(s, t, h);
      else if (!s.arc) seg_quarter(s, t, h);
      else if (!t.arc) seg_quarter(t, s, h);
      else quarter_quarter(s, t, h);
      out.overlap = out.overlap || h.overlap;
      for (const Hit& x : h.points) {
        auto it = std::find_if(out.points.begin(), out.points.end(), [&](const Hit& y) { return y.p == x.p; });
        if (it == out.points.end()) out.points.push_back(x);
        else it->tangent = it->tangent || x.tangent;
      }
    }
  return out;
}

bool point_on(const RPoint& p, const Primitive& prim) {
  for (const Piece& s : pieces_of(prim)) {
    if (!s.arc) {
      if (in_closed(p.x, s.a.x, s.b.x) && in_closed(p.y, s.a.y, s.b.y)) return true;
    } else {
      Rational dx = p.x - s.c.x, dy = p.y - s.c.y;
      if (dx * dx + dy * dy == s.r * s.r && sgn(dx) != -qsx(s.q) && sgn(dy) != -qsy(s.q)) return true;
    }
  }
  return false;
}

struct Box {
  double x0, y0, x1, y1;
};

Box box_of(const Primitive& p) {
  auto conv = [](const Rational& r) { return r.convert_to<double>(); };
  double x0 = std::min(conv(p.from.x), conv(p.to.x)), x1 = std::max(conv(p.from.x), conv(p.to.x));
  double y0 = std::min(conv(p.from.y), conv(p.to.y)), y1 = std::max(conv(p.from.y), conv(p.to.y));
  if (p.is_arc()) {
    double cx = conv(p.center.x), cy = conv(p.center.y), r = conv(p.radius);
    x0 = std::min(x0, cx - r);
    x1 = std::max(x1, cx + r);
    y0 = std::min(y0, cy - r);
    y1 = std::max(y1, cy + r);
  }
  auto pad = [](double v) { return 1e-9 * (1.0 + std::fabs(v)); };
  return {x0 - pad(x0), y0 - pad(y0), x1 + pad(x1), y1 + pad(y1)};
}

struct PrimRef {
  int edge;
  int index;
  Box box;
};

}  // namespace

CurveMeeting curve_meeting(const Curve& a, const Curve& b, const std::vector<RPoint>& shared) {
  CurveMeeting m;
  std::vector<QPoint> seen;
  std::vector<Box> boxes;
  for (const Primitive& pb : b) boxes.push_back(box_of(pb));
  for (const Primitive& pa : a) {
    Box ba = box_of(pa);
    for (size_t j = 0; j < b.size(); ++j) {
      const Primitive& pb = b[j];
      const Box& bb = boxes[j];
      if (ba.x1 < bb.x0 || bb.x1 < ba.x0 || ba.y1 < bb.y0 || bb.y1 < ba.y0) continue;
      Hits h = intersect(pa, pb);
      if (h.overlap) {
        m.contact = true;
        continue;
      }
      for (const Hit& x : h.points) {
        if (std::any_of(shared.begin(), shared.end(), [&](const RPoint& s) { return x.p.equals(s); })) continue;
        if (std::find(seen.begin(), seen.end(), x.p) != seen.end()) continue;
        seen.push_back(x.p);
        bool at_end = x.p.equals(pa.from) || x.p.equals(pa.to) || x.p.equals(pb.from) || x.p.equals(pb.to);
        if (at_end || x.tangent) m.contact = true;
        else ++m.crossings;
      }
    }
  }
  return m;
}

ValidationReport check_one_planarity(const SmoothDrawing& d, const EmbeddedGraph& g, bool permissive) {
  ValidationReport rep;
  if (static_cast<int>(d.curves.size()) != g.num_edges() || static_cast<int>(d.positions.size()) != g.num_vertices()) {
    rep.add("shape", {}, "drawing does not match the graph size");
    return rep;
  }
  std::vector<PrimRef> prims;
  for (int e = 0; e < g.num_edges(); ++e)
    for (int i = 0; i < static_cast<int>(d.curves[e].size()); ++i) prims.push_back({e, i, box_of(d.curves[e][i])});
  std::sort(prims.begin(), prims.end(), [](const PrimRef& a, const PrimRef& b) {
    if (a.box.x0 != b.box.x0) return a.box.x0 < b.box.x0;
    if (a.edge != b.edge) return a.edge < b.edge;
    return a.index < b.index;
  });
  std::map<std::pair<int, int>, int> count;
  std::set<std::pair<int, int>> reported;
  auto report_pair = [&](int a, int b, const std::string& rule, const std::string& msg) {
    if (reported.insert({std::min(a, b), std::max(a, b)}).second)
      rep.add(rule, {g.edges[std::min(a, b)].id, g.edges[std::max(a, b)].id}, msg);
  };
  for (std::size_t i = 0; i < prims.size(); ++i) {
    for (std::size_t j = i + 1; j < prims.size() && prims[j].box.x0 <= prims[i].box.x1; ++j) {
      const PrimRef& A = prims[i];
      const PrimRef& B = prims[j];
      if (B.box.y0 > A.box.y1 || A.box.y0 > B.box.y1) continue;
      const Primitive& pa = d.curves[A.edge][A.index];
      const Primitive& pb = d.curves[B.edge][B.index];
      Hits h = intersect(pa, pb);
      if (A.edge == B.edge) {
        int lo = std::min(A.index, B.index), hi = std::max(A.index, B.index);
        const RPoint& junction = d.curves[A.edge][lo].to;
        bool bad = h.overlap;
        for (const Hit& x : h.points) bad = bad || !(hi == lo + 1 && x.p.equals(junction));
        if (bad) rep.add("self-intersection", {g.edges[A.edge].id}, "edge meets itself");
        continue;
      }
      if (h.overlap) {
        report_pair(A.edge, B.edge, "overlap", "edges overlap");
        continue;
      }
      for (const Hit& x : h.points) {
        // meeting at a common endpoint vertex
        bool at_common = false;
        for (int w : {g.edges[A.edge].u, g.edges[A.edge].v})
          if ((w == g.edges[B.edge].u || w == g.edges[B.edge].v) && x.p.equals(d.positions[w])) at_common = true;
        if (at_common) continue;
        bool at_end = x.p.equals(pa.from) || x.p.equals(pa.to) || x.p.equals(pb.from) || x.p.equals(pb.to);
        if (at_end) {
          report_pair(A.edge, B.edge, "degenerate-contact", "edges meet at a primitive endpoint");
          continue;
        }
        if (x.tangent) {
          if (!permissive) report_pair(A.edge, B.edge, "touching", "edges touch without crossing");
          continue;
        }
        ++count[{std::min(A.edge, B.edge), std::max(A.edge, B.edge)}];
      }
    }
  }
  // vertices lying on edges
  for (int w = 0; w < g.num_vertices(); ++w) {
    const RPoint& p = d.positions[w];
    double px = p.x.convert_to<double>(), py = p.y.convert_to<double>();
    for (const PrimRef& r : prims) {
      if (px < r.box.x0 || px > r.box.x1 || py < r.box.y0 || py > r.box.y1) continue;
      const Curve& c = d.curves[r.edge];
      const Primitive& prim = c[r.index];
      if (!point_on(p, prim)) continue;
      const Edge& e = g.edges[r.edge];
      bool ok = (e.u == w && r.index == 0 && prim.from == p) ||
                (e.v == w && r.index + 1 == static_cast<int>(c.size()) && prim.to == p);
      if (!ok) rep.add("vertex-on-edge", {g.vertex_ids[w], e.id}, "edge passes through a vertex");
    }
  }
  std::set<std::pair<int, int>> expected;
  for (const Crossing& c : g.crossings) expected.insert({std::min(c.e1, c.e2), std::max(c.e1, c.e2)});
  for (const auto& [pr, k] : count) {
    if (!expected.count(pr)) {
      rep.add("extra-crossing", {g.edges[pr.first].id, g.edges[pr.second].id}, "crossing not in the embedding");
    } else if (k != 1) {
      rep.add("multiple-crossing", {g.edges[pr.first].id, g.edges[pr.second].id},
              "pair crosses " + std::to_string(k) + " times");
    }
  }
  for (const auto& pr : expected)
    if (!count.count(pr) && !reported.count(pr))
      rep.add("missing-crossing", {g.edges[pr.first].id, g.edges[pr.second].id}, "crossing not realized");
  return rep;
}

ValidationReport check_one_planarity(const OrthoDrawing& d, const EmbeddedGraph& g, bool permissive) {
  ValidationReport rep = check_orthogonal(d, g);
  if (!rep.ok()) return rep;
  rep = check_one_planarity(as_smooth(d), g, permissive);
  std::set<std::pair<int, int>> listed, expected;
  for (const auto& c : d.crossings) listed.insert({std::min(c.e1, c.e2), std::max(c.e1, c.e2)});
  for (const Crossing& c : g.crossings) expected.insert({std::min(c.e1, c.e2), std::max(c.e1, c.e2)});
  if (listed != expected || d.crossings.size() != g.crossings.size())
    rep.add("crossing-list", {}, "listed crossings differ from the embedding");
  return rep;
}

ValidationReport check_ports_and_embedding(const SmoothDrawing& d, const EmbeddedGraph& g) {
  ValidationReport rep;
  if (static_cast<int>(d.ports.size()) != g.num_edges() || static_cast<int>(d.curves.size()) != g.num_edges()) {
    rep.add("shape", {}, "drawing does not match the graph size");
    return rep;
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const Curve& c = d.curves[e];
    const Edge& ed = g.edges[e];
    if (c.empty()) {
      rep.add("curve", {ed.id}, "empty curve");
      continue;
    }
    if (c.front().from != d.positions[ed.u] || c.back().to != d.positions[ed.v])
      rep.add("curve", {ed.id}, "curve does not join its endpoints");
    if (c.front().start_dir() != static_cast<int>(d.ports[e][0]))
      rep.add("port", {ed.id, g.vertex_ids[ed.u]}, "leaves its vertex off the assigned port");
    if (c.back().end_dir() != static_cast<int>(opposite(d.ports[e][1])))
      rep.add("port", {ed.id, g.vertex_ids[ed.v]}, "enters its vertex off the assigned port");
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<std::pair<int, int>> by_port;  // port, edge
    std::set<int> used;
    for (int e : g.rotation[v]) {
      int p = static_cast<int>(d.ports[e][g.edges[e].u == v ? 0 : 1]);
      if (!used.insert(p).second) rep.add("port-reuse", {g.vertex_ids[v]}, std::string("two edges on port ") +
                                                                             port_name(static_cast<Port>(p)));
      by_port.push_back({p, e});
    }
    if (used.size() != by_port.size() || by_port.size() < 3) continue;
    std::sort(by_port.begin(), by_port.end());
    // cyclic order of ports must equal the rotation
    const auto& rot = g.rotation[v];
    auto it = std::find(rot.begin(), rot.end(), by_port[0].second);
    std::size_t k = it - rot.begin();
    bool same = true;
    for (std::size_t i = 0; i < rot.size(); ++i) same = same && rot[(k + i) % rot.size()] == by_port[i].second;
    if (!same) rep.add("embedding", {g.vertex_ids[v]}, "port order differs from the rotation");
  }
  return rep;
}

ValidationReport check_ports_and_embedding(const OrthoDrawing& d, const EmbeddedGraph& g) {
  ValidationReport rep = check_orthogonal(d, g);
  if (!rep.ok()) return rep;
  return check_ports_and_embedding(as_smooth(d), g);
}

namespace {
void append(ValidationReport& a, const ValidationReport& b) {
  a.violations.insert(a.violations.end(), b.violations.begin(), b.violations.end());
}
}  // namespace

ValidationReport validate_drawing(const OrthoDrawing& d, const EmbeddedGraph& g, bool permissive) {
  ValidationReport rep = check_orthogonal(d, g);
  if (!rep.ok()) return rep;
  SmoothDrawing s = as_smooth(d);
  append(rep, check_ports_and_embedding(s, g));
  append(rep, check_one_planarity(d, g, permissive));
  return rep;
}

ValidationReport validate_drawing(const SmoothDrawing& d, const EmbeddedGraph& g, bool permissive) {
  ValidationReport rep;
  if (static_cast<int>(d.curves.size()) != g.num_edges() || static_cast<int>(d.positions.size()) != g.num_vertices() ||
      static_cast<int>(d.ports.size()) != g.num_edges()) {
    rep.add("shape", {}, "drawing does not match the graph size");
    return rep;
  }
  for (int e = 0; e < g.num_edges(); ++e) append(rep, check_tangency(d.curves[e], g.edges[e].id));
  if (!rep.ok()) return rep;
  append(rep, check_ports_and_embedding(d, g));
  append(rep, check_one_planarity(d, g, permissive));
  std::set<std::pair<int, int>> listed, expected;
  for (const auto& c : d.crossings) listed.insert({std::min(c[0], c[1]), std::max(c[0], c[1])});
  for (const Crossing& c : g.crossings) expected.insert({std::min(c.e1, c.e2), std::max(c.e1, c.e2)});
  if (listed != expected || d.crossings.size() != g.crossings.size())
    rep.add("crossing-list", {}, "listed crossings differ from the embedding");
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

void extend(BoundsReport& b, bool& first, const Rational& x, const Rational& y) {
  if (first) {
    b.min_x = b.max_x = x;
    b.min_y = b.max_y = y;
    first = false;
    return;
  }
  b.min_x = std::min(b.min_x, x);
  b.max_x = std::max(b.max_x, x);
  b.min_y = std::min(b.min_y, y);
  b.max_y = std::max(b.max_y, y);
}

}  // namespace

BoundsReport bounds(const SmoothDrawing& d) {
  BoundsReport b;
  bool first = true;
  for (const RPoint& p : d.positions) extend(b, first, p.x, p.y);
  for (const Curve& c : d.curves)
    for (const Primitive& p : c)
      for (const Piece& s : pieces_of(p)) {
        if (!s.arc) {
          extend(b, first, s.a.x, s.a.y);
          extend(b, first, s.b.x, s.b.y);
        } else {
          RPoint a = axis_point(s.c, s.r, s.q), e = axis_point(s.c, s.r, (s.q + 1) % 4);
          extend(b, first, a.x, a.y);
          extend(b, first, e.x, e.y);
        }
      }
  b.width = b.max_x - b.min_x;
  b.height = b.max_y - b.min_y;
  b.n = static_cast<int>(d.positions.size());
  b.crossings = static_cast<int>(d.crossings.size());
  Rational np = b.n + b.crossings;
  if (b.width <= 3 * np && b.height <= 3 * np) b.fitted = "linear";
  else if (b.width <= 3 * np && b.height <= 3 * np * np) b.fitted = "linear-by-quadratic";
  else b.fitted = "other";
  return b;
}

BoundsReport bounds(const OrthoDrawing& d) { return bounds(as_smooth(d)); }

// ---------------------------------------------------------------------------

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

}  // namespace

std::string render_svg(const SmoothDrawing& d, const SvgOptions& opt) {
  BoundsReport b = bounds(d);
  double minx = b.min_x.convert_to<double>(), maxy = b.max_y.convert_to<double>();
  double w = b.width.convert_to<double>() * opt.unit + 2 * opt.margin;
  double h = b.height.convert_to<double>() * opt.unit + 2 * opt.margin;
  auto X = [&](const Rational& x) { return num((x.convert_to<double>() - minx) * opt.unit + opt.margin); };
  auto Y = [&](const Rational& y) { return num((maxy - y.convert_to<double>()) * opt.unit + opt.margin); };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w) << "\" height=\"" << num(h)
     << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n";
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const Curve& c : d.curves) {
    if (c.empty()) continue;
    if (c.size() == 1 && !c[0].is_arc()) {
      os << "<line x1=\"" << X(c[0].from.x) << "\" y1=\"" << Y(c[0].from.y) << "\" x2=\"" << X(c[0].to.x)
         << "\" y2=\"" << Y(c[0].to.y) << "\"/>\n";
      continue;
    }
    os << "<path d=\"M " << X(c[0].from.x) << " " << Y(c[0].from.y);
    for (const Primitive& p : c) {
      if (!p.is_arc()) {
        os << " L " << X(p.to.x) << " " << Y(p.to.y);
      } else {
        std::string r = num(p.radius.convert_to<double>() * opt.unit);
        // y is flipped, so counter-clockwise becomes the positive sweep
        os << " A " << r << " " << r << " 0 " << (p.quarters == 3 ? 1 : 0) << " " << (p.ccw ? 0 : 1) << " "
           << X(p.to.x) << " " << Y(p.to.y);
      }
    }
    os << "\"/>\n";
  }
  os << "</g>\n<g fill=\"black\">\n";
  for (const RPoint& p : d.positions)
    os << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"" << num(opt.vertex_radius) << "\"/>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string render_svg(const OrthoDrawing& d, const SvgOptions& opt) { return render_svg(as_smooth(d), opt); }

// ---------------------------------------------------------------------------

std::string primitive_text(const Primitive& p) {
  auto pt = [](const RPoint& q) { return to_string(q.x) + "," + to_string(q.y); };
  if (!p.is_arc()) return "seg " + pt(p.from) + " " + pt(p.to);
  return "arc " + to_string(p.center.x) + " " + to_string(p.center.y) + " " + to_string(p.radius) +
         " q=" + std::to_string(p.quarters) + " dir=" + (p.ccw ? "ccw" : "cw") + " from=" + pt(p.from) +
         " to=" + pt(p.to);
}

namespace {

using ojson = nlohmann::ordered_json;

ojson base_json(const char* kind, const EmbeddedGraph& g, const std::vector<RPoint>& pos, const PortAssignment& ports,
                const std::vector<Curve>& curves) {
  ojson j;
  j["kind"] = kind;
  j["vertices"] = ojson::array();
  for (int v = 0; v < g.num_vertices(); ++v)
    j["vertices"].push_back({{"id", g.vertex_ids[v]}, {"x", to_string(pos[v].x)}, {"y", to_string(pos[v].y)}});
  j["edges"] = ojson::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    ojson ej;
    ej["id"] = g.edges[e].id;
    ej["u"] = g.vertex_ids[g.edges[e].u];
    ej["v"] = g.vertex_ids[g.edges[e].v];
    ej["ports"] = {port_name(ports[e][0]), port_name(ports[e][1])};
    ej["complexity"] = curves[e].size();
    ej["primitives"] = ojson::array();
    for (const Primitive& p : curves[e]) ej["primitives"].push_back(primitive_text(p));
    j["edges"].push_back(ej);
  }
  return j;
}

}  // namespace

std::string drawing_json(const OrthoDrawing& d, const EmbeddedGraph& g) {
  SmoothDrawing s = as_smooth(d);
  ojson j = base_json("orthogonal", g, s.positions, s.ports, s.curves);
  j["crossings"] = ojson::array();
  for (const auto& c : d.crossings)
    j["crossings"].push_back({{"edges", {g.edges[c.e1].id, g.edges[c.e2].id}},
                              {"at", {std::to_string(c.at.x), std::to_string(c.at.y)}}});
  return j.dump(2) + "\n";
}

std::string drawing_json(const SmoothDrawing& d, const EmbeddedGraph& g) {
  ojson j = base_json("smooth", g, d.positions, d.ports, d.curves);
  j["crossings"] = ojson::array();
  for (const auto& c : d.crossings) j["crossings"].push_back({{"edges", {g.edges[c[0]].id, g.edges[c[1]].id}}});
  return j.dump(2) + "\n";
}

namespace {

RPoint parse_pt(const std::string& s) {
  auto k = s.find(',');
  if (k == std::string::npos) throw std::invalid_argument("bad point " + s);
  return {Rational(s.substr(0, k)), Rational(s.substr(k + 1))};
}

Port parse_port(const std::string& s) {
  for (Port p : {Port::E, Port::N, Port::W, Port::S})
    if (s == port_name(p)) return p;
  throw std::invalid_argument("bad port " + s);
}

Primitive parse_primitive(const std::string& text) {
  std::istringstream is(text);
  std::string kind;
  is >> kind;
  if (kind == "seg") {
    std::string a, b;
    is >> a >> b;
    return Primitive::segment(parse_pt(a), parse_pt(b));
  }
  if (kind != "arc") throw std::invalid_argument("bad primitive " + text);
  std::string cx, cy, r, q, dir, from, to;
  is >> cx >> cy >> r >> q >> dir >> from >> to;
  auto val = [](const std::string& kv) { return kv.substr(kv.find('=') + 1); };
  Primitive p = Primitive::arc({Rational(cx), Rational(cy)}, parse_pt(val(from)), std::stoi(val(q)), val(dir) == "ccw");
  if (p.to != parse_pt(val(to)) || p.radius != Rational(r)) throw std::invalid_argument("inconsistent arc " + text);
  return p;
}

}  // namespace

SmoothDrawing parse_drawing_json(const std::string& text, const EmbeddedGraph& g) {
  ojson j = ojson::parse(text);
  SmoothDrawing d;
  d.positions.assign(g.num_vertices(), RPoint{});
  for (const auto& v : j.at("vertices")) {
    int i = g.vertex_index(v.at("id").get<std::string>());
    if (i < 0) throw std::invalid_argument("unknown vertex in drawing");
    d.positions[i] = {Rational(v.at("x").get<std::string>()), Rational(v.at("y").get<std::string>())};
  }
  d.curves.assign(g.num_edges(), {});
  d.ports.assign(g.num_edges(), {Port::E, Port::E});
  for (const auto& e : j.at("edges")) {
    int i = g.edge_index(e.at("id").get<std::string>());
    if (i < 0) throw std::invalid_argument("unknown edge in drawing");
    d.ports[i] = {parse_port(e.at("ports")[0]), parse_port(e.at("ports")[1])};
    for (const auto& p : e.at("primitives")) d.curves[i].push_back(parse_primitive(p.get<std::string>()));
  }
  for (const auto& c : j.at("crossings")) {
    int a = g.edge_index(c.at("edges")[0]), b = g.edge_index(c.at("edges")[1]);
    if (a < 0 || b < 0) throw std::invalid_argument("unknown edge in crossing list");
    d.crossings.push_back({a, b});
  }
  return d;
}

}  // namespace onedraw
