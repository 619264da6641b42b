#pragma once

#include <array>
#include <string>
#include <vector>

#include "onedraw/geometry.hpp"
#include "onedraw/graph_model.hpp"

namespace onedraw {

// Port of every edge end: [0] at edges[e].u, [1] at edges[e].v.
using PortAssignment = std::vector<std::array<Port, 2>>;

struct OrthoCrossing {
  int e1 = -1;
  int e2 = -1;
  GridPoint at;
};

struct OrthoDrawing {
  std::vector<GridPoint> positions;
  // Per edge from edges[e].u to edges[e].v, endpoints included; every
  // interior point is a bend.
  std::vector<std::vector<GridPoint>> polylines;
  PortAssignment ports;
  std::vector<OrthoCrossing> crossings;
};

inline int bend_count(const std::vector<GridPoint>& poly) {
  return poly.size() < 2 ? 0 : static_cast<int>(poly.size()) - 2;
}

struct Primitive {
  enum class Kind { HSegment, VSegment, Arc };
  Kind kind = Kind::HSegment;
  RPoint from, to;
  // arcs only
  RPoint center;
  Rational radius;
  int quarters = 0;
  bool ccw = true;

  static Primitive segment(const RPoint& a, const RPoint& b);
  // Arc starting at `from` (an axis point of the circle) sweeping `quarters`
  // quarter turns.
  static Primitive arc(const RPoint& center, const RPoint& from, int quarters, bool ccw);
  bool is_arc() const { return kind == Kind::Arc; }
  // Unit tangent (axis direction index, E=0 N=1 W=2 S=3) at the start / end
  // in the direction of travel.
  int start_dir() const;
  int end_dir() const;
};

using Curve = std::vector<Primitive>;

struct SmoothDrawing {
  std::vector<RPoint> positions;
  std::vector<Curve> curves;  // per edge, from edges[e].u
  PortAssignment ports;
  std::vector<std::array<int, 2>> crossings;  // realized crossing pairs
};

SmoothDrawing as_smooth(const OrthoDrawing& d);
Curve curve_of(const std::vector<GridPoint>& poly);

// Number of primitives; throws std::invalid_argument on an empty curve.
int curve_complexity(const Curve& c);
int max_complexity(const SmoothDrawing& d);
int max_complexity(const OrthoDrawing& d);

struct CurveMeeting {
  int crossings = 0;     // transversal crossings inside primitives of both curves
  bool contact = false;  // any other common point (touching, overlap, primitive joint)
};
// Common points of two curves, ignoring the points in `shared`.
CurveMeeting curve_meeting(const Curve& a, const Curve& b, const std::vector<RPoint>& shared = {});

ValidationReport check_tangency(const Curve& c, const std::string& edge_id = "");
// Structural checks of an orthogonal drawing: integer axis-parallel
// polylines, endpoints at the vertex positions, every interior point a bend.
ValidationReport check_orthogonal(const OrthoDrawing& d, const EmbeddedGraph& g);
// Crossings must be proper and lie in the interior of primitives of both
// edges. With permissive, tangential touchings are tolerated.
ValidationReport check_one_planarity(const SmoothDrawing& d, const EmbeddedGraph& g, bool permissive = false);
ValidationReport check_one_planarity(const OrthoDrawing& d, const EmbeddedGraph& g, bool permissive = false);
ValidationReport check_ports_and_embedding(const SmoothDrawing& d, const EmbeddedGraph& g);
ValidationReport check_ports_and_embedding(const OrthoDrawing& d, const EmbeddedGraph& g);
// Everything above; smooth drawings also get tangency checks.
ValidationReport validate_drawing(const OrthoDrawing& d, const EmbeddedGraph& g, bool permissive = false);
ValidationReport validate_drawing(const SmoothDrawing& d, const EmbeddedGraph& g, bool permissive = false);

struct BoundsReport {
  Rational min_x, min_y, max_x, max_y;
  Rational width, height;
  int n = 0;
  int crossings = 0;
  // "linear" when both sides are at most 3 n', "quadratic" when the height
  // is at most n^2 scaled by the layout constant, otherwise "other".
  std::string fitted;
};

BoundsReport bounds(const SmoothDrawing& d);
BoundsReport bounds(const OrthoDrawing& d);

struct SvgOptions {
  double unit = 20.0;  // pixels per grid unit
  double margin = 20.0;
  double vertex_radius = 4.0;
};
std::string render_svg(const SmoothDrawing& d, const SvgOptions& opt = {});
std::string render_svg(const OrthoDrawing& d, const SvgOptions& opt = {});

// Drawing JSON, see README for the schema.
std::string drawing_json(const OrthoDrawing& d, const EmbeddedGraph& g);
std::string drawing_json(const SmoothDrawing& d, const EmbeddedGraph& g);
// Inverse of drawing_json for either kind (orthogonal drawings come back as
// smooth drawings made of segments).
SmoothDrawing parse_drawing_json(const std::string& text, const EmbeddedGraph& g);
std::string primitive_text(const Primitive& p);

}  // namespace onedraw
