#include <gtest/gtest.h>

#include "onedraw/drawing.hpp"
#include "onedraw/generators.hpp"

using namespace onedraw;

namespace {

RPoint P(long long x, long long y) { return {x, y}; }

bool has_rule(const ValidationReport& r, const std::string& rule) {
  for (const auto& v : r.violations)
    if (v.rule == rule) return true;
  return false;
}

}  // namespace

TEST(Complexity, Counts) {
  Curve one{Primitive::segment(P(0, 0), P(0, 3))};
  EXPECT_EQ(curve_complexity(one), 1);
  Curve three{Primitive::segment(P(0, 0), P(0, 1)), Primitive::arc(P(1, 1), P(0, 1), 1, false),
              Primitive::segment(P(1, 2), P(4, 2))};
  EXPECT_EQ(curve_complexity(three), 3);
  EXPECT_THROW(curve_complexity(Curve{}), std::invalid_argument);
}

TEST(Tangency, SegmentIntoMatchingArc) {
  // up, then a clockwise quarter turning east
  Curve c{Primitive::segment(P(0, 0), P(0, 1)), Primitive::arc(P(1, 1), P(0, 1), 1, false)};
  EXPECT_TRUE(check_tangency(c).ok()) << check_tangency(c).to_string();
}

TEST(Tangency, PerpendicularSegmentsAreABend) {
  Curve c{Primitive::segment(P(0, 0), P(0, 1)), Primitive::segment(P(0, 1), P(3, 1))};
  EXPECT_FALSE(check_tangency(c).ok());
}

TEST(Tangency, SCurveOfTwoQuarterArcs) {
  // heading north: turn east (cw), then back north (ccw)
  Primitive a = Primitive::arc(P(1, 0), P(0, 0), 1, false);
  EXPECT_EQ(a.to, P(1, 1));
  Primitive b = Primitive::arc(P(1, 2), P(1, 1), 1, true);
  EXPECT_EQ(b.to, P(2, 2));
  EXPECT_TRUE(check_tangency({a, b}).ok());
  EXPECT_EQ(a.start_dir(), 1);
  EXPECT_EQ(b.end_dir(), 1);
  // continuing with a second ccw quarter is fine, a cw one from the wrong
  // side is not
  EXPECT_TRUE(check_tangency({a, b, Primitive::arc(P(1, 2), P(2, 2), 1, true)}).ok());
  EXPECT_FALSE(check_tangency({a, b, Primitive::segment(P(2, 2), P(4, 2))}).ok());
}

TEST(Tangency, ArcEndpoints) {
  Primitive semi = Primitive::arc(P(0, 0), P(-2, 0), 2, true);
  EXPECT_EQ(semi.to, P(2, 0));
  EXPECT_EQ(semi.start_dir(), 3);  // lower semicircle, leaving south
  EXPECT_EQ(semi.end_dir(), 1);
  Primitive three = Primitive::arc(P(0, 0), P(1, 0), 3, true);
  EXPECT_EQ(three.to, P(0, -1));
  EXPECT_THROW(Primitive::arc(P(0, 0), P(1, 1), 1, true), std::invalid_argument);
}

TEST(Planarity, CrossingFreeGraphHasNoCrossings) {
  EmbeddedGraph g = straight_line_graph({{0, 0}, {2, 0}, {2, 2}}, {{0, 1}, {1, 2}});
  OrthoDrawing d;
  d.positions = {{0, 0}, {2, 0}, {2, 2}};
  d.polylines = {{{0, 0}, {2, 0}}, {{2, 0}, {2, 2}}};
  d.ports = {{Port::E, Port::W}, {Port::N, Port::S}};
  EXPECT_TRUE(validate_drawing(d, g).ok()) << validate_drawing(d, g).to_string();
}

TEST(Planarity, ExtraCrossingIsReported) {
  // path a-b-c-d drawn so that ab and cd cross
  EmbeddedGraph g = straight_line_graph({{0, 0}, {4, 0}, {4, 4}, {2, 4}}, {{0, 1}, {1, 2}, {2, 3}});
  OrthoDrawing d;
  d.positions = {{0, 2}, {4, 2}, {4, 4}, {2, 0}};
  d.polylines = {{{0, 2}, {4, 2}}, {{4, 2}, {4, 4}}, {{4, 4}, {2, 4}, {2, 0}}};
  d.ports = {{Port::E, Port::W}, {Port::N, Port::S}, {Port::W, Port::N}};
  ValidationReport r = check_one_planarity(d, g);
  ASSERT_TRUE(has_rule(r, "extra-crossing")) << r.to_string();
  EXPECT_EQ(r.violations[0].elements.size(), 2u);
}

TEST(Planarity, ArcCrossingSegment) {
  // one edge is a quarter arc, the other a vertical segment through it
  EmbeddedGraph g = parse_graph("v a\nv b\nv c\nv d\ne ab a b\ne cd c d\nx ab cd a c b d\n");
  SmoothDrawing d;
  // ab: quarter arc centred (0,4) from (0,0) going east then north to (4,4)
  d.positions = {P(0, 0), P(4, 4), P(2, -1), P(2, 6)};
  d.curves = {{Primitive::arc(P(0, 4), P(0, 0), 1, true)}, {Primitive::segment(P(2, -1), P(2, 6))}};
  d.ports = {{Port::E, Port::S}, {Port::N, Port::S}};
  d.crossings = {{0, 1}};
  ValidationReport r = validate_drawing(d, g);
  EXPECT_TRUE(r.ok()) << r.to_string();
  // moved out of the arc's quadrant: no crossing at all
  SmoothDrawing t = d;
  t.positions[2] = P(-1, 0);
  t.positions[3] = P(-1, 8);
  t.curves[1] = {Primitive::segment(P(-1, 0), P(-1, 8))};
  EXPECT_TRUE(has_rule(check_one_planarity(t, g), "missing-crossing"));
}

TEST(Planarity, TangentIsTouching) {
  EmbeddedGraph g = parse_graph("v a\nv b\nv c\nv d\ne ab a b\ne cd c d\n");
  SmoothDrawing d;
  // upper semicircle of radius 2 and a horizontal segment through its top
  d.positions = {P(2, 0), P(-2, 0), P(-1, 2), P(1, 2)};
  d.curves = {{Primitive::arc(P(0, 0), P(2, 0), 2, true)}, {Primitive::segment(P(-1, 2), P(1, 2))}};
  d.ports = {{Port::N, Port::N}, {Port::E, Port::W}};
  ValidationReport r = check_one_planarity(d, g);
  EXPECT_TRUE(has_rule(r, "touching")) << r.to_string();
  EXPECT_TRUE(check_one_planarity(d, g, true).ok());
}

TEST(Planarity, ArcsCrossOnceOrTwice) {
  EmbeddedGraph g = parse_graph("v a\nv b\nv c\nv d\ne ab a b\ne cd c d\nx ab cd a c b d\n");
  SmoothDrawing d;
  // semicircles of radius 2 centred (0,0) and (1,0) meet at two points
  d.positions = {P(2, 0), P(-2, 0), P(3, 0), P(-1, 0)};
  d.curves = {{Primitive::arc(P(0, 0), P(2, 0), 2, true)}, {Primitive::arc(P(1, 0), P(3, 0), 2, true)}};
  d.ports = {{Port::N, Port::N}, {Port::N, Port::N}};
  ValidationReport r = check_one_planarity(d, g);
  // only the upper intersection point lies on both: x = 1/2, y = sqrt(15)/2
  EXPECT_TRUE(r.ok()) << r.to_string();
  // right semicircle around (0,0) against a three-quarter arc around (1,0)
  d.positions = {P(0, -2), P(0, 2), P(3, 0), P(1, 2)};
  d.curves = {{Primitive::arc(P(0, 0), P(0, -2), 2, true)}, {Primitive::arc(P(1, 0), P(3, 0), 3, false)}};
  d.ports = {{Port::E, Port::E}, {Port::S, Port::W}};
  EXPECT_TRUE(has_rule(check_one_planarity(d, g), "multiple-crossing"));
}

TEST(Ports, InjectiveAndOrdered) {
  // star with centre c and leaves in all four directions
  EmbeddedGraph g = straight_line_graph({{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  OrthoDrawing d;
  d.positions = {{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  d.polylines = {{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}, {{0, 0}, {-1, 0}}, {{0, 0}, {0, -1}}};
  d.ports = {{Port::E, Port::W}, {Port::N, Port::S}, {Port::W, Port::E}, {Port::S, Port::N}};
  EXPECT_TRUE(check_ports_and_embedding(d, g).ok()) << check_ports_and_embedding(d, g).to_string();
  // swap two leaves geometrically: order becomes E, W, N, S -> embedding violation
  OrthoDrawing bad = d;
  bad.positions[2] = {-1, 0};
  bad.positions[3] = {0, 1};
  bad.polylines[1] = {{0, 0}, {-1, 0}};
  bad.polylines[2] = {{0, 0}, {0, 1}};
  bad.ports[1] = {Port::W, Port::E};
  bad.ports[2] = {Port::N, Port::S};
  EXPECT_TRUE(has_rule(check_ports_and_embedding(bad, g), "embedding"));
  OrthoDrawing twice = d;
  twice.ports[2][0] = Port::N;
  EXPECT_TRUE(has_rule(check_ports_and_embedding(twice, g), "port-reuse"));
}

TEST(Bounds, SingleVertex) {
  OrthoDrawing d;
  d.positions = {{3, 5}};
  BoundsReport b = bounds(d);
  EXPECT_EQ(b.width, 0);
  EXPECT_EQ(b.height, 0);
}

TEST(Bounds, ArcExtremes) {
  SmoothDrawing d;
  d.positions = {P(-2, 0), P(2, 0)};
  d.curves = {{Primitive::arc(P(0, 0), P(-2, 0), 2, false)}};  // upper semicircle
  BoundsReport b = bounds(d);
  EXPECT_EQ(b.height, 2);
  EXPECT_EQ(b.width, 4);
}

TEST(Svg, EmptyAndSingleEdge) {
  OrthoDrawing empty;
  std::string s = render_svg(empty);
  EXPECT_NE(s.find("<svg"), std::string::npos);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
  OrthoDrawing one;
  one.positions = {{0, 0}, {0, 2}};
  one.polylines = {{{0, 0}, {0, 2}}};
  one.ports = {{Port::N, Port::S}};
  std::string t = render_svg(one);
  std::size_t k = 0, lines = 0;
  while ((k = t.find("<line", k)) != std::string::npos) ++lines, ++k;
  EXPECT_EQ(lines, 1u);
  EXPECT_EQ(render_svg(one), t);
}

TEST(Json, RoundTrip) {
  EmbeddedGraph g = parse_graph("v a\nv b\ne ab a b\n");
  SmoothDrawing d;
  d.positions = {P(0, 0), {Rational(1, 2), Rational(1, 2)}};
  d.curves = {{Primitive::arc({Rational(0), Rational(1, 2)}, P(0, 0), 1, true)}};
  d.ports = {{Port::E, Port::S}};
  std::string j = drawing_json(d, g);
  SmoothDrawing back = parse_drawing_json(j, g);
  EXPECT_EQ(drawing_json(back, g), j);
  EXPECT_NE(j.find("arc 0 1/2 1/2 q=1 dir=ccw from=0,0 to=1/2,1/2"), std::string::npos) << j;
  EXPECT_TRUE(validate_drawing(d, g).ok()) << validate_drawing(d, g).to_string();
}
