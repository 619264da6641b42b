#include <gtest/gtest.h>

#include <set>

#include "onedraw/generators.hpp"
#include "onedraw/smooth_layout.hpp"

using namespace onedraw;

namespace {

EmbeddedGraph convex_graph(int n, const std::vector<std::pair<int, int>>& chords) {
  // Vertices on a parabola are in convex position.
  std::vector<IPoint> pts;
  for (int i = 0; i < n; ++i) pts.push_back({i, static_cast<long long>(i) * i});
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  edges.insert(edges.end(), chords.begin(), chords.end());
  return straight_line_graph(pts, edges);
}

int virtual_edges(const Sc2State& st) {
  int k = 0;
  for (int o : st.aux_origin) k += o < 0;
  return k;
}

Sc2State prepared(const EmbeddedGraph& g) {
  Sc2State st = build_aux_graph(g);
  pick_start_edge(st);
  order_faces(st);
  return st;
}

}  // namespace

TEST(Sc2AuxGraph, CrossingFreeGraphKeepsItsEdges) {
  EmbeddedGraph g = convex_graph(6, {{0, 3}, {1, 3}});
  Sc2State st = build_aux_graph(g);
  EXPECT_EQ(st.aux.num_vertices(), 6);
  EXPECT_EQ(st.aux.num_edges(), g.num_edges());
  EXPECT_EQ(virtual_edges(st), 0);
  EXPECT_EQ(static_cast<int>(st.aux_faces.darts.size()), 4);
}

TEST(Sc2AuxGraph, InDummySplitsIntoFourHalves) {
  EmbeddedGraph g = convex_graph(4, {{0, 2}, {1, 3}});
  ASSERT_EQ(g.crossings.size(), 1u);
  Sc2State st = build_aux_graph(g);
  ASSERT_EQ(st.planar.dummy_kind[0], DummyKind::In);
  int halves = 0;
  for (int a = 0; a < st.aux.num_edges(); ++a) halves += st.aux_half[a];
  EXPECT_EQ(halves, 4);
  EXPECT_EQ(st.aux.degree(4), 4);
  EXPECT_EQ(virtual_edges(st), 0);  // the square is already there
}

TEST(Sc2AuxGraph, DummyCutIsCaged) {
  EmbeddedGraph g = gen_named("k4-pair-fig5");
  Sc2State st = build_aux_graph(g);
  int cuts = 0;
  for (size_t k = 0; k < g.crossings.size(); ++k) {
    if (st.planar.dummy_kind[k] != DummyKind::Cut) continue;
    ++cuts;
    int cage = 0;
    for (int a = 0; a < st.aux.num_edges(); ++a) cage += st.aux_crossing[a] == static_cast<int>(k) && st.aux_origin[a] < 0;
    EXPECT_GE(cage, 1) << k;
    int x = g.num_vertices() + static_cast<int>(k);
    EXPECT_EQ(st.aux.degree(x), 0);
    EXPECT_EQ(std::count(st.caged.begin(), st.caged.end(), static_cast<int>(k)), 1);
  }
  EXPECT_GE(cuts, 1);
}

TEST(Sc2StartEdge, IsUncrossedOuterEdge) {
  for (const std::string& name : {"k4", "outer-example", "k4-pair-fig5"}) {
    EmbeddedGraph g = gen_named(name);
    Sc2State st = build_aux_graph(g);
    pick_start_edge(st);
    ASSERT_GE(st.start.edge, 0) << name;
    EXPECT_EQ(g.crossing_of(st.start.edge), -1) << name;
    int n = g.num_vertices();
    EXPECT_EQ(st.order.front(), st.start.s_prime) << name;
    EXPECT_EQ(st.order.back(), st.start.s) << name;
    std::set<int> ends{g.edges[st.start.edge].u, g.edges[st.start.edge].v};
    EXPECT_EQ(ends, (std::set<int>{st.start.s, st.start.s_prime})) << name;
    EXPECT_EQ(static_cast<int>(st.order.size()), n);
    ASSERT_EQ(st.start.curve.size(), 1u) << name;
    EXPECT_TRUE(st.start.curve[0].is_arc()) << name;
    EXPECT_EQ(st.start.curve[0].quarters, 3) << name;
  }
}

TEST(Sc2FaceOrder, EveryFaceHangsOffAnEarlierOne) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    EmbeddedGraph g = random_outer_one_plane(4 + static_cast<int>(seed % 20), seed);
    Sc2State st = prepared(g);
    int inner = static_cast<int>(st.aux_faces.darts.size()) - 1;
    ASSERT_EQ(static_cast<int>(st.faces.size()), inner) << seed;
    EXPECT_EQ(st.faces[0].reference, -1);
    std::set<int> seen{st.faces[0].face};
    for (size_t i = 1; i < st.faces.size(); ++i) {
      const Sc2Face& f = st.faces[i];
      ASSERT_GE(f.reference, 0) << seed;
      int other = -1;
      for (int d : {2 * f.reference, 2 * f.reference + 1})
        if (st.aux_faces.face_of[d] != f.face) other = st.aux_faces.face_of[d];
      EXPECT_TRUE(seen.count(other)) << "seed " << seed << " step " << i;
      seen.insert(f.face);
      if (f.kind == Sc2FaceKind::Paired) {
        bool before = i > 0 && st.faces[i - 1].face == f.partner;
        bool after = i + 1 < st.faces.size() && st.faces[i + 1].face == f.partner;
        EXPECT_TRUE(before || after) << "seed " << seed << " step " << i;
      }
    }
  }
}

TEST(Sc2Layout, NamedGraphs) {
  for (const std::string& name : {"k4", "outer-example", "k4-pair-fig5"}) {
    EmbeddedGraph g = gen_named(name);
    Sc2State st;
    SmoothDrawing d = sc2_layout(g, &st);
    ValidationReport rep = validate_drawing(d, g);
    EXPECT_TRUE(rep.ok()) << name << "\n" << rep.to_string();
    EXPECT_LE(max_complexity(d), 2) << name;
    for (const Sc2StepCheck& c : st.checks) EXPECT_TRUE(c.ok()) << name << " step " << c.step << ": " << c.detail;
  }
}

TEST(Sc2Layout, VerticesLieOnTheDiagonalInOrder) {
  EmbeddedGraph g = gen_named("outer-example");
  Sc2State st;
  SmoothDrawing d = sc2_layout(g, &st);
  for (size_t i = 0; i < st.order.size(); ++i) {
    const RPoint& p = d.positions[st.order[i]];
    EXPECT_EQ(p.x + p.y, 0);
    if (i > 0) EXPECT_LT(d.positions[st.order[i - 1]].x, p.x);
  }
}

TEST(Sc2Layout, RandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    EmbeddedGraph g = random_outer_one_plane(4 + static_cast<int>(seed * 7 % 37), seed);
    SmoothDrawing d = sc2_layout(g);
    ValidationReport rep = validate_drawing(d, g);
    ASSERT_TRUE(rep.ok()) << "seed " << seed << "\n" << rep.to_string();
    ASSERT_LE(max_complexity(d), 2) << seed;
  }
}

TEST(Sc2Layout, RejectsGraphsOutsideTheClass) {
  EXPECT_THROW(sc2_layout(gen_named("k5-fig4a")), std::invalid_argument);
  EmbeddedGraph path = straight_line_graph({{0, 0}, {1, 1}, {2, 0}}, {{0, 1}, {1, 2}});
  EXPECT_THROW(sc2_layout(path), std::invalid_argument);
}

TEST(Sc3Layout, NamedGraphs) {
  for (const std::string& name : named_families()) {
    EmbeddedGraph g = gen_named(name);
    SmoothDrawing d = sc3_layout(g);
    ValidationReport rep = validate_drawing(d, g);
    EXPECT_TRUE(rep.ok()) << name << "\n" << rep.to_string();
    EXPECT_LE(max_complexity(d), 3) << name;
  }
}

TEST(Sc3Layout, RandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    EmbeddedGraph g = random_one_plane(2 + static_cast<int>(seed % 45), seed);
    SmoothDrawing d = sc3_layout(g);
    ValidationReport rep = validate_drawing(d, g);
    ASSERT_TRUE(rep.ok()) << "seed " << seed << "\n" << rep.to_string();
    ASSERT_LE(max_complexity(d), 3) << seed;
  }
}

TEST(Curves, ReversedTwiceIsIdentity) {
  EmbeddedGraph g = gen_named("k4");
  SmoothDrawing d = sc2_layout(g);
  for (const Curve& c : d.curves) {
    Curve r = reversed(reversed(c));
    ASSERT_EQ(r.size(), c.size());
    for (size_t i = 0; i < c.size(); ++i) EXPECT_EQ(primitive_text(r[i]), primitive_text(c[i]));
  }
}
