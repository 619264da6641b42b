#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "onedraw/bar_visibility.hpp"
#include "onedraw/generators.hpp"

using namespace onedraw;

namespace {

EmbeddedGraph cycle(int n) {
  std::vector<IPoint> pts;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    // convex polygon on a parabola
    pts.push_back({i, static_cast<long long>(i) * i});
    edges.push_back({i, (i + 1) % n});
  }
  return straight_line_graph(pts, edges);
}

EmbeddedGraph path3() {
  return straight_line_graph({{0, 0}, {1, 1}, {2, 0}}, {{0, 1}, {1, 2}});
}

// All st-orderings of the graph (crossing edges included), by brute force.
std::vector<std::vector<int>> all_st_orders(const CagedGraph& c, int s, int t) {
  int n = c.graph.num_vertices();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (perm.front() != s || perm.back() != t) continue;
    StOrdering o;
    o.sequence = perm;
    o.rank.assign(n, 0);
    for (int i = 0; i < n; ++i) o.rank[perm[i]] = i;
    o.s = s;
    o.t = t;
    bool ok = true;
    for (int v = 0; v < n; ++v) {
      if (v == s || v == t) continue;
      bool lower = false, higher = false;
      for (int e : c.graph.rotation[v]) (o.rank[c.graph.other(e, v)] < o.rank[v] ? lower : higher) = true;
      ok = ok && lower && higher;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST(Caging, K4IsAlreadyAKite) {
  CagedGraph c = cage_crossings(gen_named("k4"));
  EXPECT_EQ(c.num_added(), 0);
  ASSERT_EQ(c.kites.size(), 1u);
  EXPECT_TRUE(c.embedding_preserved);
}

TEST(Caging, ConnectorCrossingGetsCaged) {
  EmbeddedGraph g = gen_named("k4-pair-fig5");
  CagedGraph c = cage_crossings(g);
  EXPECT_GT(c.num_added(), 0);
  EXPECT_TRUE(c.embedding_preserved);
  // every crossing sits in four triangular faces
  const PlanarizedGraph& p = c.planar;
  for (int i = 0; i < static_cast<int>(g.crossings.size()); ++i) {
    int x = p.n_real + i;
    for (int d : p.plane.rotation(x)) {
      int f = p.faces.face_of[d];
      EXPECT_EQ(p.faces.darts[f].size(), 3u);
      EXPECT_FALSE(p.is_outer(f));
    }
  }
  // all vertices still on the outer face
  std::vector<bool> outer(g.num_vertices(), false);
  for (int d : p.faces.darts[p.outer_face[0]]) outer[p.plane.tail(d)] = true;
  for (int v = 0; v < g.num_vertices(); ++v) EXPECT_TRUE(outer[v]);
}

TEST(Caging, CrossingFreeAddsNothing) {
  CagedGraph c = cage_crossings(gen_named("octahedron"));
  EXPECT_EQ(c.num_added(), 0);
  EXPECT_TRUE(c.kites.empty());
}

TEST(Caging, RandomGraphsKeepRotations) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    EmbeddedGraph g = random_one_plane(5 + static_cast<int>(seed % 30), seed);
    CagedGraph c = cage_crossings(g);
    ASSERT_TRUE(c.embedding_preserved) << seed;
    const PlanarizedGraph& p = c.planar;
    for (int i = 0; i < static_cast<int>(g.crossings.size()); ++i)
      for (int d : p.plane.rotation(p.n_real + i)) {
        int f = p.faces.face_of[d];
        ASSERT_EQ(p.faces.darts[f].size(), 3u) << seed;
        ASSERT_FALSE(p.is_outer(f)) << seed;
      }
  }
}

TEST(StOrder, PathIsUnique) {
  CagedGraph c = cage_crossings(path3());
  StOrdering o = st_order(c, 0, 2);
  EXPECT_EQ(o.sequence, (std::vector<int>{0, 1, 2}));
}

TEST(StOrder, RejectsBadTerminals) {
  CagedGraph c = cage_crossings(gen_named("k5-fig4a"));
  EXPECT_THROW(st_order(c, 0, 0), std::invalid_argument);
  // d and e are inside the outer triangle
  EXPECT_THROW(st_order(c, 0, c.graph.vertex_index("d")), std::invalid_argument);
}

TEST(StOrder, K4AdjacentTerminals) {
  CagedGraph c = cage_crossings(gen_named("k4"));
  int s = c.graph.vertex_index("a"), t = c.graph.vertex_index("b");
  StOrdering o = st_order(c, s, t);
  auto valid = all_st_orders(c, s, t);
  EXPECT_EQ(valid.size(), 2u);
  EXPECT_NE(std::find(valid.begin(), valid.end(), o.sequence), valid.end());
  EXPECT_EQ(st_order(c, s, t).sequence, o.sequence);
}

TEST(StOrder, BiconnectedGraphsGetTrueStOrders) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    EmbeddedGraph g = random_outer_one_plane(3 + static_cast<int>(seed % 30), seed);
    CagedGraph c = cage_crossings(g);
    StOrdering o = st_order(c);
    ASSERT_TRUE(is_st_ordering(c, o)) << seed;
  }
}

TEST(OuterOrder, SixCycle) {
  CagedGraph c = cage_crossings(cycle(6));
  StOrdering o = outer_st_order(c);
  EXPECT_EQ(o.left_path.size(), 2u);
  EXPECT_EQ(o.right_path.size(), 2u);
  EXPECT_EQ(o.sequence.front(), o.s);
  EXPECT_EQ(o.sequence.back(), o.t);
}

TEST(OuterOrder, TwoK4sEachVertexOnce) {
  CagedGraph c = cage_crossings(gen_named("k4-pair-fig5"));
  StOrdering o = outer_st_order(c);
  std::vector<int> all = o.left_path;
  all.insert(all.end(), o.right_path.begin(), o.right_path.end());
  all.push_back(o.s);
  all.push_back(o.t);
  std::sort(all.begin(), all.end());
  std::vector<int> expect(c.graph.num_vertices());
  std::iota(expect.begin(), expect.end(), 0);
  EXPECT_EQ(all, expect);
  EXPECT_TRUE(is_st_ordering(c, o));
}

TEST(OuterOrder, RejectsNonOuter) {
  CagedGraph c = cage_crossings(gen_named("k5-fig4a"));
  EXPECT_THROW(outer_st_order(c), std::invalid_argument);
}

TEST(Kites, Classification) {
  // corners ccw a1 a2 b1 b2 with e1 = a1-b1, e2 = a2-b2
  Crossing cr{0, 1, {0, 1, 2, 3}};
  // source 0, sink 2: one corner on each side
  KiteConfig d = classify_kite(cr, {0, 1, 3, 2});
  EXPECT_EQ(d.kind, KiteKind::Diamond);
  EXPECT_EQ(d.blue, 0);
  EXPECT_EQ(d.red, 1);
  // source 0, sink 3: corners 1, 2 on the right side
  KiteConfig r = classify_kite(cr, {0, 1, 2, 3});
  EXPECT_EQ(r.kind, KiteKind::RightWing);
  EXPECT_EQ(r.blue, 1);  // 1-3 reaches the topmost bar
  EXPECT_EQ(r.red, 0);
  // source 0, sink 1: corners 3, 2 on the left side
  KiteConfig l = classify_kite(cr, {0, 3, 2, 1});
  EXPECT_EQ(l.kind, KiteKind::LeftWing);
  EXPECT_EQ(l.blue, 1);  // 3-1, sink 1 is topmost
  EXPECT_EQ(l.red, 0);
}

TEST(BarVisibility, SingleEdge) {
  EmbeddedGraph g = straight_line_graph({{0, 0}, {0, 1}}, {{0, 1}});
  CagedGraph c = cage_crossings(g);
  BarVisibility bv = build_bar_visibility(c, st_order(c));
  EXPECT_EQ(bv.bars[0].y + bv.bars[1].y, 1);
  ASSERT_EQ(bv.routes[0].pts.size(), 2u);
  EXPECT_EQ(bv.routes[0].pts[0].x, bv.routes[0].pts[1].x);
  EXPECT_EQ(check_bar_visibility(c, bv), "");
}

TEST(BarVisibility, K4OneRedOverBlue) {
  CagedGraph c = cage_crossings(gen_named("k4"));
  BarVisibility bv = build_bar_visibility(c, st_order(c));
  int red = 0, blue = 0;
  for (const auto& r : bv.routes) {
    red += r.color == EdgeColor::Red;
    blue += r.color == EdgeColor::Blue;
    if (r.color == EdgeColor::Red) EXPECT_EQ(r.pts.size(), 3u);
  }
  EXPECT_EQ(red, 1);
  EXPECT_EQ(blue, 1);
  EXPECT_EQ(check_bar_visibility(c, bv), "") << bv.dump(c.graph);
  // the blue edge reaches the topmost kite corner
  const KiteConfig& k = bv.kites[0];
  const EdgeRoute& b = bv.routes[k.blue];
  EXPECT_EQ(b.high, k.sink);
}

TEST(BarVisibility, DumpFormat) {
  EmbeddedGraph g = straight_line_graph({{0, 0}, {0, 1}}, {{0, 1}});
  CagedGraph c = cage_crossings(g);
  BarVisibility bv = build_bar_visibility(c, st_order(c, 0, 1));
  EXPECT_EQ(bv.dump(c.graph), "bar v0 y=0 x=[0,0]\nbar v1 y=1 x=[0,0]\nroute e0 color=planar pts=0,0;0,1\n");
}

TEST(BarVisibility, RandomGraphsAreClean) {
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    EmbeddedGraph g = random_one_plane(2 + static_cast<int>(seed % 40), seed);
    for (const Subgraph& sub : split_components(g)) {
      CagedGraph c = cage_crossings(sub.graph);
      BarVisibility bv = build_bar_visibility(c, st_order(c));
      ASSERT_EQ(check_bar_visibility(c, bv), "") << "seed " << seed << "\n" << write_graph(sub.graph);
      for (int v = 0; v < sub.graph.num_vertices(); ++v) {
        ASSERT_LE(bv.left_red[v] >= 0 ? 1 : 0, 1);
        if (bv.roles[v] == BarRole::Middle) {
          ASSERT_EQ(bv.extremes[v][0], -1);
        } else if (sub.graph.degree(v) > 0) {
          ASSERT_GE(bv.extremes[v][0], 0);
        }
      }
    }
  }
}

TEST(BarVisibility, OuterOrdersAreClean) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    EmbeddedGraph g = random_outer_one_plane(3 + static_cast<int>(seed % 40), seed);
    CagedGraph c = cage_crossings(g);
    BarVisibility bv = build_bar_visibility(c, outer_st_order(c));
    ASSERT_EQ(check_bar_visibility(c, bv), "") << "seed " << seed;
  }
}
