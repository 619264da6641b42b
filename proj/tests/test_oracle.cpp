#include <gtest/gtest.h>

#include <cstdlib>

#include "onedraw/generators.hpp"
#include "onedraw/min_cost_flow.hpp"
#include "onedraw/oracle.hpp"
#include "support/small_plane.hpp"

using namespace onedraw;

namespace {

EmbeddedGraph cycle(int n) {
  std::vector<IPoint> pts;
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) {
    pts.push_back({i == 1 || i == 2 ? 10 : 0, i >= 2 ? 10 : 0});
    es.push_back({i, (i + 1) % n});
  }
  if (n == 3) pts = {{0, 0}, {10, 0}, {0, 10}};
  return straight_line_graph(pts, es);
}

// Planar dart of q -> dart of the original graph (2e from edges[e].u).
int original_dart(const EmbeddedGraph& g, const PlanarizedGraph& q, int d) {
  int pe = PlaneGraph::edge_of(d);
  int e = q.origin[pe];
  bool forward = q.plane.ends(pe)[0] == g.edges[e].u;
  return 2 * e + ((d & 1) ^ (forward ? 0 : 1));
}

}  // namespace

TEST(MinCostFlow, PicksCheaperRoute) {
  MinCostFlow f(4);
  int a = f.add_arc(0, 1, 2, 1);
  int b = f.add_arc(1, 3, 2, 1);
  int c = f.add_arc(0, 2, 2, 5);
  f.add_arc(2, 3, 2, 0);
  auto [flow, cost] = f.run(0, 3, 3);
  EXPECT_EQ(flow, 3);
  EXPECT_EQ(cost, 2 * 2 + 5);
  EXPECT_EQ(f.flow(a), 2);
  EXPECT_EQ(f.flow(b), 2);
  EXPECT_EQ(f.flow(c), 1);
}

TEST(MinCostFlow, ReroutesThroughResidual) {
  // the first cheap path blocks a better pairing; the second augmentation
  // must undo part of it
  MinCostFlow f(4);
  f.add_arc(0, 1, 1, 0);
  f.add_arc(0, 2, 1, 0);
  f.add_arc(1, 2, 1, 0);
  f.add_arc(1, 3, 1, 10);
  f.add_arc(2, 3, 1, 0);
  auto [flow, cost] = f.run(0, 3, 2);
  EXPECT_EQ(flow, 2);
  EXPECT_EQ(cost, 10);
}

TEST(Oracle, RotationConsistency) {
  EmbeddedGraph g = gen_named("k4");
  for (const auto& pa : port_assignments(g)) EXPECT_TRUE(rotation_consistent(g, pa));
  PortAssignment pa = port_assignments(g).front();
  int v = 0, e = g.rotation[v][0], f = g.rotation[v][1];
  pa[f][g.edges[f].u == v ? 0 : 1] = pa[e][g.edges[e].u == v ? 0 : 1];
  EXPECT_FALSE(rotation_consistent(g, pa));
  PlanarizedGraph gp = planarize(g);
  EXPECT_THROW(flow_network(g, gp, pa), std::invalid_argument);
  // three ports in clockwise order wind around twice
  PortAssignment cw = port_assignments(g).front();
  for (int w = 0; w < g.num_vertices(); ++w)
    for (std::size_t i = 0; i < g.rotation[w].size(); ++i) {
      int x = g.rotation[w][i];
      cw[x][g.edges[x].u == w ? 0 : 1] = static_cast<Port>((4 - static_cast<int>(i)) % 4);
    }
  EXPECT_FALSE(rotation_consistent(g, cw));
}

TEST(Oracle, DemandsBalancePerComponent) {
  for (const auto& name : named_families()) {
    EmbeddedGraph g = gen_named(name);
    PlanarizedGraph gp = planarize(g);
    for (const auto& pa : port_assignments(g)) {
      FlowNetwork net = flow_network(g, gp, pa);
      std::vector<int> sum(gp.num_components, 0);
      for (int f = 0; f < net.num_faces; ++f) sum[gp.component[gp.plane.tail(gp.faces.darts[f][0])]] += net.demand[f];
      for (int s : sum) ASSERT_EQ(s, 0) << name;
    }
  }
}

TEST(Oracle, SquareNeedsNoBends) {
  EmbeddedGraph g = cycle(4);
  PlanarizedGraph gp = planarize(g);
  int zero = 0;
  for (const auto& pa : port_assignments(g)) zero += min_bends_fixed(g, gp, pa).total == 0;
  EXPECT_EQ(zero, 1);  // only the all-right-angle choice
  OracleResult r = min_max_bends(g);
  EXPECT_EQ(r.max_bends, 0);
  EXPECT_EQ(r.total_bends, 0);
}

TEST(Oracle, TriangleNeedsOneBend) {
  EmbeddedGraph g = cycle(3);
  OracleResult r = min_max_bends(g);
  EXPECT_EQ(r.max_bends, 1);
  EXPECT_EQ(r.total_bends, 1);
  EXPECT_TRUE(validate_drawing(r.witness, g).ok());
  EXPECT_EQ(r.table.size(), 27u);
}

TEST(Oracle, CapsCanMakeItInfeasible) {
  EmbeddedGraph g = cycle(3);
  PlanarizedGraph gp = planarize(g);
  std::vector<int> caps(gp.plane.num_edges(), 0);
  for (const auto& pa : port_assignments(g)) EXPECT_FALSE(min_bends_fixed(g, gp, pa, &caps).feasible);
}

TEST(Oracle, K5NeedsThreeBends) {
  OracleResult r = min_max_bends(gen_named("k5-fig4a"));
  EXPECT_GE(r.max_bends, 3);
}

TEST(Oracle, K4PairNeedsTwoBends) {
  EmbeddedGraph g = gen_named("k4-pair-fig5");
  OracleResult r = min_max_bends(g);
  EXPECT_GE(r.max_bends, 2);
  for (const auto& row : r.table) EXPECT_GE(row.max_bends, 2);
  EXPECT_TRUE(validate_drawing(r.witness, g).ok());
}

TEST(Oracle, OctahedronNeedsThreeBends) {
  EXPECT_EQ(min_max_bends(gen_named("octahedron")).max_bends, 3);
}

TEST(Oracle, WitnessesMatchReportedBends) {
  for (const char* name : {"k4", "k5-fig4a", "triangle-family", "no-sc1-fig6d"}) {
    EmbeddedGraph g = gen_named(name);
    OracleResult r = min_max_bends(g);
    ASSERT_TRUE(validate_drawing(r.witness, g).ok()) << name;
    int mx = 0, total = 0;
    for (const auto& p : r.witness.polylines) {
      mx = std::max(mx, bend_count(p));
      total += bend_count(p);
    }
    EXPECT_EQ(mx, r.max_bends) << name;
    EXPECT_EQ(total, r.total_bends) << name;
  }
}

TEST(Oracle, BudgetIsEnforced) {
  EXPECT_THROW(min_max_bends(gen_named("k4-pair-fig5"), 10), BudgetExceeded);
  EXPECT_NO_THROW(min_max_bends(gen_named("k4"), 5));
  setenv("ONEDRAW_ORACLE_BUDGET", "9", 1);
  EXPECT_EQ(oracle_budget_from_env(), 9);
  setenv("ONEDRAW_ORACLE_BUDGET", "x", 1);
  EXPECT_THROW(oracle_budget_from_env(), std::invalid_argument);
  unsetenv("ONEDRAW_ORACLE_BUDGET");
  EXPECT_EQ(oracle_budget_from_env(), 14);
}

TEST(Oracle, DeterministicTable) {
  EmbeddedGraph g = gen_named("k4");
  OracleResult a = min_max_bends(g), b = min_max_bends(g);
  ASSERT_EQ(a.table.size(), b.table.size());
  for (std::size_t i = 0; i < a.table.size(); ++i) EXPECT_EQ(a.table[i].ports, b.table[i].ports);
  EXPECT_EQ(a.witness.positions.size(), b.witness.positions.size());
  EXPECT_EQ(drawing_json(a.witness, g), drawing_json(b.witness, g));
}

TEST(Oracle, AgreesWithExhaustiveSearchOnSmallPlaneGraphs) {
  int cases = 0;
  for (const auto& es : small_plane::connected_graphs(6))
    for (const auto& rot : small_plane::plane_rotations(es)) {
      EmbeddedGraph g = small_plane::build(es, rot);
      PlanarizedGraph p = planarize(g, false);
      for (int f = 0; f < static_cast<int>(p.faces.darts.size()); ++f) {
        EmbeddedGraph h = g;
        set_outer_faces(h, p, {f});
        PlanarizedGraph q = planarize(h);
        int od = original_dart(h, q, q.faces.darts[q.outer_face[0]][0]);
        for (const auto& pa : small_plane::angle_choices(h)) {
          ASSERT_EQ(min_bends_fixed(h, q, pa).total, small_plane::min_total_bends(h, pa, od)) << write_graph(h);
          ++cases;
        }
      }
    }
  EXPECT_GT(cases, 10000);
}
