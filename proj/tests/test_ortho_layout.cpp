#include <gtest/gtest.h>

#include "onedraw/generators.hpp"
#include "onedraw/ortho_layout.hpp"

using namespace onedraw;

namespace {

int max_bends(const OrthoDrawing& d) {
  int k = 0;
  for (const auto& p : d.polylines) k = std::max(k, bend_count(p));
  return k;
}

}  // namespace

TEST(Extremes, RandomInstancesAreMatchings) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    EmbeddedGraph g = random_one_plane(2 + static_cast<int>(seed % 50), seed);
    for (const Subgraph& s : split_components(g)) {
      CagedGraph c = cage_crossings(s.graph);
      BarVisibility bv = build_bar_visibility(c, st_order(c));
      ExtremeAssignment ex = assign_extremes(bv);
      ASSERT_EQ(check_extremes(bv, ex), "") << seed;
    }
  }
}

TEST(Collapse, RandomGraphsAreValid) {
  int forced = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    EmbeddedGraph g = random_one_plane(2 + static_cast<int>(seed % 59), seed);
    CollapseResult r = oc4_collapse(g);
    ValidationReport rep = validate_drawing(r.drawing, g);
    ASSERT_TRUE(rep.ok()) << "seed " << seed << "\n" << rep.to_string() << write_graph(g);
    ASSERT_LE(max_bends(r.drawing), 3) << seed;
    forced += r.forced_side_exits;
  }
  EXPECT_EQ(forced, 0);
}

TEST(Collapse, NamedGraphsAreValid) {
  for (const std::string& name : named_families()) {
    EmbeddedGraph g = gen_named(name);
    CollapseResult r = oc4_collapse(g);
    ValidationReport rep = validate_drawing(r.drawing, g);
    EXPECT_TRUE(rep.ok()) << name << "\n" << rep.to_string();
    EXPECT_LE(max_bends(r.drawing), 3) << name;
  }
}
