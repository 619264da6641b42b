#pragma once

#include <string>
#include <vector>

#include "onedraw/bar_visibility.hpp"
#include "onedraw/drawing.hpp"

namespace onedraw {

// For each degree-4 top or bottom bar: the one of its leftmost / rightmost
// edges that gets the extra bends when the bar collapses. -1 elsewhere.
// Bars of smaller degree always have a free port and need no extreme edge.
struct ExtremeAssignment {
  std::vector<int> extreme;  // per vertex
};

ExtremeAssignment assign_extremes(const BarVisibility& bv);
// Empty string if the invariants hold.
std::string check_extremes(const BarVisibility& bv, const ExtremeAssignment& ex);

// Shape of an edge right after collapsing the bars, used by the smooth
// layout.
struct CollapsedEdge {
  int low = -1, high = -1;
  Port low_port = Port::N, high_port = Port::S;
  long long column = 0;    // x of the long vertical segment
  bool red = false;
  bool lowered = false;    // red entering the south port of a bottom bar
  bool raised = false;     // red entering the north port of a top bar
  bool inverted = false;   // red crossing its blue partner at its lower end
};

struct CollapseResult {
  OrthoDrawing drawing;
  std::vector<long long> row;       // y of each vertex, one vertex per row
  std::vector<CollapsedEdge> edges;
  // Lowered reds that had to leave their lower end sideways (no inverted
  // routing and no north port available).
  int forced_side_exits = 0;
};

// Replaces every bar by a point; rows are 3 apart and U-turns use the rows
// directly above or below the vertex. Input: a bar visibility of a connected
// caged graph; the drawing is for the original edges.
CollapseResult collapse_bars(const CagedGraph& c, const BarVisibility& bv, const ExtremeAssignment& ex);

// S-shape removal and compaction through an orthogonal representation.
OrthoDrawing remove_s_shapes(const OrthoDrawing& d, const EmbeddedGraph& g);
// Rotates the four ports at a crossing by a quarter turn in the direction
// that removes bends of the crossed edges, then removes S-shapes. Throws
// std::invalid_argument if neither rotation saves a bend.
OrthoDrawing reduce_crossing_bends(const OrthoDrawing& d, const EmbeddedGraph& g, int crossing);
// Compacts an orthogonal drawing without changing its shape.
OrthoDrawing compact(const OrthoDrawing& d, const EmbeddedGraph& g);

// Whole pipeline for a 1-plane graph of maximum degree 4 (any number of
// components; they are placed side by side).
OrthoDrawing oc4_layout(const EmbeddedGraph& g);
// Collapsed drawing before S-shape removal, per component, side by side.
CollapseResult oc4_collapse(const EmbeddedGraph& g);

// Extreme choice for outer orders.
ExtremeAssignment outer_port_choice(const BarVisibility& bv, const StOrdering& order);
// Biconnected outer-1-plane graph of maximum degree 4.
OrthoDrawing outer_oc3(const EmbeddedGraph& g);

}  // namespace onedraw
