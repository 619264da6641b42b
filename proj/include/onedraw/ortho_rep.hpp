#pragma once

#include <string>
#include <vector>

#include "onedraw/drawing.hpp"

namespace onedraw {

// Shape of an orthogonal drawing without coordinates. Every edge is cut at
// its crossing point into two halves; node ids are the vertices followed by
// one node per crossing (n + crossing index).
struct HalfShape {
  int from = -1, to = -1;
  int start = 0;      // direction leaving `from` (E=0 N=1 W=2 S=3)
  std::string turns;  // 'L' / 'R' per bend, in walking order
  int end() const;    // direction arriving at `to`
};

struct OrthoShape {
  int num_vertices = 0;
  int num_crossings = 0;
  std::vector<std::vector<HalfShape>> halves;  // per edge, walking from edges[e].u

  int bends(int e) const;
};

// Throws std::invalid_argument when the drawing is not orthogonal or a
// crossing of g has no realized point.
OrthoShape shape_of(const OrthoDrawing& d, const EmbeddedGraph& g);

// Removes adjacent opposite turns inside each half; afterwards every half
// turns one way only. Returns whether anything changed.
bool cancel_s_shapes(OrthoShape& s);

// Rotates the four directions at crossing k by a quarter turn (ccw if
// ccw is set). Bend counts of the crossing edges change by one per half
// before cancelling.
void rotate_crossing(OrthoShape& s, const EmbeddedGraph& g, int k, bool ccw);

// Coordinates for a shape: faces are cut into rectangles, lengths come from
// longest paths, then empty rows and columns are dropped. Components are
// placed left to right with unit gaps. The result depends only on the shape.
OrthoDrawing realize(const OrthoShape& s, const EmbeddedGraph& g);

}  // namespace onedraw
