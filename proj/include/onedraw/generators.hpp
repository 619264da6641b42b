#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "onedraw/graph_model.hpp"

namespace onedraw {

struct IPoint {
  long long x = 0;
  long long y = 0;
};

// Embedded graph of a straight-line drawing with integer coordinates. The
// rotation, crossings and outer faces are read off the geometry. Throws
// std::invalid_argument on degenerate drawings (overlaps, an edge through a
// vertex, an edge crossed twice).
EmbeddedGraph straight_line_graph(const std::vector<IPoint>& points,
                                  const std::vector<std::pair<int, int>>& edges);

// Named witness graphs: k4, k5-fig4a, k4-pair-fig5, no-sc1-fig6d,
// triangle-family (t copies), octahedron, outer-example.
EmbeddedGraph gen_named(const std::string& family, int t = 1);
std::vector<std::string> named_families();

// Random 1-plane graph of maximum degree 4 with n vertices.
EmbeddedGraph random_one_plane(int n, std::uint64_t seed);
// Random biconnected outer-1-plane graph of maximum degree 4 with n >= 3 vertices.
EmbeddedGraph random_outer_one_plane(int n, std::uint64_t seed);

}  // namespace onedraw
