#pragma once

#include <array>
#include <string>
#include <vector>

#include "onedraw/geometry.hpp"
#include "onedraw/graph_model.hpp"

namespace onedraw {

struct Kite {
  int crossing = -1;
  std::array<int, 4> corners{};  // same order as Crossing::ends
  std::array<int, 4> sides{};    // edge of the caged graph joining corners[i], corners[i+1]
};

// Input graph plus caging edges (appended after the original edges, so edge
// indices of the input stay valid). May contain parallel edges.
struct CagedGraph {
  EmbeddedGraph graph;
  PlanarizedGraph planar;      // planarization of graph with the outer faces kept
  std::vector<bool> caging;    // per edge of graph
  std::vector<Kite> kites;     // per crossing
  int num_original_edges = 0;
  // Caging only inserts edges, so rotations of the input always survive;
  // kept as a checked flag.
  bool embedding_preserved = true;

  int num_added() const { return graph.num_edges() - num_original_edges; }
};

CagedGraph cage_crossings(const EmbeddedGraph& g);

struct StOrdering {
  std::vector<int> sequence;  // vertices from bottom to top
  std::vector<int> rank;      // vertex -> index in sequence
  int s = -1;
  int t = -1;
  // Set when the order comes from an augmented supergraph: then vertices
  // other than s and t may lack a lower or higher neighbour.
  bool augmented = false;
  std::vector<int> left_path, right_path;  // outer orders only
};

// Per-component st-ordering of the caged graph (connected input). Throws
// std::invalid_argument if s == t or s, t are not on the outer face.
StOrdering st_order(const CagedGraph& c, int s, int t);
// Default s and t: the first outer vertex and the one halfway along the
// outer walk.
StOrdering st_order(const CagedGraph& c);
// s, left outer path, right outer path, t. Requires a biconnected
// outer-1-plane graph.
StOrdering outer_st_order(const CagedGraph& c);
// Every vertex except s, t has a lower and a higher neighbour among the
// uncrossed edges (including caging edges).
bool is_st_ordering(const CagedGraph& c, const StOrdering& o);

enum class EdgeColor { Planar, Red, Blue };
enum class KiteKind { LeftWing, RightWing, Diamond };
enum class BarRole { Bottom, Top, Middle };
const char* color_name(EdgeColor c);
const char* kite_kind_name(KiteKind k);

struct KiteConfig {
  KiteKind kind = KiteKind::Diamond;
  int red = -1;
  int blue = -1;
  int source = -1;  // lowest corner
  int sink = -1;    // highest corner
};

// Corners in ccw order around the kite and their levels.
KiteConfig classify_kite(const Crossing& c, const std::vector<int>& level);

struct Bar {
  long long y = 0;
  long long xl = 0;
  long long xr = 0;
};

struct EdgeRoute {
  EdgeColor color = EdgeColor::Planar;
  int low = -1;   // lower endpoint
  int high = -1;  // higher endpoint
  long long x = 0;  // column of the vertical segment
  int side = 0;     // red: -1 enters the left end of high's bar, +1 the right end
  int crossing = -1;
  std::vector<GridPoint> pts;  // from low upwards
};

struct BarVisibility {
  std::vector<Bar> bars;
  std::vector<EdgeRoute> routes;   // per original edge
  std::vector<KiteConfig> kites;   // per crossing
  StOrdering order;
  // Vertical edges below / above each bar, sorted by x.
  std::vector<std::vector<int>> bottoms, tops;
  std::vector<int> left_red, right_red;  // -1 if none
  std::vector<BarRole> roles;
  // Leftmost and rightmost edge around a top or bottom bar, -1 otherwise.
  std::vector<std::array<int, 2>> extremes;

  std::string dump(const EmbeddedGraph& g) const;
};

// Connected caged graph and an ordering from st_order or outer_st_order.
BarVisibility build_bar_visibility(const CagedGraph& c, const StOrdering& o);

// Geometric self-check: routes touch only their own bars and the only
// intersections are red horizontals over their blue partners. Returns an
// empty string when fine, otherwise a description of the first problem.
std::string check_bar_visibility(const CagedGraph& c, const BarVisibility& bv);

}  // namespace onedraw
