#pragma once

#include <memory>
#include <string>
#include <vector>

#include "onedraw/drawing.hpp"
#include "onedraw/ortho_layout.hpp"
#include "onedraw/plane_graph.hpp"

namespace onedraw {

// Smooth drawing with at most three primitives per edge, built from the
// collapsed orthogonal drawing: each vertex gets a horizontal band tall
// enough for its own arcs, bands are stacked bottom to top and x-coordinates
// are kept. Throws std::invalid_argument if the collapse lacks the expected
// shapes.
SmoothDrawing sc3_from_collapse(const CollapseResult& c, const EmbeddedGraph& g);
SmoothDrawing sc3_layout(const EmbeddedGraph& g);

// ---------------------------------------------------------------------------
// SC2 for biconnected outer-1-plane graphs.
//
// Vertices are placed on the diagonal x + y = 0 in outer order, starting
// after the start edge. Ports come from a search over all edges: an edge
// leaving on S towards its right neighbour (arriving on W) is a quarter arc
// below the diagonal, an edge with S or W at both ends is an underpass below
// it, and every other edge runs above it. An end on S or W of an edge above
// first dips below the diagonal into the adjacent outer gap. Positions are
// chosen bottom-up over the nesting of edges and crossing pairs; the drawing
// is then emitted face by face in leftmost-BFS order of the auxiliary graph,
// with every step checked.

enum class Sc2FaceKind { Normal, Paired, Cut };

struct Sc2Face {
  int face = -1;          // face of the auxiliary graph
  Sc2FaceKind kind = Sc2FaceKind::Normal;
  int reference = -1;     // auxiliary edge shared with an earlier face, -1 for the root face
  int partner = -1;       // other face of a facial pair
  std::vector<int> region_edges;  // edges bounding the region the face is drawn in
  Rational lo, hi;        // diagonal interval of that region
};

struct Sc2StepCheck {
  int step = 0;
  bool curves = true;       // I.1: at most two primitives, tangent-continuous, ports as assigned
  bool diagonal = true;     // I.2: vertices on the diagonal in outer order
  bool sides = true;        // I.3: inner edges above the diagonal, outer-cycle arcs and dips below
  bool crossings = true;    // I.4: exactly the embedded crossings, each once and proper
  bool ports = true;        // P.1: distinct ports in rotation order, enough free ports left
  bool containment = true;  // new curves stay inside the region of the reference edge
  std::string detail;
  bool ok() const { return curves && diagonal && sides && crossings && ports && containment; }
};

struct Sc2StartEdge {
  int edge = -1;
  int s = -1, s_prime = -1;  // s = last vertex of the order, s_prime = first
  Curve curve;               // final curve, from edges[edge].u
};

struct Sc2Plan;

struct Sc2State {
  const EmbeddedGraph* graph = nullptr;
  PlanarizedGraph planar;
  std::vector<int> cyc;   // vertices in ccw order around the outer face
  std::vector<int> order; // linear order v_0..v_{n-1}; the start edge joins v_{n-1} and v_0
  std::vector<int> rank;  // vertex -> index in order
  // Auxiliary graph: planarization without dummy-cuts, plus virtual edges
  // caging every dummy-cut and closing every in-dummy 4-cycle. Vertex n + k
  // stands for crossing k (isolated for dummy-cuts).
  PlaneGraph aux;
  std::vector<int> aux_origin;    // per aux edge: original edge, -1 if virtual
  std::vector<bool> aux_half;     // per aux edge: half of a crossed edge
  std::vector<int> aux_crossing;  // per aux edge: crossing it belongs to (halves, virtual), else -1
  PlaneGraph::Faces aux_faces;
  int aux_outer = -1;
  std::vector<int> caged;         // per aux face: crossing caged by this cut-face, else -1
  Sc2StartEdge start;
  std::vector<Sc2Face> faces;     // processing order
  std::vector<Rational> t;        // per vertex: position (t, -t)
  std::vector<int> remaining;     // per vertex: incident edges not drawn yet
  SmoothDrawing drawing;          // filled face by face
  std::vector<bool> drawn;        // per edge
  std::vector<Sc2StepCheck> checks;
  std::shared_ptr<Sc2Plan> plan;
};

// Throws std::invalid_argument unless g is a biconnected outer-1-plane graph
// of maximum degree 4 whose embedding has its vertices in convex position.
Sc2State build_aux_graph(const EmbeddedGraph& g);
// Start edge: an outer edge whose ends admit a port plan. Fills start.
void pick_start_edge(Sc2State& st);
// Leftmost BFS over the inner faces from the face below the start edge.
void order_faces(Sc2State& st);
// Diagonal positions and the planned curves of all edges.
void place_vertices(Sc2State& st);
void draw_normal_face(Sc2State& st, int step);
// Draws faces[step] and faces[step + 1].
void draw_facial_pair(Sc2State& st, int step);
void draw_cut_face(Sc2State& st, int step);
SmoothDrawing sc2_layout(const EmbeddedGraph& g, Sc2State* trace = nullptr);

// Reverses the direction of travel of a curve.
Curve reversed(const Curve& c);

}  // namespace onedraw
