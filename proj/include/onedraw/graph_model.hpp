#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "onedraw/plane_graph.hpp"

namespace onedraw {

struct Edge {
  std::string id;
  int u = -1;
  int v = -1;
};

// Two crossing edges. ends lists the four endpoints in ccw order around the
// crossing point: an end of e1, an end of e2, the other end of e1, the other
// end of e2.
struct Crossing {
  int e1 = -1;
  int e2 = -1;
  std::array<int, 4> ends{};
};

struct EmbeddedGraph {
  std::vector<std::string> vertex_ids;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rotation;  // incident edge indices, ccw
  std::vector<Crossing> crossings;
  // Outer facial walks, one per component that has one; tokens are vertex
  // ids or "@<edge-id>" for the crossing point on that edge.
  std::vector<std::vector<std::string>> outer_walks;

  int num_vertices() const { return static_cast<int>(vertex_ids.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(rotation[v].size()); }
  int other(int e, int v) const { return edges[e].u == v ? edges[e].v : edges[e].u; }
  int add_vertex(const std::string& id);
  int add_edge(const std::string& id, int u, int v);
  int vertex_index(const std::string& id) const;  // -1 if absent
  int edge_index(const std::string& id) const;    // -1 if absent
  // Crossing index containing edge e, or -1.
  int crossing_of(int e) const;

 private:
  std::unordered_map<std::string, int> vindex_;
  std::unordered_map<std::string, int> eindex_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg);
  int line;
  int column;
};

class SemanticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Violation {
  std::string rule;
  std::vector<std::string> elements;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string rule, std::vector<std::string> elements, std::string message);
  std::string to_string() const;
};

EmbeddedGraph parse_graph(std::string_view text);
std::string write_graph(const EmbeddedGraph& g);
ValidationReport validate_one_plane(const EmbeddedGraph& g);

enum class DummyKind { Cut, In, Out };
const char* dummy_kind_name(DummyKind k);

// Vertices 0..n-1 of plane are the original vertices, n.. the crossing
// dummies (dummy i belongs to crossing i). Each original edge maps to one
// planar edge, or to two halves (from edges[e].u to the dummy, then from the
// dummy to edges[e].v). Planar edges are oriented from the u side.
struct PlanarizedGraph {
  PlaneGraph plane;
  int n_real = 0;
  std::vector<std::vector<int>> parts;   // original edge -> planar edges
  std::vector<int> origin;               // planar edge -> original edge
  std::vector<DummyKind> dummy_kind;     // per crossing
  PlaneGraph::Faces faces;
  std::vector<int> component;            // per planar vertex
  int num_components = 0;
  std::vector<int> outer_face;           // per component, -1 if edgeless

  bool is_dummy(int v) const { return v >= n_real; }
  int crossing_of_dummy(int v) const { return v - n_real; }
  bool is_outer(int f) const;
  // Token used in facial walks for planar vertex v.
  std::string token(const EmbeddedGraph& g, int v) const;
};

// Builds the planarization. With check=false, outer walks that match no face
// fall back to the default choice instead of throwing.
PlanarizedGraph planarize(const EmbeddedGraph& g, bool check = true);
bool is_outer_one_plane(const EmbeddedGraph& g);
bool is_biconnected(const EmbeddedGraph& g);
struct Subgraph {
  EmbeddedGraph graph;
  std::vector<int> vertex_map;  // local -> global
  std::vector<int> edge_map;    // local -> global
};
// Connected components in order of their smallest vertex.
std::vector<Subgraph> split_components(const EmbeddedGraph& g);

// Replaces the outer walks by the walks of the given planar faces.
void set_outer_faces(EmbeddedGraph& g, const PlanarizedGraph& p, const std::vector<int>& faces);

}  // namespace onedraw
