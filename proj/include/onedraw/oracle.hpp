#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "onedraw/drawing.hpp"
#include "onedraw/ortho_rep.hpp"

namespace onedraw {

// Bend network of a planarized graph whose vertex angles are fixed by a
// port assignment. Nodes are the faces; a unit on arc a is one bend on
// planar edge a.part, convex towards a.to and reflex towards a.from.
struct FlowNetwork {
  struct Arc {
    int from = -1, to = -1;
    int part = -1;  // planar edge
  };
  int num_faces = 0;
  std::vector<bool> outer;
  // Required inflow minus outflow per face: its target rotation (+4 inner,
  // -4 outer) minus the turns taken at its vertex corners.
  std::vector<int> demand;
  std::vector<Arc> arcs;
};

// Every vertex has distinct ports that follow its rotation ccw.
bool rotation_consistent(const EmbeddedGraph& g, const PortAssignment& ports);

// Throws std::invalid_argument when the ports are not rotation-consistent.
FlowNetwork flow_network(const EmbeddedGraph& g, const PlanarizedGraph& gp, const PortAssignment& ports);

struct FixedBends {
  bool feasible = false;
  std::vector<int> bends;  // per original edge
  int total = 0;
  int max = 0;
  OrthoShape shape;  // bend-minimal representation (when feasible)
};

// Minimum total bends for the vertex angles induced by `ports`. Crossing
// dummies keep four right angles, so crossed edges pass straight. With
// part_caps, planar edge i carries at most part_caps[i] bends; the result
// may then be infeasible.
FixedBends min_bends_fixed(const EmbeddedGraph& g, const PlanarizedGraph& gp, const PortAssignment& ports,
                           const std::vector<int>* part_caps = nullptr);

// Rotation-consistent assignments, one per choice of vertex angles: the
// first edge in each rotation gets port E. Vertex-major odometer order.
std::vector<PortAssignment> port_assignments(const EmbeddedGraph& g);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleRow {
  std::string ports;  // hash of the assignment
  int max_bends = 0;
  int total = 0;
};

struct OracleResult {
  int max_bends = 0;
  int total_bends = 0;
  std::vector<int> bends;  // per edge, best assignment
  PortAssignment ports;    // best assignment (angles only, see above)
  OrthoDrawing witness;
  std::vector<OracleRow> table;  // one row per assignment
};

std::string ports_hash(const PortAssignment& ports);

// Minimizes the largest per-edge bend count, then the total, over all
// angle assignments. Throws BudgetExceeded when the planarization has more
// than `budget` nodes.
OracleResult min_max_bends(const EmbeddedGraph& g, int budget = 14);

// Budget from ONEDRAW_ORACLE_BUDGET, 14 when unset.
int oracle_budget_from_env();

}  // namespace onedraw
