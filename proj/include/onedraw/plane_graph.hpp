#pragma once

#include <array>
#include <vector>

namespace onedraw {

// Combinatorial map over an undirected multigraph. Edge e owns darts 2e
// (ends[e][0] -> ends[e][1]) and 2e+1 (reverse). rotation[v] lists the darts
// leaving v in counter-clockwise order. Faces are traced keeping the face on
// the left of each dart, so bounded faces run ccw and the outer face cw.
class PlaneGraph {
 public:
  struct Faces {
    std::vector<int> face_of;               // per dart
    std::vector<std::vector<int>> darts;    // per face, in walk order
  };

  int add_vertex();
  // Appends the new darts at the end of both rotations.
  int add_edge(int u, int v);
  // Inserts the new edge into the face corners that follow the incoming darts
  // in_u (ending at u) and in_v (ending at v). in_u == -1 (resp. in_v) means
  // u has no darts yet.
  int add_edge_in_corners(int in_u, int u, int in_v, int v);

  int num_vertices() const { return static_cast<int>(rotation_.size()); }
  int num_edges() const { return static_cast<int>(ends_.size()); }
  int num_darts() const { return 2 * num_edges(); }

  static int twin(int d) { return d ^ 1; }
  static int edge_of(int d) { return d >> 1; }
  int tail(int d) const { return ends_[d >> 1][d & 1]; }
  int head(int d) const { return ends_[d >> 1][(d & 1) ^ 1]; }
  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }
  const std::vector<int>& rotation(int v) const { return rotation_[v]; }
  void set_rotation(int v, std::vector<int> darts);
  const std::array<int, 2>& ends(int e) const { return ends_[e]; }
  int rot_index(int d) const;
  // Dart leaving head(d) that follows d along its face.
  int next_in_face(int d) const;
  // Dart that precedes d along its face.
  int prev_in_face(int d) const;

  Faces faces() const;
  // Connected components over vertices; returns component id per vertex.
  std::vector<int> components(int* count = nullptr) const;
  // Articulation points (true per vertex).
  std::vector<bool> cut_vertices() const;

 private:
  void reindex(int v);
  std::vector<std::vector<int>> rotation_;
  std::vector<std::array<int, 2>> ends_;
  std::vector<int> pos_;  // per dart: index in rotation of its tail
};

}  // namespace onedraw
