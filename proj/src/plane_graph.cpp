#include "onedraw/plane_graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace onedraw {

int PlaneGraph::add_vertex() {
  rotation_.emplace_back();
  return num_vertices() - 1;
}

void PlaneGraph::reindex(int v) {
  const auto& r = rotation_[v];
  for (int i = 0; i < static_cast<int>(r.size()); ++i) pos_[r[i]] = i;
}

int PlaneGraph::add_edge(int u, int v) {
  int e = num_edges();
  ends_.push_back({u, v});
  pos_.resize(2 * (e + 1));
  rotation_[u].push_back(2 * e);
  pos_[2 * e] = static_cast<int>(rotation_[u].size()) - 1;
  rotation_[v].push_back(2 * e + 1);
  pos_[2 * e + 1] = static_cast<int>(rotation_[v].size()) - 1;
  return e;
}

int PlaneGraph::add_edge_in_corners(int in_u, int u, int in_v, int v) {
  int e = num_edges();
  ends_.push_back({u, v});
  pos_.resize(2 * (e + 1));
  auto place = [&](int in, int w, int d) {
    auto& r = rotation_[w];
    if (in < 0) {
      r.push_back(d);
    } else {
      if (head(in) != w) throw std::logic_error("corner dart does not end at vertex");
      r.insert(r.begin() + pos_[twin(in)], d);
    }
    reindex(w);
  };
  place(in_u, u, 2 * e);
  place(in_v, v, 2 * e + 1);
  return e;
}

void PlaneGraph::set_rotation(int v, std::vector<int> darts) {
  rotation_[v] = std::move(darts);
  reindex(v);
}

int PlaneGraph::rot_index(int d) const { return pos_[d]; }

int PlaneGraph::next_in_face(int d) const {
  int t = twin(d);
  const auto& r = rotation_[tail(t)];
  int k = pos_[t];
  return r[(k + static_cast<int>(r.size()) - 1) % r.size()];
}

int PlaneGraph::prev_in_face(int d) const {
  const auto& r = rotation_[tail(d)];
  int k = pos_[d];
  return twin(r[(k + 1) % r.size()]);
}

PlaneGraph::Faces PlaneGraph::faces() const {
  Faces f;
  f.face_of.assign(num_darts(), -1);
  for (int d0 = 0; d0 < num_darts(); ++d0) {
    if (f.face_of[d0] >= 0) continue;
    int id = static_cast<int>(f.darts.size());
    f.darts.emplace_back();
    int d = d0;
    do {
      f.face_of[d] = id;
      f.darts.back().push_back(d);
      d = next_in_face(d);
    } while (d != d0);
  }
  return f;
}

std::vector<int> PlaneGraph::components(int* count) const {
  std::vector<int> comp(num_vertices(), -1);
  int c = 0;
  std::vector<int> stack;
  for (int s = 0; s < num_vertices(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int d : rotation_[v]) {
        int w = head(d);
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

std::vector<bool> PlaneGraph::cut_vertices() const {
  int n = num_vertices();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> cut(n, false);
  int timer = 0;
  // iterative DFS; parent edge tracked to allow parallel edges
  struct Frame { int v, in_edge, idx, children; };
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> st{{root, -1, 0, 0}};
    disc[root] = low[root] = timer++;
    while (!st.empty()) {
      Frame& f = st.back();
      if (f.idx < degree(f.v)) {
        int d = rotation_[f.v][f.idx++];
        if (edge_of(d) == f.in_edge) continue;
        int w = head(d);
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          ++f.children;
          st.push_back({w, edge_of(d), 0, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        st.pop_back();
        if (st.empty()) {
          if (done.children > 1) cut[done.v] = true;
        } else {
          Frame& p = st.back();
          low[p.v] = std::min(low[p.v], low[done.v]);
          if (st.size() > 1 && low[done.v] >= disc[p.v]) cut[p.v] = true;
        }
      }
    }
  }
  return cut;
}

}  // namespace onedraw
