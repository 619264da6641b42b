#include "onedraw/graph_model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace onedraw {

int EmbeddedGraph::add_vertex(const std::string& id) {
  int v = num_vertices();
  vertex_ids.push_back(id);
  rotation.emplace_back();
  vindex_[id] = v;
  return v;
}

int EmbeddedGraph::add_edge(const std::string& id, int u, int v) {
  int e = num_edges();
  edges.push_back({id, u, v});
  eindex_[id] = e;
  return e;
}

int EmbeddedGraph::vertex_index(const std::string& id) const {
  auto it = vindex_.find(id);
  return it == vindex_.end() ? -1 : it->second;
}

int EmbeddedGraph::edge_index(const std::string& id) const {
  auto it = eindex_.find(id);
  return it == eindex_.end() ? -1 : it->second;
}

int EmbeddedGraph::crossing_of(int e) const {
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i)
    if (crossings[i].e1 == e || crossings[i].e2 == e) return i;
  return -1;
}

ParseError::ParseError(int l, int c, const std::string& msg)
    : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg),
      line(l),
      column(c) {}

void ValidationReport::add(std::string rule, std::vector<std::string> elements, std::string message) {
  violations.push_back({std::move(rule), std::move(elements), std::move(message)});
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) {
    os << v.rule << ":";
    for (const auto& e : v.elements) os << " " << e;
    os << ": " << v.message << "\n";
  }
  return os.str();
}

namespace {

struct Token {
  std::string text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back({std::string(raw.substr(i, j - i)), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

void expect_args(const Line& l, size_t min, size_t max) {
  size_t n = l.tokens.size() - 1;
  if (n < min || n > max) {
    std::string want = min == max ? std::to_string(min) : std::to_string(min) + ".." + (max > 1000 ? "" : std::to_string(max));
    throw ParseError(l.number, l.tokens[0].column,
                     "'" + l.tokens[0].text + "' expects " + want + " arguments, got " + std::to_string(n));
  }
}

}  // namespace

EmbeddedGraph parse_graph(std::string_view text) {
  EmbeddedGraph g;
  auto lines = tokenize(text);
  const size_t kMany = 1u << 30;
  for (const auto& l : lines) {
    const std::string& kw = l.tokens[0].text;
    if (kw == "v") {
      expect_args(l, 1, 1);
      const auto& id = l.tokens[1].text;
      if (id[0] == '@') throw ParseError(l.number, l.tokens[1].column, "vertex id may not start with '@'");
      if (g.vertex_index(id) >= 0) throw SemanticError("duplicate vertex id '" + id + "'");
      g.add_vertex(id);
    } else if (kw != "e" && kw != "rot" && kw != "x" && kw != "outer") {
      throw ParseError(l.number, l.tokens[0].column, "unknown statement '" + kw + "'");
    }
  }
  auto vertex = [&](const Line& l, int i) {
    int v = g.vertex_index(l.tokens[i].text);
    if (v < 0) throw SemanticError("unknown vertex id '" + l.tokens[i].text + "' (line " + std::to_string(l.number) + ")");
    return v;
  };
  for (const auto& l : lines) {
    if (l.tokens[0].text != "e") continue;
    expect_args(l, 3, 3);
    const auto& id = l.tokens[1].text;
    if (g.edge_index(id) >= 0) throw SemanticError("duplicate edge id '" + id + "'");
    g.add_edge(id, vertex(l, 2), vertex(l, 3));
  }
  std::vector<int> deg(g.num_vertices(), 0);
  for (const auto& e : g.edges) {
    ++deg[e.u];
    if (e.v != e.u) ++deg[e.v];
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (deg[v] > 4) throw SemanticError("degree > 4 at vertex '" + g.vertex_ids[v] + "'");
  auto edge = [&](const Line& l, int i) {
    int e = g.edge_index(l.tokens[i].text);
    if (e < 0) throw SemanticError("unknown edge id '" + l.tokens[i].text + "' (line " + std::to_string(l.number) + ")");
    return e;
  };
  std::vector<bool> has_rot(g.num_vertices(), false);
  std::vector<int> crossed(g.num_edges(), 0);
  for (const auto& l : lines) {
    const std::string& kw = l.tokens[0].text;
    if (kw == "rot") {
      expect_args(l, 1, kMany);
      int v = vertex(l, 1);
      if (has_rot[v]) throw SemanticError("second rotation for vertex '" + g.vertex_ids[v] + "'");
      has_rot[v] = true;
      for (size_t i = 2; i < l.tokens.size(); ++i) g.rotation[v].push_back(edge(l, static_cast<int>(i)));
    } else if (kw == "x") {
      expect_args(l, 6, 6);
      Crossing c;
      c.e1 = edge(l, 1);
      c.e2 = edge(l, 2);
      int a1 = vertex(l, 3), b1 = vertex(l, 4), a2 = vertex(l, 5), b2 = vertex(l, 6);
      c.ends = {a1, a2, b1, b2};
      for (int e : {c.e1, c.e2})
        if (++crossed[e] > 1) throw SemanticError("edge crossed twice: '" + g.edges[e].id + "'");
      g.crossings.push_back(c);
    } else if (kw == "outer") {
      expect_args(l, 1, kMany);
      std::vector<std::string> walk;
      for (size_t i = 1; i < l.tokens.size(); ++i) {
        const auto& t = l.tokens[i].text;
        if (t[0] == '@') {
          if (g.edge_index(t.substr(1)) < 0) throw SemanticError("unknown edge id in outer walk '" + t + "'");
        } else {
          vertex(l, static_cast<int>(i));
        }
        walk.push_back(t);
      }
      g.outer_walks.push_back(std::move(walk));
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (has_rot[v]) continue;
    if (deg[v] >= 2) throw SemanticError("missing rotation for vertex '" + g.vertex_ids[v] + "' of degree " + std::to_string(deg[v]));
    for (int e = 0; e < g.num_edges(); ++e)
      if (g.edges[e].u == v || g.edges[e].v == v) g.rotation[v].push_back(e);
  }
  return g;
}

std::string write_graph(const EmbeddedGraph& g) {
  std::ostringstream os;
  for (const auto& id : g.vertex_ids) os << "v " << id << "\n";
  for (const auto& e : g.edges) os << "e " << e.id << " " << g.vertex_ids[e.u] << " " << g.vertex_ids[e.v] << "\n";
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.rotation[v].empty()) continue;
    os << "rot " << g.vertex_ids[v];
    for (int e : g.rotation[v]) os << " " << g.edges[e].id;
    os << "\n";
  }
  for (const auto& c : g.crossings) {
    const auto& n = g.vertex_ids;
    os << "x " << g.edges[c.e1].id << " " << g.edges[c.e2].id << " " << n[c.ends[0]] << " " << n[c.ends[2]] << " "
       << n[c.ends[1]] << " " << n[c.ends[3]] << "\n";
  }
  for (const auto& w : g.outer_walks) {
    os << "outer";
    for (const auto& t : w) os << " " << t;
    os << "\n";
  }
  return os.str();
}

const char* dummy_kind_name(DummyKind k) {
  switch (k) {
    case DummyKind::Cut: return "dummy-cut";
    case DummyKind::In: return "in-dummy";
    case DummyKind::Out: return "out-dummy";
  }
  return "?";
}

bool PlanarizedGraph::is_outer(int f) const {
  if (f < 0) return false;
  int v = plane.tail(faces.darts[f][0]);
  return outer_face[component[v]] == f;
}

std::string PlanarizedGraph::token(const EmbeddedGraph& g, int v) const {
  if (v < n_real) return g.vertex_ids[v];
  return "@" + g.edges[g.crossings[v - n_real].e1].id;
}

namespace {

// Structural rules that must hold before an embedding can be built.
void check_structure(const EmbeddedGraph& g, ValidationReport& rep) {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : g.edges) {
    if (e.u == e.v) rep.add("self-loop", {e.id}, "edge joins a vertex to itself");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert({key.first, key.second}).second)
      rep.add("parallel-edge", {e.id}, "parallel edges are not allowed in input");
  }
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> inc;
    for (int e = 0; e < g.num_edges(); ++e)
      if (g.edges[e].u == v || g.edges[e].v == v) inc.push_back(e);
    if (inc.size() > 4) rep.add("degree", {g.vertex_ids[v]}, "degree > 4");
    std::vector<int> r = g.rotation[v];
    std::sort(r.begin(), r.end());
    if (r != inc) rep.add("rotation", {g.vertex_ids[v]}, "rotation is not a permutation of the incident edges");
  }
  std::vector<int> crossed(g.num_edges(), 0);
  for (const auto& c : g.crossings) {
    const auto& a = g.edges[c.e1];
    const auto& b = g.edges[c.e2];
    std::vector<std::string> ids{a.id, b.id};
    for (int e : {c.e1, c.e2})
      if (++crossed[e] == 2) rep.add("crossed-twice", {g.edges[e].id}, "edge crossed twice");
    if (c.e1 == c.e2) {
      rep.add("crossing-same-edge", ids, "an edge cannot cross itself");
      continue;
    }
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) rep.add("crossing-adjacent", ids, "crossing edges share an endpoint");
    bool e1ok = (c.ends[0] == a.u && c.ends[2] == a.v) || (c.ends[0] == a.v && c.ends[2] == a.u);
    bool e2ok = (c.ends[1] == b.u && c.ends[3] == b.v) || (c.ends[1] == b.v && c.ends[3] == b.u);
    if (!e1ok || !e2ok) rep.add("crossing-order", ids, "crossing ends do not match the edge endpoints");
  }
}

PlanarizedGraph build(const EmbeddedGraph& g, bool check, ValidationReport* rep) {
  PlanarizedGraph p;
  int n = g.num_vertices();
  p.n_real = n;
  for (int v = 0; v < n + static_cast<int>(g.crossings.size()); ++v) p.plane.add_vertex();
  p.parts.assign(g.num_edges(), {});
  std::vector<int> cross(g.num_edges(), -1);
  for (int i = 0; i < static_cast<int>(g.crossings.size()); ++i) {
    cross[g.crossings[i].e1] = i;
    cross[g.crossings[i].e2] = i;
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edges[e];
    if (cross[e] < 0) {
      p.parts[e].push_back(p.plane.add_edge(ed.u, ed.v));
    } else {
      int x = n + cross[e];
      p.parts[e].push_back(p.plane.add_edge(ed.u, x));
      p.parts[e].push_back(p.plane.add_edge(x, ed.v));
    }
    for (int pe : p.parts[e]) {
      (void)pe;
      p.origin.push_back(e);
    }
  }
  // dart leaving original vertex w along original edge e
  auto dart_at = [&](int e, int w) {
    const auto& ed = g.edges[e];
    if (w == ed.u) return 2 * p.parts[e].front();
    return 2 * p.parts[e].back() + 1;
  };
  for (int v = 0; v < n; ++v) {
    std::vector<int> r;
    for (int e : g.rotation[v]) r.push_back(dart_at(e, v));
    p.plane.set_rotation(v, r);
  }
  for (int i = 0; i < static_cast<int>(g.crossings.size()); ++i) {
    const auto& c = g.crossings[i];
    std::vector<int> r;
    for (int k = 0; k < 4; ++k) {
      int e = (k % 2 == 0) ? c.e1 : c.e2;
      int w = c.ends[k];
      r.push_back(w == g.edges[e].u ? 2 * p.parts[e][0] + 1 : 2 * p.parts[e][1]);
    }
    p.plane.set_rotation(n + i, r);
  }
  p.faces = p.plane.faces();
  p.component = p.plane.components(&p.num_components);

  // Euler check per component
  std::vector<int> cv(p.num_components, 0), ce(p.num_components, 0), cf(p.num_components, 0);
  for (int v = 0; v < p.plane.num_vertices(); ++v) ++cv[p.component[v]];
  for (int e = 0; e < p.plane.num_edges(); ++e) ++ce[p.component[p.plane.ends(e)[0]]];
  for (const auto& f : p.faces.darts) ++cf[p.component[p.plane.tail(f[0])]];
  for (int c = 0; c < p.num_components; ++c) {
    int faces = ce[c] == 0 ? 1 : cf[c];
    if (cv[c] - ce[c] + faces != 2) {
      std::string msg = "not an embedding: V-E+F = " + std::to_string(cv[c] - ce[c] + faces);
      if (rep) rep->add("not-an-embedding", {}, msg);
      else if (check) throw SemanticError(msg);
    }
  }

  // outer faces
  p.outer_face.assign(p.num_components, -1);
  std::vector<std::vector<std::string>> face_tokens;
  for (const auto& f : p.faces.darts) {
    std::vector<std::string> t;
    for (int d : f) t.push_back(p.token(g, p.plane.tail(d)));
    face_tokens.push_back(std::move(t));
  }
  auto cyclic_equal = [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.size() != b.size()) return false;
    size_t n = a.size();
    for (size_t s = 0; s < n; ++s) {
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i) ok = a[(s + i) % n] == b[i];
      if (ok) return true;
    }
    return false;
  };
  for (const auto& w : g.outer_walks) {
    int found = -1;
    for (int f = 0; f < static_cast<int>(face_tokens.size()); ++f)
      if (cyclic_equal(face_tokens[f], w)) {
        found = f;
        break;
      }
    std::string joined;
    for (const auto& t : w) joined += (joined.empty() ? "" : " ") + t;
    if (found < 0) {
      if (rep) rep->add("outer-face", {}, "outer walk '" + joined + "' matches no face");
      else if (check) throw SemanticError("outer walk '" + joined + "' matches no face");
      continue;
    }
    int c = p.component[p.plane.tail(p.faces.darts[found][0])];
    if (p.outer_face[c] >= 0 && p.outer_face[c] != found) {
      if (rep) rep->add("outer-face", {}, "two outer walks in one component");
      else if (check) throw SemanticError("two outer walks in one component");
      continue;
    }
    p.outer_face[c] = found;
  }
  // components without a designated walk take their longest face
  std::vector<bool> designated(p.num_components);
  for (int c = 0; c < p.num_components; ++c) designated[c] = p.outer_face[c] >= 0;
  for (int f = 0; f < static_cast<int>(p.faces.darts.size()); ++f) {
    int c = p.component[p.plane.tail(p.faces.darts[f][0])];
    if (designated[c]) continue;
    int cur = p.outer_face[c];
    if (cur < 0 || p.faces.darts[f].size() > p.faces.darts[cur].size()) p.outer_face[c] = f;
  }

  // dummy kinds
  auto cut = p.plane.cut_vertices();
  for (int i = 0; i < static_cast<int>(g.crossings.size()); ++i) {
    int x = n + i;
    DummyKind k = DummyKind::In;
    if (cut[x]) {
      k = DummyKind::Cut;
    } else {
      for (int d : p.plane.rotation(x))
        if (p.is_outer(p.faces.face_of[d])) k = DummyKind::Out;
    }
    p.dummy_kind.push_back(k);
  }
  return p;
}

}  // namespace

ValidationReport validate_one_plane(const EmbeddedGraph& g) {
  ValidationReport rep;
  check_structure(g, rep);
  if (rep.ok()) build(g, false, &rep);
  return rep;
}

PlanarizedGraph planarize(const EmbeddedGraph& g, bool check) {
  if (check) {
    ValidationReport rep;
    check_structure(g, rep);
    if (!rep.ok()) throw SemanticError("invalid graph: " + rep.to_string());
  }
  return build(g, check, nullptr);
}

bool is_outer_one_plane(const EmbeddedGraph& g) {
  PlanarizedGraph p = planarize(g);
  std::vector<bool> on(g.num_vertices(), false);
  for (int c = 0; c < p.num_components; ++c) {
    if (p.outer_face[c] < 0) continue;
    for (int d : p.faces.darts[p.outer_face[c]]) {
      int v = p.plane.tail(d);
      if (v < p.n_real) on[v] = true;
    }
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (!on[v] && g.degree(v) > 0) return false;
  return true;
}

bool is_biconnected(const EmbeddedGraph& g) {
  if (g.num_vertices() < 2) return false;
  PlaneGraph pg;
  for (int v = 0; v < g.num_vertices(); ++v) pg.add_vertex();
  for (const auto& e : g.edges) pg.add_edge(e.u, e.v);
  int count = 0;
  pg.components(&count);
  if (count != 1) return false;
  auto cut = pg.cut_vertices();
  return std::none_of(cut.begin(), cut.end(), [](bool b) { return b; });
}

std::vector<Subgraph> split_components(const EmbeddedGraph& g) {
  PlaneGraph pg;
  for (int v = 0; v < g.num_vertices(); ++v) pg.add_vertex();
  for (const auto& e : g.edges) pg.add_edge(e.u, e.v);
  // crossing edges belong to one component even without a common vertex
  for (const auto& c : g.crossings) pg.add_edge(g.edges[c.e1].u, g.edges[c.e2].u);
  int count = 0;
  std::vector<int> comp = pg.components(&count);
  std::vector<Subgraph> out(count);
  std::vector<int> local(g.num_vertices()), elocal(g.num_edges());
  for (int v = 0; v < g.num_vertices(); ++v) {
    Subgraph& s = out[comp[v]];
    local[v] = s.graph.add_vertex(g.vertex_ids[v]);
    s.vertex_map.push_back(v);
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    Subgraph& s = out[comp[g.edges[e].u]];
    elocal[e] = s.graph.add_edge(g.edges[e].id, local[g.edges[e].u], local[g.edges[e].v]);
    s.edge_map.push_back(e);
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int e : g.rotation[v]) out[comp[v]].graph.rotation[local[v]].push_back(elocal[e]);
  for (const auto& c : g.crossings) {
    Crossing l{elocal[c.e1], elocal[c.e2], {local[c.ends[0]], local[c.ends[1]], local[c.ends[2]], local[c.ends[3]]}};
    out[comp[g.edges[c.e1].u]].graph.crossings.push_back(l);
  }
  for (const auto& w : g.outer_walks) {
    const std::string& t = w.front();
    int v = t[0] == '@' ? g.edges[g.edge_index(t.substr(1))].u : g.vertex_index(t);
    out[comp[v]].graph.outer_walks.push_back(w);
  }
  return out;
}

void set_outer_faces(EmbeddedGraph& g, const PlanarizedGraph& p, const std::vector<int>& faces) {
  g.outer_walks.clear();
  for (int f : faces) {
    std::vector<std::string> w;
    for (int d : p.faces.darts[f]) w.push_back(p.token(g, p.plane.tail(d)));
    g.outer_walks.push_back(std::move(w));
  }
}

}  // namespace onedraw
