// One check per acceptance criterion: `acceptance <k>` runs criterion k,
// `acceptance` runs all. Each prints one PASS/FAIL line.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "onedraw/generators.hpp"
#include "onedraw/oracle.hpp"
#include "onedraw/ortho_layout.hpp"
#include "onedraw/smooth_layout.hpp"
#include "support/small_plane.hpp"

using namespace onedraw;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int max_bends(const OrthoDrawing& d) {
  int k = 0;
  for (const auto& p : d.polylines) k = std::max(k, bend_count(p));
  return k;
}

std::vector<EmbeddedGraph> random_corpus() {
  std::vector<EmbeddedGraph> out;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) out.push_back(random_one_plane(2 + static_cast<int>(seed % 59), seed));
  return out;
}

std::vector<EmbeddedGraph> outer_corpus(int count, int max_n) {
  std::vector<EmbeddedGraph> out;
  for (int seed = 1; seed <= count; ++seed)
    out.push_back(random_outer_one_plane(3 + seed % (max_n - 2), static_cast<std::uint64_t>(seed)));
  return out;
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / ("onedraw-acceptance-" + std::to_string(getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(ONEDRAW_CLI) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path write_named(const fs::path& dir, const std::string& name, int t = 1) {
  fs::path p = dir / (name + (t > 1 ? std::to_string(t) : "") + ".g");
  std::ofstream(p, std::ios::binary) << write_graph(gen_named(name, t));
  return p;
}

Outcome oc4_guarantee() {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<EmbeddedGraph> corpus = random_corpus();
  for (const std::string& name : named_families()) corpus.push_back(gen_named(name));
  for (const EmbeddedGraph& g : corpus) {
    OrthoDrawing d = oc4_layout(g);
    ValidationReport rep = validate_drawing(d, g);
    if (!rep.ok()) o.fail("invalid drawing:\n" + rep.to_string());
    if (max_complexity(d) > 4) o.fail("complexity " + std::to_string(max_complexity(d)));
    BoundsReport b = bounds(d);
    Rational np = g.num_vertices() + static_cast<int>(g.crossings.size());
    if (b.width > 3 * np || b.height > 3 * np) o.fail("box " + to_string(b.width) + "x" + to_string(b.height));
  }
  double s = seconds_since(t0);
  if (s > 60) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(corpus.size()) + " graphs in " + std::to_string(s) + " s";
  return o;
}

// The embedding is preserved when ports follow every rotation and the
// realized crossings are exactly the embedded ones; validate_drawing checks
// both.
Outcome oc3_outer_guarantee() {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<EmbeddedGraph> corpus = outer_corpus(500, 60);
  corpus.push_back(gen_named("k4-pair-fig5"));
  corpus.push_back(gen_named("outer-example"));
  for (const EmbeddedGraph& g : corpus) {
    OrthoDrawing d = outer_oc3(g);
    ValidationReport rep = validate_drawing(d, g);
    if (!rep.ok()) o.fail("invalid drawing:\n" + rep.to_string());
    if (max_complexity(d) > 3) o.fail("complexity " + std::to_string(max_complexity(d)));
  }
  double s = seconds_since(t0);
  if (s > 60) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(corpus.size()) + " graphs in " + std::to_string(s) + " s";
  return o;
}

Outcome oracle_cli(const std::string& name, int expect, double limit) {
  Outcome o;
  fs::path dir = scratch_dir();
  fs::path file = write_named(dir, name);
  auto t0 = Clock::now();
  int code = run_cli("oracle " + file.string() + " --expect-min " + std::to_string(expect) + " --budget 14");
  double s = seconds_since(t0);
  if (code != 0) o.fail("exit code " + std::to_string(code));
  if (s > limit) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.detail = "exit 0 in " + std::to_string(s) + " s";
  fs::remove_all(dir);
  return o;
}

Outcome triangle_family() {
  Outcome o;
  for (int t = 1; t <= 3; ++t) {
    EmbeddedGraph g = gen_named("triangle-family", t);
    OrthoDrawing d = oc4_layout(g);
    if (!validate_drawing(d, g).ok()) o.fail("invalid OC4 drawing for t=" + std::to_string(t));
    int four = 0;
    for (const auto& p : d.polylines) four += bend_count(p) + 1 == 4;
    if (four < t) o.fail("t=" + std::to_string(t) + ": " + std::to_string(four) + " edges of complexity 4");
  }
  EmbeddedGraph one = gen_named("triangle-family", 1);
  OracleResult r = min_max_bends(one, 14);
  if (r.max_bends < 3) o.fail("oracle min-max " + std::to_string(r.max_bends));
  if (o.pass) o.detail = "oracle min-max " + std::to_string(r.max_bends) + " on one copy";
  return o;
}

// Documented height constant: SC3 height <= kSc3HeightConstant * n^2.
constexpr int kSc3HeightConstant = 1;

Outcome sc3_guarantee() {
  Outcome o;
  double worst = 0;
  for (const EmbeddedGraph& g : random_corpus()) {
    SmoothDrawing d = sc3_layout(g);
    ValidationReport rep = validate_drawing(d, g);
    if (!rep.ok()) o.fail("invalid drawing:\n" + rep.to_string());
    if (max_complexity(d) > 3) o.fail("complexity " + std::to_string(max_complexity(d)));
    Rational n = g.num_vertices();
    BoundsReport b = bounds(d);
    if (b.height > kSc3HeightConstant * n * n) o.fail("height " + to_string(b.height) + " for n=" + to_string(n));
    worst = std::max(worst, static_cast<double>(b.height / (n * n)));
  }
  if (o.pass) o.detail = "largest height/n^2 = " + std::to_string(worst);
  return o;
}

Outcome sc2_guarantee() {
  Outcome o;
  std::vector<std::pair<std::string, EmbeddedGraph>> corpus;
  for (int seed = 1; seed <= 300; ++seed)
    corpus.push_back({"seed " + std::to_string(seed), random_outer_one_plane(4 + seed * 7 % 37, seed)});
  corpus.push_back({"k4", gen_named("k4")});
  corpus.push_back({"outer-example", gen_named("outer-example")});
  int steps = 0;
  for (const auto& [name, g] : corpus) {
    Sc2State st;
    SmoothDrawing d;
    try {
      d = sc2_layout(g, &st);
    } catch (const std::exception& e) {
      o.fail(name + ": " + e.what());
      continue;
    }
    ValidationReport rep = validate_drawing(d, g);
    if (!rep.ok()) o.fail(name + ":\n" + rep.to_string());
    if (max_complexity(d) > 2) o.fail(name + ": complexity " + std::to_string(max_complexity(d)));
    if (st.checks.size() != st.faces.size()) o.fail(name + ": not every face step was checked");
    for (const Sc2StepCheck& c : st.checks) {
      ++steps;
      if (!c.ok()) o.fail(name + " step " + std::to_string(c.step) + ": " + c.detail);
    }
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(steps) + " checked face steps";
  return o;
}

int original_dart(const EmbeddedGraph& g, const PlanarizedGraph& q, int d) {
  int pe = PlaneGraph::edge_of(d);
  int e = q.origin[pe];
  bool forward = q.plane.ends(pe)[0] == g.edges[e].u;
  return 2 * e + ((d & 1) ^ (forward ? 0 : 1));
}

Outcome oracle_consistency() {
  Outcome o;
  int cases = 0;
  for (const auto& es : small_plane::connected_graphs(6))
    for (const auto& rot : small_plane::plane_rotations(es)) {
      EmbeddedGraph g = small_plane::build(es, rot);
      PlanarizedGraph p = planarize(g, false);
      for (int f = 0; f < static_cast<int>(p.faces.darts.size()); ++f) {
        EmbeddedGraph h = g;
        set_outer_faces(h, p, {f});
        PlanarizedGraph q = planarize(h);
        int od = original_dart(h, q, q.faces.darts[q.outer_face[0]][0]);
        for (const auto& pa : small_plane::angle_choices(h)) {
          ++cases;
          if (min_bends_fixed(h, q, pa).total != small_plane::min_total_bends(h, pa, od))
            o.fail("flow and exhaustive search differ on\n" + write_graph(h));
        }
      }
    }
  // Constructions against the oracle on every corpus instance within budget.
  int compared = 0;
  auto compare = [&](const EmbeddedGraph& g, int built, int bound, const std::string& what) {
    int nodes = g.num_vertices() + static_cast<int>(g.crossings.size());
    if (nodes > 12) return;
    OracleResult r = min_max_bends(g, 14);
    ++compared;
    if (built < r.max_bends) o.fail(what + " beats the oracle");
    if (built > bound) o.fail(what + " exceeds its bound");
    if (r.max_bends > bound) o.fail(what + ": oracle above the bound");
  };
  for (const EmbeddedGraph& g : random_corpus()) compare(g, max_bends(oc4_layout(g)), 3, "OC4");
  for (const EmbeddedGraph& g : outer_corpus(500, 60)) compare(g, max_bends(outer_oc3(g)), 2, "OC3");
  for (const std::string& name : named_families()) {
    EmbeddedGraph g = gen_named(name);
    compare(g, max_bends(oc4_layout(g)), 3, name);
  }
  if (o.pass)
    o.detail = std::to_string(cases) + " small cases agree; " + std::to_string(compared) + " corpus graphs compared";
  return o;
}

// Turn direction at each interior point of a polyline piece: +1 left, -1 right.
std::vector<int> turns(const std::vector<GridPoint>& p) {
  std::vector<int> out;
  for (size_t i = 1; i + 1 < p.size(); ++i) {
    long long ax = p[i].x - p[i - 1].x, ay = p[i].y - p[i - 1].y;
    long long bx = p[i + 1].x - p[i].x, by = p[i + 1].y - p[i].y;
    long long cross = ax * by - ay * bx;
    out.push_back(cross > 0 ? 1 : cross < 0 ? -1 : 0);
  }
  return out;
}

bool on_segment(const GridPoint& a, const GridPoint& b, const GridPoint& x) {
  return std::min(a.x, b.x) <= x.x && x.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= x.y &&
         x.y <= std::max(a.y, b.y) && (a.x == b.x ? x.x == a.x : x.y == a.y);
}

// Pieces of every edge between its ends and its crossing point.
std::vector<std::vector<GridPoint>> halves(const OrthoDrawing& d, int e) {
  const auto& poly = d.polylines[e];
  for (const OrthoCrossing& c : d.crossings) {
    if (c.e1 != e && c.e2 != e) continue;
    for (size_t i = 0; i + 1 < poly.size(); ++i)
      if (on_segment(poly[i], poly[i + 1], c.at)) {
        std::vector<GridPoint> a(poly.begin(), poly.begin() + static_cast<long>(i) + 1);
        std::vector<GridPoint> b{c.at};
        a.push_back(c.at);
        b.insert(b.end(), poly.begin() + static_cast<long>(i) + 1, poly.end());
        return {a, b};
      }
  }
  return {poly};
}

int s_shapes(const OrthoDrawing& d) {
  int count = 0;
  for (int e = 0; e < static_cast<int>(d.polylines.size()); ++e)
    for (const auto& h : halves(d, e)) {
      std::vector<int> t = turns(h);
      for (size_t i = 1; i < t.size(); ++i) count += t[i] * t[i - 1] < 0;
    }
  return count;
}

Outcome s_shape_removal() {
  Outcome o;
  int before = 0;
  for (const EmbeddedGraph& g : random_corpus()) {
    OrthoDrawing raw = oc4_collapse(g).drawing;
    before += s_shapes(raw);
    OrthoDrawing once = remove_s_shapes(raw, g);
    OrthoDrawing twice = remove_s_shapes(once, g);
    if (drawing_json(once, g) != drawing_json(twice, g)) o.fail("not idempotent on\n" + write_graph(g));
    for (int e = 0; e < g.num_edges(); ++e)
      if (bend_count(once.polylines[e]) > bend_count(raw.polylines[e])) o.fail("edge " + g.edges[e].id + " gained bends");
    if (s_shapes(once) != 0) o.fail("S-shape left in\n" + write_graph(g));
    if (!validate_drawing(once, g).ok()) o.fail("invalid result on\n" + write_graph(g));
  }
  if (o.pass) o.detail = std::to_string(before) + " S-shapes removed";
  return o;
}

Outcome determinism() {
  Outcome o;
  fs::path dir = scratch_dir();
  std::vector<fs::path> files;
  for (const std::string& name : named_families()) files.push_back(write_named(dir, name));
  for (int seed = 1; seed <= 25; ++seed) {
    for (const std::string& fam : {"random", "random-outer"}) {
      fs::path p = dir / (std::string(fam) + std::to_string(seed) + ".g");
      std::string args = std::string("gen ") + fam + " --n " + std::to_string(4 + seed % 30) + " --seed " +
                         std::to_string(seed) + " --out ";
      run_cli(args + p.string());
      run_cli(args + p.string() + ".again");
      if (slurp(p) != slurp(p.string() + ".again")) o.fail("gen differs for " + p.filename().string());
      files.push_back(p);
    }
  }
  int runs = 0;
  for (const fs::path& f : files) {
    for (const std::string& mode : {"oc", "sc"})
      for (const std::string& cls : {"general", "outer"}) {
        std::string out[2], svg[2];
        int code[2];
        for (int k = 0; k < 2; ++k) {
          fs::path j = dir / ("run" + std::to_string(k) + ".json"), s = dir / ("run" + std::to_string(k) + ".svg");
          fs::remove(j);
          fs::remove(s);
          code[k] = run_cli("draw --mode " + mode + " --class " + cls + " " + f.string() + " --out " + j.string() +
                            " --svg " + s.string());
          out[k] = slurp(j);
          svg[k] = slurp(s);
        }
        if (code[0] == 3) continue;  // not an outer instance
        ++runs;
        if (code[0] != 0) o.fail(f.filename().string() + " " + mode + "/" + cls + ": exit " + std::to_string(code[0]));
        if (code[0] != code[1] || out[0] != out[1] || svg[0] != svg[1] || out[0].empty())
          o.fail(f.filename().string() + " " + mode + "/" + cls + ": outputs differ");
      }
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = std::to_string(runs) + " layouts identical across two runs";
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> all{
      {"OC4 on the random corpus and named graphs", oc4_guarantee},
      {"OC3 on biconnected outer-1-plane graphs", oc3_outer_guarantee},
      {"oracle proves no OC3 for k5-fig4a", [] { return oracle_cli("k5-fig4a", 3, 120); }},
      {"oracle proves no OC2 for k4-pair-fig5", [] { return oracle_cli("k4-pair-fig5", 2, 300); }},
      {"triangle family needs complexity 4", triangle_family},
      {"SC3 on the random corpus", sc3_guarantee},
      {"SC2 on biconnected outer-1-plane graphs", sc2_guarantee},
      {"oracle self-consistency", oracle_consistency},
      {"S-shape removal", s_shape_removal},
      {"determinism of drawing JSON and SVG", determinism},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  if (argc > 1)
    which.push_back(std::atoi(argv[1]));
  else
    for (int k = 1; k <= static_cast<int>(criteria().size()); ++k) which.push_back(k);
  bool all = true;
  for (int k : which) {
    if (k < 1 || k > static_cast<int>(criteria().size())) {
      std::cerr << "no criterion " << k << "\n";
      return 2;
    }
    const auto& [title, check] = criteria()[k - 1];
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << k << " " << title << ": " << o.detail << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
