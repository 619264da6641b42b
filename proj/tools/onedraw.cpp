#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "onedraw/generators.hpp"
#include "onedraw/oracle.hpp"
#include "onedraw/ortho_layout.hpp"
#include "onedraw/smooth_layout.hpp"

using namespace onedraw;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailed = 1;        // a requested assertion does not hold
constexpr int kBadInput = 2;      // parse, validation or usage error
constexpr int kWrongClass = 3;    // class precondition unmet
constexpr int kInternal = 4;      // layout raised or produced an invalid drawing
constexpr int kOverBudget = 5;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

EmbeddedGraph load_graph(const std::string& path) {
  EmbeddedGraph g;
  try {
    g = parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.what());
  } catch (const SemanticError& e) {
    throw InputError(path + ": " + e.what());
  }
  ValidationReport rep = validate_one_plane(g);
  if (!rep.ok()) throw InputError(path + ": invalid 1-plane graph\n" + rep.to_string());
  return g;
}

bool outer_class(const EmbeddedGraph& g) {
  return g.num_vertices() >= 2 && is_biconnected(g) && is_outer_one_plane(g);
}

struct DrawConfig {
  std::string input;
  std::string mode = "oc";
  std::string cls = "auto";
  std::string out;
  std::string svg;
  bool no_verify = false;
  bool permissive = false;
};

int cmd_draw(const DrawConfig& cfg) {
  EmbeddedGraph g = load_graph(cfg.input);
  bool outer = cfg.cls == "outer" || (cfg.cls == "auto" && outer_class(g));
  if (outer && !outer_class(g)) {
    std::cerr << "error: class outer needs a biconnected outer-1-plane graph\n";
    return kWrongClass;
  }
  bool smooth = cfg.mode == "sc";
  int bound = smooth ? (outer ? 2 : 3) : (outer ? 3 : 4);
  std::string json, svg, valid = "skipped";
  int k = 0, crossings = static_cast<int>(g.crossings.size());
  BoundsReport box;
  bool clean = true;
  try {
    if (smooth) {
      SmoothDrawing d = outer ? sc2_layout(g) : sc3_layout(g);
      k = max_complexity(d);
      box = bounds(d);
      json = drawing_json(d, g);
      if (!cfg.svg.empty()) svg = render_svg(d);
      if (!cfg.no_verify) {
        ValidationReport rep = validate_drawing(d, g, cfg.permissive);
        clean = rep.ok();
        if (!clean) std::cerr << rep.to_string();
      }
    } else {
      OrthoDrawing d = outer ? outer_oc3(g) : oc4_layout(g);
      k = max_complexity(d);
      box = bounds(d);
      json = drawing_json(d, g);
      if (!cfg.svg.empty()) svg = render_svg(d);
      if (!cfg.no_verify) {
        ValidationReport rep = validate_drawing(d, g, cfg.permissive);
        clean = rep.ok();
        if (!clean) std::cerr << rep.to_string();
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  if (!cfg.no_verify) valid = clean ? "true" : "false";
  if (!cfg.out.empty()) write_file(cfg.out, json);
  if (!cfg.svg.empty()) write_file(cfg.svg, svg);
  std::cout << "class=" << (outer ? "outer" : "general") << " maxcomplexity=" << k << " grid=" << to_string(box.width)
            << "x" << to_string(box.height) << " crossings=" << crossings << " valid=" << valid << "\n";
  return clean && k <= bound ? kOk : kInternal;
}

int cmd_validate(const std::string& input) {
  EmbeddedGraph g = load_graph(input);
  std::cout << "ok vertices=" << g.num_vertices() << " edges=" << g.num_edges() << " crossings=" << g.crossings.size()
            << " outer=" << (is_outer_one_plane(g) ? "true" : "false")
            << " biconnected=" << (is_biconnected(g) ? "true" : "false") << "\n";
  return kOk;
}

int cmd_verify(const std::string& input, const std::string& drawing, bool permissive) {
  EmbeddedGraph g = load_graph(input);
  SmoothDrawing d;
  try {
    d = parse_drawing_json(read_file(drawing), g);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(drawing + ": " + e.what());
  }
  ValidationReport rep = validate_drawing(d, g, permissive);
  std::cout << "maxcomplexity=" << max_complexity(d) << " valid=" << (rep.ok() ? "true" : "false") << "\n";
  if (!rep.ok()) std::cout << rep.to_string();
  return rep.ok() ? kOk : kFailed;
}

int cmd_render(const std::string& input, const std::string& drawing, const std::string& svg, double unit) {
  EmbeddedGraph g = load_graph(input);
  SmoothDrawing d;
  try {
    d = parse_drawing_json(read_file(drawing), g);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(drawing + ": " + e.what());
  }
  SvgOptions opt;
  opt.unit = unit;
  std::string text = render_svg(d, opt);
  if (svg.empty() || svg == "-")
    std::cout << text;
  else
    write_file(svg, text);
  return kOk;
}

int cmd_oracle(const std::string& input, int expect_min, int budget, bool table, const std::string& out) {
  EmbeddedGraph g = load_graph(input);
  OracleResult r;
  try {
    r = min_max_bends(g, budget);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kOverBudget;
  }
  if (table)
    for (const OracleRow& row : r.table)
      std::cout << "ports=" << row.ports << " maxbends=" << row.max_bends << " total=" << row.total << "\n";
  std::cout << "minmax=" << r.max_bends << " total=" << r.total_bends << " witness=" << ports_hash(r.ports) << "\n";
  if (!out.empty()) write_file(out, drawing_json(r.witness, g));
  if (expect_min >= 0) return r.max_bends >= expect_min ? kOk : kFailed;
  return kOk;
}

int cmd_gen(const std::string& family, int t, int n, std::uint64_t seed, const std::string& out) {
  EmbeddedGraph g;
  if (family == "random")
    g = random_one_plane(n, seed);
  else if (family == "random-outer")
    g = random_outer_one_plane(n, seed);
  else
    try {
      g = gen_named(family, t);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  std::string text = write_graph(g);
  if (out.empty() || out == "-")
    std::cout << text;
  else
    write_file(out, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal and smooth orthogonal layouts of 1-plane graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "onedraw 1.0");

  std::string input, drawing, out, svg;

  DrawConfig dc;
  auto* draw = app.add_subcommand("draw", "Lay out a graph and verify the drawing");
  draw->add_option("input", dc.input, "Graph file")->required();
  draw->add_option("--mode", dc.mode, "oc (orthogonal) or sc (smooth)")->check(CLI::IsMember({"oc", "sc"}));
  draw->add_option("--class", dc.cls, "auto, general or outer")->check(CLI::IsMember({"auto", "general", "outer"}));
  draw->add_option("--out", dc.out, "Drawing JSON output path");
  draw->add_option("--svg", dc.svg, "SVG output path");
  draw->add_flag("--no-verify", dc.no_verify, "Skip validation (prints valid=skipped)");
  draw->add_flag("--permissive", dc.permissive, "Tolerate tangential touchings");

  auto* validate = app.add_subcommand("validate", "Parse and validate a graph file");
  validate->add_option("input", input, "Graph file")->required();

  bool permissive = false;
  auto* verify = app.add_subcommand("verify", "Validate a drawing JSON against its graph");
  verify->add_option("input", input, "Graph file")->required();
  verify->add_option("drawing", drawing, "Drawing JSON")->required();
  verify->add_flag("--permissive", permissive, "Tolerate tangential touchings");

  double unit = 20.0;
  auto* render = app.add_subcommand("render", "Render a drawing JSON as SVG");
  render->add_option("input", input, "Graph file")->required();
  render->add_option("drawing", drawing, "Drawing JSON")->required();
  render->add_option("--svg", svg, "SVG output path (default stdout)");
  render->add_option("--unit", unit, "Pixels per grid unit")->check(CLI::PositiveNumber);

  int expect_min = -1, budget = -1;
  bool table = false;
  auto* oracle = app.add_subcommand("oracle", "Exact minimum over port assignments of the largest bend count");
  oracle->add_option("input", input, "Graph file")->required();
  oracle->add_option("--expect-min", expect_min, "Exit 0 iff the minimum is at least this");
  oracle->add_option("--budget", budget, "Node budget (default ONEDRAW_ORACLE_BUDGET or 14)");
  oracle->add_flag("--table", table, "Print one line per port assignment");
  oracle->add_option("--out", out, "Witness drawing JSON output path");

  std::string family;
  int t = 1, n = 10;
  std::uint64_t seed = 1;
  auto* gen = app.add_subcommand("gen", "Write a generated graph file");
  gen->add_option("family", family, "Named family, random or random-outer")->required();
  gen->add_option("--t", t, "Copies for triangle-family")->check(CLI::PositiveNumber);
  gen->add_option("--n", n, "Vertices for random families")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Seed for random families");
  gen->add_option("--out", out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*draw) return cmd_draw(dc);
    if (*validate) return cmd_validate(input);
    if (*verify) return cmd_verify(input, drawing, permissive);
    if (*render) return cmd_render(input, drawing, svg, unit);
    if (*oracle) return cmd_oracle(input, expect_min, budget >= 0 ? budget : oracle_budget_from_env(), table, out);
    if (*gen) return cmd_gen(family, t, n, seed, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
