// Command-line front end: reproducible JSON / DOT / text reports for the
// sparse-cut polytope, zonotope recognition, congestion certificates and
// exact graph expansion.
//
// Exit codes: 0 success, 2 usage or guard error, 3 mathematical
// precondition violated by the input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "halfint/halfint.hpp"
#include "halfint/io.hpp"

namespace {

using halfint::io::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

// CLI-enforced desk-scale guards.
constexpr unsigned kMaxSkeletonD = 7;
constexpr std::size_t kMaxExpansionVertices = 26;
constexpr std::size_t kMaxGenerators = 20;
constexpr unsigned kMaxEnumeratedCountD = 19;

struct CommonOptions {
  std::string out;
  std::string format = "json";
  bool approx = false;
  unsigned threads = 0;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw halfint::UsageError("cannot open input file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

json parse_json(const std::string& path) {
  try {
    return json::parse(read_input(path));
  } catch (const json::exception& e) {
    throw halfint::UsageError(std::string("malformed JSON: ") + e.what());
  }
}

// Adds "<key>_approx" next to every member whose value is a "p/q" string.
void add_approximations(json& j) {
  if (j.is_array()) {
    for (auto& x : j) add_approximations(x);
    return;
  }
  if (!j.is_object()) return;
  json extra = json::object();
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_string()) {
      const auto& s = it.value().get_ref<const std::string&>();
      if (s.find('/') != std::string::npos) {
        try {
          extra[it.key() + "_approx"] = halfint::Rational::parse(s).decimal(6);
        } catch (const halfint::UsageError&) {
        }
      }
    } else {
      add_approximations(it.value());
    }
  }
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
}

void emit(const CommonOptions& opt, const std::string& text) {
  if (opt.out.empty() || opt.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out);
  if (!out) throw halfint::UsageError("cannot open output file '" + opt.out + "'");
  out << text;
}

void emit_json(const CommonOptions& opt, json j) {
  if (opt.approx) add_approximations(j);
  emit(opt, j.dump(2) + "\n");
}

std::string text_lines(const json& j, const std::string& prefix = "") {
  std::string out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_object()) {
      out += text_lines(it.value(), prefix + it.key() + ".");
    } else {
      const std::string v = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
      out += prefix + it.key() + ": " + v + "\n";
    }
  }
  return out;
}

void require_graph_output(const CommonOptions& opt, bool graph_valued) {
  if (opt.format == "dot" && !graph_valued) throw halfint::UsageError("dot output is only available for graph reports");
}

void emit_report(const CommonOptions& opt, json j) {
  if (opt.format == "text") {
    if (opt.approx) add_approximations(j);
    emit(opt, text_lines(j));
  } else {
    emit_json(opt, std::move(j));
  }
}

// ---- xi --------------------------------------------------------------------

int run_xi(unsigned d, const std::string& report, const CommonOptions& opt) {
  using namespace halfint;
  xi::check_dimension(d);
  require_graph_output(opt, report == "skeleton");
  if (report == "counts") {
    const auto closed = xi::vertex_count_closed_form(d);
    json j{{"d", d},
           {"closed_form",
            {{"integral", io::to_json(closed.integral)},
             {"face_centers", io::to_json(closed.centers)},
             {"total", io::to_json(closed.total())}}}};
    if (d <= kMaxEnumeratedCountD) {
      const auto en = xi::vertex_count_enumerated(d);
      j["enumerated"] = {{"integral", io::to_json(en.integral)},
                         {"face_centers", io::to_json(en.centers)},
                         {"total", io::to_json(en.total())}};
      j["match"] = en.integral == closed.integral && en.centers == closed.centers;
    }
    emit_report(opt, j);
    return kExitOk;
  }
  if (report == "cut") {
    const auto summary = xi::cut_report(d);
    emit_report(opt, io::to_json(summary));
    return kExitOk;
  }
  // skeleton
  if (d > kMaxSkeletonD) throw UsageError("desk-scale guard: skeleton report limited to d <= 7");
  const auto inst = xi::build(d);
  const Graph g = skeleton_graph(inst.vertices, HullOptions{opt.threads});
  if (opt.format == "dot") {
    emit(opt, to_dot(g, "xi" + std::to_string(d)));
    return kExitOk;
  }
  std::vector<std::size_t> low;
  for (std::size_t i = 0; i < inst.codes.size(); ++i) {
    if (inst.codes[i].doubled_sum() <= d - 1) low.push_back(i);
  }
  const CutReport cut = cut_ratio(g, low);
  json j{{"d", d},
         {"vertex_count", g.vertex_count()},
         {"edge_count", g.edge_count()},
         {"middle_cut", io::to_json(cut)},
         {"crossing_edges_closed_form", io::to_json(xi::crossing_edge_count_closed_form(d))}};
  if (opt.format == "json") j["graph"] = io::to_json(g);
  emit_report(opt, j);
  return kExitOk;
}

// ---- zono ------------------------------------------------------------------

int run_zono(const std::string& action, const std::string& input, const CommonOptions& opt) {
  using namespace halfint;
  require_graph_output(opt, action == "recognize");
  const json in = parse_json(input);
  if (action == "realize") {
    const Graph g = io::graph_from_json(in);
    emit_json(opt, io::to_json(zono::realize_half_integral(g)));
    return kExitOk;
  }
  const auto gs = io::generator_set_from_json(in);
  if (gs.size() > kMaxGenerators) throw UsageError("guard: at most 20 generators");
  const zono::VertexOptions vopt{kMaxGenerators, opt.threads};
  if (action == "vertices") {
    const auto zv = zono::zonotope_vertices(gs, vopt);
    json j = io::to_json(zv.points);
    j["sign_masks"] = zv.sign_masks;
    emit_json(opt, j);
    return kExitOk;
  }
  if (action == "check") {
    const auto verdict = zono::is_half_integral(gs, vopt);
    json j{{"half_integral", verdict.half_integral},
           {"translation", verdict.translation ? io::to_json(*verdict.translation) : json(nullptr)},
           {"coordinate_budget", io::to_json(zono::coordinate_budget(gs))}};
    emit_json(opt, j);
    return kExitOk;
  }
  // recognize
  const auto dec = zono::recognize_graphical(gs, {true, vopt});
  if (opt.format == "dot") {
    emit(opt, to_dot(dec.graph, "recognized"));
    return kExitOk;
  }
  emit_json(opt, io::to_json(dec));
  return kExitOk;
}

// ---- flow ------------------------------------------------------------------

struct BuiltRouting {
  halfint::flow::Routing routing;
  json notes = json::object();
};

BuiltRouting build_family(const std::string& family, unsigned d) {
  using namespace halfint;
  if (family == "cube") return {flow::bitfix_routing(d)};
  if (family == "hexagon") return {flow::hexagon_routing()};
  if (family == "punctured") {
    auto pr = flow::punctured_routing(d);
    json notes{{"detour_sets_disjoint", pr.detour_sets_disjoint},
               {"within_hypothesis", pr.within_hypothesis}};
    if (!pr.within_hypothesis) notes["warning"] = "outside hypothesis d >= 4; the hexagon scheme covers d = 3";
    return {std::move(pr.routing), notes};
  }
  throw UsageError("unknown flow family '" + family + "'");
}

// "cube:3", "punctured:4", "hexagon"
BuiltRouting build_factor(const std::string& text) {
  const auto colon = text.find(':');
  const std::string family = text.substr(0, colon);
  unsigned d = 0;
  if (colon != std::string::npos) {
    try {
      d = static_cast<unsigned>(std::stoul(text.substr(colon + 1)));
    } catch (const std::exception&) {
      throw halfint::UsageError("bad factor '" + text + "'");
    }
  } else if (family != "hexagon") {
    throw halfint::UsageError("factor '" + text + "' needs a dimension, e.g. cube:3");
  }
  return build_family(family, d);
}

int run_flow(const std::string& family, unsigned d, const std::vector<std::string>& factors,
             bool with_routing, const CommonOptions& opt) {
  using namespace halfint;
  BuiltRouting built;
  json j{{"family", family}};
  if (family == "product") {
    if (factors.size() < 2) throw UsageError("product needs at least two --factor specs");
    json factor_reports = json::array();
    built = build_factor(factors.front());
    factor_reports.push_back({{"factor", factors.front()},
                              {"congestion", io::to_json(flow::congestion(built.routing), built.routing.graph)}});
    for (std::size_t k = 1; k < factors.size(); ++k) {
      BuiltRouting next = build_factor(factors[k]);
      factor_reports.push_back({{"factor", factors[k]},
                                {"congestion", io::to_json(flow::congestion(next.routing), next.routing.graph)}});
      built.routing = flow::product_routing(built.routing, next.routing);
    }
    j["factors"] = factor_reports;
  } else {
    if (family != "hexagon") j["d"] = d;
    built = build_family(family, d);
  }
  const auto report = flow::congestion(built.routing);
  j["vertex_count"] = built.routing.graph.vertex_count();
  j["congestion"] = io::to_json(report, built.routing.graph);
  j["expansion_lower_bound"] = flow::expansion_lower_bound(report).str();
  if (!built.notes.empty()) j["notes"] = built.notes;
  if (with_routing) j["routing"] = io::to_json(built.routing);
  emit_report(opt, j);
  return kExitOk;
}

// ---- graph -----------------------------------------------------------------

int run_graph(const std::string& action, const std::vector<std::string>& inputs, const CommonOptions& opt) {
  using namespace halfint;
  require_graph_output(opt, action == "product");
  if (action == "expansion") {
    if (inputs.size() != 1) throw UsageError("expansion takes exactly one --in graph");
    const Graph g = io::graph_from_json(parse_json(inputs.front()));
    if (g.vertex_count() > kMaxExpansionVertices) throw UsageError("instance too large for exact search");
    const auto res = expansion_bruteforce(g, {kMaxExpansionVertices, opt.threads});
    emit_report(opt, json{{"n", g.vertex_count()}, {"expansion", res.value.str()}, {"witness", io::to_json(res.witness)}});
    return kExitOk;
  }
  // product
  if (inputs.size() < 2) throw UsageError("product takes two or more --in graphs");
  Graph g = io::graph_from_json(parse_json(inputs.front()));
  for (std::size_t k = 1; k < inputs.size(); ++k) {
    g = cartesian_product(g, io::graph_from_json(parse_json(inputs[k])));
  }
  if (opt.format == "dot") {
    emit(opt, to_dot(g));
  } else {
    emit_json(opt, io::to_json(g));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polytope expansion toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "halfint 1.0.0");

  CommonOptions opt;
  auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--out", opt.out, "Output path (default stdout)");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(std::move(formats)));
    sub->add_flag("--approx", opt.approx, "Append decimal renderings of rational fields");
    sub->add_option("--threads", opt.threads, "Worker threads (default: HALFINT_THREADS or all cores)");
  };

  unsigned d = 0;
  std::string report = "counts";
  auto* xi_cmd = app.add_subcommand("xi", "Sparse-cut half-integral polytope reports");
  xi_cmd->add_option("--d", d, "Dimension, d = 3 (mod 4)")->required();
  xi_cmd->add_option("--report", report, "counts | cut | skeleton")
      ->check(CLI::IsMember({"counts", "cut", "skeleton"}));
  add_common(xi_cmd, {"json", "dot", "text"});

  std::string zono_action;
  std::string zono_input;
  auto* zono_cmd = app.add_subcommand("zono", "Zonotope vertices, half-integrality and recognition");
  zono_cmd->add_option("action", zono_action, "vertices | check | recognize | realize")
      ->required()
      ->check(CLI::IsMember({"vertices", "check", "recognize", "realize"}));
  zono_cmd->add_option("--in", zono_input, "Input JSON (default stdin)");
  add_common(zono_cmd, {"json", "dot"});

  std::string family;
  unsigned flow_d = 0;
  std::vector<std::string> factors;
  bool with_routing = false;
  auto* flow_cmd = app.add_subcommand("flow", "Congestion certificates of the routing schemes");
  flow_cmd->add_option("--family", family, "cube | punctured | hexagon | product")
      ->required()
      ->check(CLI::IsMember({"cube", "punctured", "hexagon", "product"}));
  flow_cmd->add_option("--d", flow_d, "Dimension for cube / punctured");
  flow_cmd->add_option("--factor", factors, "Product factor: cube:D, punctured:D or hexagon (repeatable)");
  flow_cmd->add_flag("--routing", with_routing, "Include the full routing in the output");
  add_common(flow_cmd, {"json", "text"});

  std::string graph_action;
  std::vector<std::string> graph_inputs;
  auto* graph_cmd = app.add_subcommand("graph", "Exact expansion and cartesian products");
  graph_cmd->add_option("action", graph_action, "expansion | product")
      ->required()
      ->check(CLI::IsMember({"expansion", "product"}));
  graph_cmd->add_option("--in", graph_inputs, "Input graph JSON (repeat for product)");
  add_common(graph_cmd, {"json", "dot", "text"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*xi_cmd) return run_xi(d, report, opt);
    if (*zono_cmd) return run_zono(zono_action, zono_input, opt);
    if (*flow_cmd) {
      if ((family == "cube" || family == "punctured") && flow_d == 0) {
        throw halfint::UsageError("--d is required for family " + family);
      }
      return run_flow(family, flow_d, factors, with_routing, opt);
    }
    return run_graph(graph_action, graph_inputs, opt);
  } catch (const halfint::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const halfint::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
