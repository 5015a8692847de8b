// Command-line front end: generate point sets, enumerate flip graphs,
// compute connectivity, export links and the subdivision poset, decide
// regularity, and run the verification suites.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fliplab/verify.hpp"

using namespace fliplab;

namespace {

int default_cap(int fallback) {
  if (const char* env = std::getenv("FLIPLAB_CAP")) {
    try {
      return std::stoi(env);
    } catch (...) {
      throw GeomError("FLIPLAB_CAP is not an integer");
    }
  }
  return fallback;
}

PointSet load_points(const std::string& input) {
  std::string text;
  if (input.empty() || input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(input);
    if (!in) throw GeomError("cannot open point file '" + input + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return assert_general_position(parse_point_file(text));
}

FlipGraph build_graph(const PointSet& ps, const std::string& kind, int cap) {
  if (kind == "edge") return build_edge_flip_graph(ps, cap);
  if (kind == "bistellar") return build_bistellar_flip_graph(ps, cap);
  throw GeomError("unknown kind '" + kind + "' (expected edge|bistellar)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar flip-graph toolbox"};
  app.require_subcommand(1);

  std::string input, kind = "edge", format = "dot";
  int cap = default_cap(10);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a point set (point file to stdout)");
  std::string family;
  int gen_n = 6, gen_k = 3;
  unsigned gen_seed = 1;
  long long gen_box = 1000000;
  bool concurrent = false;
  gen->add_option("family", family, "convex|twisted|mother|random")->required();
  gen->add_option("--n", gen_n, "point count (convex, random)");
  gen->add_option("--k", gen_k, "gon size (twisted)");
  gen->add_option("--seed", gen_seed, "seed (random)");
  gen->add_option("--box", gen_box, "coordinate box (random)");
  gen->add_flag("--concurrent", concurrent, "concurrent spokes (mother)");

  // flipgraph
  auto* fg = app.add_subcommand("flipgraph", "flip graph of a point file");
  fg->add_option("--input", input, "point file ('-' or empty = stdin)");
  fg->add_option("--kind", kind, "edge|bistellar");
  fg->add_option("--format", format, "dot|graphml|json");
  fg->add_option("--cap", cap, "max point count");

  // connectivity
  auto* conn = app.add_subcommand("connectivity", "vertex connectivity of a flip graph");
  conn->add_option("--input", input, "point file ('-' or empty = stdin)");
  conn->add_option("--kind", kind, "edge|bistellar");
  conn->add_option("--cap", cap, "max point count");

  // link
  auto* lk = app.add_subcommand("link", "link of one triangulation");
  int link_id = 0;
  std::string link_kind = "full";
  lk->add_option("--input", input, "point file ('-' or empty = stdin)");
  lk->add_option("--id", link_id, "triangulation id in the flip graph");
  lk->add_option("--kind", link_kind, "full|partial");
  lk->add_option("--format", format, "dot|graphml|json");
  lk->add_option("--cap", cap, "max point count");

  // poset
  auto* po = app.add_subcommand("poset", "subdivision poset as Hasse JSON");
  po->add_option("--input", input, "point file ('-' or empty = stdin)");
  po->add_option("--cap", cap, "max point count");

  // regular
  auto* reg = app.add_subcommand("regular", "regularity verdict with witness");
  int reg_id = -1;
  std::string mother;
  bool reg_trivial = false;
  reg->add_option("--input", input, "point file ('-' or empty = stdin)");
  reg->add_option("--triangulation", reg_id, "triangulation id in the edge flip graph");
  reg->add_flag("--trivial", reg_trivial, "test the trivial subdivision instead");
  reg->add_option("--mother", mother,
                  "concurrent|nonconcurrent: verdicts for the nested-triangles "
                  "windmill and its two refinements");
  reg->add_option("--cap", cap, "max point count");

  // verify
  auto* ver = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites;
  VerifyOptions vopt;
  std::string ver_format = "table";
  ver->add_option("--suite", suites, "suite names or 'all'")->required();
  ver->add_option("--n-max", vopt.n_max, "largest point count per suite");
  ver->add_option("--cap", vopt.cap, "enumeration cap");
  ver->add_option("--seed", vopt.seed, "base seed for random instances");
  ver->add_option("--samples", vopt.subset_samples, "sampled subsets for large gons");
  ver->add_option("--random-sets", vopt.random_sets, "random point sets per suite");
  ver->add_option("--format", ver_format, "json|table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      PointSet ps;
      if (family == "convex") ps = convex_gon(gen_n);
      else if (family == "twisted") ps = twisted_double_gon(gen_k);
      else if (family == "mother") ps = mother_example(concurrent);
      else if (family == "random") ps = random_points(gen_n, gen_seed, gen_box);
      else throw GeomError("unknown family '" + family + "'");
      std::cout << format_point_file(ps.points);
      return 0;
    }
    if (*fg) {
      PointSet ps = load_points(input);
      std::cout << export_graph(build_graph(ps, kind, cap), parse_format(format));
      return 0;
    }
    if (*conn) {
      PointSet ps = load_points(input);
      auto g = to_simple_graph(build_graph(ps, kind, cap));
      std::cout << vertex_connectivity(g) << "\n";
      return 0;
    }
    if (*lk) {
      PointSet ps = load_points(input);
      auto g = build_graph(ps, link_kind == "full" ? "edge" : "bistellar", cap);
      if (link_id < 0 || link_id >= static_cast<int>(g.nodes.size()))
        throw GeomError("triangulation id out of range (graph has " +
                        std::to_string(g.nodes.size()) + " nodes)");
      LinkKind lkind = link_kind == "full" ? LinkKind::Full : LinkKind::Partial;
      std::cout << export_graph(link_of(g.nodes[link_id], lkind),
                                parse_format(format));
      return 0;
    }
    if (*po) {
      PointSet ps = load_points(input);
      std::cout << poset_json(build_poset(ps, cap)).dump(2) << "\n";
      return 0;
    }
    if (*reg) {
      if (!mother.empty()) {
        if (mother != "concurrent" && mother != "nonconcurrent")
          throw GeomError("--mother expects concurrent|nonconcurrent");
        auto fam = mother_family(mother == "concurrent");
        json j;
        j["windmill"] = regularity_json(is_regular_subdivision(fam.square));
        j["refinement1"] = regularity_json(is_regular_triangulation(fam.t1));
        j["refinement2"] = regularity_json(is_regular_triangulation(fam.t2));
        std::cout << j.dump(2) << "\n";
        return 0;
      }
      PointSet ps = load_points(input);
      json j;
      if (reg_trivial) {
        j = regularity_json(is_regular_subdivision(trivial_subdivision(ps)));
      } else {
        auto g = build_edge_flip_graph(ps, cap);
        int id = reg_id < 0 ? 0 : reg_id;
        if (id >= static_cast<int>(g.nodes.size()))
          throw GeomError("triangulation id out of range");
        j = regularity_json(is_regular_triangulation(g.nodes[id]));
        j["triangulation"] = triangulation_json(g.nodes[id]);
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*ver) {
      if (suites.size() == 1 && suites[0] == "all") suites = all_suites();
      bool all_ok = true;
      json out = json::array();
      for (const std::string& s : suites) {
        VerificationReport rep = run_suite(s, vopt);
        all_ok = all_ok && rep.all_pass();
        if (ver_format == "json") out.push_back(report_json(rep));
        else std::cout << report_table(rep);
      }
      if (ver_format == "json") std::cout << out.dump(2) << "\n";
      return all_ok ? 0 : 1;
    }
  } catch (const GeomError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
