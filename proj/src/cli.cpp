// Copyright 2026 The coxwall Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coxwall/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "coxwall/automorphisms.hpp"
#include "coxwall/catalog.hpp"
#include "coxwall/classification.hpp"
#include "coxwall/complexes.hpp"
#include "coxwall/error.hpp"
#include "coxwall/even_polytopes.hpp"
#include "coxwall/walls.hpp"

namespace coxwall {
namespace {

nlohmann::json ReadJson(const std::string& text_or_path) {
  std::string text = text_or_path;
  if (std::filesystem::is_regular_file(text_or_path)) {
    std::ifstream in(text_or_path);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bad JSON: ") + e.what());
  }
}

Generator ParseGenerator(const CoxeterSystem& sys, const std::string& text) {
  const auto& names = sys.generator_names();
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == text) return static_cast<Generator>(i);
  }
  if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
    const int v = std::stoi(text);
    if (v < sys.rank()) return v;
  }
  throw Error(ErrorCode::kUnknownGenerator, "unknown generator '" + text + "'");
}

Permutation ParsePermutation(const CoxeterSystem& sys, const nlohmann::json& j) {
  Permutation p(sys.rank());
  if (j.is_array() && j.size() == p.size()) {
    for (size_t i = 0; i < p.size(); ++i) {
      if (!j[i].is_number_integer()) throw Error(ErrorCode::kParseError, "bad permutation");
      p[i] = j[i].get<int>();
    }
  } else if (j.is_object() && j.size() == p.size()) {
    for (const auto& [from, to] : j.items()) {
      if (!to.is_string()) throw Error(ErrorCode::kParseError, "bad permutation");
      p[ParseGenerator(sys, from)] = ParseGenerator(sys, to.get<std::string>());
    }
  } else {
    throw Error(ErrorCode::kParseError, "permutation must list one image per generator");
  }
  std::vector<int> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= sys.rank() || seen[x]++) throw Error(ErrorCode::kParseError, "not a permutation");
  }
  return p;
}

BallOptions Bounds(const RunConfig& c) {
  BallOptions o;
  if (c.max_vertices > 0) o.max_vertices = c.max_vertices;
  o.parallel = !c.serial;
  return o;
}

int NeedRadius(const RunConfig& c, int min) {
  if (c.radius < min) {
    throw Error(ErrorCode::kRadiusTooSmall, "--radius must be at least " + std::to_string(min));
  }
  return c.radius;
}

struct Output {
  std::string text;
  int status = 0;
};

Output Json(nlohmann::json j, int status = 0) { return {j.dump(2) + "\n", status}; }

Output Dispatch(const RunConfig& c) {
  const Exec exec = c.serial ? Exec::kSerial : Exec::kParallel;
  const std::string& cmd = c.command;

  if (cmd == "table") {
    nlohmann::json j = {{"table", TableToJson(EvenPolyhedraTable(c.rank))}};
    if (!c.verify) return Json(j);
    if (c.rank != 3) throw Error(ErrorCode::kBadRank, "--verify needs --rank 3");
    const auto samples = TableAndreevSamples();
    j["andreev"] = SamplesToJson(samples);
    const bool ok = std::ranges::all_of(samples, [](const auto& a) { return a.result.passed; });
    return Json(j, ok ? 0 : 1);
  }

  if (cmd == "building") {
    const CoxeterSystem sys = BourdonSystem(c.p, c.q);
    const LinkGraph link = LinkGraph::CompleteBipartite(c.q);
    const KLReport kl = ValidateKL(link, c.p);
    nlohmann::json j = {{"p", c.p}, {"q", c.q}, {"system", SystemToJson(sys)},
                        {"link", link.ToJson()}, {"kl", kl.ToJson()}};
    if (c.radius >= 0) j["census"] = ComputeCellCensus(sys, c.radius, Bounds(c)).ToJson(sys);
    return Json(j, kl.passed() ? 0 : 1);
  }

  if (cmd == "census" && !c.graph.empty()) {
    const LinkGraph link = LinkGraph::FromJson(ReadJson(c.graph));
    const KLReport kl = ValidateKL(link, c.k);
    std::vector<std::string> names = link.names();
    const CoxeterSystem sys = NewSystem(MatrixFromGraph(link, c.k), names);
    return Json({{"system", SystemToJson(sys)},
                 {"kl", kl.ToJson()},
                 {"census", ComputeCellCensus(sys, NeedRadius(c, 0), Bounds(c)).ToJson(sys)}});
  }

  const CoxeterSystem sys = LoadSystem(c.system);
  const CoxeterMatrix& m = sys.matrix();

  if (cmd == "ball" || cmd == "export-dot") {
    const CayleyBall ball = EnumerateBall(sys, NeedRadius(c, 0), Bounds(c));
    if (cmd == "export-dot" || c.format == "dot") return {ball.ToDot(), 0};
    return Json(ball.ToJson());
  }
  if (cmd == "geodesic") {
    const Word w = sys.ParseWord(c.word);
    const GeodesicReport g = IsGeodesicPath(sys, w);
    nlohmann::json j = {{"word", sys.FormatWord(w)},
                        {"geodesic", g.geodesic},
                        {"reduced", IsReduced(sys, w)},
                        {"normal_form", NormalForm(sys, w).ToString()},
                        {"length", NormalForm(sys, w).length()}};
    j["repeated"] = g.repeated ? nlohmann::json({g.repeated->first, g.repeated->second})
                               : nlohmann::json(nullptr);
    return Json(j, g.geodesic ? 0 : 1);
  }
  if (cmd == "walls-check") {
    const CayleyBall ball = EnumerateBall(sys, NeedRadius(c, 0), Bounds(c));
    const AxiomMReport report = CheckAxiomM(ball, exec);
    nlohmann::json j = {{"radius", c.radius}, {"axiom_M", report.ToJson(ball)}};
    bool ok = report.passed();
    if (ball.radius() >= 2 || ball.exhausted()) {
      const WallspaceGraphResult g = WallspaceGraph(ball, exec);
      j["wallspace_graph"] = {{"core_radius", g.core_radius},
                              {"edges", g.recovered.size()},
                              {"cayley_edges", g.cayley.size()},
                              {"matches", g.matches}};
      ok = ok && g.matches;
    }
    return Json(j, ok ? 0 : 1);
  }
  if (cmd == "nerve") {
    nlohmann::json j = ComputeNerve(m).ToJson();
    j["type"] = Classify(m).ToJson();
    return Json(j);
  }
  if (cmd == "hyperbolic") {
    const HyperbolicityReport r = IsHyperbolic(m);
    nlohmann::json j = r.ToJson();
    j["type"] = Classify(m).Name();
    return Json(j, r.hyperbolic ? 0 : 1);
  }
  if (cmd == "rigid") {
    const RigidityReport r = IsRigid(m);
    return Json(r.ToJson(sys), r.rigid ? 0 : 1);
  }
  if (cmd == "cell") {
    const CoxeterCell cell = BuildCoxeterCell(sys);
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& pc : ParallelClasses(cell)) classes.push_back(pc.edges.size());
    const bool simple = VerifySimple(cell);
    return Json({{"type", Classify(m).Name()},
                 {"face_vector", cell.FaceVector()},
                 {"parallel_class_sizes", classes},
                 {"simple", simple},
                 {"boundary_euler_characteristic", BoundaryEulerCharacteristic(cell)},
                 {"cell", cell.ToJson()}},
                simple ? 0 : 1);
  }
  if (cmd == "census") {
    return Json(ComputeCellCensus(sys, NeedRadius(c, 0), Bounds(c)).ToJson(sys));
  }
  if (cmd == "autom") {
    auto witnesses = StarFixingAutomorphisms(sys);
    if (c.list) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& w : witnesses) j.push_back(WitnessToJson(sys, w));
      return Json({{"witnesses", j}});
    }
    std::optional<StarFixingWitness> w;
    if (!c.f.empty()) {
      if (c.s.empty()) throw Error(ErrorCode::kParseError, "--f needs --s");
      w = StarFixingWitness{ParseGenerator(sys, c.s), ParsePermutation(sys, ReadJson(c.f))};
    } else {
      for (const auto& x : witnesses) {
        if (c.s.empty() || x.s == ParseGenerator(sys, c.s)) {
          w = x;
          break;
        }
      }
      if (!w) return Json({{"witness", nullptr}}, 1);
    }
    const int radius = c.radius < 0 ? 4 : c.radius;
    HOptions ho;
    ho.margin = c.margin;
    if (c.max_vertices > 0) ho.max_vertices = c.max_vertices;
    const PartialAutomorphism phi = BuildWallFixingAutomorphism(sys, *w, radius, ho, exec);
    const HSet h = ComputeH(phi.ball, w->s, ho);
    const DisjointReport d = VerifyDisjoint(h, HalfspaceA(sys, w->s, *phi.ball));
    nlohmann::json j = phi.ToJson();
    nlohmann::json offending = nlohmann::json::array();
    for (auto v : d.offending) offending.push_back(sys.FormatWord(phi.ball->word(v)));
    j["H"] = {{"members", h.members.size()}, {"margin", h.margin}, {"disjoint_from_A", d.disjoint},
              {"offending", offending}};
    const bool ok = phi.checks.all() && d.disjoint;
    return Json(j, c.verify && !ok ? 1 : 0);
  }
  throw Error(ErrorCode::kParseError, "unknown command '" + cmd + "'");
}

}  // namespace

nlohmann::json SystemToJson(const CoxeterSystem& system) {
  nlohmann::json j = system.matrix().ToJson();
  j["names"] = system.generator_names();
  return j;
}

CoxeterSystem SystemFromJson(const nlohmann::json& j) {
  std::vector<std::string> names;
  if (j.is_object() && j.contains("names")) {
    if (!j["names"].is_array()) throw Error(ErrorCode::kParseError, "names must be an array");
    for (const auto& n : j["names"]) {
      if (!n.is_string()) throw Error(ErrorCode::kParseError, "names must be strings");
      names.push_back(n.get<std::string>());
    }
  }
  return NewSystem(CoxeterMatrix::FromJson(j), names);
}

CoxeterSystem LoadSystem(const std::string& source) {
  if (source.empty()) throw Error(ErrorCode::kParseError, "--system is required");
  if (std::filesystem::is_regular_file(source)) return SystemFromJson(ReadJson(source));
  return NewSystem(catalog::ByName(source), catalog::NamesFor(source));
}

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Output result;
  try {
    result = Dispatch(config);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kResourceLimit ? 1 : 2;
  }
  if (config.out.empty()) {
    out << result.text;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    file << result.text;
    if (!file) {
      err << "error: cannot write " << config.out << "\n";
      return 2;
    }
  }
  return result.status;
}

int RunMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Coxeter groups as spaces with walls", "coxwall"};
  app.require_subcommand(1);
  std::size_t max_vertices = 0;
  app.add_option("--max-vertices", max_vertices, "ball size bound (default COXWALL_MAX_VERTICES or 2000000)");
  app.add_flag("--serial", c.serial, "disable OpenMP in the kernels");

  auto with_system = [&](CLI::App* sub) {
    sub->add_option("--system", c.system, "system JSON file or catalog name")->required();
  };
  auto with_out = [&](CLI::App* sub) { sub->add_option("--out", c.out, "output file"); };

  auto* ball = app.add_subcommand("ball", "Cayley ball as JSON or DOT");
  with_system(ball);
  ball->add_option("--radius", c.radius)->required();
  ball->add_option("--format", c.format)->check(CLI::IsMember({"json", "dot"}));
  with_out(ball);

  auto* dot = app.add_subcommand("export-dot", "Cayley ball as DOT");
  with_system(dot);
  dot->add_option("--radius", c.radius)->required();
  with_out(dot);

  auto* geo = app.add_subcommand("geodesic", "wall criterion for a word");
  with_system(geo);
  geo->add_option("--word", c.word)->required();
  with_out(geo);

  auto* walls = app.add_subcommand("walls-check", "axiom (M) and the wall-space graph on a ball");
  with_system(walls);
  walls->add_option("--radius", c.radius)->required();
  with_out(walls);

  for (const char* name : {"nerve", "hyperbolic", "rigid", "cell"}) {
    auto* sub = app.add_subcommand(name);
    with_system(sub);
    with_out(sub);
  }
  app.get_subcommand("nerve")->description("nerve of finite special subgroups");
  app.get_subcommand("hyperbolic")->description("Moussong test; exit 1 when not hyperbolic");
  app.get_subcommand("rigid")->description("star-fixing automorphisms; exit 1 when not rigid");
  app.get_subcommand("cell")->description("face poset of the Coxeter cell of a finite system");

  auto* table = app.add_subcommand("table", "even polygons (rank 2) and polyhedra (rank 3)");
  table->add_option("--rank", c.rank)->check(CLI::IsMember({2, 3}));
  table->add_flag("--verify", c.verify, "run the Andreev conditions on every rank-3 row");
  with_out(table);

  auto* building = app.add_subcommand("building", "the W(p, K_qq) system, optionally with a census");
  building->add_option("--p", c.p)->required();
  building->add_option("--q", c.q)->required();
  building->add_option("--radius", c.radius);
  with_out(building);

  auto* census = app.add_subcommand("census", "cells wW_T of the Davis complex met by a ball");
  auto* sys_opt = census->add_option("--system", c.system, "system JSON file or catalog name");
  auto* graph_opt = census->add_option("--graph", c.graph, "link graph JSON, used with --k");
  sys_opt->excludes(graph_opt);
  census->add_option("--k", c.k)->needs(graph_opt);
  census->add_option("--radius", c.radius)->required();
  with_out(census);

  auto* autom = app.add_subcommand("autom", "wall-fixing partial automorphism on a ball");
  with_system(autom);
  autom->add_option("--s", c.s, "generator name or index");
  autom->add_option("--f", c.f, "permutation file or inline JSON");
  autom->add_option("--radius", c.radius, "default 4");
  autom->add_option("--margin", c.margin)->check(CLI::NonNegativeNumber);
  autom->add_flag("--verify", c.verify, "exit 1 unless every check passes");
  autom->add_flag("--list", c.list, "list the star-fixing witnesses");
  with_out(autom);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (census->parsed() && c.system.empty() && c.graph.empty()) {
    err << "error: census needs --system or --graph\n";
    return 2;
  }
  if (census->parsed() && !c.graph.empty() && c.k == 0) {
    err << "error: --graph needs --k\n";
    return 2;
  }
  c.command = app.get_subcommands().front()->get_name();
  c.max_vertices = max_vertices;
  return Run(c, out, err);
}

}  // namespace coxwall
