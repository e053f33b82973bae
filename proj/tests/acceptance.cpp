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

// Acceptance run: one line per criterion, then a determinism pass that
// recomputes criteria 1-9 and compares the reports byte for byte.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "coxwall/automorphisms.hpp"
#include "coxwall/catalog.hpp"
#include "coxwall/classification.hpp"
#include "coxwall/complexes.hpp"
#include "coxwall/even_polytopes.hpp"
#include "coxwall/walls.hpp"

using namespace coxwall;
namespace cat = coxwall::catalog;

namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  nlohmann::json report;
};

CoxeterSystem Sys(const std::string& name) { return NewSystem(cat::ByName(name), cat::NamesFor(name)); }

// |walls separating x and y| against l(x^-1 y), two ways: the walls crossed
// along the geodesic, and a side table over every wall met by the ball.
Outcome WallLength() {
  Outcome o;
  std::int64_t pairs = 0, bad = 0;
  for (const std::string name : {"A2", "B2", "I2(5)", "A3", "B3", "H3", "~A2", "C5", "K33"}) {
    const CoxeterSystem sys = Sys(name);
    const CayleyBall ball = EnumerateBall(sys, 4);
    const std::int32_t n = static_cast<std::int32_t>(ball.size());
    std::vector<Wall> walls;
    std::map<FieldVec, int> index;
    for (const auto& e : ball.edges()) {
      Wall w = Wall::FromEdge(sys, ball.word(e.from), e.gen);
      if (index.emplace(w.root(), static_cast<int>(walls.size())).second) walls.push_back(w);
    }
    const std::size_t blocks = (walls.size() + 63) / 64;
    std::vector<std::uint64_t> side(static_cast<std::size_t>(n) * blocks, 0);
    std::vector<GroupElement> elems;
    for (std::int32_t v = 0; v < n; ++v) elems.push_back(ball.Element(v));
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int32_t v = 0; v < n; ++v) {
      const FieldVec y = sys.LeftKey(ball.word(v));
      for (size_t i = 0; i < walls.size(); ++i) {
        if (SideOfPoint(walls[i], y) == Side::kMinus) side[v * blocks + i / 64] |= 1ULL << (i % 64);
      }
    }
    std::int64_t local_bad = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : local_bad)
    for (std::int32_t x = 0; x < n; ++x) {
      const GroupElement xi = Invert(elems[x]);
      for (std::int32_t y = x + 1; y < n; ++y) {
        const int len = Multiply(xi, elems[y]).length();
        int count = 0;
        for (size_t b = 0; b < blocks; ++b) count += std::popcount(side[x * blocks + b] ^ side[y * blocks + b]);
        const int crossed = static_cast<int>(WallsSeparating(elems[x], elems[y]).size());
        if (count != len || crossed != len) ++local_bad;
      }
    }
    const std::int64_t p = static_cast<std::int64_t>(n) * (n - 1) / 2;
    pairs += p;
    bad += local_bad;
    o.report[name] = {{"vertices", n}, {"walls", walls.size()}, {"pairs", p}, {"mismatches", local_bad}};
  }
  o.pass = bad == 0;
  o.summary = std::to_string(pairs) + " pairs, " + std::to_string(bad) + " mismatches";
  return o;
}

Outcome Geodesics() {
  Outcome o;
  std::int64_t words = 0, bad = 0;
  for (const std::string name : {"A2", "B2", "G2", "I2(5)", "I2(inf)", "A3", "B3", "H3", "~A2", "A1^3", "tri(2,3,7)"}) {
    const CoxeterSystem sys = Sys(name);
    const int r = sys.rank();
    const CayleyBall ball = EnumerateBall(sys, 7);
    std::int64_t local = 0, local_bad = 0;
    Word w;
    // Depth-first over all words of length <= 7, tracking the endpoint.
    std::function<void(std::int32_t)> walk = [&](std::int32_t v) {
      ++local;
      const bool geo = IsGeodesicPath(sys, w).geodesic;
      const bool red = IsReduced(sys, w);
      const bool dist = ball.length(v) == static_cast<int>(w.size());
      if (geo != red || red != dist) ++local_bad;
      if (w.size() == 7) return;
      for (Generator s = 0; s < r; ++s) {
        w.push_back(s);
        walk(ball.Right(v, s));
        w.pop_back();
      }
    };
    walk(0);
    words += local;
    bad += local_bad;
    o.report[name] = {{"words", local}, {"mismatches", local_bad}};
  }
  o.pass = bad == 0;
  o.summary = std::to_string(words) + " words, " + std::to_string(bad) + " mismatches";
  return o;
}

Outcome Orders() {
  Outcome o;
  std::vector<std::pair<std::string, std::uint64_t>> cases;
  for (int m = 2; m <= 12; ++m) cases.emplace_back("I2(" + std::to_string(m) + ")", 2 * m);
  cases.insert(cases.end(), {{"A3", 24}, {"B3", 48}, {"H3", 120}, {"A1^3", 8}});
  int bad = 0;
  for (const auto& [name, want] : cases) {
    const CoxeterSystem sys = Sys(name);
    const std::uint64_t bfs = EnumerateGroup(sys).size();
    const std::uint64_t formula = OrderOfFinite(sys.matrix());
    if (bfs != want || formula != want) ++bad;
    o.report[name] = {{"bfs", bfs}, {"formula", formula}, {"expected", want}};
  }
  o.pass = bad == 0;
  o.summary = std::to_string(cases.size()) + " groups, " + std::to_string(bad) + " mismatches";
  return o;
}

Outcome Cells() {
  Outcome o;
  auto formula = [](const CoxeterMatrix& m) {
    const int r = m.rank();
    std::vector<std::int64_t> out(r + 1, 0);
    const auto order = static_cast<std::int64_t>(OrderOfFinite(m));
    for (int mask = 0; mask < (1 << r); ++mask) {
      Subset t;
      for (int i = 0; i < r; ++i) {
        if (mask >> i & 1) t.push_back(i);
      }
      out[t.size()] += order / static_cast<std::int64_t>(OrderOfFinite(m, t));
    }
    return out;
  };
  auto check = [&](const std::string& name, std::vector<std::int64_t> fv, int classes, int per_class) {
    const CoxeterSystem sys = Sys(name);
    const CoxeterCell cell = BuildCoxeterCell(sys);
    const auto pcs = ParallelClasses(cell);
    bool ok = cell.FaceVector() == fv && formula(sys.matrix()) == fv &&
              static_cast<int>(pcs.size()) == classes;
    for (const auto& pc : pcs) ok = ok && static_cast<int>(pc.edges.size()) == per_class;
    std::map<std::uint64_t, int> polygons;
    for (const auto& f : cell.faces()) {
      if (f.dim() == 2) ++polygons[OrderOfFinite(sys.matrix(), f.T)];
    }
    nlohmann::json pj = nlohmann::json::object();
    for (const auto& [sides, count] : polygons) pj[std::to_string(sides) + "-gons"] = count;
    o.report[name] = {{"face_vector", cell.FaceVector()}, {"parallel_classes", pcs.size()},
                      {"class_size", per_class}, {"polygons", pj}};
    if (name == "A3") ok = ok && polygons[4] == 6 && polygons[6] == 8;
    o.pass = o.pass && ok;
  };
  check("A3", {24, 36, 14, 1}, 6, 6);
  check("A1^3", {8, 12, 6, 1}, 3, 4);
  for (int m = 2; m <= 12; ++m) check("I2(" + std::to_string(m) + ")", {2 * m, 2 * m, 1}, m, 2);
  o.summary = "A3, cube, I2(2..12)";
  return o;
}

Outcome Moussong() {
  Outcome o;
  const auto a2 = IsHyperbolic(cat::AffineA(2));
  const auto dd = IsHyperbolic(cat::Cycle(4, 2));
  const auto c5 = IsHyperbolic(cat::Cycle(5, 2));
  const auto k33 = IsHyperbolic(cat::KThreeThree(3));
  o.pass = !a2.hyperbolic && a2.affine_witness && !dd.hyperbolic && dd.commuting_witness &&
           c5.hyperbolic && k33.hyperbolic;
  o.report = {{"~A2", a2.ToJson()}, {"W(4,C4)", dd.ToJson()}, {"W(4,C5)", c5.ToJson()},
              {"W(6,K33)", k33.ToJson()}};
  o.summary = "~A2 affine witness, D_inf x D_inf commuting witness, C5 and K33 hyperbolic";
  return o;
}

Outcome Rigidity() {
  Outcome o;
  const CoxeterSystem a2 = Sys("A2"), k33 = Sys("K33"), hbar = Sys("Hbar3");
  const auto ra = IsRigid(a2.matrix());
  const auto rk = IsRigid(k33.matrix());
  const auto rh = IsRigid(hbar.matrix());
  auto replay = [](const CoxeterMatrix& m, const RigidityReport& r) {
    return r.witness && PreservesLabels(m, r.witness->f) && IsStarFixing(m, r.witness->s, r.witness->f);
  };
  o.pass = ra.rigid && !rk.rigid && replay(k33.matrix(), rk) && !rh.rigid && replay(hbar.matrix(), rh);
  o.report = {{"A2", ra.ToJson(a2)}, {"W(6,K33)", rk.ToJson(k33)}, {"Hbar3", rh.ToJson(hbar)}};
  o.summary = "A2 rigid, W(6,K33) and Hbar3 not, witnesses replayed";
  return o;
}

Outcome Disjointness() {
  Outcome o;
  std::int64_t intersections = 0;
  int witnesses = 0;
  bool agree = true;
  for (const std::string name : {"K33", "Hbar3"}) {
    const CoxeterSystem sys = Sys(name);
    auto ball = std::make_shared<const CayleyBall>(EnumerateBall(sys, 5));
    std::map<Generator, std::pair<HSet, HSet>> by_s;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& w : StarFixingAutomorphisms(sys)) {
      ++witnesses;
      if (!by_s.contains(w.s)) {
        HOptions m2, m4;
        m2.margin = 2;
        m4.margin = 4;
        m4.max_vertices = 20'000'000;
        by_s.emplace(w.s, std::make_pair(ComputeH(ball, w.s, m2), ComputeH(ball, w.s, m4)));
      }
      const auto& [h2, h4] = by_s.at(w.s);
      const auto a = HalfspaceA(sys, w.s, *ball);
      const auto d2 = VerifyDisjoint(h2, a);
      const auto d4 = VerifyDisjoint(h4, a);
      const bool same = h2.members == h4.members && h2.stage == h4.stage;
      agree = agree && same;
      intersections += static_cast<std::int64_t>(d2.offending.size() + d4.offending.size());
      rows.push_back({{"witness", WitnessToJson(sys, w)},
                      {"H", h2.members.size()},
                      {"A", a.size()},
                      {"intersection", d2.offending.size()},
                      {"margins_agree", same}});
    }
    o.report[name] = rows;
  }
  o.pass = intersections == 0 && agree && witnesses > 0;
  o.summary = std::to_string(witnesses) + " witnesses at radius 5, " + std::to_string(intersections) +
              " intersections, margins " + (agree ? "agree" : "differ");
  return o;
}

Outcome WallFixing() {
  Outcome o;
  const CoxeterSystem sys = Sys("K33");
  const auto w = StarFixingAutomorphisms(sys).front();
  const auto phi = BuildWallFixingAutomorphism(sys, w, 4);
  o.pass = phi.checks.all();
  const auto j = phi.ToJson();
  o.report = {{"witness", WitnessToJson(sys, w)}, {"checks", j["checks"]}, {"moved", j["moved"].size()},
              {"fixed", j["fixed"].size()}};
  o.summary = "W(6,K33) radius 4, " + std::to_string(j["moved"].size()) + " vertices moved";
  return o;
}

Outcome Andreev() {
  Outcome o;
  const auto samples = TableAndreevSamples();
  int failed = 0;
  for (const auto& a : samples) failed += a.result.passed ? 0 : 1;
  const auto right = PiMultiple::PiOver(2);
  const auto cube = AndreevCheck("cube", {right, right, right});
  const auto dod = AndreevCheck("dodecahedron", {right, PiMultiple::PiOver(6), PiMultiple::PiOver(3)});
  o.pass = failed == 0 && !cube.passed && cube.condition == 3 && !dod.passed && dod.condition == 2;
  o.report = {{"samples", samples.size()}, {"failed", failed}, {"cube_right_angles", cube.ToJson()},
              {"dodecahedron_2_6_3", dod.ToJson()}};
  o.summary = std::to_string(samples.size()) + " table instances pass; cube fails (3), dodecahedron fails (2)";
  return o;
}

using Criterion = Outcome (*)();
constexpr Criterion kCriteria[] = {WallLength, Geodesics, Orders,       Cells,   Moussong,
                                   Rigidity,   Disjointness, WallFixing, Andreev};

}  // namespace

int main() {
  std::vector<std::string> first;
  bool all = true;
  for (int i = 0; i < 9; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome o = kCriteria[i]();
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    first.push_back(o.report.dump());
    all = all && o.pass;
    std::printf("criterion %d: %s  %s (%.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL", o.summary.c_str(), dt);
    std::fflush(stdout);
  }
  int differing = 0;
  for (int i = 0; i < 9; ++i) {
    if (kCriteria[i]().report.dump() != first[i]) ++differing;
  }
  std::printf("criterion 10: %s  second run of 1-9, %d reports differ\n", differing == 0 ? "PASS" : "FAIL",
              differing);
  all = all && differing == 0;
  return all ? 0 : 1;
}
