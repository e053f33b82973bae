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

#include <algorithm>
#include <map>
#include <set>

#include "coxwall/automorphisms.hpp"
#include "coxwall/catalog.hpp"
#include "coxwall/error.hpp"
#include "doctest.h"

using namespace coxwall;
namespace cat = coxwall::catalog;

namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kParseError;
}

std::vector<std::string> Words(const CayleyBall& ball, const std::vector<std::int32_t>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(ball.system().FormatWord(ball.word(v)));
  return out;
}

bool LettersIn(const Word& w, const Subset& t) {
  return std::ranges::all_of(w, [&](int x) { return std::ranges::find(t, x) != t.end(); });
}

// Component of `from` in the ball using only edges accepted by `ok`.
std::set<std::int32_t> Component(const CayleyBall& ball, std::set<std::int32_t> from,
                                 auto&& ok) {
  std::vector<std::int32_t> todo(from.begin(), from.end());
  while (!todo.empty()) {
    const auto u = todo.back();
    todo.pop_back();
    for (Generator t = 0; t < ball.system().rank(); ++t) {
      const auto v = ball.Right(u, t);
      if (v == CayleyBall::kOutside || !ok(u, t)) continue;
      if (from.insert(v).second) todo.push_back(v);
    }
  }
  return from;
}

// Oracle: stages from the set recursion on the full radius + margin ball,
// W_{T_s} membership read off normal words. Members of radius <= R only.
std::map<std::string, int> StageOracle(const CoxeterSystem& sys, Generator s, int radius,
                                       int margin) {
  const CayleyBall big = EnumerateBall(sys, radius + margin);
  const Subset star = StarOf(sys.matrix(), s);
  auto in_star = [&](std::int32_t v) { return LettersIn(big.word(v), star); };
  auto star_edge = [&](std::int32_t, Generator t) { return std::ranges::find(star, t) != star.end(); };
  auto other_edge = [&](std::int32_t, Generator t) { return t != s; };
  std::map<std::int32_t, int> stage;
  std::set<std::int32_t> h = Component(big, {0}, other_edge);
  for (auto v : h) stage[v] = 1;
  for (int n = 1;; ++n) {
    std::set<std::int32_t> seeds;
    for (auto v : h) {
      if (!in_star(v)) seeds.insert(v);
    }
    const auto k = Component(big, seeds, star_edge);
    const auto next = Component(big, k, other_edge);
    bool grew = false;
    for (auto v : next) {
      if (!stage.contains(v)) {
        stage[v] = n + 1;
        grew = true;
      }
    }
    h = next;
    if (!grew) break;
  }
  // Plain reachability along allowed edges must give the same set.
  auto allowed = [&](std::int32_t u, Generator t) { return t != s || !in_star(u); };
  const auto reach = Component(big, {0}, allowed);
  CHECK(reach.size() == stage.size());
  std::map<std::string, int> out;
  for (auto [v, n] : stage) {
    if (big.length(v) <= radius) out[sys.FormatWord(big.word(v))] = n;
  }
  return out;
}

std::map<std::string, int> StagesOf(const HSet& h) {
  std::map<std::string, int> out;
  for (size_t i = 0; i < h.members.size(); ++i) {
    out[h.ball->system().FormatWord(h.ball->word(h.members[i]))] = h.stage[i];
  }
  return out;
}

}  // namespace

TEST_CASE("star_fixing_automorphisms") {
  CHECK(StarFixingAutomorphisms(NewSystem(cat::TypeA(2))).empty());
  CHECK(StarFixingAutomorphisms(NewSystem(cat::TypeH(3))).empty());
  auto k33 = NewSystem(cat::KThreeThree(3), cat::NamesFor("K33"));
  auto ws = StarFixingAutomorphisms(k33);
  REQUIRE(ws.size() == 6);
  CHECK(ws[0].s == 0);
  CHECK(ws[0].f == Permutation{0, 2, 1, 3, 4, 5});
  CHECK(WitnessToJson(k33, ws[0]).dump() ==
        R"({"f":{"a":"a","b":"c","c":"b","d":"d","e":"e","f":"f"},"s":"a"})");
  auto hbar = StarFixingAutomorphisms(NewSystem(cat::HBar3()));
  CHECK(hbar.size() == 6);
  for (const auto& w : hbar) CHECK(w.s != 6);
}

TEST_CASE("halfspace_A") {
  auto a2 = NewSystem(cat::TypeA(2), {"s", "t"});
  auto ball = EnumerateGroup(a2);
  CHECK(Words(ball, HalfspaceA(a2, 0, ball)) == std::vector<std::string>{"s", "st", "sts"});
  auto other = NewSystem(cat::TypeA(2));
  CHECK(CodeOf([&] { HalfspaceA(other, 0, ball); }) == ErrorCode::kSystemMismatch);
  for (const char* name : {"K33", "~A2", "Hbar3"}) {
    auto sys = NewSystem(cat::ByName(name));
    auto b = EnumerateBall(sys, 3);
    for (Generator s = 0; s < sys.rank(); ++s) {
      auto a = HalfspaceA(sys, s, b);
      CHECK(std::ranges::binary_search(a, *b.Find(Gen(sys, s))));
      CHECK_FALSE(std::ranges::binary_search(a, 0));
      for (std::int32_t v = 0; v < static_cast<std::int32_t>(b.size()); ++v) {
        const bool shorter = Multiply(Gen(sys, s), b.Element(v)).length() < b.length(v);
        CHECK(std::ranges::binary_search(a, v) == shorter);
      }
    }
  }
}

TEST_CASE("compute_H on the infinite dihedral group") {
  auto d = NewSystem(cat::Dihedral(0), {"s", "t"});
  auto h = ComputeH(d, 0, 3);
  CHECK(Words(*h.ball, h.members) == std::vector<std::string>{"1", "t", "ts", "tst"});
  CHECK(h.stage == std::vector<int>{1, 1, 2, 2});
  CHECK(h.ToJson()["members"][2] == nlohmann::json({{"stage", 2}, {"w", "ts"}}));
  CHECK(CodeOf([&] { ComputeH(d, 0, 0); }) == ErrorCode::kRadiusTooSmall);
  HOptions tight;
  tight.max_vertices = 3;
  CHECK(CodeOf([&] { ComputeH(d, 0, 3, tight); }) == ErrorCode::kResourceLimit);
}

TEST_CASE("compute_H agrees with the set recursion") {
  struct Case {
    const char* name;
    int radius;
  };
  for (auto [name, radius] : {Case{"I2(inf)", 4}, Case{"K33", 3}, Case{"C5", 4}, Case{"Hbar3", 2},
                              Case{"A3", 4}, Case{"tri(2,4,0)", 4}}) {
    INFO(name);
    auto sys = NewSystem(name == std::string("tri(2,4,0)") ? cat::Triangle(2, 4, 0) : cat::ByName(name));
    for (Generator s = 0; s < sys.rank(); ++s) {
      HOptions o;
      o.margin = 2;
      auto h = ComputeH(sys, s, radius, o);
      CHECK(StagesOf(h) == StageOracle(sys, s, radius, 2));
    }
  }
}

TEST_CASE("H basic properties") {
  for (const char* name : {"K33", "Hbar3", "C5", "~A2", "B3"}) {
    INFO(name);
    auto sys = NewSystem(cat::ByName(name));
    auto ball = std::make_shared<const CayleyBall>(EnumerateBall(sys, 3));
    for (Generator s = 0; s < sys.rank(); ++s) {
      auto h = ComputeH(ball, s);
      CHECK(h.members.front() == 0);
      CHECK(h.stage.front() == 1);
      CHECK_FALSE(h.Contains(*ball->Find(Gen(sys, s))));
      Subset rest;
      for (int t = 0; t < sys.rank(); ++t) {
        if (t != s) rest.push_back(t);
      }
      for (std::int32_t v = 0; v < static_cast<std::int32_t>(ball->size()); ++v) {
        if (!LettersIn(ball->word(v), rest)) continue;
        REQUIRE(h.Contains(v));
        const auto it = std::ranges::lower_bound(h.members, v);
        CHECK(h.stage[it - h.members.begin()] == 1);
      }
      CHECK(VerifyDisjoint(h, HalfspaceA(sys, s, *ball)).disjoint);
    }
  }
}

TEST_CASE("H margins 2 and 4 agree") {
  for (const char* name : {"K33", "Hbar3", "C5", "I2(inf)"}) {
    INFO(name);
    auto sys = NewSystem(cat::ByName(name));
    auto ball = std::make_shared<const CayleyBall>(EnumerateBall(sys, 3));
    for (Generator s = 0; s < sys.rank(); ++s) {
      HOptions m2, m4;
      m2.margin = 2;
      m4.margin = 4;
      auto a = ComputeH(ball, s, m2);
      auto b = ComputeH(ball, s, m4);
      CHECK(a.members == b.members);
      CHECK(a.stage == b.stage);
    }
  }
}

TEST_CASE("verify_disjoint") {
  auto sys = NewSystem(cat::KThreeThree(3), cat::NamesFor("K33"));
  auto ball = std::make_shared<const CayleyBall>(EnumerateBall(sys, 4));
  auto h = ComputeH(ball, 0);
  const auto a = HalfspaceA(sys, 0, *ball);
  CHECK(VerifyDisjoint(h, a).disjoint);
  const std::int32_t s = *ball->Find(Gen(sys, 0));
  auto bad = h;
  bad.members.insert(std::ranges::upper_bound(bad.members, s), s);
  auto r = VerifyDisjoint(bad, a);
  CHECK_FALSE(r.disjoint);
  CHECK(r.offending == std::vector<std::int32_t>{s});
  auto zero = std::make_shared<const CayleyBall>(EnumerateBall(sys, 0));
  auto h0 = ComputeH(zero, 0);
  CHECK(h0.members == std::vector<std::int32_t>{0});
  CHECK(HalfspaceA(sys, 0, *zero).empty());
  CHECK(VerifyDisjoint(h0, HalfspaceA(sys, 0, *zero)).disjoint);
}

TEST_CASE("wall-fixing automorphism on W(6, K33)") {
  auto sys = NewSystem(cat::KThreeThree(3), cat::NamesFor("K33"));
  const auto w = StarFixingAutomorphisms(sys).front();
  auto phi = BuildWallFixingAutomorphism(sys, w, 4);
  CHECK(phi.checks.bijection);
  CHECK(phi.checks.edge_labels);
  CHECK(phi.checks.fixes_a);
  CHECK(phi.checks.strict_wall);
  CHECK(phi.checks.non_identity);
  CHECK(phi.valid_radius == 3);
  const auto& ball = *phi.ball;
  // On W_{S-s} phi is the letter map, on A_s the identity.
  for (std::int32_t v = 0; v < ball.level_begin(4); ++v) {
    const Word& word = ball.word(v);
    if (std::ranges::find(word, w.s) == word.end()) {
      Word image;
      for (int x : word) image.push_back(w.f[x]);
      CHECK(phi.map[v] == *ball.Find(NormalForm(sys, image)));
    }
  }
  for (auto v : HalfspaceA(sys, w.s, ball)) CHECK(phi.map[v] == v);
  auto serial = BuildWallFixingAutomorphism(sys, w, 4, {}, Exec::kSerial);
  CHECK(serial.ToJson() == phi.ToJson());
  CHECK(VerifyPartialAutomorphism(phi, Exec::kSerial).all());
  auto j = phi.ToJson();
  CHECK(j["moved"].size() > 0);
  CHECK(j["fixed"].size() + j["moved"].size() == static_cast<size_t>(ball.level_begin(4)));
  CHECK(j["checks"]["fixes_A"] == true);
  // The letter map everywhere moves points of A_s.
  auto global = phi;
  for (std::int32_t v = 0; v < static_cast<std::int32_t>(ball.size()); ++v) {
    Word image;
    for (int x : ball.word(v)) image.push_back(w.f[x]);
    global.map[v] = *ball.Find(NormalForm(sys, image));
    global.in_h[v] = true;
  }
  auto gc = VerifyPartialAutomorphism(global);
  CHECK(gc.bijection);
  CHECK(gc.edge_labels);
  CHECK_FALSE(gc.fixes_a);
  // Dropping one moved vertex breaks the edge check.
  auto broken = phi;
  for (std::int32_t v = 0; v < ball.level_begin(4); ++v) {
    if (broken.map[v] != v) {
      broken.map[v] = v;
      broken.in_h[v] = false;
      break;
    }
  }
  auto bc = VerifyPartialAutomorphism(broken);
  CHECK_FALSE(bc.bijection);
  CHECK_FALSE(bc.edge_labels);
}

TEST_CASE("wall-fixing automorphisms for every witness") {
  for (const char* name : {"K33", "Hbar3", "C5"}) {
    INFO(name);
    auto sys = NewSystem(cat::ByName(name));
    for (const auto& w : StarFixingAutomorphisms(sys)) {
      CHECK(BuildWallFixingAutomorphism(sys, w, 3).checks.all());
    }
  }
}

TEST_CASE("wall-fixing automorphism input errors") {
  auto sys = NewSystem(cat::KThreeThree(3));
  CHECK(CodeOf([&] { BuildWallFixingAutomorphism(sys, {0, {0, 1, 2, 3, 4, 5}}, 3); }) ==
        ErrorCode::kNotAWitness);
  // Moves a vertex of T_0.
  CHECK(CodeOf([&] { BuildWallFixingAutomorphism(sys, {0, {0, 1, 2, 4, 3, 5}}, 3); }) ==
        ErrorCode::kNotAWitness);
  CHECK(CodeOf([&] { BuildWallFixingAutomorphism(sys, {0, {0, 3, 2, 1, 4, 5}}, 3); }) ==
        ErrorCode::kNotAWitness);
  CHECK(CodeOf([&] { BuildWallFixingAutomorphism(sys, {0, {0, 2, 1}}, 3); }) ==
        ErrorCode::kNotAWitness);
  CHECK(CodeOf([&] { BuildWallFixingAutomorphism(sys, {9, {0, 2, 1, 3, 4, 5}}, 3); }) ==
        ErrorCode::kNotAWitness);
  CHECK(CodeOf([&] { BuildWallFixingAutomorphism(sys, {0, {0, 2, 1, 3, 4, 5}}, 1); }) ==
        ErrorCode::kRadiusTooSmall);
  auto a2 = NewSystem(cat::TypeA(2));
  CHECK(CodeOf([&] { BuildWallFixingAutomorphism(a2, {0, {1, 0}}, 3); }) == ErrorCode::kNotAWitness);
}
