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
#include <random>
#include <set>

#include "coxwall/catalog.hpp"
#include "coxwall/cayley_ball.hpp"
#include "coxwall/error.hpp"
#include "coxwall/walls.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coxwall;
namespace cat = coxwall::catalog;

namespace {

std::set<std::string> ReflectionNames(const std::vector<Wall>& walls) {
  std::set<std::string> out;
  for (const auto& w : walls) out.insert(w.reflection().ToString());
  return out;
}

// l(w) < l(tw), straight from normal forms.
Side SideByLength(const Wall& wall, const GroupElement& w) {
  return Length(w) < Length(Multiply(wall.reflection(), w)) ? Side::kPlus : Side::kMinus;
}

}  // namespace

TEST_CASE("side_of") {
  auto a2 = NewSystem(cat::TypeA(2));
  const auto ws = Wall::OfGenerator(a2, 0);
  CHECK(SideOf(ws, Identity(a2)) == Side::kPlus);
  CHECK(SideOf(ws, Gen(a2, 0)) == Side::kMinus);
  const auto sts = Wall::FromEdge(a2, std::vector<Generator>{0}, 1);
  CHECK(sts.reflection().ToString() == "sts");
  CHECK(SideOf(sts, NormalForm(a2, "st")) == Side::kMinus);
  CHECK(HalfSpace{sts, Side::kPlus}.Contains(Identity(a2)));
  auto other = NewSystem(cat::TypeA(2));
  CHECK_THROWS_AS(SideOf(ws, Identity(other)), Error);
}

TEST_CASE("side_of agrees with lengths") {
  for (const char* name : {"H3", "~A2", "tri(2,3,7)", "K33", "B3"}) {
    auto sys = NewSystem(cat::ByName(name));
    auto ball = EnumerateBall(sys, 4);
    std::vector<Wall> walls;
    for (const auto& e : ball.edges()) walls.push_back(Wall::FromEdge(sys, ball.word(e.from), e.gen));
    std::sort(walls.begin(), walls.end());
    walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
    INFO(name);
    for (const auto& wall : walls) {
      // The reflection is an involution and a conjugate of its generator.
      const auto t = wall.reflection();
      CHECK(Multiply(t, t) == Identity(sys));
      CHECK(Wall::FromEdge(sys, wall.witness_word(), wall.witness_generator()) == wall);
      for (std::int32_t v = 0; v < static_cast<std::int32_t>(ball.size()); v += 3) {
        CHECK(SideOf(wall, ball.Element(v)) == SideByLength(wall, ball.Element(v)));
      }
    }
  }
}

TEST_CASE("walls equal iff reflections equal") {
  auto sys = NewSystem(cat::ByName("tri(2,3,7)"));
  auto ball = EnumerateBall(sys, 5);
  std::vector<Wall> walls;
  for (const auto& e : ball.edges()) walls.push_back(Wall::FromEdge(sys, ball.word(e.from), e.gen));
  for (size_t i = 0; i < walls.size(); i += 7) {
    for (size_t j = 0; j < walls.size(); ++j) {
      CHECK((walls[i] == walls[j]) == (walls[i].reflection() == walls[j].reflection()));
    }
  }
}

TEST_CASE("walls_separating") {
  auto a2 = NewSystem(cat::TypeA(2));
  auto s = Gen(a2, 0);
  CHECK(WallsSeparating(s, s).empty());
  auto one = WallsSeparating(Identity(a2), s);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Wall::OfGenerator(a2, 0));
  auto all = WallsSeparating(Identity(a2), NormalForm(a2, "sts"));
  CHECK(ReflectionNames(all) == std::set<std::string>{"s", "t", "sts"});
}

TEST_CASE("walls_separating matches side changes") {
  for (const char* name : {"B3", "~A2", "K33"}) {
    auto sys = NewSystem(cat::ByName(name));
    auto ball = EnumerateBall(sys, 3);
    std::vector<Wall> walls;
    for (const auto& e : ball.edges()) walls.push_back(Wall::FromEdge(sys, ball.word(e.from), e.gen));
    std::sort(walls.begin(), walls.end());
    walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
    const auto n = static_cast<std::int32_t>(ball.size());
    for (std::int32_t x = 0; x < n; x += 5) {
      for (std::int32_t y = 0; y < n; y += 3) {
        auto sep = WallsSeparating(ball.Element(x), ball.Element(y));
        CHECK(static_cast<int>(sep.size()) ==
              Length(Multiply(Invert(ball.Element(x)), ball.Element(y))));
        std::sort(sep.begin(), sep.end());
        // Every wall meeting the ball is listed iff it puts x and y on opposite sides.
        for (const auto& wall : walls) {
          const bool splits = SideOf(wall, ball.Element(x)) != SideOf(wall, ball.Element(y));
          CHECK(std::binary_search(sep.begin(), sep.end(), wall) == splits);
        }
      }
    }
  }
}

TEST_CASE("is_between") {
  auto a2 = NewSystem(cat::TypeA(2));
  auto one = Identity(a2);
  auto st = NormalForm(a2, "st");
  CHECK(IsBetween(st, st, one));
  CHECK(IsBetween(Gen(a2, 0), one, st));
  CHECK_FALSE(IsBetween(Gen(a2, 1), one, st));
}

TEST_CASE("is_between agrees with lengths and is symmetric") {
  auto sys = NewSystem(cat::ByName("~A2"));
  auto ball = EnumerateBall(sys, 3);
  const auto n = static_cast<std::int32_t>(ball.size());
  auto dist = [&](std::int32_t a, std::int32_t b) {
    return Length(Multiply(Invert(ball.Element(a)), ball.Element(b)));
  };
  for (std::int32_t x = 0; x < n; x += 4) {
    for (std::int32_t y = 0; y < n; y += 5) {
      CHECK(IsBetween(ball.Element(x), ball.Element(x), ball.Element(y)));
      CHECK(IsBetween(ball.Element(y), ball.Element(x), ball.Element(y)));
      for (std::int32_t z = 0; z < n; z += 2) {
        const bool b = IsBetween(ball.Element(z), ball.Element(x), ball.Element(y));
        CHECK(b == (dist(x, z) + dist(z, y) == dist(x, y)));
        CHECK(b == IsBetween(ball.Element(z), ball.Element(y), ball.Element(x)));
      }
    }
  }
}

TEST_CASE("axiom (M)") {
  auto a2 = CheckAxiomM(EnumerateGroup(NewSystem(cat::TypeA(2))));
  CHECK(a2.passed());
  CHECK(a2.max_separating == 3);
  CHECK(a2.pairs_checked == 15);
  auto i4 = CheckAxiomM(EnumerateGroup(NewSystem(cat::Dihedral(4))));
  CHECK(i4.passed());
  CHECK(i4.max_separating == 4);
  auto single = CheckAxiomM(EnumerateBall(NewSystem(cat::TypeA(2)), 0));
  CHECK(single.passed());
  CHECK(single.pairs_checked == 0);
  CHECK(single.max_separating == 0);
  auto j = a2.ToJson(EnumerateGroup(NewSystem(cat::TypeA(2))));
  CHECK(j["violations"].empty());
  CHECK(j["pairs_checked"] == 15);
}

TEST_CASE("axiom (M) across systems, serial equals parallel") {
  for (const char* name : {"H3", "B3", "~A2", "K33", "C5", "tri(2,3,7)", "A1^3", "I2(inf)"}) {
    auto sys = NewSystem(cat::ByName(name));
    auto ball = EnumerateBall(sys, sys.rank() >= 5 ? 3 : 5);
    auto serial = CheckAxiomM(ball, Exec::kSerial);
    auto parallel = CheckAxiomM(ball, Exec::kParallel);
    INFO(name);
    CHECK(serial.passed());
    CHECK(serial.ToJson(ball).dump() == parallel.ToJson(ball).dump());
  }
}

TEST_CASE("is_geodesic_path") {
  auto a2 = NewSystem(cat::TypeA(2));
  CHECK(IsGeodesicPath(a2, a2.ParseWord("st")).geodesic);
  auto ss = IsGeodesicPath(a2, a2.ParseWord("ss"));
  CHECK_FALSE(ss.geodesic);
  CHECK(ss.repeated == std::pair{0, 1});
  auto i4 = NewSystem(cat::Dihedral(4));
  auto r = IsGeodesicPath(i4, i4.ParseWord("ststs"));
  CHECK_FALSE(r.geodesic);
  CHECK(r.repeated == std::pair{0, 4});
  CHECK(r.crossed[0].reflection().ToString() == "s");
  CHECK(r.crossed[4].reflection().ToString() == "s");
  CHECK_THROWS_AS(IsGeodesicPath(a2, Word{5}), Error);
}

TEST_CASE("geodesic paths are exactly reduced words") {
  for (const char* name : {"A3", "B3", "H3", "~A2", "I2(5)", "tri(2,3,7)", "D4", "C4"}) {
    auto sys = NewSystem(cat::ByName(name));
    const int max_len = sys.rank() >= 4 ? 7 : 8;
    INFO(name);
    for (int len = 0; len <= max_len; ++len) {
      for (const Word& w : testing::AllWords(sys.rank(), len)) {
        const bool reduced = IsReduced(sys, w);
        REQUIRE(IsGeodesicPath(sys, w).geodesic == reduced);
        REQUIRE(reduced == (Length(NormalForm(sys, w)) == len));
      }
    }
  }
}

TEST_CASE("wall-space graph") {
  auto a2 = WallspaceGraph(EnumerateGroup(NewSystem(cat::TypeA(2))));
  CHECK(a2.matches);
  CHECK(a2.recovered.size() == 6);
  auto rank1 = WallspaceGraph(EnumerateBall(NewSystem(CoxeterMatrix({{1}})), 2));
  CHECK(rank1.matches);
  CHECK(rank1.recovered == std::vector<std::pair<std::int32_t, std::int32_t>>{{0, 1}});
  CHECK_THROWS_AS(WallspaceGraph(EnumerateBall(NewSystem(cat::KThreeThree(3)), 1)), Error);
  auto ball = EnumerateBall(NewSystem(cat::KThreeThree(3)), 3);
  auto serial = WallspaceGraph(ball, Exec::kSerial);
  auto parallel = WallspaceGraph(ball, Exec::kParallel);
  CHECK(serial.matches);
  CHECK(serial.core_radius == 2);
  CHECK(serial.recovered.size() == 36);
  CHECK(serial.recovered == parallel.recovered);
}

TEST_CASE("wall-space graph on further systems") {
  for (const char* name : {"~A2", "H3", "tri(2,3,7)", "C5"}) {
    auto ball = EnumerateBall(NewSystem(cat::ByName(name)), 4);
    INFO(name);
    CHECK(WallspaceGraph(ball).matches);
  }
}
