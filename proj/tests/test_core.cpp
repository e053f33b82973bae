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

#include <cmath>
#include <random>
#include <set>

#include "coxwall/catalog.hpp"
#include "coxwall/cayley_ball.hpp"
#include "coxwall/coxeter_system.hpp"
#include "coxwall/error.hpp"
#include "coxwall/number_field.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace coxwall;
namespace cat = coxwall::catalog;

namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kParseError;
}

long double EvalAt(const FieldElem& a, long double c) {
  long double v = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * c + static_cast<long double>(*it);
  return v;
}

}  // namespace

TEST_CASE("minimal polynomial of 2cos(pi/m)") {
  CHECK(MinimalPolynomialOfTwoCos(5) == IntPoly{-1, -1, 1});
  CHECK(MinimalPolynomialOfTwoCos(4) == IntPoly{-2, 0, 1});
  CHECK(MinimalPolynomialOfTwoCos(6) == IntPoly{-3, 0, 1});
  CHECK(MinimalPolynomialOfTwoCos(7) == IntPoly{1, -2, -1, 1});
  for (int m = 2; m <= 40; ++m) {
    const IntPoly p = MinimalPolynomialOfTwoCos(m);
    long double v = 0;
    const long double c = 2 * std::cos(M_PIl / m);
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * c + *it;
    CHECK(std::fabs(static_cast<double>(v)) < 1e-9);
    // Degree is phi(2m)/2 for m >= 3.
    int phi = 0;
    for (int k = 1; k <= 2 * m; ++k) phi += std::gcd(k, 2 * m) == 1;
    if (m >= 3) CHECK(static_cast<int>(p.size()) - 1 == phi / 2);
    if (m == 2) CHECK(p == IntPoly{0, 1});
  }
}

TEST_CASE("field signs agree with high precision evaluation") {
  std::mt19937_64 rng(7);
  for (int n : {4, 5, 7, 12, 15, 30}) {
    NumberField f(n);
    const long double c = 2 * std::cos(M_PIl / n);
    CHECK(f.bracket_lo() <= static_cast<double>(c));
    CHECK(static_cast<double>(c) <= f.bracket_hi());
    std::uniform_int_distribution<int> coef(-50, 50);
    for (int trial = 0; trial < 300; ++trial) {
      FieldElem a(f.degree());
      for (auto& x : a) x = coef(rng);
      const long double v = EvalAt(a, c);
      if (std::fabs(v) > 1e-6) CHECK(f.Sign(a) == (v > 0 ? 1 : -1));
    }
    // Products reduce correctly: evaluate (a*b)(c) = a(c) b(c).
    for (int trial = 0; trial < 100; ++trial) {
      FieldElem a(f.degree()), b(f.degree());
      for (auto& x : a) x = coef(rng);
      for (auto& x : b) x = coef(rng);
      const long double lhs = EvalAt(f.Mul(a, b), c);
      const long double rhs = EvalAt(a, c) * EvalAt(b, c);
      CHECK(std::fabs(static_cast<double>(lhs - rhs)) < 1e-6 * (1 + std::fabs(static_cast<double>(rhs))));
    }
  }
}

TEST_CASE("field sign of tiny but nonzero elements") {
  // Powers of c - 2cos(pi/n)-ish units approach zero; the slow path must decide.
  NumberField f(7);
  FieldElem u = f.Sub(f.FromInt(2), f.Generator());  // 2 - c, small positive
  FieldElem p = f.FromInt(1);
  for (int k = 0; k < 20; ++k) p = f.Mul(p, u);
  CHECK(f.Sign(p) == 1);
  CHECK(f.Sign(f.Neg(p)) == -1);
  CHECK(f.Sign(f.Zero()) == 0);
}

TEST_CASE("matrix validation") {
  CHECK_NOTHROW(CoxeterMatrix({{1, 3}, {3, 1}}));
  CHECK(CodeOf([] { CoxeterMatrix({{2, 3}, {3, 1}}); }) == ErrorCode::kMatrixShape);
  CHECK(CodeOf([] { CoxeterMatrix({{1, 3}, {4, 1}}); }) == ErrorCode::kMatrixShape);
  CHECK(CodeOf([] { CoxeterMatrix({{1, 1}, {1, 1}}); }) == ErrorCode::kMatrixShape);
  const auto k33 = cat::KThreeThree(3);
  CHECK(k33.rank() == 6);
  CHECK(CoxeterMatrix::FromJson(k33.ToJson()) == k33);
  CHECK(k33.ToJson()["labels"][0][1] == "inf");
  CHECK(CodeOf([] { CoxeterMatrix::FromJson(nlohmann::json::parse(R"({"rank":2})")); }) ==
        ErrorCode::kParseError);
}

TEST_CASE("system basics") {
  auto a2 = NewSystem(cat::TypeA(2));
  CHECK(a2.label_lcm() == 3);
  CHECK(a2.generator_names() == std::vector<std::string>{"s", "t"});
  CHECK_NOTHROW(NewSystem(cat::KThreeThree(3)));
  CHECK(CodeOf([] { NewSystem(cat::TypeA(2), {"x", "x"}); }) == ErrorCode::kMatrixShape);
}

TEST_CASE("reducedness and normal forms") {
  auto a2 = NewSystem(cat::TypeA(2));
  auto i4 = NewSystem(cat::Dihedral(4));
  CHECK(IsReduced(a2, "s"));
  CHECK_FALSE(IsReduced(a2, "ss"));
  CHECK_FALSE(IsReduced(i4, "ststs"));
  CHECK(NormalForm(i4, "ststs") == NormalForm(i4, "tst"));
  CHECK(NormalForm(a2, "tst").ToString() == "sts");
  CHECK(NormalForm(a2, "") == Identity(a2));
  CHECK(NormalForm(a2, "").ToString() == "1");
  CHECK(NormalForm(i4, "tsts") == NormalForm(i4, "stst"));
  CHECK(CodeOf([&] { IsReduced(a2, "x"); }) == ErrorCode::kUnknownGenerator);
  CHECK(CodeOf([&] { NormalForm(a2, "sx"); }) == ErrorCode::kUnknownGenerator);
}

TEST_CASE("group operations") {
  auto a2 = NewSystem(cat::TypeA(2));
  auto s = Gen(a2, 0);
  CHECK(Multiply(s, s) == Identity(a2));
  auto sts = NormalForm(a2, "sts");
  CHECK(LeftDescents(sts) == std::vector<Generator>{0, 1});
  auto st = NormalForm(a2, "st");
  CHECK(Invert(st).ToString() == "ts");
  CHECK(Length(Invert(st)) == 2);
  CHECK(LeftDescents(st) == std::vector<Generator>{0});
  CHECK(RightDescents(st) == std::vector<Generator>{1});
  auto other = NewSystem(cat::TypeA(2));
  CHECK(CodeOf([&] { Multiply(s, Gen(other, 0)); }) == ErrorCode::kSystemMismatch);
}

TEST_CASE("normal form is a homomorphism and agrees with matrices") {
  std::mt19937 rng(11);
  for (const char* name : {"A3", "B3", "H3", "~A2", "tri(2,3,7)", "K33", "I2(inf)"}) {
    auto sys = NewSystem(cat::ByName(name), cat::NamesFor(name));
    std::uniform_int_distribution<int> gen(0, sys.rank() - 1);
    std::uniform_int_distribution<int> len(0, 9);
    for (int trial = 0; trial < 200; ++trial) {
      Word u(len(rng)), v(len(rng));
      for (auto& x : u) x = gen(rng);
      for (auto& x : v) x = gen(rng);
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      const auto a = NormalForm(sys, u);
      const auto b = NormalForm(sys, v);
      CHECK(NormalForm(sys, uv) == Multiply(a, b));
      CHECK(testing::MatrixOf(sys, a.normal_word()) == testing::MatrixOf(sys, u));
      CHECK(Multiply(a, Invert(a)) == Identity(sys));
      CHECK(IsReduced(sys, a.normal_word()));
      CHECK(a.ActionMatrix() == testing::MatrixOf(sys, u));
      for (Generator s = 0; s < sys.rank(); ++s) {
        const int l = Length(a);
        const int ls = Length(Multiply(Gen(sys, s), a));
        CHECK(std::abs(ls - l) == 1);
        const auto ld = LeftDescents(a);
        CHECK((std::find(ld.begin(), ld.end(), s) != ld.end()) == (ls < l));
      }
    }
  }
}

TEST_CASE("action matrices of generators are involutions") {
  auto sys = NewSystem(cat::TypeH(3));
  CHECK(Identity(sys).ActionMatrix() == testing::MatrixOf(sys, {}));
  for (Generator s = 0; s < 3; ++s) {
    CHECK(testing::MatrixOf(sys, {s, s}) == testing::MatrixOf(sys, {}));
    CHECK(Gen(sys, s).ActionMatrix() != testing::MatrixOf(sys, {}));
  }
}

TEST_CASE("balls: spec examples") {
  auto a2 = EnumerateBall(NewSystem(cat::TypeA(2)), 3);
  CHECK(a2.size() == 6);
  CHECK(a2.edges().size() == 6);
  auto i5 = EnumerateBall(NewSystem(cat::Dihedral(5)), 5);
  CHECK(i5.size() == 10);
  CHECK(i5.edges().size() == 10);
  auto k33 = EnumerateBall(NewSystem(cat::KThreeThree(3)), 2);
  CHECK(k33.size() == 37);
  CHECK(CodeOf([&] { EnumerateBall(NewSystem(cat::TypeA(2)), -1); }) == ErrorCode::kRadiusTooSmall);
  auto tiny = BallOptions{.max_vertices = 10, .parallel = false};
  CHECK(CodeOf([&] { EnumerateBall(NewSystem(cat::KThreeThree(3)), 3, tiny); }) ==
        ErrorCode::kResourceLimit);
}

TEST_CASE("balls agree with plain BFS") {
  for (const char* name : {"A3", "B3", "H3", "~A2", "tri(2,3,7)", "K33", "C5", "D4", "I2(inf)", "A1^3"}) {
    auto sys = NewSystem(cat::ByName(name));
    const int radius = sys.rank() >= 5 ? 4 : 6;
    auto ball = EnumerateBall(sys, radius);
    auto oracle = testing::BfsBall(sys, radius);
    INFO(name);
    CHECK(ball.size() == oracle.dist.size());
    CHECK(ball.edges().size() == oracle.edges);
    for (std::int32_t v = 0; v < static_cast<std::int32_t>(ball.size()); ++v) {
      auto it = oracle.dist.find(testing::MatrixOf(sys, ball.word(v)));
      REQUIRE(it != oracle.dist.end());
      CHECK(it->second == ball.length(v));
      CHECK(IsReduced(sys, ball.word(v)));
    }
    // Every edge joins lengths differing by one; Right/Left/Inverse consistent.
    for (const auto& e : ball.edges()) {
      CHECK(ball.length(e.to) == ball.length(e.from) + 1);
      CHECK(ball.Right(e.from, e.gen) == e.to);
      CHECK(ball.Right(e.to, e.gen) == e.from);
    }
    for (std::int32_t v = 0; v < static_cast<std::int32_t>(ball.size()); ++v) {
      const auto inv = ball.Inverse(v);
      CHECK(Multiply(ball.Element(v), ball.Element(inv)) == Identity(sys));
      for (Generator s = 0; s < sys.rank(); ++s) {
        const auto l = ball.Left(v, s);
        if (l != CayleyBall::kOutside) CHECK(ball.Element(l) == Multiply(Gen(sys, s), ball.Element(v)));
      }
    }
  }
}

TEST_CASE("serial and parallel enumeration are identical") {
  for (const char* name : {"H3", "K33", "tri(2,3,7)"}) {
    auto sys = NewSystem(cat::ByName(name));
    auto a = EnumerateBall(sys, 5, {.parallel = false});
    auto b = EnumerateBall(sys, 5, {.parallel = true});
    CHECK(a.ToJson() == b.ToJson());
  }
}

TEST_CASE("finite groups are exhausted") {
  struct Case {
    const char* name;
    std::size_t order;
  };
  for (auto [name, order] : std::vector<Case>{{"A3", 24}, {"B3", 48}, {"H3", 120}, {"F4", 1152},
                                              {"D4", 192}, {"H4", 14400}, {"A1^3", 8}}) {
    auto g = EnumerateGroup(NewSystem(cat::ByName(name)));
    INFO(name);
    CHECK(g.exhausted());
    CHECK(g.size() == order);
  }
  CHECK_FALSE(EnumerateBall(NewSystem(cat::TypeA(3)), 5).exhausted());
  CHECK(EnumerateBall(NewSystem(cat::TypeA(3)), 6).exhausted());
  CHECK(CodeOf([] { EnumerateGroup(NewSystem(cat::Dihedral(0)), {.max_vertices = 50}); }) ==
        ErrorCode::kResourceLimit);
}

TEST_CASE("ball export") {
  auto ball = EnumerateBall(NewSystem(cat::TypeA(2)), 3);
  auto j = ball.ToJson();
  CHECK(j["vertices"] == nlohmann::json({"1", "s", "t", "st", "ts", "sts"}));
  CHECK(j["edges"].size() == 6);
  CHECK(j["edges"][0] == nlohmann::json({"1", "s"}));
  const std::string dot = ball.ToDot();
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("label=\"sts\"") != std::string::npos);
}
