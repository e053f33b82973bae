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

#ifndef COXWALL_WALLS_HPP_
#define COXWALL_WALLS_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "coxwall/cayley_ball.hpp"
#include "coxwall/coxeter_system.hpp"
#include "json.hpp"

namespace coxwall {

enum class Exec { kSerial, kParallel };

enum class Side { kPlus, kMinus };

// The wall of a reflection t = u s u^-1, i.e. the partition of W into
// A_t^+ = {w : l(w) < l(tw)} and A_t^-. Identity is that of t; it is stored
// through the root u(a_s) normalized up to sign (first nonzero coefficient
// positive), which determines t.
class Wall {
 public:
  static Wall FromEdge(const CoxeterSystem& system, std::span<const Generator> u, Generator s);
  static Wall OfGenerator(const CoxeterSystem& system, Generator s) {
    return FromEdge(system, {}, s);
  }

  const CoxeterSystem& system() const { return system_; }
  const FieldVec& root() const { return root_; }
  // Witness (u, s) with t = u s u^-1.
  const Word& witness_word() const { return witness_; }
  Generator witness_generator() const { return gen_; }
  // The reflection t in ShortLex normal form.
  GroupElement reflection() const;

  friend bool operator==(const Wall& a, const Wall& b) {
    return a.system_.SameAs(b.system_) && a.root_ == b.root_;
  }
  friend bool operator<(const Wall& a, const Wall& b) { return a.root_ < b.root_; }

 private:
  friend Side SideOfPoint(const Wall&, std::span<const std::int64_t>);
  Wall(CoxeterSystem system, FieldVec root, Word witness, Generator gen, int root_sign)
      : system_(std::move(system)),
        root_(std::move(root)),
        witness_(std::move(witness)),
        gen_(gen),
        root_sign_(root_sign) {}

  CoxeterSystem system_;
  FieldVec root_;
  Word witness_;
  Generator gen_;
  int root_sign_;
};

// Sign normalization used for wall identity: flip so the first nonzero
// coefficient is positive.
FieldVec CanonicalRoot(FieldVec root);

struct HalfSpace {
  Wall wall;
  Side sign;
  bool Contains(const GroupElement& w) const;
};

// kPlus iff l(w) < l(tw). Decided by the sign of <b, w x0> against the
// sign of b, where b is the wall's root.
Side SideOf(const Wall& wall, const GroupElement& w);
// Same, from the dual vector w x0 (CoxeterSystem::LeftKey).
Side SideOfPoint(const Wall& wall, std::span<const std::int64_t> left_key);

// Walls crossed along the ShortLex geodesic from x to y, in path order.
std::vector<Wall> WallsSeparating(const GroupElement& x, const GroupElement& y);

// M(x, y) = M(x, z) disjoint-union M(z, y).
bool IsBetween(const GroupElement& z, const GroupElement& x, const GroupElement& y);

struct AxiomMViolation {
  std::int32_t x;
  std::int32_t y;
  int separating;
  int length;
  std::string reason;
};

struct AxiomMReport {
  std::int64_t pairs_checked = 0;
  int max_separating = 0;
  std::vector<AxiomMViolation> violations;

  bool passed() const { return violations.empty(); }
  // {pairs_checked, max_separating, violations: []}.
  nlohmann::json ToJson(const CayleyBall& ball) const;
};

// For every unordered pair x != y of the ball: the walls crossed along a
// geodesic are pairwise distinct, each one separates x from y, and there
// are exactly l(x^-1 y) of them.
AxiomMReport CheckAxiomM(const CayleyBall& ball, Exec exec = Exec::kParallel);

struct GeodesicReport {
  bool geodesic = true;
  // First (i, j), i < j, 0-based, with t_i == t_j; minimal j, then i.
  std::optional<std::pair<int, int>> repeated;
  std::vector<Wall> crossed;
};

// A path from 1 along `word` is geodesic iff the walls it crosses,
// t_i = s_1...s_{i-1} s_i s_{i-1}...s_1, are pairwise distinct.
GeodesicReport IsGeodesicPath(const CoxeterSystem& system, std::span<const Generator> word);

struct WallspaceGraphResult {
  int core_radius = 0;
  // Vertex pairs (a, b), a < b, over the core.
  std::vector<std::pair<std::int32_t, std::int32_t>> recovered;
  std::vector<std::pair<std::int32_t, std::int32_t>> cayley;
  bool matches = false;
};

// Edges of the wall-space graph (x ~ y iff nothing but x, y lies between
// them) on the radius-(R-1) core of a radius-R ball, compared with the
// Cayley edges there. Throws Error(kRadiusTooSmall) when R < 2.
WallspaceGraphResult WallspaceGraph(const CayleyBall& ball, Exec exec = Exec::kParallel);

}  // namespace coxwall

#endif  // COXWALL_WALLS_HPP_
