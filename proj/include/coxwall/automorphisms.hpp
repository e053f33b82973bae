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

#ifndef COXWALL_AUTOMORPHISMS_HPP_
#define COXWALL_AUTOMORPHISMS_HPP_

#include <cstdint>
#include <memory>
#include <vector>

#include "coxwall/cayley_ball.hpp"
#include "coxwall/classification.hpp"
#include "coxwall/coxeter_system.hpp"
#include "coxwall/walls.hpp"
#include "json.hpp"

namespace coxwall {

// Same as the matrix version, on a system.
std::vector<StarFixingWitness> StarFixingAutomorphisms(const CoxeterSystem& system);

// {"s": name, "f": {name: name}}.
nlohmann::json WitnessToJson(const CoxeterSystem& system, const StarFixingWitness& w);

// Vertices w of the ball with l(sw) < l(w), increasing.
// Throws Error(kSystemMismatch).
std::vector<std::int32_t> HalfspaceA(const CoxeterSystem& system, Generator s,
                                     const CayleyBall& ball);

struct HOptions {
  int margin = 2;
  std::size_t max_vertices = DefaultMaxVertices();
};

// H_s cut down to a ball. Paths are explored up to length radius + margin;
// members and stages are reported on the radius ball.
struct HSet {
  Generator s = 0;
  int radius = 0;
  int margin = 0;
  std::shared_ptr<const CayleyBall> ball;
  // Increasing vertex indices of `ball`, with stage[i] the stage of members[i].
  std::vector<std::int32_t> members;
  std::vector<int> stage;
  // Elements reached by the exploration, all radii.
  std::int64_t explored = 0;

  bool Contains(std::int32_t v) const;
  // {"s", "radius", "margin", "members": [{"w", "stage"}]}.
  nlohmann::json ToJson() const;
};

// Throws Error(kRadiusTooSmall) for radius < 1, Error(kResourceLimit).
HSet ComputeH(const CoxeterSystem& system, Generator s, int radius, const HOptions& options = {});
// On an existing ball; its radius is the reporting radius (0 allowed).
HSet ComputeH(std::shared_ptr<const CayleyBall> ball, Generator s, const HOptions& options = {});

struct DisjointReport {
  bool disjoint = true;
  std::vector<std::int32_t> offending;
};

DisjointReport VerifyDisjoint(const HSet& h, const std::vector<std::int32_t>& a);

struct AutomorphismChecks {
  bool bijection = false;
  bool edge_labels = false;
  bool fixes_a = false;
  bool strict_wall = false;
  bool non_identity = false;

  bool all() const { return bijection && edge_labels && fixes_a && strict_wall && non_identity; }
};

// phi = f applied letterwise on H, the identity elsewhere, as a vertex map
// of a radius-R ball. Checks are made on the ball of radius R - 1.
struct PartialAutomorphism {
  StarFixingWitness witness;
  std::shared_ptr<const CayleyBall> ball;
  int valid_radius = 0;
  std::vector<std::int32_t> map;
  std::vector<bool> in_h;
  AutomorphismChecks checks;

  // On the validity ball: {"s", "f", "radius", "fixed": [w], "moved": [{"from", "to"}],
  // "checks": {...}}.
  nlohmann::json ToJson() const;
};

// Recomputes the checks of phi from its map.
AutomorphismChecks VerifyPartialAutomorphism(const PartialAutomorphism& phi,
                                             Exec exec = Exec::kParallel);

// Throws Error(kNotAWitness) unless f is a non-trivial diagram automorphism
// fixing T_s, Error(kRadiusTooSmall) for radius < 2, Error(kResourceLimit).
PartialAutomorphism BuildWallFixingAutomorphism(const CoxeterSystem& system,
                                                const StarFixingWitness& witness, int radius,
                                                const HOptions& options = {},
                                                Exec exec = Exec::kParallel);

}  // namespace coxwall

#endif  // COXWALL_AUTOMORPHISMS_HPP_
