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

#ifndef COXWALL_CLASSIFICATION_HPP_
#define COXWALL_CLASSIFICATION_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxwall/coxeter_matrix.hpp"
#include "coxwall/coxeter_system.hpp"
#include "json.hpp"

namespace coxwall {

using Subset = std::vector<int>;

enum class TypeTag { kFinite, kAffine, kIndefinite };

const char* TypeTagName(TypeTag tag);

struct DiagramComponent {
  // Generators of the component, increasing, in the indexing of the input.
  Subset generators;
  TypeTag tag = TypeTag::kIndefinite;
  // Catalog name such as "A3", "I2(5)", "~A2"; empty when indefinite.
  std::string name;
};

struct DiagramType {
  // Finite if every component is; Affine if every component is finite or
  // affine and one is affine; Indefinite otherwise.
  TypeTag tag = TypeTag::kFinite;
  // Ordered by least generator.
  std::vector<DiagramComponent> components;

  // "A3", "A1xI2(5)", "~A2", "indefinite", "A0" for the empty subset.
  std::string Name() const;
  nlohmann::json ToJson() const;
};

// Connected components of the diagram (edges where m_st != 2) restricted to
// `subset`.
std::vector<Subset> DiagramComponents(const CoxeterMatrix& m, const Subset& subset);

DiagramType Classify(const CoxeterMatrix& m, const Subset& subset);
DiagramType Classify(const CoxeterMatrix& m);

bool IsFiniteSubset(const CoxeterMatrix& m, const Subset& subset);

// |W_T| from catalog order formulas. Throws Error(kNotFinite), and
// Error(kResourceLimit) if the order does not fit in 64 bits.
std::uint64_t OrderOfFinite(const CoxeterMatrix& m, const Subset& subset);
std::uint64_t OrderOfFinite(const CoxeterMatrix& m);

// The faces of the nerve: all T with W_T finite, the empty set included,
// ordered by size and then lexicographically.
struct Nerve {
  int rank = 0;
  std::vector<Subset> faces;

  int dimension() const;
  bool Contains(const Subset& t) const;
  std::vector<Subset> MaximalFaces() const;
  nlohmann::json ToJson() const;
};

Nerve ComputeNerve(const CoxeterMatrix& m);

struct HyperbolicityReport {
  bool hyperbolic = true;
  // An irreducible affine T with |T| >= 3.
  std::optional<Subset> affine_witness;
  // Disjoint T1, T2, both infinite, with m = 2 across.
  std::optional<std::pair<Subset, Subset>> commuting_witness;

  nlohmann::json ToJson() const;
};

HyperbolicityReport IsHyperbolic(const CoxeterMatrix& m);

// A permutation p of S, p[s] = f(s).
using Permutation = std::vector<int>;

bool PreservesLabels(const CoxeterMatrix& m, const Permutation& p);

// All label-preserving permutations, lexicographic, identity first.
// Throws Error(kResourceLimit) above `max_rank` or when there are more than
// 100000 of them.
std::vector<Permutation> DiagramAutomorphisms(const CoxeterMatrix& m, int max_rank = 12);

// T_s = {t : m_st < infinity}, s included.
Subset StarOf(const CoxeterMatrix& m, int s);

struct StarFixingWitness {
  int s;
  Permutation f;
};

// Non-trivial f with f fixing every t in T_s.
bool IsStarFixing(const CoxeterMatrix& m, int s, const Permutation& f);

// All (s, f), s increasing, f in automorphism order.
std::vector<StarFixingWitness> StarFixingAutomorphisms(const CoxeterMatrix& m);

struct RigidityReport {
  bool rigid = true;
  std::optional<StarFixingWitness> witness;
  nlohmann::json ToJson(const CoxeterSystem& system) const;
};

RigidityReport IsRigid(const CoxeterMatrix& m);

// Sign pattern of the matrix (cos(pi/m_st)), with -1 for infinity.
enum class GramSign { kPositiveDefinite, kDegenerate, kIndefinite };

// Decided from exact principal minors over Z[c]. kDegenerate means
// positive semidefinite and singular. Throws Error(kBadRank) above rank 6.
GramSign ClassifyGram(const CoxeterMatrix& m);

}  // namespace coxwall

#endif  // COXWALL_CLASSIFICATION_HPP_
