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

#ifndef COXWALL_EVEN_POLYTOPES_HPP_
#define COXWALL_EVEN_POLYTOPES_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxwall/cayley_ball.hpp"
#include "coxwall/classification.hpp"
#include "coxwall/coxeter_system.hpp"
#include "coxwall/walls.hpp"
#include "json.hpp"

namespace coxwall {

// A face w W_T of the Coxeter cell: rep is the minimal coset
// representative, as a vertex of the group's ball.
struct CellFace {
  std::int32_t rep;
  Subset T;
  int dim() const { return static_cast<int>(T.size()); }
};

class CoxeterCell {
 public:
  const CoxeterSystem& system() const { return group_->system(); }
  const CayleyBall& group() const { return *group_; }
  // Ordered by dimension, then T, then rep.
  const std::vector<CellFace>& faces() const { return faces_; }
  // (i, j): face i is a facet of face j.
  const std::vector<std::pair<std::int32_t, std::int32_t>>& covers() const { return covers_; }

  // Number of faces per dimension 0..rank.
  std::vector<std::int64_t> FaceVector() const;
  std::optional<std::int32_t> FindFace(std::int32_t rep, const Subset& T) const;
  // Minimal representative of v W_T.
  std::int32_t MinimalRep(std::int32_t v, const Subset& T) const;

  // {faces: [{rep, T, dim}], covers: [[i, j]]}.
  nlohmann::json ToJson() const;

 private:
  friend CoxeterCell BuildCoxeterCell(const CoxeterSystem& system);
  std::shared_ptr<const CayleyBall> group_;
  std::vector<CellFace> faces_;
  std::vector<std::pair<std::int32_t, std::int32_t>> covers_;
  // Sorted (T mask, rep) -> face index.
  std::vector<std::pair<std::pair<std::uint32_t, std::int32_t>, std::int32_t>> index_;
};

// Face poset of the cell of a finite system. Throws Error(kNotFinite).
CoxeterCell BuildCoxeterCell(const CoxeterSystem& system);

struct ParallelClass {
  Wall wall;
  // Indices of edge faces.
  std::vector<std::int32_t> edges;
};

// Edges grouped by their wall, classes ordered by first edge.
std::vector<ParallelClass> ParallelClasses(const CoxeterCell& cell);

// Each subset of the edges at each vertex spans a face of that dimension
// containing exactly those edges at the vertex.
bool VerifySimple(const CoxeterCell& cell);

// Euler characteristic of the boundary (all faces but the top one).
std::int64_t BoundaryEulerCharacteristic(const CoxeterCell& cell);

// q * pi, with q = num / den in lowest terms, den > 0.
struct PiMultiple {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static PiMultiple Of(std::int64_t num, std::int64_t den);
  static PiMultiple PiOver(std::int64_t n) { return Of(1, n); }
  friend PiMultiple operator+(PiMultiple a, PiMultiple b);
  friend bool operator==(const PiMultiple&, const PiMultiple&) = default;
  friend bool operator<(const PiMultiple& a, const PiMultiple& b);
  friend bool operator>(const PiMultiple& a, const PiMultiple& b) { return b < a; }
  std::string ToString() const;
};

// One angle term of a table family: pi / k, or pi / n for the free n.
struct AngleTerm {
  int fixed = 0;  // k, or 0 for the free parameter
  std::string ToString() const;
};

struct AngleFamily {
  std::vector<AngleTerm> terms;  // 1 term in rank 2, (a, b, c) in rank 3
  int n_min = 2;
  std::optional<int> n_max;  // nullopt: unbounded
};

struct PolyhedronTableEntry {
  int rank = 3;
  // Type such as "A3", "A1xA2", "A1xI2(m)"; "m" stands for 5 or >= 7.
  std::string type;
  std::vector<AngleFamily> families;
  // Rank 2: the 2m of the polygon ("2m" for the generic row).
  std::string sides;
  // Rank 3: the dual cellulation id, e.g. "tetrahedron", "bigon-6".
  std::string cellulation;
};

// Throws Error(kBadRank) unless rank is 2 or 3.
std::vector<PolyhedronTableEntry> EvenPolyhedraTable(int rank);
nlohmann::json TableToJson(const std::vector<PolyhedronTableEntry>& table);

// Rank-3 system whose Coxeter complex is the barycentric subdivision of the
// cellulation: "tetrahedron", "cube", "dodecahedron", "bigon-N" (N even,
// N >= 4). Generators a, b, c. Throws Error(kUnknownCellulation).
CoxeterMatrix CellulationSystem(std::string_view id);

struct AndreevResult {
  bool passed = true;
  // 1, 2 or 3 for the violated condition, 0 when passed.
  int condition = 0;
  // The offending cycle as vertices "type:rep" of the subdivision.
  std::vector<std::string> cycle;
  PiMultiple sum;
  nlohmann::json ToJson() const;
};

// The three cycle-sum conditions on the barycentric subdivision, with the
// angle of an edge of type s taken from angles[s]. Conditions are checked
// in order and the first violation is reported. Throws
// Error(kUnknownCellulation), Error(kAngleRange) unless 0 < angle <= pi/2.
AndreevResult AndreevCheck(std::string_view cellulation, const std::array<PiMultiple, 3>& angles);

struct AndreevSample {
  std::string type;
  std::string cellulation;
  int n = 0;
  std::array<PiMultiple, 3> angles;
  AndreevResult result;
};

// Every rank-3 table family at each n from n_min to n_max (to n_cap when
// unbounded); the generic A1xI2(m) row is taken at m = 5, 7, 8, 9, 12.
std::vector<AndreevSample> TableAndreevSamples(int n_cap = 12);
// [{"type", "cellulation", "n", "angles", "result"}].
nlohmann::json SamplesToJson(const std::vector<AndreevSample>& samples);

}  // namespace coxwall

#endif  // COXWALL_EVEN_POLYTOPES_HPP_
