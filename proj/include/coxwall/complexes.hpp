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

#ifndef COXWALL_COMPLEXES_HPP_
#define COXWALL_COMPLEXES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxwall/cayley_ball.hpp"
#include "coxwall/classification.hpp"
#include "coxwall/coxeter_system.hpp"
#include "json.hpp"

namespace coxwall {

// Simple graph on vertices 0..n-1 with optional vertex names.
class LinkGraph {
 public:
  // Throws Error(kParseError) on loops, repeated edges or bad endpoints.
  LinkGraph(int n, std::vector<std::pair<int, int>> edges, std::vector<std::string> names = {});

  static LinkGraph CompleteBipartite(int q);
  static LinkGraph Cycle(int n);
  static LinkGraph Complete(int n);

  int size() const { return n_; }
  // Normalized (a < b) and sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::string>& names() const { return names_; }
  bool Adjacent(int a, int b) const;
  // Length of a shortest cycle; nullopt for a forest.
  std::optional<int> Girth() const;
  bool IsConnected() const;

  // {"vertices": n or [names], "edges": [[a, b], ...]}; endpoints may be
  // indices or names.
  static LinkGraph FromJson(const nlohmann::json& j);
  nlohmann::json ToJson() const;

  friend bool operator==(const LinkGraph& a, const LinkGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::string> names_;
};

// m_st = k/2 on edges of L, infinity elsewhere. Throws Error(kOddK) for odd
// k, Error(kKTooSmall) for k < 4.
CoxeterMatrix MatrixFromGraph(const LinkGraph& graph, int k);

// Edge {s, t} iff m_st < infinity.
LinkGraph DavisVertexLink(const CoxeterMatrix& m);

struct KLReport {
  int k = 0;
  std::optional<int> girth;
  // 5 for k = 4, 4 for k = 6, 0 (no constraint) for k >= 8.
  int required_girth = 0;
  bool girth_ok = true;
  HyperbolicityReport hyperbolic;

  bool passed() const { return girth_ok; }
  nlohmann::json ToJson() const;
};

// Same errors as MatrixFromGraph.
KLReport ValidateKL(const LinkGraph& graph, int k);

// W(p, K_{q,q}). Throws Error(kOddP) for odd p, Error(kKTooSmall) for
// p < 4, Error(kBadRank) for q < 2.
CoxeterSystem BourdonSystem(int p, int q);

struct CellCensus {
  int radius = 0;
  // Nerve faces T in nerve order, with the number of cosets w W_T whose
  // minimal representative has length <= radius.
  std::vector<std::pair<Subset, std::int64_t>> counts;

  std::int64_t CountOf(const Subset& t) const;
  nlohmann::json ToJson(const CoxeterSystem& system) const;
};

CellCensus ComputeCellCensus(const CoxeterSystem& system, int radius, const BallOptions& options = {});
// Same, on an existing ball.
CellCensus ComputeCellCensus(const CayleyBall& ball);

}  // namespace coxwall

#endif  // COXWALL_COMPLEXES_HPP_
