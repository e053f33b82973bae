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

#include "coxwall/complexes.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "coxwall/error.hpp"

namespace coxwall {
namespace {

void CheckK(int k) {
  if (k % 2 != 0) throw Error(ErrorCode::kOddK, "k = " + std::to_string(k) + " is odd");
  if (k < 4) throw Error(ErrorCode::kKTooSmall, "k = " + std::to_string(k) + " is below 4");
}

}  // namespace

LinkGraph::LinkGraph(int n, std::vector<std::pair<int, int>> edges, std::vector<std::string> names)
    : n_(n), edges_(std::move(edges)), names_(std::move(names)) {
  if (n < 0) throw Error(ErrorCode::kParseError, "negative vertex count");
  if (!names_.empty() && static_cast<int>(names_.size()) != n) {
    throw Error(ErrorCode::kParseError, "vertex name count differs from vertex count");
  }
  for (auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error(ErrorCode::kParseError, "edge endpoint out of range");
    if (a == b) throw Error(ErrorCode::kParseError, "loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorCode::kParseError, "repeated edge");
  }
}

LinkGraph LinkGraph::CompleteBipartite(int q) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < q; ++a) {
    for (int b = q; b < 2 * q; ++b) e.emplace_back(a, b);
  }
  return LinkGraph(2 * q, std::move(e));
}

LinkGraph LinkGraph::Cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return LinkGraph(n, std::move(e));
}

LinkGraph LinkGraph::Complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) e.emplace_back(a, b);
  }
  return LinkGraph(n, std::move(e));
}

bool LinkGraph::Adjacent(int a, int b) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{std::min(a, b), std::max(a, b)});
}

std::optional<int> LinkGraph::Girth() const {
  std::vector<std::vector<int>> adj(n_);
  for (auto [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int best = std::numeric_limits<int>::max();
  for (int root = 0; root < n_; ++root) {
    std::vector<int> dist(n_, -1), parent(n_, -1);
    std::deque<int> queue = {root};
    dist[root] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : adj[u]) {
        if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

bool LinkGraph::IsConnected() const {
  if (n_ == 0) return true;
  std::vector<int> comp(n_);
  for (int i = 0; i < n_; ++i) comp[i] = i;
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  int parts = n_;
  for (auto [a, b] : edges_) {
    const int ra = find(a), rb = find(b);
    if (ra != rb) {
      comp[ra] = rb;
      --parts;
    }
  }
  return parts == 1;
}

LinkGraph LinkGraph::FromJson(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
      throw Error(ErrorCode::kParseError, "graph JSON needs 'vertices' and 'edges'");
    }
    std::vector<std::string> names;
    int n = 0;
    if (j["vertices"].is_array()) {
      for (const auto& v : j["vertices"]) names.push_back(v.get<std::string>());
      n = static_cast<int>(names.size());
    } else {
      n = j["vertices"].get<int>();
    }
    auto endpoint = [&](const nlohmann::json& v) {
      if (v.is_number_integer()) return v.get<int>();
      const auto name = v.get<std::string>();
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw Error(ErrorCode::kParseError, "unknown vertex '" + name + "'");
      return static_cast<int>(it - names.begin());
    };
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::kParseError, "edge must be a pair");
      edges.emplace_back(endpoint(e[0]), endpoint(e[1]));
    }
    return LinkGraph(n, std::move(edges), std::move(names));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

nlohmann::json LinkGraph::ToJson() const {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : edges_) edges.push_back({a, b});
  nlohmann::json j;
  j["vertices"] = names_.empty() ? nlohmann::json(n_) : nlohmann::json(names_);
  j["edges"] = std::move(edges);
  return j;
}

CoxeterMatrix MatrixFromGraph(const LinkGraph& graph, int k) {
  CheckK(k);
  const int n = graph.size();
  std::vector<CoxeterLabel> labels(static_cast<size_t>(n) * n, kInf);
  for (int i = 0; i < n; ++i) labels[i * n + i] = CoxeterLabel(1);
  for (auto [a, b] : graph.edges()) {
    labels[a * n + b] = CoxeterLabel(k / 2);
    labels[b * n + a] = CoxeterLabel(k / 2);
  }
  return CoxeterMatrix(n, std::move(labels));
}

LinkGraph DavisVertexLink(const CoxeterMatrix& m) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < m.rank(); ++a) {
    for (int b = a + 1; b < m.rank(); ++b) {
      if (m.at(a, b).is_finite()) e.emplace_back(a, b);
    }
  }
  return LinkGraph(m.rank(), std::move(e));
}

nlohmann::json KLReport::ToJson() const {
  nlohmann::json j = {{"k", k},
                      {"required_girth", required_girth},
                      {"girth_ok", girth_ok},
                      {"hyperbolic", hyperbolic.ToJson()}};
  j["girth"] = girth ? nlohmann::json(*girth) : nlohmann::json(nullptr);
  return j;
}

KLReport ValidateKL(const LinkGraph& graph, int k) {
  const CoxeterMatrix m = MatrixFromGraph(graph, k);
  KLReport r;
  r.k = k;
  r.girth = graph.Girth();
  r.required_girth = k == 4 ? 5 : k == 6 ? 4 : 0;
  r.girth_ok = !r.girth || *r.girth >= r.required_girth;
  r.hyperbolic = IsHyperbolic(m);
  return r;
}

CoxeterSystem BourdonSystem(int p, int q) {
  if (p % 2 != 0) throw Error(ErrorCode::kOddP, "p = " + std::to_string(p) + " is odd");
  if (p < 4) throw Error(ErrorCode::kKTooSmall, "p = " + std::to_string(p) + " is below 4");
  if (q < 2) throw Error(ErrorCode::kBadRank, "q must be at least 2");
  return NewSystem(MatrixFromGraph(LinkGraph::CompleteBipartite(q), p));
}

std::int64_t CellCensus::CountOf(const Subset& t) const {
  for (const auto& [face, count] : counts) {
    if (face == t) return count;
  }
  return 0;
}

nlohmann::json CellCensus::ToJson(const CoxeterSystem& system) const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [face, count] : counts) {
    nlohmann::json names = nlohmann::json::array();
    for (int s : face) names.push_back(system.generator_names()[s]);
    rows.push_back({{"T", std::move(names)}, {"count", count}});
  }
  return {{"radius", radius}, {"counts", std::move(rows)}};
}

CellCensus ComputeCellCensus(const CayleyBall& ball) {
  const CoxeterSystem& sys = ball.system();
  if (sys.rank() > 64) throw Error(ErrorCode::kResourceLimit, "rank above 64");
  const Nerve nerve = ComputeNerve(sys.matrix());
  const auto n = static_cast<std::int32_t>(ball.size());
  // Right descent masks; a descent leads to a shorter element, so it is
  // always inside the ball.
  std::vector<std::uint64_t> descents(n, 0);
  for (std::int32_t v = 0; v < n; ++v) {
    for (Generator s = 0; s < sys.rank(); ++s) {
      const auto u = ball.Right(v, s);
      if (u != CayleyBall::kOutside && ball.length(u) < ball.length(v)) descents[v] |= 1ull << s;
    }
  }
  CellCensus census;
  census.radius = ball.radius();
  census.counts.resize(nerve.faces.size());
  const auto faces = static_cast<std::int64_t>(nerve.faces.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < faces; ++i) {
    std::uint64_t mask = 0;
    for (int s : nerve.faces[i]) mask |= 1ull << s;
    std::int64_t count = 0;
    for (std::int32_t v = 0; v < n; ++v) count += (descents[v] & mask) == 0;
    census.counts[i] = {nerve.faces[i], count};
  }
  return census;
}

CellCensus ComputeCellCensus(const CoxeterSystem& system, int radius, const BallOptions& options) {
  return ComputeCellCensus(EnumerateBall(system, radius, options));
}

}  // namespace coxwall
