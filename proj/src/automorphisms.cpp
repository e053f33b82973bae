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

#include "coxwall/automorphisms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "coxwall/error.hpp"

namespace coxwall {
namespace {

// Elements reachable from 1 along allowed edges without leaving the ball of
// radius `bound`. Keys are w^-1 x0 as in CayleyBall.
struct Exploration {
  std::size_t vs = 0;
  int rank = 0;
  std::vector<std::int64_t> keys;
  std::vector<int> len;
  std::vector<char> in_star;  // w in W_{T_s}
  std::vector<std::int32_t> adj;
  std::vector<std::int32_t> table;

  std::size_t size() const { return len.size(); }
  std::span<const std::int64_t> key(std::int32_t v) const {
    return {keys.data() + static_cast<std::size_t>(v) * vs, vs};
  }
  std::size_t Slot(std::span<const std::int64_t> k) const {
    const std::size_t mask = table.size() - 1;
    std::size_t i = HashKey(k) & mask;
    while (table[i] >= 0 && !std::ranges::equal(key(table[i]), k)) i = (i + 1) & mask;
    return i;
  }
  void Grow() {
    std::vector<std::int32_t>(table.size() * 2, -1).swap(table);
    for (std::int32_t v = 0; v < static_cast<std::int32_t>(size()); ++v) table[Slot(key(v))] = v;
  }
};

Exploration Explore(const CoxeterSystem& sys, Generator s, int bound, std::size_t max_vertices) {
  const Subset star = StarOf(sys.matrix(), s);
  std::vector<char> in_t(sys.rank(), 0);
  for (int t : star) in_t[t] = 1;
  const int d = sys.field().degree();

  Exploration ex;
  ex.vs = sys.vec_size();
  ex.rank = sys.rank();
  const FieldVec x0 = sys.BasePoint();
  ex.keys = x0;
  ex.len = {0};
  ex.in_star = {1};
  ex.adj.assign(ex.rank, -1);
  ex.table.assign(1024, -1);
  ex.table[ex.Slot(ex.key(0))] = 0;

  std::vector<std::int32_t> frontier = {0};
  while (!frontier.empty()) {
    std::vector<std::pair<std::int32_t, Generator>> pending;
    for (std::int32_t u : frontier) {
      for (Generator t = 0; t < ex.rank; ++t) {
        if (ex.adj[u * ex.rank + t] >= 0) continue;
        if (t == s && ex.in_star[u]) continue;
        pending.emplace_back(u, t);
      }
    }
    std::vector<std::int64_t> cand(pending.size() * ex.vs);
    std::vector<int> cand_len(pending.size());
    const std::int64_t np = static_cast<std::int64_t>(pending.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t p = 0; p < np; ++p) {
      const auto [u, t] = pending[p];
      const auto src = ex.key(u);
      const bool down = sys.field().Sign(src.subspan(t * d, d)) < 0;
      cand_len[p] = ex.len[u] + (down ? -1 : 1);
      if (cand_len[p] > bound) continue;
      auto out = std::span<std::int64_t>(cand).subspan(p * ex.vs, ex.vs);
      std::copy(src.begin(), src.end(), out.begin());
      sys.ActDual(t, out);
    }
    std::vector<std::int32_t> next;
    for (std::size_t p = 0; p < pending.size(); ++p) {
      if (cand_len[p] > bound) continue;
      const auto [u, t] = pending[p];
      if (ex.adj[u * ex.rank + t] >= 0) continue;
      const auto ck = std::span<const std::int64_t>(cand).subspan(p * ex.vs, ex.vs);
      const std::size_t slot = ex.Slot(ck);
      std::int32_t v = ex.table[slot];
      if (v < 0) {
        if (ex.size() >= max_vertices) {
          throw Error(ErrorCode::kResourceLimit,
                      "H exploration exceeds " + std::to_string(max_vertices) + " vertices");
        }
        v = static_cast<std::int32_t>(ex.size());
        ex.keys.insert(ex.keys.end(), ck.begin(), ck.end());
        ex.len.push_back(cand_len[p]);
        ex.in_star.push_back(ex.in_star[u] && in_t[t]);
        ex.adj.insert(ex.adj.end(), ex.rank, -1);
        ex.table[slot] = v;
        if (ex.size() * 2 > ex.table.size()) ex.Grow();
        next.push_back(v);
      }
      ex.adj[u * ex.rank + t] = v;
      ex.adj[v * ex.rank + t] = u;
    }
    frontier = std::move(next);
  }
  return ex;
}

// Stage indices from K_1 = {1}, H_1 = 1 W_{S-s},
// K_{n+1} = H_n - W_{T_s} times W_{T_s}, H_{n+1} = K_{n+1} W_{S-s}.
std::vector<int> Stages(const Exploration& ex, Generator s, const Subset& star) {
  std::vector<char> in_t(ex.rank, 0);
  for (int t : star) in_t[t] = 1;
  std::vector<int> stage(ex.size(), 0);
  auto flood = [&](std::vector<std::int32_t> from, bool star_edges, int value) {
    std::vector<std::int32_t> added;
    while (!from.empty()) {
      const std::int32_t u = from.back();
      from.pop_back();
      for (Generator t = 0; t < ex.rank; ++t) {
        if (star_edges ? !in_t[t] : t == s) continue;
        const std::int32_t v = ex.adj[u * ex.rank + t];
        if (v < 0 || stage[v] != 0) continue;
        stage[v] = value;
        added.push_back(v);
        from.push_back(v);
      }
    }
    return added;
  };
  stage[0] = 1;
  std::vector<std::int32_t> current = flood({0}, false, 1);
  current.push_back(0);
  for (int n = 1; !current.empty(); ++n) {
    std::vector<std::int32_t> seeds;
    for (std::int32_t v : current) {
      if (!ex.in_star[v]) seeds.push_back(v);
    }
    std::vector<std::int32_t> k = flood(seeds, true, n + 1);
    std::vector<std::int32_t> h = flood(k, false, n + 1);
    current = std::move(k);
    current.insert(current.end(), h.begin(), h.end());
  }
  if (std::ranges::count(stage, 0) != 0) throw std::logic_error("Stages: unreached element");
  return stage;
}

}  // namespace

std::vector<StarFixingWitness> StarFixingAutomorphisms(const CoxeterSystem& system) {
  return StarFixingAutomorphisms(system.matrix());
}

nlohmann::json WitnessToJson(const CoxeterSystem& system, const StarFixingWitness& w) {
  const auto& names = system.generator_names();
  nlohmann::json f = nlohmann::json::object();
  for (size_t i = 0; i < w.f.size(); ++i) f[names[i]] = names[w.f[i]];
  return {{"s", names[w.s]}, {"f", f}};
}

std::vector<std::int32_t> HalfspaceA(const CoxeterSystem& system, Generator s,
                                     const CayleyBall& ball) {
  system.RequireSame(ball.system());
  system.CheckWord(Word{s});
  std::vector<std::int32_t> out;
  for (std::int32_t v = 0; v < static_cast<std::int32_t>(ball.size()); ++v) {
    const std::int32_t u = ball.Left(v, s);
    if (u != CayleyBall::kOutside && ball.length(u) < ball.length(v)) out.push_back(v);
  }
  return out;
}

bool HSet::Contains(std::int32_t v) const { return std::ranges::binary_search(members, v); }

nlohmann::json HSet::ToJson() const {
  const CoxeterSystem& sys = ball->system();
  nlohmann::json m = nlohmann::json::array();
  for (size_t i = 0; i < members.size(); ++i) {
    m.push_back({{"w", sys.FormatWord(ball->word(members[i]))}, {"stage", stage[i]}});
  }
  return {{"s", sys.generator_names()[s]}, {"radius", radius}, {"margin", margin}, {"members", m}};
}

HSet ComputeH(std::shared_ptr<const CayleyBall> ball, Generator s, const HOptions& options) {
  const CoxeterSystem& sys = ball->system();
  sys.CheckWord(Word{s});
  if (options.margin < 0) throw Error(ErrorCode::kRadiusTooSmall, "margin must be nonnegative");
  const Exploration ex = Explore(sys, s, ball->radius() + options.margin, options.max_vertices);
  const std::vector<int> stage = Stages(ex, s, StarOf(sys.matrix(), s));

  std::vector<std::pair<std::int32_t, int>> found;
  for (std::int32_t v = 0; v < static_cast<std::int32_t>(ex.size()); ++v) {
    if (ex.len[v] > ball->radius()) continue;
    const auto idx = ball->Find(ex.key(v));
    if (!idx) throw std::logic_error("ComputeH: member missing from ball");
    found.emplace_back(*idx, stage[v]);
  }
  std::ranges::sort(found);
  HSet h;
  h.s = s;
  h.radius = ball->radius();
  h.margin = options.margin;
  h.explored = static_cast<std::int64_t>(ex.size());
  for (const auto& [v, n] : found) {
    h.members.push_back(v);
    h.stage.push_back(n);
  }
  h.ball = std::move(ball);
  return h;
}

HSet ComputeH(const CoxeterSystem& system, Generator s, int radius, const HOptions& options) {
  if (radius < 1) throw Error(ErrorCode::kRadiusTooSmall, "H needs radius at least 1");
  BallOptions bo;
  bo.max_vertices = options.max_vertices;
  return ComputeH(std::make_shared<const CayleyBall>(EnumerateBall(system, radius, bo)), s,
                  options);
}

DisjointReport VerifyDisjoint(const HSet& h, const std::vector<std::int32_t>& a) {
  DisjointReport r;
  for (std::int32_t v : a) {
    if (h.Contains(v)) r.offending.push_back(v);
  }
  std::ranges::sort(r.offending);
  r.disjoint = r.offending.empty();
  return r;
}

nlohmann::json PartialAutomorphism::ToJson() const {
  const CoxeterSystem& sys = ball->system();
  nlohmann::json fixed = nlohmann::json::array();
  nlohmann::json moved = nlohmann::json::array();
  for (std::int32_t v = 0; v < ball->level_begin(valid_radius + 1); ++v) {
    if (map[v] == v) {
      fixed.push_back(sys.FormatWord(ball->word(v)));
    } else {
      moved.push_back({{"from", sys.FormatWord(ball->word(v))},
                       {"to", map[v] < 0 ? std::string("?") : sys.FormatWord(ball->word(map[v]))}});
    }
  }
  nlohmann::json j = WitnessToJson(sys, witness);
  j["radius"] = valid_radius;
  j["fixed"] = fixed;
  j["moved"] = moved;
  j["checks"] = {{"bijection", checks.bijection},
                 {"edge_labels", checks.edge_labels},
                 {"fixes_A", checks.fixes_a},
                 {"strict_wall", checks.strict_wall},
                 {"non_identity", checks.non_identity}};
  return j;
}

AutomorphismChecks VerifyPartialAutomorphism(const PartialAutomorphism& phi, Exec exec) {
  const auto& ball = phi.ball;
  const auto& map = phi.map;
  const auto& in_h = phi.in_h;
  const Generator s = phi.witness.s;
  const auto& f = phi.witness.f;
  const int rank = ball->system().rank();
  const std::int32_t inner = ball->level_begin(phi.valid_radius + 1);

  bool bijection = true;
  {
    std::vector<char> hit(inner, 0);
    for (std::int32_t v = 0; v < inner && bijection; ++v) {
      const std::int32_t w = map[v];
      if (w < 0 || w >= inner || hit[w]) bijection = false;
      else hit[w] = 1;
    }
  }

  int bad_edges = 0;
  int bad_wall = 0;
  int moved = 0;
#pragma omp parallel for schedule(static) reduction(+ : bad_edges, bad_wall, moved) if (exec == Exec::kParallel)
  for (std::int32_t v = 0; v < inner; ++v) {
    if (map[v] != v) ++moved;
    for (Generator t = 0; t < rank; ++t) {
      const std::int32_t u = ball->Right(v, t);
      if (u == CayleyBall::kOutside || u >= inner) continue;
      const std::int32_t want = !in_h[v] ? u : map[v] < 0 ? CayleyBall::kOutside : ball->Right(map[v], f[t]);
      if (map[u] != want) ++bad_edges;
      if (ball->Left(v, s) == u && (map[v] != v || map[u] != u)) ++bad_wall;
    }
  }

  bool fixes_a = true;
  for (std::int32_t v : HalfspaceA(ball->system(), s, *ball)) {
    if (v < inner && map[v] != v) fixes_a = false;
  }

  AutomorphismChecks c;
  c.bijection = bijection;
  c.edge_labels = bad_edges == 0;
  c.fixes_a = fixes_a;
  c.strict_wall = bad_wall == 0;
  c.non_identity = moved > 0;
  return c;
}

PartialAutomorphism BuildWallFixingAutomorphism(const CoxeterSystem& system,
                                                const StarFixingWitness& witness, int radius,
                                                const HOptions& options, Exec exec) {
  const CoxeterMatrix& m = system.matrix();
  const int rank = system.rank();
  if (witness.s < 0 || witness.s >= rank || static_cast<int>(witness.f.size()) != rank ||
      !PreservesLabels(m, witness.f) || !IsStarFixing(m, witness.s, witness.f)) {
    throw Error(ErrorCode::kNotAWitness, "not a star-fixing diagram automorphism");
  }
  if (radius < 2) throw Error(ErrorCode::kRadiusTooSmall, "automorphism needs radius at least 2");
  BallOptions bo;
  bo.max_vertices = options.max_vertices;
  auto ball = std::make_shared<const CayleyBall>(EnumerateBall(system, radius, bo));
  const HSet h = ComputeH(ball, witness.s, options);
  const auto& f = witness.f;

  PartialAutomorphism phi;
  phi.witness = witness;
  phi.ball = ball;
  phi.valid_radius = radius - 1;
  const std::int32_t n = static_cast<std::int32_t>(ball->size());
  phi.in_h.assign(n, false);
  for (std::int32_t v : h.members) phi.in_h[v] = true;

  // f-hat by levels: the normal word of v is that of its prefix plus one letter.
  std::vector<std::int32_t> fhat(n, CayleyBall::kOutside);
  fhat[0] = 0;
  for (std::int32_t v = 1; v < n; ++v) {
    const Generator last = ball->word(v).back();
    fhat[v] = ball->Right(fhat[ball->Right(v, last)], f[last]);
  }
  phi.map.resize(n);
  for (std::int32_t v = 0; v < n; ++v) phi.map[v] = phi.in_h[v] ? fhat[v] : v;

  phi.checks = VerifyPartialAutomorphism(phi, exec);
  return phi;
}

}  // namespace coxwall
