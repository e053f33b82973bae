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

#include "coxwall/walls.hpp"

#include <algorithm>

#include "coxwall/error.hpp"

namespace coxwall {
namespace {

Word Concat(std::span<const Generator> a, std::span<const Generator> b) {
  Word w(a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

Word Reversed(std::span<const Generator> a) { return Word(a.rbegin(), a.rend()); }

// ShortLex word of x^-1 y.
Word QuotientWord(const CoxeterSystem& sys, std::span<const Generator> x,
                  std::span<const Generator> y) {
  return sys.ShortLexFromLeftKey(sys.LeftKey(Concat(Reversed(x), y)));
}

// Canonical roots of the walls crossed along the geodesic x -> y.
std::vector<FieldVec> CrossedRoots(const CoxeterSystem& sys, std::span<const Generator> x,
                                   std::span<const Generator> path) {
  std::vector<FieldVec> out;
  out.reserve(path.size());
  Word prefix(x.begin(), x.end());
  for (Generator r : path) {
    out.push_back(CanonicalRoot(sys.RootImage(prefix, r)));
    prefix.push_back(r);
  }
  return out;
}

int PairingSign(const CoxeterSystem& sys, std::span<const std::int64_t> root,
                std::span<const std::int64_t> point) {
  const int d = sys.field().degree();
  FieldElem acc(d, 0);
  for (int t = 0; t < sys.rank(); ++t) {
    sys.field().AddMul(acc, root.subspan(t * d, d), point.subspan(t * d, d));
  }
  return sys.field().Sign(acc);
}

}  // namespace

FieldVec CanonicalRoot(FieldVec root) {
  for (std::int64_t v : root) {
    if (v == 0) continue;
    if (v < 0) {
      for (auto& c : root) c = -c;
    }
    break;
  }
  return root;
}

Wall Wall::FromEdge(const CoxeterSystem& system, std::span<const Generator> u, Generator s) {
  system.CheckWord(u);
  system.CheckWord(std::span<const Generator>(&s, 1));
  FieldVec root = CanonicalRoot(system.RootImage(u, s));
  const int sign = system.RootSign(root);
  return Wall(system, std::move(root), Word(u.begin(), u.end()), s, sign);
}

GroupElement Wall::reflection() const {
  Word w = witness_;
  w.push_back(gen_);
  w.insert(w.end(), witness_.rbegin(), witness_.rend());
  return NormalForm(system_, w);
}

Side SideOfPoint(const Wall& wall, std::span<const std::int64_t> left_key) {
  const int p = PairingSign(wall.system(), wall.root(), left_key);
  if (p == 0) throw std::logic_error("SideOfPoint: point lies on a wall");
  return p * wall.root_sign_ > 0 ? Side::kPlus : Side::kMinus;
}

Side SideOf(const Wall& wall, const GroupElement& w) {
  wall.system().RequireSame(w.system());
  return SideOfPoint(wall, w.system().LeftKey(w.normal_word()));
}

bool HalfSpace::Contains(const GroupElement& w) const { return SideOf(wall, w) == sign; }

std::vector<Wall> WallsSeparating(const GroupElement& x, const GroupElement& y) {
  x.system().RequireSame(y.system());
  const CoxeterSystem& sys = x.system();
  const Word path = QuotientWord(sys, x.normal_word(), y.normal_word());
  std::vector<Wall> out;
  Word prefix = x.normal_word();
  for (Generator r : path) {
    out.push_back(Wall::FromEdge(sys, prefix, r));
    prefix.push_back(r);
  }
  return out;
}

bool IsBetween(const GroupElement& z, const GroupElement& x, const GroupElement& y) {
  z.system().RequireSame(x.system());
  z.system().RequireSame(y.system());
  auto sorted = [](std::vector<Wall> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto xy = sorted(WallsSeparating(x, y));
  const auto xz = sorted(WallsSeparating(x, z));
  const auto zy = sorted(WallsSeparating(z, y));
  std::vector<Wall> both;
  std::set_intersection(xz.begin(), xz.end(), zy.begin(), zy.end(), std::back_inserter(both));
  if (!both.empty()) return false;
  std::vector<Wall> uni;
  std::set_union(xz.begin(), xz.end(), zy.begin(), zy.end(), std::back_inserter(uni));
  return uni == xy;
}

nlohmann::json AxiomMReport::ToJson(const CayleyBall& ball) const {
  nlohmann::json v = nlohmann::json::array();
  const auto& sys = ball.system();
  for (const auto& viol : violations) {
    v.push_back({{"x", sys.FormatWord(ball.word(viol.x))},
                 {"y", sys.FormatWord(ball.word(viol.y))},
                 {"separating", viol.separating},
                 {"length", viol.length},
                 {"reason", viol.reason}});
  }
  return {{"pairs_checked", pairs_checked},
          {"max_separating", max_separating},
          {"violations", std::move(v)}};
}

namespace {

std::vector<AxiomMViolation> CheckPairsFrom(const CayleyBall& ball, std::int32_t x,
                                            int* max_sep) {
  const CoxeterSystem& sys = ball.system();
  const auto n = static_cast<std::int32_t>(ball.size());
  std::vector<AxiomMViolation> out;
  const auto px = ball.key(ball.Inverse(x));
  for (std::int32_t y = x + 1; y < n; ++y) {
    const Word path = QuotientWord(sys, ball.word(x), ball.word(y));
    std::vector<FieldVec> roots = CrossedRoots(sys, ball.word(x), path);
    const int len = static_cast<int>(path.size());
    const auto py = ball.key(ball.Inverse(y));
    std::string reason;
    for (const auto& r : roots) {
      const int rs = sys.RootSign(r);
      if (PairingSign(sys, r, px) * rs == PairingSign(sys, r, py) * rs) {
        reason = "wall does not separate";
        break;
      }
    }
    std::sort(roots.begin(), roots.end());
    const int distinct =
        static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
    if (reason.empty()) {
      if (distinct == 0) {
        reason = "no separating wall";
      } else if (distinct != len) {
        reason = "separating wall count differs from length";
      }
    }
    *max_sep = std::max(*max_sep, distinct);
    if (!reason.empty()) out.push_back({x, y, distinct, len, reason});
  }
  return out;
}

}  // namespace

AxiomMReport CheckAxiomM(const CayleyBall& ball, Exec exec) {
  AxiomMReport report;
  const auto n = static_cast<std::int32_t>(ball.size());
  report.pairs_checked = static_cast<std::int64_t>(n) * (n - 1) / 2;
  std::vector<std::vector<AxiomMViolation>> per_x(n);
  std::vector<int> max_per_x(n, 0);
  if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int32_t x = 0; x < n; ++x) per_x[x] = CheckPairsFrom(ball, x, &max_per_x[x]);
  } else {
    for (std::int32_t x = 0; x < n; ++x) per_x[x] = CheckPairsFrom(ball, x, &max_per_x[x]);
  }
  for (std::int32_t x = 0; x < n; ++x) {
    report.max_separating = std::max(report.max_separating, max_per_x[x]);
    for (auto& v : per_x[x]) report.violations.push_back(std::move(v));
  }
  return report;
}

GeodesicReport IsGeodesicPath(const CoxeterSystem& system, std::span<const Generator> word) {
  system.CheckWord(word);
  GeodesicReport report;
  Word prefix;
  for (Generator s : word) {
    report.crossed.push_back(Wall::FromEdge(system, prefix, s));
    prefix.push_back(s);
  }
  for (size_t j = 1; j < report.crossed.size() && !report.repeated; ++j) {
    for (size_t i = 0; i < j; ++i) {
      if (report.crossed[i] == report.crossed[j]) {
        report.repeated = {static_cast<int>(i), static_cast<int>(j)};
        break;
      }
    }
  }
  report.geodesic = !report.repeated.has_value();
  return report;
}

namespace {

// True iff sorted `a` and sorted `b` are disjoint and their union is `whole`.
bool DisjointUnionEquals(const std::vector<FieldVec>& a, const std::vector<FieldVec>& b,
                         const std::vector<FieldVec>& whole) {
  if (a.size() + b.size() != whole.size()) return false;
  std::vector<FieldVec> merged;
  merged.reserve(whole.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  return merged == whole;
}

}  // namespace

WallspaceGraphResult WallspaceGraph(const CayleyBall& ball, Exec exec) {
  if (ball.radius() < 2 && !ball.exhausted()) {
    throw Error(ErrorCode::kRadiusTooSmall, "wall-space graph needs radius >= 2");
  }
  const CoxeterSystem& sys = ball.system();
  const auto n = static_cast<std::int32_t>(ball.size());
  WallspaceGraphResult result;
  std::int32_t core = n;
  result.core_radius = ball.num_levels() - 1;
  if (!ball.exhausted()) {
    result.core_radius = ball.radius() - 1;
    core = ball.level_begin(result.core_radius + 1);
  }

  // sep[x * n + z] = sorted canonical roots of M(x, z), x in the core.
  std::vector<std::vector<FieldVec>> sep(static_cast<std::size_t>(core) * n);
  auto fill = [&](std::int32_t x) {
    for (std::int32_t z = 0; z < n; ++z) {
      auto roots = CrossedRoots(sys, ball.word(x), QuotientWord(sys, ball.word(x), ball.word(z)));
      std::sort(roots.begin(), roots.end());
      sep[static_cast<std::size_t>(x) * n + z] = std::move(roots);
    }
  };
  std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> found(core);
  auto scan = [&](std::int32_t x) {
    for (std::int32_t y = x + 1; y < core; ++y) {
      const auto& whole = sep[static_cast<std::size_t>(x) * n + y];
      bool adjacent = true;
      for (std::int32_t z = 0; z < n && adjacent; ++z) {
        if (z == x || z == y) continue;
        if (DisjointUnionEquals(sep[static_cast<std::size_t>(x) * n + z],
                                sep[static_cast<std::size_t>(y) * n + z], whole)) {
          adjacent = false;
        }
      }
      if (adjacent) found[x].emplace_back(x, y);
    }
  };
  if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int32_t x = 0; x < core; ++x) fill(x);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int32_t x = 0; x < core; ++x) scan(x);
  } else {
    for (std::int32_t x = 0; x < core; ++x) fill(x);
    for (std::int32_t x = 0; x < core; ++x) scan(x);
  }
  for (auto& f : found) result.recovered.insert(result.recovered.end(), f.begin(), f.end());

  for (const auto& e : ball.edges()) {
    if (e.from < core && e.to < core) {
      result.cayley.emplace_back(std::min(e.from, e.to), std::max(e.from, e.to));
    }
  }
  std::sort(result.cayley.begin(), result.cayley.end());
  result.matches = result.recovered == result.cayley;
  return result;
}

}  // namespace coxwall
