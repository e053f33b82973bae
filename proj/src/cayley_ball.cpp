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

#include "coxwall/cayley_ball.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "coxwall/error.hpp"

namespace coxwall {

std::uint64_t HashKey(std::span<const std::int64_t> key) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::int64_t v : key) {
    std::uint64_t x = static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    h ^= x ^ (x >> 31);
  }
  return h;
}

std::size_t DefaultMaxVertices() {
  if (const char* env = std::getenv("COXWALL_MAX_VERTICES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2'000'000;
}

CayleyBall::CayleyBall(CoxeterSystem system)
    : system_(std::move(system)), rank_(system_.rank()), vec_size_(system_.vec_size()) {}

std::int32_t CayleyBall::Left(std::int32_t v, Generator s) const {
  const std::int32_t r = Right(inverse_[v], s);
  return r == kOutside ? kOutside : inverse_[r];
}

std::size_t CayleyBall::Slot(std::span<const std::int64_t> key) const {
  const std::size_t mask = table_.size() - 1;
  std::size_t i = HashKey(key) & mask;
  for (;;) {
    const std::int32_t v = table_[i];
    if (v < 0) return i;
    const auto* p = keys_.data() + static_cast<std::size_t>(v) * vec_size_;
    if (std::equal(key.begin(), key.end(), p)) return i;
    i = (i + 1) & mask;
  }
}

void CayleyBall::Rehash(std::size_t capacity) {
  table_.assign(capacity, -1);
  for (std::int32_t v = 0; v < static_cast<std::int32_t>(words_.size()); ++v) {
    table_[Slot(key(v))] = v;
  }
}

void CayleyBall::IndexInsert(std::int32_t v) {
  if (2 * (words_.size() + 1) > table_.size()) {
    Rehash(std::max<std::size_t>(64, table_.size() * 2));
  }
  table_[Slot(key(v))] = v;
}

std::optional<std::int32_t> CayleyBall::Find(std::span<const std::int64_t> k) const {
  if (k.size() != vec_size_ || table_.empty()) return std::nullopt;
  const std::int32_t v = table_[Slot(k)];
  if (v < 0) return std::nullopt;
  return v;
}

std::optional<std::int32_t> CayleyBall::Find(const GroupElement& g) const {
  system_.RequireSame(g.system());
  return Find(g.key());
}

GroupElement CayleyBall::Element(std::int32_t v) const {
  return MakeElement(system_, words_[v], FieldVec(key(v).begin(), key(v).end()));
}

CayleyBall EnumerateBall(const CoxeterSystem& system, int radius, const BallOptions& options) {
  if (radius < 0) throw Error(ErrorCode::kRadiusTooSmall, "radius must be nonnegative");
  const int rank = system.rank();
  const std::size_t vs = system.vec_size();
  CayleyBall ball(system);
  ball.radius_ = radius;
  ball.words_.push_back({});
  const FieldVec x0 = system.BasePoint();
  ball.keys_.insert(ball.keys_.end(), x0.begin(), x0.end());
  ball.right_.assign(rank, CayleyBall::kOutside);
  ball.inverse_.push_back(0);
  ball.level_offsets_ = {0, 1};
  ball.Rehash(64);

  for (int k = 0; k < radius; ++k) {
    const std::int32_t b = ball.level_offsets_[k];
    const std::int32_t e = ball.level_offsets_[k + 1];

    std::vector<std::pair<std::int32_t, Generator>> pending;
    for (std::int32_t i = b; i < e; ++i) {
      for (Generator s = 0; s < rank; ++s) {
        if (ball.Right(i, s) == CayleyBall::kOutside) pending.emplace_back(i, s);
      }
    }
    std::vector<std::int64_t> cand(pending.size() * vs);
    const std::int64_t np = static_cast<std::int64_t>(pending.size());
#pragma omp parallel for schedule(static) if (options.parallel)
    for (std::int64_t p = 0; p < np; ++p) {
      auto out = std::span<std::int64_t>(cand).subspan(p * vs, vs);
      const auto src = ball.key(pending[p].first);
      std::copy(src.begin(), src.end(), out.begin());
      system.ActDual(pending[p].second, out);
    }

    for (std::size_t p = 0; p < pending.size(); ++p) {
      const auto [i, s] = pending[p];
      const auto ck = std::span<const std::int64_t>(cand).subspan(p * vs, vs);
      std::int32_t j;
      if (auto found = ball.Find(ck)) {
        j = *found;
      } else {
        if (ball.words_.size() >= options.max_vertices) {
          throw Error(ErrorCode::kResourceLimit,
                      "ball exceeds " + std::to_string(options.max_vertices) + " vertices");
        }
        j = static_cast<std::int32_t>(ball.words_.size());
        Word w = ball.words_[i];
        w.push_back(s);
        ball.words_.push_back(std::move(w));
        ball.keys_.insert(ball.keys_.end(), ck.begin(), ck.end());
        ball.right_.insert(ball.right_.end(), rank, CayleyBall::kOutside);
        ball.inverse_.push_back(-1);
        ball.IndexInsert(j);
      }
      ball.right_[i * rank + s] = j;
      ball.right_[j * rank + s] = i;
    }

    const std::int32_t n = static_cast<std::int32_t>(ball.words_.size());
    if (n == e) {
      ball.exhausted_ = true;
      break;
    }

    // Inverses: key of v^-1 is v x0.
#pragma omp parallel for schedule(static) if (options.parallel)
    for (std::int32_t v = e; v < n; ++v) {
      const FieldVec y = system.LeftKey(ball.words_[v]);
      const auto found = ball.Find(y);
      ball.inverse_[v] = found ? *found : -1;
    }
    for (std::int32_t v = e; v < n; ++v) {
      if (ball.inverse_[v] < e) throw std::logic_error("EnumerateBall: inverse outside level");
    }

    // ShortLex: first letter is the least left descent a of v, i.e. the least
    // right descent of v^-1; the rest is the normal word of a*v.
    std::vector<Word> nf(n - e);
    for (std::int32_t v = e; v < n; ++v) {
      const std::int32_t iv = ball.inverse_[v];
      for (Generator a = 0; a < rank; ++a) {
        const std::int32_t down = ball.Right(iv, a);
        if (down != CayleyBall::kOutside && down < e) {
          Word w = {a};
          const Word& rest = ball.words_[ball.inverse_[down]];
          w.insert(w.end(), rest.begin(), rest.end());
          nf[v - e] = std::move(w);
          break;
        }
      }
    }

    std::vector<std::int32_t> order(n - e);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::int32_t x, std::int32_t y) { return nf[x] < nf[y]; });
    std::vector<std::int32_t> new_pos(n - e);
    for (std::int32_t p = 0; p < n - e; ++p) new_pos[order[p]] = e + p;
    auto remap = [&](std::int32_t v) { return v >= e ? new_pos[v - e] : v; };

    std::vector<std::int64_t> keys_level(static_cast<std::size_t>(n - e) * vs);
    std::vector<std::int32_t> right_level(static_cast<std::size_t>(n - e) * rank);
    std::vector<std::int32_t> inverse_level(n - e);
    for (std::int32_t p = 0; p < n - e; ++p) {
      const std::int32_t old = e + order[p];
      ball.words_[e + p] = std::move(nf[order[p]]);
      std::copy_n(ball.keys_.begin() + static_cast<std::size_t>(old) * vs, vs,
                  keys_level.begin() + static_cast<std::size_t>(p) * vs);
      for (Generator s = 0; s < rank; ++s) {
        right_level[p * rank + s] = ball.right_[old * rank + s];
      }
      inverse_level[p] = remap(ball.inverse_[old]);
    }
    std::copy(keys_level.begin(), keys_level.end(),
              ball.keys_.begin() + static_cast<std::size_t>(e) * vs);
    std::copy(right_level.begin(), right_level.end(), ball.right_.begin() + e * rank);
    std::copy(inverse_level.begin(), inverse_level.end(), ball.inverse_.begin() + e);
    for (std::int32_t i = b; i < e; ++i) {
      for (Generator s = 0; s < rank; ++s) {
        auto& r = ball.right_[i * rank + s];
        if (r != CayleyBall::kOutside) r = remap(r);
      }
    }
    for (auto& slot : ball.table_) {
      if (slot >= e) slot = new_pos[slot - e];
    }
    ball.level_offsets_.push_back(n);
  }

  if (!ball.exhausted_) {
    // A last level with no outward edges means W itself has been reached.
    const std::int32_t b = ball.level_offsets_[ball.level_offsets_.size() - 2];
    const std::int32_t e = ball.level_offsets_.back();
    ball.exhausted_ = std::none_of(ball.right_.begin() + b * rank, ball.right_.begin() + e * rank,
                                   [](std::int32_t r) { return r == CayleyBall::kOutside; });
  }

  const std::int32_t total = static_cast<std::int32_t>(ball.words_.size());
  for (std::int32_t v = 0; v < total; ++v) {
    for (Generator s = 0; s < rank; ++s) {
      const std::int32_t u = ball.Right(v, s);
      if (u != CayleyBall::kOutside && ball.length(u) == ball.length(v) + 1) {
        ball.edges_.push_back({v, s, u});
      }
    }
  }
  return ball;
}

CayleyBall EnumerateGroup(const CoxeterSystem& system, const BallOptions& options) {
  CayleyBall ball = EnumerateBall(system, INT_MAX - 1, options);
  ball.radius_ = ball.num_levels() - 1;
  return ball;
}

nlohmann::json CayleyBall::ToJson() const {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& w : words_) vertices.push_back(system_.FormatWord(w));
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : edges_) {
    edges.push_back({system_.FormatWord(words_[e.from]), system_.generator_names()[e.gen]});
  }
  return {{"radius", radius_}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

std::string CayleyBall::ToDot() const {
  if (size() > 10'000) {
    throw Error(ErrorCode::kResourceLimit, "DOT export is limited to 10^4 vertices");
  }
  std::ostringstream out;
  out << "graph cayley_ball {\n";
  for (std::size_t v = 0; v < size(); ++v) {
    out << "  v" << v << " [label=\"" << system_.FormatWord(words_[v]) << "\"];\n";
  }
  for (const auto& e : edges_) {
    out << "  v" << e.from << " -- v" << e.to << " [label=\""
        << system_.generator_names()[e.gen] << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace coxwall
