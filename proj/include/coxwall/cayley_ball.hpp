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

#ifndef COXWALL_CAYLEY_BALL_HPP_
#define COXWALL_CAYLEY_BALL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxwall/coxeter_system.hpp"
#include "json.hpp"

namespace coxwall {

// Vertex bound used when callers do not pass one: COXWALL_MAX_VERTICES if
// set in the environment, else 2,000,000.
std::size_t DefaultMaxVertices();

// Hash of a vertex key.
std::uint64_t HashKey(std::span<const std::int64_t> key);

struct BallOptions {
  std::size_t max_vertices = DefaultMaxVertices();
  bool parallel = true;
};

// Undirected Cayley edge {from, from*gen}, oriented so that
// length(to) = length(from) + 1.
struct CayleyEdge {
  std::int32_t from;
  Generator gen;
  std::int32_t to;
  friend bool operator==(const CayleyEdge&, const CayleyEdge&) = default;
};

// The ball {w : l(w) <= radius} of the Cayley graph (right multiplication
// edges), vertices in ShortLex order. Vertex 0 is the identity.
class CayleyBall {
 public:
  static constexpr std::int32_t kOutside = -1;

  const CoxeterSystem& system() const { return system_; }
  int radius() const { return radius_; }
  std::size_t size() const { return words_.size(); }
  // True when the enumeration exhausted W (so W is finite and equals the ball).
  bool exhausted() const { return exhausted_; }

  const Word& word(std::int32_t v) const { return words_[v]; }
  int length(std::int32_t v) const { return static_cast<int>(words_[v].size()); }
  // v*s, or kOutside if it is beyond the radius.
  std::int32_t Right(std::int32_t v, Generator s) const { return right_[v * rank_ + s]; }
  // s*v, or kOutside.
  std::int32_t Left(std::int32_t v, Generator s) const;
  std::int32_t Inverse(std::int32_t v) const { return inverse_[v]; }
  std::span<const std::int64_t> key(std::int32_t v) const {
    return {keys_.data() + static_cast<std::size_t>(v) * vec_size_, vec_size_};
  }

  std::optional<std::int32_t> Find(std::span<const std::int64_t> key) const;
  std::optional<std::int32_t> Find(const GroupElement& g) const;
  GroupElement Element(std::int32_t v) const;

  // Vertices of length k occupy [level_begin(k), level_begin(k + 1)).
  std::int32_t level_begin(int k) const { return level_offsets_[k]; }
  int num_levels() const { return static_cast<int>(level_offsets_.size()) - 1; }

  const std::vector<CayleyEdge>& edges() const { return edges_; }

  // {"radius", "vertices": [word...], "edges": [[word, generator]...]}.
  nlohmann::json ToJson() const;
  // Throws Error(kResourceLimit) above 10^4 vertices.
  std::string ToDot() const;

 private:
  friend CayleyBall EnumerateBall(const CoxeterSystem&, int, const BallOptions&);
  friend CayleyBall EnumerateGroup(const CoxeterSystem&, const BallOptions&);
  explicit CayleyBall(CoxeterSystem system);

  std::size_t Slot(std::span<const std::int64_t> key) const;
  void Rehash(std::size_t capacity);
  void IndexInsert(std::int32_t v);

  CoxeterSystem system_;
  int radius_ = 0;
  bool exhausted_ = false;
  int rank_;
  std::size_t vec_size_;
  std::vector<Word> words_;
  std::vector<std::int64_t> keys_;
  std::vector<std::int32_t> right_;
  std::vector<std::int32_t> inverse_;
  std::vector<std::int32_t> level_offsets_;
  std::vector<CayleyEdge> edges_;
  // Open addressing over vertex indices, keyed by keys_.
  std::vector<std::int32_t> table_;
};

// Throws Error(kResourceLimit) when the vertex count would exceed the bound.
// Deterministic: the result does not depend on options.parallel.
CayleyBall EnumerateBall(const CoxeterSystem& system, int radius,
                         const BallOptions& options = {});
// The whole group; for finite W only (else ResourceLimit is eventually hit).
CayleyBall EnumerateGroup(const CoxeterSystem& system, const BallOptions& options = {});

}  // namespace coxwall

#endif  // COXWALL_CAYLEY_BALL_HPP_
