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

#ifndef COXWALL_COXETER_MATRIX_HPP_
#define COXWALL_COXETER_MATRIX_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace coxwall {

// Entry m_st of a Coxeter matrix: a positive integer or the symbol infinity.
class CoxeterLabel {
 public:
  // Implicit so that small matrices can be written as nested brace lists.
  CoxeterLabel(int m) : value_(m) {}  // NOLINT(google-explicit-constructor)
  static CoxeterLabel Infinity() { return CoxeterLabel(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  // Precondition: is_finite().
  int value() const { return *value_; }

  std::string ToString() const;
  friend bool operator==(const CoxeterLabel&, const CoxeterLabel&) = default;

 private:
  CoxeterLabel() = default;
  std::optional<int> value_;
};

inline const CoxeterLabel kInf = CoxeterLabel::Infinity();

class CoxeterMatrix {
 public:
  // Throws Error(kMatrixShape) unless the labels form a symmetric matrix with
  // ones exactly on the diagonal and entries >= 2 or infinity elsewhere.
  CoxeterMatrix(int rank, std::vector<CoxeterLabel> labels);
  CoxeterMatrix(std::initializer_list<std::initializer_list<CoxeterLabel>> rows);

  int rank() const { return rank_; }
  const CoxeterLabel& at(int s, int t) const { return labels_[s * rank_ + t]; }
  bool commute(int s, int t) const { return at(s, t) == CoxeterLabel(2); }

  // Matrix of the special subsystem on `subset` (in the given order).
  CoxeterMatrix Restrict(std::span<const int> subset) const;

  // {"rank": n, "labels": [[...]]} with infinity written as "inf".
  nlohmann::json ToJson() const;
  static CoxeterMatrix FromJson(const nlohmann::json& j);

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  int rank_;
  std::vector<CoxeterLabel> labels_;
};

}  // namespace coxwall

#endif  // COXWALL_COXETER_MATRIX_HPP_
