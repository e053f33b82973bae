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

#include "coxwall/coxeter_matrix.hpp"

#include "coxwall/error.hpp"

namespace coxwall {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMatrixShape: return "MatrixShape";
    case ErrorCode::kUnknownGenerator: return "UnknownGenerator";
    case ErrorCode::kSystemMismatch: return "SystemMismatch";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kRadiusTooSmall: return "RadiusTooSmall";
    case ErrorCode::kNotFinite: return "NotFinite";
    case ErrorCode::kBadRank: return "BadRank";
    case ErrorCode::kUnknownCellulation: return "UnknownCellulation";
    case ErrorCode::kAngleRange: return "AngleRange";
    case ErrorCode::kOddK: return "OddK";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kOddP: return "OddP";
    case ErrorCode::kNotAWitness: return "NotAWitness";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

std::string CoxeterLabel::ToString() const {
  return is_infinite() ? "inf" : std::to_string(*value_);
}

CoxeterMatrix::CoxeterMatrix(int rank, std::vector<CoxeterLabel> labels)
    : rank_(rank), labels_(std::move(labels)) {
  if (rank_ < 1) throw Error(ErrorCode::kMatrixShape, "rank must be positive");
  if (labels_.size() != static_cast<size_t>(rank_) * rank_) {
    throw Error(ErrorCode::kMatrixShape, "expected a square label array");
  }
  for (int s = 0; s < rank_; ++s) {
    if (at(s, s) != CoxeterLabel(1)) {
      throw Error(ErrorCode::kMatrixShape,
                  "diagonal entry " + std::to_string(s) + " is not 1");
    }
    for (int t = 0; t < rank_; ++t) {
      if (s == t) continue;
      if (at(s, t) != at(t, s)) {
        throw Error(ErrorCode::kMatrixShape, "matrix is not symmetric");
      }
      if (at(s, t).is_finite() && at(s, t).value() < 2) {
        throw Error(ErrorCode::kMatrixShape, "off-diagonal label below 2");
      }
    }
  }
}

CoxeterMatrix::CoxeterMatrix(
    std::initializer_list<std::initializer_list<CoxeterLabel>> rows)
    : CoxeterMatrix(static_cast<int>(rows.size()), [&] {
        std::vector<CoxeterLabel> flat;
        for (const auto& row : rows) {
          if (row.size() != rows.size()) {
            throw Error(ErrorCode::kMatrixShape, "ragged label rows");
          }
          flat.insert(flat.end(), row.begin(), row.end());
        }
        return flat;
      }()) {}

CoxeterMatrix CoxeterMatrix::Restrict(std::span<const int> subset) const {
  std::vector<CoxeterLabel> out;
  out.reserve(subset.size() * subset.size());
  for (int s : subset) {
    for (int t : subset) out.push_back(at(s, t));
  }
  return CoxeterMatrix(static_cast<int>(subset.size()), std::move(out));
}

nlohmann::json CoxeterMatrix::ToJson() const {
  nlohmann::json rows = nlohmann::json::array();
  for (int s = 0; s < rank_; ++s) {
    nlohmann::json row = nlohmann::json::array();
    for (int t = 0; t < rank_; ++t) {
      if (at(s, t).is_infinite()) {
        row.push_back("inf");
      } else {
        row.push_back(at(s, t).value());
      }
    }
    rows.push_back(std::move(row));
  }
  return {{"rank", rank_}, {"labels", std::move(rows)}};
}

CoxeterMatrix CoxeterMatrix::FromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("labels") ||
      !j["rank"].is_number_integer() || !j["labels"].is_array()) {
    throw Error(ErrorCode::kParseError, "expected {\"rank\": n, \"labels\": [[...]]}");
  }
  const int rank = j["rank"].get<int>();
  const auto& rows = j["labels"];
  if (rank < 1 || rows.size() != static_cast<size_t>(rank)) {
    throw Error(ErrorCode::kMatrixShape, "label rows do not match rank");
  }
  std::vector<CoxeterLabel> flat;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<size_t>(rank)) {
      throw Error(ErrorCode::kMatrixShape, "label row length does not match rank");
    }
    for (const auto& v : row) {
      if (v.is_string() && v.get<std::string>() == "inf") {
        flat.push_back(kInf);
      } else if (v.is_number_integer()) {
        flat.emplace_back(v.get<int>());
      } else {
        throw Error(ErrorCode::kParseError, "label must be an integer or \"inf\"");
      }
    }
  }
  return CoxeterMatrix(rank, std::move(flat));
}

}  // namespace coxwall
