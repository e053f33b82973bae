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

#include "coxwall/catalog.hpp"

#include <charconv>

#include "coxwall/error.hpp"

namespace coxwall::catalog {
namespace {

CoxeterLabel L(int m) { return m == 0 ? kInf : CoxeterLabel(m); }

// Matrix with all off-diagonal labels `fill`, then the listed overrides.
CoxeterMatrix Build(int n, int fill, const std::vector<std::tuple<int, int, int>>& set) {
  std::vector<CoxeterLabel> labels(static_cast<size_t>(n) * n, L(fill));
  for (int i = 0; i < n; ++i) labels[i * n + i] = CoxeterLabel(1);
  for (auto [a, b, m] : set) {
    labels[a * n + b] = L(m);
    labels[b * n + a] = L(m);
  }
  return CoxeterMatrix(n, std::move(labels));
}

std::vector<std::tuple<int, int, int>> Path(int n, int m) {
  std::vector<std::tuple<int, int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1, m);
  return e;
}

void RequireRank(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kBadRank, what);
}

int ParseInt(std::string_view s) {
  if (s == "inf") return 0;
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    throw Error(ErrorCode::kParseError, "bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

CoxeterMatrix TypeA(int n) {
  RequireRank(n >= 1, "A_n needs n >= 1");
  return Build(n, 2, Path(n, 3));
}

CoxeterMatrix TypeB(int n) {
  RequireRank(n >= 2, "B_n needs n >= 2");
  auto e = Path(n, 3);
  std::get<2>(e.back()) = 4;
  return Build(n, 2, e);
}

CoxeterMatrix TypeD(int n) {
  RequireRank(n >= 4, "D_n needs n >= 4");
  auto e = Path(n - 1, 3);
  e.emplace_back(n - 3, n - 1, 3);
  return Build(n, 2, e);
}

CoxeterMatrix TypeE(int n) {
  RequireRank(n >= 6 && n <= 8, "E_n needs 6 <= n <= 8");
  // Chain 0-2-3-4-...-(n-1) with 1 attached to 3.
  std::vector<std::tuple<int, int, int>> e = {{0, 2, 3}, {1, 3, 3}};
  for (int i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1, 3);
  return Build(n, 2, e);
}

CoxeterMatrix TypeF4() { return Build(4, 2, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}}); }

CoxeterMatrix TypeH(int n) {
  RequireRank(n >= 2 && n <= 4, "H_n needs 2 <= n <= 4");
  auto e = Path(n, 3);
  std::get<2>(e.front()) = 5;
  return Build(n, 2, e);
}

CoxeterMatrix Dihedral(int m) { return Build(2, m, {}); }

CoxeterMatrix A1Power(int n) { return Build(n, 2, {}); }

CoxeterMatrix AffineA(int n) {
  RequireRank(n >= 1, "affine A_n needs n >= 1");
  if (n == 1) return Dihedral(0);
  auto e = Path(n + 1, 3);
  e.emplace_back(0, n, 3);
  return Build(n + 1, 2, e);
}

CoxeterMatrix Triangle(int p, int q, int r) { return Build(3, 2, {{0, 1, p}, {1, 2, q}, {0, 2, r}}); }

CoxeterMatrix FromGraph(int n, const std::vector<std::pair<int, int>>& edges, int label) {
  std::vector<std::tuple<int, int, int>> e;
  for (auto [a, b] : edges) e.emplace_back(a, b, label);
  return Build(n, 0, e);
}

CoxeterMatrix KThreeThree(int label) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) e.emplace_back(a, b);
  }
  return FromGraph(6, e, label);
}

CoxeterMatrix Cycle(int n, int label) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return FromGraph(n, e, label);
}

CoxeterMatrix HBar3() {
  std::vector<std::tuple<int, int, int>> e;
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) e.emplace_back(i, j, 3);
    e.emplace_back(i, 6, 2);
    e.emplace_back(3 + i, 6, 5);
  }
  return Build(7, 0, e);
}

std::vector<std::string> HBar3Names() { return {"s1", "s2", "s3", "t1", "t2", "t3", "u"}; }

CoxeterMatrix ByName(std::string_view name) {
  auto bad = [&]() -> CoxeterMatrix {
    throw Error(ErrorCode::kParseError, "unknown system '" + std::string(name) + "'");
  };
  if (name == "Hbar3") return HBar3();
  if (name == "K33") return KThreeThree(3);
  if (name == "F4") return TypeF4();
  if (name == "G2") return Dihedral(6);
  if (name.starts_with("I2(") && name.ends_with(")")) {
    return Dihedral(ParseInt(name.substr(3, name.size() - 4)));
  }
  if (name.starts_with("tri(") && name.ends_with(")")) {
    std::string_view body = name.substr(4, name.size() - 5);
    int v[3];
    for (int i = 0; i < 3; ++i) {
      const size_t comma = body.find(',');
      if ((comma == std::string_view::npos) != (i == 2)) return bad();
      v[i] = ParseInt(body.substr(0, comma));
      if (i < 2) body.remove_prefix(comma + 1);
    }
    return Triangle(v[0], v[1], v[2]);
  }
  if (name.starts_with("A1^")) return A1Power(ParseInt(name.substr(3)));
  if (name.starts_with("~A")) return AffineA(ParseInt(name.substr(2)));
  if (name.size() < 2) return bad();
  const int n = ParseInt(name.substr(1));
  switch (name[0]) {
    case 'A':
      return TypeA(n);
    case 'B':
      return TypeB(n);
    case 'C':
      return Cycle(n, 2);
    case 'D':
      return TypeD(n);
    case 'E':
      return TypeE(n);
    case 'H':
      return TypeH(n);
    default:
      return bad();
  }
}

std::vector<std::string> NamesFor(std::string_view name) {
  if (name == "Hbar3") return HBar3Names();
  if (name == "K33") return {"a", "b", "c", "d", "e", "f"};
  return {};
}

}  // namespace coxwall::catalog
