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

#ifndef COXWALL_CATALOG_HPP_
#define COXWALL_CATALOG_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coxwall/coxeter_matrix.hpp"

// Coxeter matrices of standard and example systems.
namespace coxwall::catalog {

CoxeterMatrix TypeA(int n);
CoxeterMatrix TypeB(int n);
CoxeterMatrix TypeD(int n);
CoxeterMatrix TypeE(int n);
CoxeterMatrix TypeF4();
CoxeterMatrix TypeH(int n);
// I2(m); m == 0 means infinity.
CoxeterMatrix Dihedral(int m);
// n-fold product of A1 (all labels 2).
CoxeterMatrix A1Power(int n);
// Affine A_n, rank n + 1. n == 1 gives the infinite dihedral group.
CoxeterMatrix AffineA(int n);
// Rank 3 with labels m01 = p, m12 = q, m02 = r (0 for infinity).
CoxeterMatrix Triangle(int p, int q, int r);
// Label `label` on the edges of a graph on n vertices, infinity elsewhere.
// This is W(2 * label, graph).
CoxeterMatrix FromGraph(int n, const std::vector<std::pair<int, int>>& edges, int label);
// K_{3,3} with parts {0,1,2} and {3,4,5}.
CoxeterMatrix KThreeThree(int label);
// The cycle 0-1-...-(n-1)-0.
CoxeterMatrix Cycle(int n, int label);
// Rank 7 system s1 s2 s3 t1 t2 t3 u: infinite labels inside {s} and
// inside {t}, 3 between s and t, 5 between t and u, 2 between s and u.
CoxeterMatrix HBar3();
std::vector<std::string> HBar3Names();

// Parses "A3", "B4", "D5", "E6", "F4", "G2", "H3", "I2(5)", "I2(inf)", "A1^3",
// "~A2", "K33" (W(6, K_{3,3})), "C5" (W(4, C_5)), "Hbar3", "tri(2,3,7)". Throws Error(kParseError).
CoxeterMatrix ByName(std::string_view name);
// Generator names for ByName(name), empty for the defaults.
std::vector<std::string> NamesFor(std::string_view name);

}  // namespace coxwall::catalog

#endif  // COXWALL_CATALOG_HPP_
