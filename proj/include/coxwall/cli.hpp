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

#ifndef COXWALL_CLI_HPP_
#define COXWALL_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "coxwall/coxeter_system.hpp"
#include "json.hpp"

namespace coxwall {

struct RunConfig {
  std::string command;
  // JSON file {"rank", "labels", "names"?} or a catalog name such as "K33".
  std::string system;
  // JSON file {"vertices", "edges"} for a link graph.
  std::string graph;
  int radius = -1;
  int k = 0;
  int p = 0;
  int q = 0;
  int rank = 3;
  int margin = 2;
  std::string word;
  // Generator name or index; permutation as a JSON file, or inline JSON:
  // [images...] or {"name": "name"}.
  std::string s;
  std::string f;
  bool verify = false;
  bool list = false;
  bool serial = false;
  std::string format = "json";
  std::string out;
  std::size_t max_vertices = 0;  // 0: the default bound
};

// Exit status: 0 success, 1 a check failed or a resource bound was hit,
// 2 bad input.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunMain(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Throws Error(kParseError) if the argument is neither a readable file nor a
// catalog name.
CoxeterSystem LoadSystem(const std::string& source);
nlohmann::json SystemToJson(const CoxeterSystem& system);
CoxeterSystem SystemFromJson(const nlohmann::json& j);

}  // namespace coxwall

#endif  // COXWALL_CLI_HPP_
