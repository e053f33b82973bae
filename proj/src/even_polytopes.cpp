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

#include "coxwall/even_polytopes.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "coxwall/error.hpp"

namespace coxwall {
namespace {

std::uint32_t Mask(const Subset& t) {
  std::uint32_t m = 0;
  for (int s : t) m |= 1u << s;
  return m;
}

// All subsets of {0..n-1}, by size then lexicographically.
std::vector<Subset> SubsetsBySize(int n) {
  std::vector<Subset> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> sel(n, 0);
    std::fill(sel.begin(), sel.begin() + k, 1);
    do {
      Subset t;
      for (int i = 0; i < n; ++i) {
        if (sel[i]) t.push_back(i);
      }
      out.push_back(std::move(t));
    } while (std::prev_permutation(sel.begin(), sel.end()));
  }
  return out;
}

std::int32_t StripDescents(const CayleyBall& g, std::int32_t v, const Subset& T) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s : T) {
      const std::int32_t u = g.Right(v, s);
      if (u != CayleyBall::kOutside && g.length(u) < g.length(v)) {
        v = u;
        changed = true;
        break;
      }
    }
  }
  return v;
}

nlohmann::json NamesOf(const CoxeterSystem& sys, const Subset& t) {
  nlohmann::json j = nlohmann::json::array();
  for (int s : t) j.push_back(sys.generator_names()[s]);
  return j;
}

}  // namespace

std::vector<std::int64_t> CoxeterCell::FaceVector() const {
  std::vector<std::int64_t> out(system().rank() + 1, 0);
  for (const auto& f : faces_) ++out[f.dim()];
  return out;
}

std::optional<std::int32_t> CoxeterCell::FindFace(std::int32_t rep, const Subset& T) const {
  const std::pair<std::uint32_t, std::int32_t> key{Mask(T), rep};
  auto it = std::lower_bound(index_.begin(), index_.end(), key,
                             [](const auto& e, const auto& k) { return e.first < k; });
  if (it == index_.end() || it->first != key) return std::nullopt;
  return it->second;
}

std::int32_t CoxeterCell::MinimalRep(std::int32_t v, const Subset& T) const {
  return StripDescents(*group_, v, T);
}

nlohmann::json CoxeterCell::ToJson() const {
  const auto& sys = system();
  nlohmann::json faces = nlohmann::json::array();
  for (const auto& f : faces_) {
    faces.push_back({{"rep", sys.FormatWord(group_->word(f.rep))},
                     {"T", NamesOf(sys, f.T)},
                     {"dim", f.dim()}});
  }
  nlohmann::json covers = nlohmann::json::array();
  for (auto [i, j] : covers_) covers.push_back({i, j});
  return {{"faces", std::move(faces)}, {"covers", std::move(covers)}};
}

CoxeterCell BuildCoxeterCell(const CoxeterSystem& system) {
  const int r = system.rank();
  if (!IsFiniteSubset(system.matrix(), SubsetsBySize(r).back())) {
    throw Error(ErrorCode::kNotFinite, "Coxeter cell needs a finite group");
  }
  if (r > 31) throw Error(ErrorCode::kResourceLimit, "rank too large for a Coxeter cell");
  CoxeterCell cell;
  cell.group_ = std::make_shared<const CayleyBall>(EnumerateGroup(system));
  const CayleyBall& g = *cell.group_;
  const auto n = static_cast<std::int32_t>(g.size());
  for (const auto& T : SubsetsBySize(r)) {
    for (std::int32_t v = 0; v < n; ++v) {
      if (StripDescents(g, v, T) == v) {
        cell.index_.push_back({{Mask(T), v}, static_cast<std::int32_t>(cell.faces_.size())});
        cell.faces_.push_back({v, T});
      }
    }
  }
  std::sort(cell.index_.begin(), cell.index_.end());
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(cell.faces_.size()); ++i) {
    const CellFace& f = cell.faces_[i];
    for (int s = 0; s < r; ++s) {
      if (std::binary_search(f.T.begin(), f.T.end(), s)) continue;
      Subset up = f.T;
      up.insert(std::upper_bound(up.begin(), up.end(), s), s);
      const auto j = cell.FindFace(StripDescents(g, f.rep, up), up);
      if (!j) throw std::logic_error("face poset: missing upper face");
      cell.covers_.emplace_back(i, *j);
    }
  }
  std::sort(cell.covers_.begin(), cell.covers_.end());
  return cell;
}

std::vector<ParallelClass> ParallelClasses(const CoxeterCell& cell) {
  std::vector<ParallelClass> out;
  std::map<FieldVec, size_t> by_root;
  const auto& faces = cell.faces();
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(faces.size()); ++i) {
    if (faces[i].dim() != 1) continue;
    Wall wall = Wall::FromEdge(cell.system(), cell.group().word(faces[i].rep), faces[i].T[0]);
    auto [it, inserted] = by_root.emplace(wall.root(), out.size());
    if (inserted) out.push_back({std::move(wall), {}});
    out[it->second].edges.push_back(i);
  }
  return out;
}

bool VerifySimple(const CoxeterCell& cell) {
  const int r = cell.system().rank();
  const auto subsets = SubsetsBySize(r);
  for (std::int32_t v = 0; v < static_cast<std::int32_t>(cell.group().size()); ++v) {
    // The edges at v, one per generator.
    std::vector<std::int32_t> edge_rep(r);
    for (int s = 0; s < r; ++s) {
      edge_rep[s] = cell.MinimalRep(v, {s});
      if (!cell.FindFace(edge_rep[s], {s})) return false;
    }
    for (const auto& T : subsets) {
      const std::int32_t rep = cell.MinimalRep(v, T);
      const auto face = cell.FindFace(rep, T);
      if (!face || cell.faces()[*face].dim() != static_cast<int>(T.size())) return false;
      int inside = 0;
      for (int s = 0; s < r; ++s) {
        const bool in_t = std::binary_search(T.begin(), T.end(), s);
        const bool contained = in_t && cell.MinimalRep(edge_rep[s], T) == rep;
        if (contained != in_t) return false;
        inside += contained;
      }
      if (inside != static_cast<int>(T.size())) return false;
    }
  }
  return true;
}

std::int64_t BoundaryEulerCharacteristic(const CoxeterCell& cell) {
  const int r = cell.system().rank();
  std::int64_t chi = 0;
  for (const auto& f : cell.faces()) {
    if (f.dim() < r) chi += f.dim() % 2 == 0 ? 1 : -1;
  }
  return chi;
}

PiMultiple PiMultiple::Of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("PiMultiple: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

PiMultiple operator+(PiMultiple a, PiMultiple b) {
  return PiMultiple::Of(a.num * b.den + b.num * a.den, a.den * b.den);
}

bool operator<(const PiMultiple& a, const PiMultiple& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

std::string PiMultiple::ToString() const {
  if (num == 0) return "0";
  std::string s = num == 1 ? "pi" : num == -1 ? "-pi" : std::to_string(num) + "pi";
  if (den != 1) s += "/" + std::to_string(den);
  return s;
}

std::string AngleTerm::ToString() const {
  return fixed == 0 ? "pi/n" : "pi/" + std::to_string(fixed);
}

std::vector<PolyhedronTableEntry> EvenPolyhedraTable(int rank) {
  auto fam = [](std::vector<int> terms, int lo, std::optional<int> hi) {
    AngleFamily f;
    for (int t : terms) f.terms.push_back({t});
    f.n_min = lo;
    f.n_max = hi;
    return f;
  };
  if (rank == 2) {
    return {
        {2, "A1xA1", {fam({0}, 3, std::nullopt)}, "4", ""},
        {2, "A2", {fam({0}, 2, std::nullopt)}, "6", ""},
        {2, "B2", {fam({0}, 2, std::nullopt)}, "8", ""},
        {2, "G2", {fam({0}, 2, std::nullopt)}, "12", ""},
        {2, "I2(m)", {fam({0}, 2, std::nullopt)}, "2m", ""},
    };
  }
  if (rank == 3) {
    const std::vector<AngleFamily> product = {fam({2, 3, 0}, 3, 5)};
    const std::vector<AngleFamily> simple = {fam({2, 0, 2}, 3, std::nullopt),
                                             fam({2, 0, 3}, 3, 5)};
    return {
        {3, "A1xA2", product, "", "bigon-6"},
        {3, "A1xB2", product, "", "bigon-8"},
        {3, "A1xG2", product, "", "bigon-12"},
        {3, "A1xI2(m)", product, "", "bigon-2m"},
        {3, "A3", simple, "", "tetrahedron"},
        {3, "B3", simple, "", "cube"},
        {3, "H3", simple, "", "dodecahedron"},
    };
  }
  throw Error(ErrorCode::kBadRank, "the table covers ranks 2 and 3 only");
}

nlohmann::json TableToJson(const std::vector<PolyhedronTableEntry>& table) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : table) {
    nlohmann::json fams = nlohmann::json::array();
    for (const auto& f : e.families) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : f.terms) terms.push_back(t.ToString());
      nlohmann::json n = {{"min", f.n_min}};
      n["max"] = f.n_max ? nlohmann::json(*f.n_max) : nlohmann::json(nullptr);
      fams.push_back({{"angles", std::move(terms)}, {"n", std::move(n)}});
    }
    nlohmann::json j = {{"rank", e.rank}, {"type", e.type}, {"families", std::move(fams)}};
    if (e.rank == 2) {
      j["sides"] = e.sides;
    } else {
      j["cellulation"] = e.cellulation;
    }
    if (e.type.find("(m)") != std::string::npos) j["m"] = "5 or >= 7";
    out.push_back(std::move(j));
  }
  return out;
}

CoxeterMatrix CellulationSystem(std::string_view id) {
  auto chain = [](int ab, int bc) {
    return CoxeterMatrix({{1, ab, 2}, {ab, 1, bc}, {2, bc, 1}});
  };
  if (id == "tetrahedron") return chain(3, 3);
  if (id == "cube") return chain(3, 4);
  if (id == "dodecahedron") return chain(3, 5);
  if (id.starts_with("bigon-")) {
    const std::string_view num = id.substr(6);
    int n = 0;
    auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec == std::errc() && p == num.data() + num.size() && n >= 4 && n % 2 == 0) {
      return chain(2, n / 2);
    }
  }
  throw Error(ErrorCode::kUnknownCellulation, "unknown cellulation '" + std::string(id) + "'");
}

nlohmann::json AndreevResult::ToJson() const {
  return {{"passed", passed}, {"condition", condition}, {"cycle", cycle}, {"sum", sum.ToString()}};
}

AndreevResult AndreevCheck(std::string_view cellulation, const std::array<PiMultiple, 3>& angles) {
  const CoxeterMatrix m = CellulationSystem(cellulation);
  const PiMultiple zero = PiMultiple::Of(0, 1);
  const PiMultiple half = PiMultiple::Of(1, 2);
  for (const auto& a : angles) {
    if (!(zero < a) || half < a) {
      throw Error(ErrorCode::kAngleRange, "angle " + a.ToString() + " not in (0, pi/2]");
    }
  }
  const CoxeterSystem sys = NewSystem(m, {"a", "b", "c"});
  const CayleyBall g = EnumerateGroup(sys);
  const auto n = static_cast<std::int32_t>(g.size());

  // Vertices of the subdivision: cosets of W_{S - s}, labeled by type s.
  const std::array<Subset, 3> cotype = {Subset{1, 2}, Subset{0, 2}, Subset{0, 1}};
  std::map<std::pair<int, std::int32_t>, int> vid;
  std::vector<std::string> vname;
  std::vector<std::array<int, 3>> chamber(n);
  for (int s = 0; s < 3; ++s) {
    for (std::int32_t w = 0; w < n; ++w) {
      const std::int32_t rep = StripDescents(g, w, cotype[s]);
      auto [it, inserted] = vid.emplace(std::pair{s, rep}, static_cast<int>(vname.size()));
      if (inserted) vname.push_back(sys.generator_names()[s] + ":" + sys.FormatWord(g.word(rep)));
      chamber[w][s] = it->second;
    }
  }
  const int nv = static_cast<int>(vname.size());
  // Edge of type s joins the vertices of the two other types.
  std::vector<int> type(static_cast<size_t>(nv) * nv, -1);
  std::set<std::array<int, 3>> faces;
  for (std::int32_t w = 0; w < n; ++w) {
    for (int s = 0; s < 3; ++s) {
      const int x = chamber[w][(s + 1) % 3];
      const int y = chamber[w][(s + 2) % 3];
      int& slot = type[x * nv + y];
      if (slot != -1 && slot != s) throw std::logic_error("subdivision edge with two types");
      slot = s;
      type[y * nv + x] = s;
    }
    auto tri = chamber[w];
    std::sort(tri.begin(), tri.end());
    faces.insert(tri);
  }
  auto adj = [&](int x, int y) { return type[x * nv + y] != -1; };
  auto angle = [&](int x, int y) { return angles[type[x * nv + y]]; };
  auto is_face = [&](int x, int y, int z) {
    std::array<int, 3> t = {x, y, z};
    std::sort(t.begin(), t.end());
    return faces.count(t) > 0;
  };
  const PiMultiple pi = PiMultiple::Of(1, 1);
  const PiMultiple two_pi = PiMultiple::Of(2, 1);
  auto fail = [&](int cond, std::vector<int> cyc, PiMultiple sum) {
    AndreevResult r;
    r.passed = false;
    r.condition = cond;
    for (int v : cyc) r.cycle.push_back(vname[v]);
    r.sum = sum;
    return r;
  };

  // (1) 3-cycles bounding no triangle: sum < pi. (2) triangles: sum > pi.
  for (int cond : {1, 2}) {
    for (int x = 0; x < nv; ++x) {
      for (int y = x + 1; y < nv; ++y) {
        if (!adj(x, y)) continue;
        for (int z = y + 1; z < nv; ++z) {
          if (!adj(x, z) || !adj(y, z) || is_face(x, y, z) != (cond == 2)) continue;
          const PiMultiple sum = angle(x, y) + angle(y, z) + angle(x, z);
          if (cond == 1 && !(sum < pi)) return fail(1, {x, y, z}, sum);
          if (cond == 2 && !(sum > pi)) return fail(2, {x, y, z}, sum);
        }
      }
    }
  }
  // (3) 4-cycles x-y-z-u not the union of two triangles: sum < 2pi.
  for (int x = 0; x < nv; ++x) {
    for (int y = x + 1; y < nv; ++y) {
      if (!adj(x, y)) continue;
      for (int u = y + 1; u < nv; ++u) {
        if (!adj(x, u)) continue;
        for (int z = x + 1; z < nv; ++z) {
          if (z == y || z == u || !adj(y, z) || !adj(z, u)) continue;
          const bool split_xz = adj(x, z) && is_face(x, y, z) && is_face(x, z, u);
          const bool split_yu = adj(y, u) && is_face(x, y, u) && is_face(y, z, u);
          if (split_xz || split_yu) continue;
          const PiMultiple sum = angle(x, y) + angle(y, z) + angle(z, u) + angle(u, x);
          if (!(sum < two_pi)) return fail(3, {x, y, z, u}, sum);
        }
      }
    }
  }
  AndreevResult ok;
  ok.sum = zero;
  return ok;
}

std::vector<AndreevSample> TableAndreevSamples(int n_cap) {
  std::vector<AndreevSample> out;
  for (const auto& e : EvenPolyhedraTable(3)) {
    std::vector<std::string> cells = {e.cellulation};
    if (e.cellulation == "bigon-2m") cells = {"bigon-10", "bigon-14", "bigon-16", "bigon-18", "bigon-24"};
    for (const auto& cellulation : cells) {
      for (const auto& f : e.families) {
        for (int n = f.n_min; n <= f.n_max.value_or(n_cap); ++n) {
          AndreevSample a;
          a.type = e.type;
          a.cellulation = cellulation;
          a.n = n;
          for (int i = 0; i < 3; ++i) {
            a.angles[i] = PiMultiple::PiOver(f.terms[i].fixed == 0 ? n : f.terms[i].fixed);
          }
          a.result = AndreevCheck(cellulation, a.angles);
          out.push_back(std::move(a));
        }
      }
    }
  }
  return out;
}

nlohmann::json SamplesToJson(const std::vector<AndreevSample>& samples) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& a : samples) {
    out.push_back({{"type", a.type},
                   {"cellulation", a.cellulation},
                   {"n", a.n},
                   {"angles", {a.angles[0].ToString(), a.angles[1].ToString(), a.angles[2].ToString()}},
                   {"result", a.result.ToJson()}});
  }
  return out;
}

}  // namespace coxwall
