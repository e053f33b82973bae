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

#include "coxwall/classification.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "coxwall/error.hpp"
#include "coxwall/number_field.hpp"

namespace coxwall {
namespace {

#include "catalog_data.inc"

// Labels as plain ints inside this file only; 0 stands for infinity.
constexpr int kInfCode = 0;

struct Diagram {
  int n = 0;
  std::vector<int> lab;
  int at(int a, int b) const { return lab[a * n + b]; }
  void set(int a, int b, int m) {
    lab[a * n + b] = m;
    lab[b * n + a] = m;
  }
};

Diagram EmptyDiagram(int n) {
  Diagram d{n, std::vector<int>(static_cast<size_t>(n) * n, 2)};
  for (int i = 0; i < n; ++i) d.lab[i * n + i] = 1;
  return d;
}

int Code(const CoxeterLabel& l) { return l.is_infinite() ? kInfCode : l.value(); }

Diagram Induced(const CoxeterMatrix& m, const Subset& subset) {
  Diagram d = EmptyDiagram(static_cast<int>(subset.size()));
  for (int i = 0; i < d.n; ++i) {
    for (int j = i + 1; j < d.n; ++j) d.set(i, j, Code(m.at(subset[i], subset[j])));
  }
  return d;
}

std::vector<int> Profile(const Diagram& d, int v) {
  std::vector<int> p;
  for (int u = 0; u < d.n; ++u) {
    if (u != v && d.at(u, v) != 2) p.push_back(d.at(u, v));
  }
  std::sort(p.begin(), p.end());
  return p;
}

bool Isomorphic(const Diagram& a, const Diagram& b) {
  if (a.n != b.n) return false;
  const int n = a.n;
  std::vector<std::vector<int>> pa(n), pb(n);
  for (int v = 0; v < n; ++v) {
    pa[v] = Profile(a, v);
    pb[v] = Profile(b, v);
  }
  {
    auto sa = pa, sb = pb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  // Map a's vertices in BFS order so constraints bite early.
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    order.push_back(root);
    for (size_t i = order.size() - 1; i < order.size(); ++i) {
      for (int u = 0; u < n; ++u) {
        if (!seen[u] && a.at(order[i], u) != 2) {
          seen[u] = 1;
          order.push_back(u);
        }
      }
    }
  }
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    const int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used[w] || pa[v] != pb[w]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) ok = a.at(v, order[j]) == b.at(w, map[order[j]]);
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, k + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

std::vector<int> IntList(const nlohmann::json& j, const char* key) {
  std::vector<int> out;
  if (j.contains(key)) {
    for (const auto& v : j[key]) out.push_back(v.get<int>());
  }
  return out;
}

// Builds the family member of the given rank, or nothing if out of range.
std::optional<Diagram> BuildFamily(const nlohmann::json& e, int rank) {
  const int fill = e.value("fill", 3);
  if (e.value("cycle", false)) {
    Diagram d = EmptyDiagram(rank);
    for (int i = 0; i < rank; ++i) d.set(i, (i + 1) % rank, fill);
    return d;
  }
  const bool fh = e.value("fork_head", false);
  const bool ft = e.value("fork_tail", false);
  const std::vector<int> head = IntList(e, "head");
  const std::vector<int> tail = IntList(e, "tail");
  const int p = rank - fh - ft;
  const int fills = p - 1 - static_cast<int>(head.size() + tail.size());
  if (p < 1 || fills < 0 || ((fh || ft) && p < 3)) return std::nullopt;
  std::vector<int> labels = head;
  labels.insert(labels.end(), fills, fill);
  labels.insert(labels.end(), tail.begin(), tail.end());
  Diagram d = EmptyDiagram(rank);
  for (int i = 0; i + 1 < p; ++i) d.set(i, i + 1, labels[i]);
  int next = p;
  if (fh) d.set(1, next++, fill);
  if (ft) d.set(p - 2, next++, fill);
  return d;
}

Diagram BuildExplicit(const nlohmann::json& e) {
  Diagram d = EmptyDiagram(e["rank"].get<int>());
  for (const auto& edge : e["edges"]) {
    const int m = edge[2].is_string() ? kInfCode : edge[2].get<int>();
    d.set(edge[0].get<int>(), edge[1].get<int>(), m);
  }
  return d;
}

const nlohmann::json& CatalogData() {
  static const nlohmann::json data = nlohmann::json::parse(kCatalogJson);
  return data;
}

std::uint64_t CheckedProduct(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::kResourceLimit, "group order exceeds 64 bits");
  }
  return r;
}

std::uint64_t Factorial(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r = CheckedProduct(r, static_cast<std::uint64_t>(i));
  return r;
}

std::uint64_t FamilyOrder(const std::string& formula, int n, int m) {
  if (formula == "a") return Factorial(n + 1);
  if (formula == "b") return CheckedProduct(std::uint64_t{1} << n, Factorial(n));
  if (formula == "d") return CheckedProduct(std::uint64_t{1} << (n - 1), Factorial(n));
  if (formula == "i") return 2 * static_cast<std::uint64_t>(m);
  throw std::logic_error("unknown order formula " + formula);
}

struct Match {
  TypeTag tag = TypeTag::kIndefinite;
  std::string name;
  std::uint64_t order = 0;  // finite types only; 0 if it overflowed
  bool order_overflow = false;
};

Match MatchConnected(const Diagram& d) {
  Match out;
  if (d.n == 1) {
    out.tag = TypeTag::kFinite;
    out.name = "A1";
    out.order = 2;
    return out;
  }
  for (const char* kind : {"finite", "affine"}) {
    const bool finite = std::string(kind) == "finite";
    for (const auto& e : CatalogData()[kind]) {
      std::optional<Diagram> shape;
      std::string name = e["name"].get<std::string>();
      int n = 0;
      int m = 0;
      if (e.value("dihedral", false)) {
        if (d.n != 2 || d.at(0, 1) == kInfCode) continue;
        m = d.at(0, 1);
        name += "(" + std::to_string(m) + ")";
        shape = d;
      } else if (e.contains("edges")) {
        if (e["rank"].get<int>() != d.n) continue;
        shape = BuildExplicit(e);
      } else {
        n = finite ? d.n : d.n - 1;
        if (n < e["min_n"].get<int>()) continue;
        shape = BuildFamily(e, d.n);
        name += std::to_string(n);
      }
      if (!shape || !Isomorphic(*shape, d)) continue;
      out.tag = finite ? TypeTag::kFinite : TypeTag::kAffine;
      out.name = name;
      if (finite) {
        try {
          out.order = e["order"].is_string() ? FamilyOrder(e["order"].get<std::string>(), n, m)
                                             : e["order"].get<std::uint64_t>();
        } catch (const Error&) {
          out.order_overflow = true;
        }
      }
      return out;
    }
  }
  return out;
}

std::vector<Subset> SubsetsOfSize(int rank, int k) {
  std::vector<Subset> out;
  Subset cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  if (k > rank) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == rank - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Subset AllOf(int rank) {
  Subset s(rank);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

bool Commute(const CoxeterMatrix& m, const Subset& a, const Subset& b) {
  for (int x : a) {
    for (int y : b) {
      if (x == y || !m.commute(x, y)) return false;
    }
  }
  return true;
}

nlohmann::json SubsetJson(const Subset& s) { return nlohmann::json(s); }

}  // namespace

const char* TypeTagName(TypeTag tag) {
  switch (tag) {
    case TypeTag::kFinite:
      return "finite";
    case TypeTag::kAffine:
      return "affine";
    case TypeTag::kIndefinite:
      return "indefinite";
  }
  return "?";
}

std::string DiagramType::Name() const {
  if (tag == TypeTag::kIndefinite) return "indefinite";
  if (components.empty()) return "trivial";
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += "x";
    out += c.name;
  }
  return out;
}

nlohmann::json DiagramType::ToJson() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : components) {
    comps.push_back({{"generators", SubsetJson(c.generators)},
                     {"type", TypeTagName(c.tag)},
                     {"name", c.name}});
  }
  return {{"type", TypeTagName(tag)}, {"name", Name()}, {"components", std::move(comps)}};
}

std::vector<Subset> DiagramComponents(const CoxeterMatrix& m, const Subset& subset) {
  std::vector<Subset> out;
  std::vector<char> seen(subset.size(), 0);
  for (size_t r = 0; r < subset.size(); ++r) {
    if (seen[r]) continue;
    std::vector<size_t> stack = {r};
    seen[r] = 1;
    Subset comp;
    while (!stack.empty()) {
      const size_t i = stack.back();
      stack.pop_back();
      comp.push_back(subset[i]);
      for (size_t j = 0; j < subset.size(); ++j) {
        if (!seen[j] && !m.commute(subset[i], subset[j])) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiagramType Classify(const CoxeterMatrix& m, const Subset& subset) {
  DiagramType out;
  bool any_affine = false;
  bool any_indefinite = false;
  for (auto& comp : DiagramComponents(m, subset)) {
    const Match match = MatchConnected(Induced(m, comp));
    any_affine |= match.tag == TypeTag::kAffine;
    any_indefinite |= match.tag == TypeTag::kIndefinite;
    out.components.push_back({std::move(comp), match.tag, match.name});
  }
  out.tag = any_indefinite ? TypeTag::kIndefinite
            : any_affine   ? TypeTag::kAffine
                           : TypeTag::kFinite;
  return out;
}

DiagramType Classify(const CoxeterMatrix& m) { return Classify(m, AllOf(m.rank())); }

bool IsFiniteSubset(const CoxeterMatrix& m, const Subset& subset) {
  for (const auto& comp : DiagramComponents(m, subset)) {
    if (MatchConnected(Induced(m, comp)).tag != TypeTag::kFinite) return false;
  }
  return true;
}

std::uint64_t OrderOfFinite(const CoxeterMatrix& m, const Subset& subset) {
  std::uint64_t order = 1;
  for (const auto& comp : DiagramComponents(m, subset)) {
    const Match match = MatchConnected(Induced(m, comp));
    if (match.tag != TypeTag::kFinite) {
      throw Error(ErrorCode::kNotFinite, "special subgroup is infinite");
    }
    if (match.order_overflow) {
      throw Error(ErrorCode::kResourceLimit, "group order exceeds 64 bits");
    }
    order = CheckedProduct(order, match.order);
  }
  return order;
}

std::uint64_t OrderOfFinite(const CoxeterMatrix& m) { return OrderOfFinite(m, AllOf(m.rank())); }

int Nerve::dimension() const {
  return faces.empty() ? -1 : static_cast<int>(faces.back().size()) - 1;
}

bool Nerve::Contains(const Subset& t) const {
  Subset sorted = t;
  std::sort(sorted.begin(), sorted.end());
  auto less = [](const Subset& a, const Subset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  };
  return std::binary_search(faces.begin(), faces.end(), sorted, less);
}

std::vector<Subset> Nerve::MaximalFaces() const {
  std::vector<Subset> out;
  for (const auto& f : faces) {
    bool maximal = true;
    for (int s = 0; s < rank && maximal; ++s) {
      if (std::find(f.begin(), f.end(), s) != f.end()) continue;
      Subset g = f;
      g.insert(std::upper_bound(g.begin(), g.end(), s), s);
      maximal = !Contains(g);
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

nlohmann::json Nerve::ToJson() const {
  nlohmann::json f = nlohmann::json::array();
  for (const auto& t : faces) f.push_back(SubsetJson(t));
  nlohmann::json mx = nlohmann::json::array();
  for (const auto& t : MaximalFaces()) mx.push_back(SubsetJson(t));
  return {{"rank", rank}, {"dimension", dimension()}, {"faces", std::move(f)},
          {"maximal_faces", std::move(mx)}};
}

Nerve ComputeNerve(const CoxeterMatrix& m) {
  Nerve nerve;
  nerve.rank = m.rank();
  std::vector<Subset> level = {Subset{}};
  while (!level.empty()) {
    nerve.faces.insert(nerve.faces.end(), level.begin(), level.end());
    std::vector<Subset> next;
    for (const auto& f : level) {
      for (int s = f.empty() ? 0 : f.back() + 1; s < m.rank(); ++s) {
        Subset g = f;
        g.push_back(s);
        // Every facet of g must already be a face.
        bool facets_ok = true;
        for (size_t drop = 0; drop + 1 < g.size() && facets_ok; ++drop) {
          Subset h = g;
          h.erase(h.begin() + static_cast<long>(drop));
          facets_ok = std::binary_search(level.begin(), level.end(), h);
        }
        if (facets_ok && IsFiniteSubset(m, g)) next.push_back(std::move(g));
      }
    }
    level = std::move(next);
  }
  return nerve;
}

nlohmann::json HyperbolicityReport::ToJson() const {
  nlohmann::json j = {{"hyperbolic", hyperbolic}};
  if (affine_witness) j["affine_witness"] = SubsetJson(*affine_witness);
  if (commuting_witness) {
    j["commuting_witness"] = {SubsetJson(commuting_witness->first),
                              SubsetJson(commuting_witness->second)};
  }
  return j;
}

HyperbolicityReport IsHyperbolic(const CoxeterMatrix& m) {
  const Nerve nerve = ComputeNerve(m);
  // Minimal infinite subsets, by size then lexicographically. Every infinite
  // T contains one, and an irreducible affine T is one.
  std::vector<Subset> minimal;
  for (const auto& f : nerve.faces) {
    for (int s = f.empty() ? 0 : f.back() + 1; s < m.rank(); ++s) {
      Subset g = f;
      g.push_back(s);
      if (nerve.Contains(g)) continue;
      bool all_facets = true;
      for (size_t drop = 0; drop < g.size() && all_facets; ++drop) {
        Subset h = g;
        h.erase(h.begin() + static_cast<long>(drop));
        all_facets = nerve.Contains(h);
      }
      if (all_facets) minimal.push_back(std::move(g));
    }
  }
  std::stable_sort(minimal.begin(), minimal.end(), [](const Subset& a, const Subset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  HyperbolicityReport report;
  for (const auto& t : minimal) {
    if (t.size() < 3) continue;
    const DiagramType type = Classify(m, t);
    if (type.tag == TypeTag::kAffine && type.components.size() == 1) {
      report.affine_witness = t;
      break;
    }
  }
  for (size_t i = 0; i < minimal.size() && !report.commuting_witness; ++i) {
    for (size_t j = i + 1; j < minimal.size(); ++j) {
      if (Commute(m, minimal[i], minimal[j])) {
        report.commuting_witness = {minimal[i], minimal[j]};
        break;
      }
    }
  }
  report.hyperbolic = !report.affine_witness && !report.commuting_witness;
  return report;
}

bool PreservesLabels(const CoxeterMatrix& m, const Permutation& p) {
  const int n = m.rank();
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!(m.at(p[a], p[b]) == m.at(a, b))) return false;
    }
  }
  return true;
}

std::vector<Permutation> DiagramAutomorphisms(const CoxeterMatrix& m, int max_rank) {
  const int n = m.rank();
  if (n > max_rank) {
    throw Error(ErrorCode::kResourceLimit, "rank " + std::to_string(n) + " exceeds the automorphism search bound");
  }
  constexpr size_t kMaxCount = 100000;
  std::vector<Permutation> out;
  Permutation p(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      if (out.size() >= kMaxCount) {
        throw Error(ErrorCode::kResourceLimit, "too many diagram automorphisms");
      }
      out.push_back(p);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) ok = m.at(v, p[j]) == m.at(k, j);
      if (!ok) continue;
      p[k] = v;
      used[v] = 1;
      self(self, k + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
  // Closure: all products when the group is small, a slice otherwise.
  const size_t rows = out.size() <= 2000 ? out.size() : 64;
  for (size_t i = 0; i < rows; ++i) {
    for (const auto& b : out) {
      Permutation c(n);
      for (int s = 0; s < n; ++s) c[s] = out[i][b[s]];
      if (!std::binary_search(out.begin(), out.end(), c)) {
        throw std::logic_error("diagram automorphisms not closed under composition");
      }
    }
  }
  return out;
}

Subset StarOf(const CoxeterMatrix& m, int s) {
  Subset out;
  for (int t = 0; t < m.rank(); ++t) {
    if (m.at(s, t).is_finite()) out.push_back(t);
  }
  return out;
}

bool IsStarFixing(const CoxeterMatrix& m, int s, const Permutation& f) {
  if (s < 0 || s >= m.rank() || !PreservesLabels(m, f)) return false;
  bool trivial = true;
  for (int t = 0; t < m.rank(); ++t) trivial &= f[t] == t;
  if (trivial) return false;
  for (int t : StarOf(m, s)) {
    if (f[t] != t) return false;
  }
  return true;
}

std::vector<StarFixingWitness> StarFixingAutomorphisms(const CoxeterMatrix& m) {
  const auto autos = DiagramAutomorphisms(m);
  std::vector<StarFixingWitness> out;
  for (int s = 0; s < m.rank(); ++s) {
    for (const auto& f : autos) {
      if (IsStarFixing(m, s, f)) out.push_back({s, f});
    }
  }
  return out;
}

nlohmann::json RigidityReport::ToJson(const CoxeterSystem& system) const {
  nlohmann::json j = {{"rigid", rigid}};
  if (witness) {
    const auto& names = system.generator_names();
    nlohmann::json f = nlohmann::json::object();
    for (size_t t = 0; t < witness->f.size(); ++t) f[names[t]] = names[witness->f[t]];
    j["witness"] = {{"s", names[witness->s]}, {"f", std::move(f)}};
  }
  return j;
}

RigidityReport IsRigid(const CoxeterMatrix& m) {
  const auto autos = DiagramAutomorphisms(m);
  RigidityReport report;
  for (int s = 0; s < m.rank() && report.rigid; ++s) {
    for (const auto& f : autos) {
      if (IsStarFixing(m, s, f)) {
        report.rigid = false;
        report.witness = StarFixingWitness{s, f};
        break;
      }
    }
  }
  return report;
}

GramSign ClassifyGram(const CoxeterMatrix& m) {
  const int n = m.rank();
  if (n > 6) throw Error(ErrorCode::kBadRank, "Gram oracle limited to rank 6");
  const CoxeterSystem sys = NewSystem(m);
  const NumberField& field = sys.field();
  // Entries of 2B = (-2cos(pi/m_st)).
  std::vector<FieldElem> g(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const CoxeterLabel& l = m.at(a, b);
      if (a == b) {
        g[a * n + b] = field.FromInt(2);
      } else if (l.is_infinite()) {
        g[a * n + b] = field.FromInt(-2);
      } else {
        g[a * n + b] = field.Neg(field.TwoCosPiOver(l.value()));
      }
    }
  }
  auto det = [&](auto&& self, const std::vector<int>& rows, const std::vector<int>& cols) -> FieldElem {
    if (rows.empty()) return field.FromInt(1);
    FieldElem acc = field.Zero();
    const int r = rows[0];
    const std::vector<int> rest(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < cols.size(); ++j) {
      const FieldElem& e = g[r * n + cols[j]];
      if (NumberField::IsZero(e)) continue;
      std::vector<int> sub = cols;
      sub.erase(sub.begin() + static_cast<long>(j));
      FieldElem term = field.Mul(e, self(self, rest, sub));
      acc = j % 2 == 0 ? field.Add(acc, term) : field.Sub(acc, term);
    }
    return acc;
  };
  bool all_positive = true;
  for (int k = 1; k <= n; ++k) {
    for (const auto& t : SubsetsOfSize(n, k)) {
      const int sign = field.Sign(det(det, t, t));
      if (sign < 0) return GramSign::kIndefinite;
      if (sign == 0) all_positive = false;
    }
  }
  return all_positive ? GramSign::kPositiveDefinite : GramSign::kDegenerate;
}

}  // namespace coxwall
