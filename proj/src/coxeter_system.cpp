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

#include "coxwall/coxeter_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "coxwall/error.hpp"

namespace coxwall {

struct CoxeterSystem::Impl {
  CoxeterMatrix matrix;
  std::vector<std::string> names;
  NumberField field;
  int label_lcm = 1;
  int rank = 0;
  int degree = 0;
  bool single_char_names = true;
  // kappa[s * rank + t] = 2cos(pi/m_st) (2 for inf); empty when m_st == 2.
  std::vector<FieldElem> kappa;

  Impl(CoxeterMatrix m, std::vector<std::string> n, int conductor)
      : matrix(std::move(m)), names(std::move(n)), field(conductor) {}
};

namespace {

std::vector<std::string> DefaultNames(int rank) {
  std::vector<std::string> names;
  if (rank <= 3) {
    for (int i = 0; i < rank; ++i) names.emplace_back(1, "stu"[i]);
  } else if (rank <= 26) {
    for (int i = 0; i < rank; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  } else {
    for (int i = 0; i < rank; ++i) names.push_back("s" + std::to_string(i));
  }
  return names;
}

bool IsSeparator(char ch) {
  return std::isspace(static_cast<unsigned char>(ch)) || ch == '.' || ch == ',';
}

}  // namespace

CoxeterSystem CoxeterSystem::Create(const CoxeterMatrix& matrix,
                                    std::vector<std::string> names) {
  const int rank = matrix.rank();
  if (names.empty()) names = DefaultNames(rank);
  if (names.size() != static_cast<size_t>(rank)) {
    throw Error(ErrorCode::kMatrixShape, "generator name count does not match rank");
  }
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || n == "1" || std::any_of(n.begin(), n.end(), IsSeparator) ||
        !seen.insert(n).second) {
      throw Error(ErrorCode::kMatrixShape, "bad or repeated generator name '" + n + "'");
    }
  }
  int lcm_all = 1;
  int conductor = 1;
  for (int s = 0; s < rank; ++s) {
    for (int t = s + 1; t < rank; ++t) {
      const CoxeterLabel& m = matrix.at(s, t);
      if (m.is_infinite()) continue;
      lcm_all = std::lcm(lcm_all, m.value());
      // 2cos(pi/2) = 0 and 2cos(pi/3) = 1 are rational.
      if (m.value() >= 4) conductor = std::lcm(conductor, m.value());
    }
  }
  auto impl = std::make_shared<Impl>(matrix, std::move(names), conductor);
  impl->label_lcm = lcm_all;
  impl->rank = rank;
  impl->degree = impl->field.degree();
  impl->single_char_names = std::all_of(impl->names.begin(), impl->names.end(),
                                        [](const std::string& n) { return n.size() == 1; });
  impl->kappa.resize(static_cast<size_t>(rank) * rank);
  for (int s = 0; s < rank; ++s) {
    for (int t = 0; t < rank; ++t) {
      if (s == t) continue;
      const CoxeterLabel& m = matrix.at(s, t);
      if (m.is_infinite()) {
        impl->kappa[s * rank + t] = impl->field.FromInt(2);
      } else if (m.value() != 2) {
        impl->kappa[s * rank + t] = impl->field.TwoCosPiOver(m.value());
      }
    }
  }
  return CoxeterSystem(std::move(impl));
}

CoxeterSystem NewSystem(const CoxeterMatrix& matrix, std::vector<std::string> names) {
  return CoxeterSystem::Create(matrix, std::move(names));
}

int CoxeterSystem::rank() const { return impl_->rank; }
const CoxeterMatrix& CoxeterSystem::matrix() const { return impl_->matrix; }
const std::vector<std::string>& CoxeterSystem::generator_names() const { return impl_->names; }
const NumberField& CoxeterSystem::field() const { return impl_->field; }
int CoxeterSystem::label_lcm() const { return impl_->label_lcm; }
std::size_t CoxeterSystem::vec_size() const {
  return static_cast<std::size_t>(impl_->rank) * impl_->degree;
}

void CoxeterSystem::RequireSame(const CoxeterSystem& other) const {
  if (!SameAs(other)) {
    throw Error(ErrorCode::kSystemMismatch, "elements belong to different systems");
  }
}

FieldVec CoxeterSystem::BasePoint() const {
  FieldVec x(vec_size(), 0);
  for (int t = 0; t < impl_->rank; ++t) x[t * impl_->degree] = 1;
  return x;
}

FieldVec CoxeterSystem::SimpleRoot(Generator s) const {
  FieldVec b(vec_size(), 0);
  b[s * impl_->degree] = 1;
  return b;
}

void CoxeterSystem::ActDual(Generator s, std::span<std::int64_t> x) const {
  const int r = impl_->rank;
  const int d = impl_->degree;
  const auto xs = x.subspan(s * d, d);
  for (int t = 0; t < r; ++t) {
    if (t == s) continue;
    const FieldElem& k = impl_->kappa[s * r + t];
    if (k.empty()) continue;
    impl_->field.AddMul(x.subspan(t * d, d), k, xs);
  }
  for (auto& v : xs) v = -v;
}

void CoxeterSystem::ActRoot(Generator s, std::span<std::int64_t> beta) const {
  const int r = impl_->rank;
  const int d = impl_->degree;
  FieldElem acc(d, 0);
  for (int t = 0; t < r; ++t) {
    if (t == s) continue;
    const FieldElem& k = impl_->kappa[s * r + t];
    if (k.empty()) continue;
    impl_->field.AddMul(acc, k, beta.subspan(t * d, d));
  }
  auto bs = beta.subspan(s * d, d);
  for (int i = 0; i < d; ++i) bs[i] = acc[i] - bs[i];
}

FieldVec CoxeterSystem::RightKey(std::span<const Generator> word) const {
  FieldVec x = BasePoint();
  for (Generator s : word) ActDual(s, x);
  return x;
}

FieldVec CoxeterSystem::LeftKey(std::span<const Generator> word) const {
  FieldVec x = BasePoint();
  for (auto it = word.rbegin(); it != word.rend(); ++it) ActDual(*it, x);
  return x;
}

FieldVec CoxeterSystem::RootImage(std::span<const Generator> u, Generator s) const {
  FieldVec b = SimpleRoot(s);
  for (auto it = u.rbegin(); it != u.rend(); ++it) ActRoot(*it, b);
  return b;
}

int CoxeterSystem::RootSign(std::span<const std::int64_t> root) const {
  const int d = impl_->degree;
  for (int t = 0; t < impl_->rank; ++t) {
    const int sgn = impl_->field.Sign(root.subspan(t * d, d));
    if (sgn != 0) return sgn;
  }
  return 0;
}

Word CoxeterSystem::ShortLexFromLeftKey(FieldVec y) const {
  const int r = impl_->rank;
  const int d = impl_->degree;
  Word out;
  for (;;) {
    Generator next = -1;
    for (int s = 0; s < r; ++s) {
      if (impl_->field.Sign(std::span<const std::int64_t>(y).subspan(s * d, d)) < 0) {
        next = s;
        break;
      }
    }
    if (next < 0) return out;
    out.push_back(next);
    ActDual(next, y);
  }
}

Word CoxeterSystem::ParseWord(std::string_view text) const {
  Word out;
  const auto& names = impl_->names;
  auto lookup = [&](std::string_view tok) {
    for (size_t i = 0; i < names.size(); ++i) {
      if (names[i] == tok) return static_cast<Generator>(i);
    }
    throw Error(ErrorCode::kUnknownGenerator, "unknown generator '" + std::string(tok) + "'");
  };
  std::string_view trimmed = text;
  while (!trimmed.empty() && IsSeparator(trimmed.front())) trimmed.remove_prefix(1);
  while (!trimmed.empty() && IsSeparator(trimmed.back())) trimmed.remove_suffix(1);
  if (trimmed.empty() || trimmed == "1") return out;
  if (impl_->single_char_names) {
    for (char ch : trimmed) {
      if (IsSeparator(ch)) continue;
      out.push_back(lookup(std::string_view(&ch, 1)));
    }
    return out;
  }
  size_t i = 0;
  while (i < trimmed.size()) {
    if (IsSeparator(trimmed[i])) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < trimmed.size() && !IsSeparator(trimmed[j])) ++j;
    out.push_back(lookup(trimmed.substr(i, j - i)));
    i = j;
  }
  return out;
}

std::string CoxeterSystem::FormatWord(std::span<const Generator> word) const {
  if (word.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i > 0 && !impl_->single_char_names) out += '.';
    out += impl_->names[word[i]];
  }
  return out;
}

void CoxeterSystem::CheckWord(std::span<const Generator> word) const {
  for (Generator s : word) {
    if (s < 0 || s >= impl_->rank) {
      throw Error(ErrorCode::kUnknownGenerator, "generator index " + std::to_string(s));
    }
  }
}

std::vector<std::vector<FieldElem>> GroupElement::ActionMatrix() const {
  const int r = system_.rank();
  const int d = system_.field().degree();
  std::vector<std::vector<FieldElem>> m(r, std::vector<FieldElem>(r));
  for (int t = 0; t < r; ++t) {
    const FieldVec col = system_.RootImage(word_, t);
    for (int i = 0; i < r; ++i) m[i][t] = FieldElem(col.begin() + i * d, col.begin() + (i + 1) * d);
  }
  return m;
}

GroupElement MakeElement(const CoxeterSystem& system, Word normal_word, FieldVec key) {
  return GroupElement(system, std::move(normal_word), std::move(key));
}

GroupElement Identity(const CoxeterSystem& system) {
  return MakeElement(system, {}, system.BasePoint());
}

GroupElement Gen(const CoxeterSystem& system, Generator s) {
  const Word w = {s};
  system.CheckWord(w);
  return MakeElement(system, w, system.RightKey(w));
}

GroupElement NormalForm(const CoxeterSystem& system, std::span<const Generator> word) {
  system.CheckWord(word);
  Word nf = system.ShortLexFromLeftKey(system.LeftKey(word));
  FieldVec key = system.RightKey(nf);
  return MakeElement(system, std::move(nf), std::move(key));
}

GroupElement NormalForm(const CoxeterSystem& system, std::string_view word) {
  return NormalForm(system, system.ParseWord(word));
}

bool IsReduced(const CoxeterSystem& system, std::span<const Generator> word) {
  system.CheckWord(word);
  for (size_t i = 0; i < word.size(); ++i) {
    const FieldVec root = system.RootImage(word.subspan(0, i), word[i]);
    if (system.RootSign(root) < 0) return false;
  }
  return true;
}

bool IsReduced(const CoxeterSystem& system, std::string_view word) {
  return IsReduced(system, system.ParseWord(word));
}

GroupElement Multiply(const GroupElement& a, const GroupElement& b) {
  a.system().RequireSame(b.system());
  Word w = a.normal_word();
  w.insert(w.end(), b.normal_word().begin(), b.normal_word().end());
  return NormalForm(a.system(), w);
}

GroupElement Invert(const GroupElement& a) {
  Word w(a.normal_word().rbegin(), a.normal_word().rend());
  return NormalForm(a.system(), w);
}

int Length(const GroupElement& a) { return a.length(); }

std::vector<Generator> LeftDescents(const GroupElement& a) {
  const auto& sys = a.system();
  const int d = sys.field().degree();
  const FieldVec y = sys.LeftKey(a.normal_word());
  std::vector<Generator> out;
  for (int s = 0; s < sys.rank(); ++s) {
    if (sys.field().Sign(std::span<const std::int64_t>(y).subspan(s * d, d)) < 0) {
      out.push_back(s);
    }
  }
  return out;
}

std::vector<Generator> RightDescents(const GroupElement& a) {
  const auto& sys = a.system();
  const int d = sys.field().degree();
  std::vector<Generator> out;
  for (int s = 0; s < sys.rank(); ++s) {
    if (sys.field().Sign(std::span<const std::int64_t>(a.key()).subspan(s * d, d)) < 0) {
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace coxwall
