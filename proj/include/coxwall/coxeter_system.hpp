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

#ifndef COXWALL_COXETER_SYSTEM_HPP_
#define COXWALL_COXETER_SYSTEM_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxwall/coxeter_matrix.hpp"
#include "coxwall/number_field.hpp"

namespace coxwall {

using Generator = int;
using Word = std::vector<Generator>;

// Flattened vector of `rank` elements of Z[c], each `degree` coefficients.
using FieldVec = std::vector<std::int64_t>;

// A Coxeter system (W, S) with its Tits representation over Z[c].
//
// Two linear actions are exposed. The root action works in the basis of
// simple roots: s(b) = b - 2B(a_s, b) a_s. The dual action works in the
// coordinates x_t = <a_t, x> of the contragredient representation:
// s(x)_t = x_t - 2B(a_s, a_t) x_s. With x0 = (1, ..., 1) in the open
// fundamental chamber, w -> w^-1 x0 is injective, so that vector is the
// canonical key of an element; s is a right descent of w iff its s-th
// coordinate is negative.
//
// Bilinear form: 2B(a_s, a_t) = -2cos(pi/m_st), and -2 when m_st = inf.
//
// Immutable and cheap to copy (shared state).
class CoxeterSystem {
 public:
  // Throws Error(kMatrixShape) if names are given with the wrong count or
  // repeat, Error(kResourceLimit) if the field degree is unreasonable.
  static CoxeterSystem Create(const CoxeterMatrix& matrix,
                              std::vector<std::string> names = {});

  int rank() const;
  const CoxeterMatrix& matrix() const;
  const std::vector<std::string>& generator_names() const;
  const NumberField& field() const;
  // lcm of the finite off-diagonal labels.
  int label_lcm() const;
  // Length of a FieldVec: rank() * field().degree().
  std::size_t vec_size() const;

  bool SameAs(const CoxeterSystem& other) const { return impl_ == other.impl_; }
  // Throws Error(kSystemMismatch).
  void RequireSame(const CoxeterSystem& other) const;

  FieldVec BasePoint() const;
  FieldVec SimpleRoot(Generator s) const;
  void ActDual(Generator s, std::span<std::int64_t> x) const;
  void ActRoot(Generator s, std::span<std::int64_t> beta) const;

  // w^-1 x0 (letters applied left to right).
  FieldVec RightKey(std::span<const Generator> word) const;
  // w x0 (letters applied right to left); equals RightKey of the inverse.
  FieldVec LeftKey(std::span<const Generator> word) const;
  // u(a_s).
  FieldVec RootImage(std::span<const Generator> u, Generator s) const;
  // Sign of a root: every nonzero root has all coordinates of one sign.
  int RootSign(std::span<const std::int64_t> root) const;
  // ShortLex normal form from the dual vector w x0 (consumed).
  Word ShortLexFromLeftKey(FieldVec y) const;

  // Word syntax: if every generator name is one character the word is read
  // character by character (whitespace ignored); otherwise it is a list of
  // names separated by '.', ',' or whitespace. The empty string and "1"
  // denote the identity. Throws Error(kUnknownGenerator).
  Word ParseWord(std::string_view text) const;
  std::string FormatWord(std::span<const Generator> word) const;
  void CheckWord(std::span<const Generator> word) const;

 private:
  struct Impl;
  explicit CoxeterSystem(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Same as CoxeterSystem::Create.
CoxeterSystem NewSystem(const CoxeterMatrix& matrix, std::vector<std::string> names = {});

// An element of W: its ShortLex normal word plus the canonical dual key.
class GroupElement {
 public:
  const CoxeterSystem& system() const { return system_; }
  const Word& normal_word() const { return word_; }
  const FieldVec& key() const { return key_; }
  int length() const { return static_cast<int>(word_.size()); }
  std::string ToString() const { return system_.FormatWord(word_); }

  // Matrix of the root action (column t = w(a_t)), entries in Z[c].
  std::vector<std::vector<FieldElem>> ActionMatrix() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.system_.SameAs(b.system_) && a.key_ == b.key_;
  }

 private:
  friend GroupElement MakeElement(const CoxeterSystem&, Word, FieldVec);
  GroupElement(CoxeterSystem system, Word word, FieldVec key)
      : system_(std::move(system)), word_(std::move(word)), key_(std::move(key)) {}

  CoxeterSystem system_;
  Word word_;
  FieldVec key_;
};

// Trusted constructor: `word` must already be the ShortLex normal form.
GroupElement MakeElement(const CoxeterSystem& system, Word normal_word, FieldVec key);

GroupElement Identity(const CoxeterSystem& system);
GroupElement Gen(const CoxeterSystem& system, Generator s);
GroupElement NormalForm(const CoxeterSystem& system, std::span<const Generator> word);
GroupElement NormalForm(const CoxeterSystem& system, std::string_view word);

// Root-positivity descent criterion: s_1...s_n is reduced iff each
// s_1...s_{i-1}(a_{s_i}) is a positive root.
bool IsReduced(const CoxeterSystem& system, std::span<const Generator> word);
bool IsReduced(const CoxeterSystem& system, std::string_view word);

GroupElement Multiply(const GroupElement& a, const GroupElement& b);
GroupElement Invert(const GroupElement& a);
int Length(const GroupElement& a);
// Generators s with l(sa) < l(a), in generator order.
std::vector<Generator> LeftDescents(const GroupElement& a);
std::vector<Generator> RightDescents(const GroupElement& a);

}  // namespace coxwall

#endif  // COXWALL_COXETER_SYSTEM_HPP_
