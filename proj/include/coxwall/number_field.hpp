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

#ifndef COXWALL_NUMBER_FIELD_HPP_
#define COXWALL_NUMBER_FIELD_HPP_

#include <cstdint>
#include <span>
#include <vector>

namespace coxwall {

// Coefficient vector of an element of Z[c], lowest degree first, always of
// length NumberField::degree().
using FieldElem = std::vector<std::int64_t>;

// Integer polynomial, lowest degree first.
using IntPoly = std::vector<std::int64_t>;

// Minimal polynomial over Q of 2cos(2*pi/m), m >= 1. Monic with integer
// coefficients; degree phi(m)/2 for m >= 3.
IntPoly MinimalPolynomialOfTwoCos(int m);

// The ring Z[c] with c = 2cos(pi/N), presented as Z[x]/(psi) where psi is the
// minimal polynomial of c. Every Coxeter-geometric quantity this library
// needs (2cos(pi/m) for m | N, and the integer 2 standing in for m = inf)
// lives here, so equality is exact coefficient comparison.
//
// Signs are decided by evaluating at c: a double-precision pass with an
// explicit error bound, then MPFR interval arithmetic with doubling
// precision around a certified bracket of c.
class NumberField {
 public:
  explicit NumberField(int conductor);

  int conductor() const { return conductor_; }
  int degree() const { return degree_; }
  const IntPoly& modulus() const { return modulus_; }
  double generator_approx() const { return c_approx_; }

  FieldElem Zero() const { return FieldElem(degree_, 0); }
  FieldElem FromInt(std::int64_t v) const;
  FieldElem Generator() const;

  // 2cos(pi/m). Requires m == 2, m == 3 or m | conductor().
  FieldElem TwoCosPiOver(int m) const;

  // out = a * b. `out` may alias neither input.
  void Mul(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
           std::span<std::int64_t> out) const;
  // acc += a * b.
  void AddMul(std::span<std::int64_t> acc, std::span<const std::int64_t> a,
              std::span<const std::int64_t> b) const;

  FieldElem Mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem Add(const FieldElem& a, const FieldElem& b) const;
  FieldElem Sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem Neg(const FieldElem& a) const;

  static bool IsZero(std::span<const std::int64_t> a);
  // Returns -1, 0 or +1: the sign of the real number a(c).
  int Sign(std::span<const std::int64_t> a) const;
  double Approx(std::span<const std::int64_t> a) const;

  // Certified lower/upper bounds for c (as doubles, outward rounded).
  double bracket_lo() const { return c_lo_; }
  double bracket_hi() const { return c_hi_; }

 private:
  int SignMultiprecision(std::span<const std::int64_t> a) const;

  int conductor_;
  int degree_;
  IntPoly modulus_;
  // reduction_[k] = x^(degree_ + k) mod modulus_, k in [0, degree_ - 1).
  std::vector<FieldElem> reduction_;
  double c_approx_;
  double c_lo_;
  double c_hi_;
};

}  // namespace coxwall

#endif  // COXWALL_NUMBER_FIELD_HPP_
