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

#include "coxwall/number_field.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "coxwall/error.hpp"

namespace coxwall {
namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 Narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw Error(ErrorCode::kResourceLimit, "coefficient overflow in Z[c]");
  }
  return static_cast<i64>(v);
}

i128 CheckedMul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::kResourceLimit, "coefficient overflow in Z[c]");
  }
  return r;
}

i128 CheckedAdd(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::kResourceLimit, "coefficient overflow in Z[c]");
  }
  return r;
}

void Trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

IntPoly PolyMul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      out[i + j] = Narrow(CheckedAdd(out[i + j], CheckedMul(a[i], b[j])));
    }
  }
  Trim(out);
  return out;
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
IntPoly PolyDivExact(IntPoly num, const IntPoly& den) {
  const size_t dn = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("bad cyclotomic division");
  IntPoly q(num.size() - dn, 0);
  for (size_t k = num.size(); k-- > dn;) {
    const i64 lead = num[k];
    q[k - dn] = lead;
    if (lead == 0) continue;
    for (size_t j = 0; j <= dn; ++j) {
      num[k - dn + j] = Narrow(CheckedAdd(num[k - dn + j], -CheckedMul(lead, den[j])));
    }
  }
  for (size_t k = 0; k < dn; ++k) {
    if (num[k] != 0) throw std::logic_error("inexact cyclotomic division");
  }
  Trim(q);
  return q;
}

IntPoly Cyclotomic(int n) {
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) num = PolyDivExact(num, Cyclotomic(d));
  }
  return num;
}

// Small RAII interval over MPFR with outward rounding.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }
  Interval(const Interval&) = delete;
  Interval& operator=(const Interval&) = delete;

  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  void SetInt(i64 v) {
    mpfr_set_sj(lo_, v, MPFR_RNDD);
    mpfr_set_sj(hi_, v, MPFR_RNDU);
  }

  // this = this * other + k
  void MulAddInt(const Interval& other, i64 k, mpfr_prec_t prec) {
    mpfr_t p[4], q[4];
    for (int i = 0; i < 4; ++i) {
      mpfr_init2(p[i], prec);
      mpfr_init2(q[i], prec);
    }
    mpfr_srcptr a[2] = {lo_, hi_};
    mpfr_srcptr b[2] = {other.lo(), other.hi()};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        mpfr_mul(p[2 * i + j], a[i], b[j], MPFR_RNDD);
        mpfr_mul(q[2 * i + j], a[i], b[j], MPFR_RNDU);
      }
    }
    mpfr_srcptr mn = p[0];
    mpfr_srcptr mx = q[0];
    for (int i = 1; i < 4; ++i) {
      if (mpfr_less_p(p[i], mn)) mn = p[i];
      if (mpfr_greater_p(q[i], mx)) mx = q[i];
    }
    mpfr_t kk;
    mpfr_init2(kk, 64);
    mpfr_set_sj(kk, k, MPFR_RNDN);  // exact at 64 bits
    mpfr_add(lo_, mn, kk, MPFR_RNDD);
    mpfr_add(hi_, mx, kk, MPFR_RNDU);
    mpfr_clear(kk);
    for (int i = 0; i < 4; ++i) {
      mpfr_clear(p[i]);
      mpfr_clear(q[i]);
    }
  }

  int Sign() const {
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
  }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

// Encloses 2cos(pi/n), n >= 2, at the given precision.
void TwoCosBracket(int n, mpfr_prec_t prec, Interval& out) {
  mpfr_t pi_lo, pi_hi;
  mpfr_init2(pi_lo, prec);
  mpfr_init2(pi_hi, prec);
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  mpfr_div_ui(pi_lo, pi_lo, static_cast<unsigned long>(n), MPFR_RNDD);
  mpfr_div_ui(pi_hi, pi_hi, static_cast<unsigned long>(n), MPFR_RNDU);
  // cos is decreasing on [0, pi/2].
  mpfr_cos(out.lo(), pi_hi, MPFR_RNDD);
  mpfr_cos(out.hi(), pi_lo, MPFR_RNDU);
  mpfr_mul_2ui(out.lo(), out.lo(), 1, MPFR_RNDD);
  mpfr_mul_2ui(out.hi(), out.hi(), 1, MPFR_RNDU);
  mpfr_clear(pi_lo);
  mpfr_clear(pi_hi);
}

int EvalSign(std::span<const i64> a, const Interval& c, mpfr_prec_t prec) {
  Interval v(prec);
  v.SetInt(a.back());
  for (size_t i = a.size() - 1; i-- > 0;) v.MulAddInt(c, a[i], prec);
  return v.Sign();
}

int PointSign(std::span<const i64> a, mpfr_srcptr x, mpfr_prec_t prec) {
  Interval c(prec);
  mpfr_set(c.lo(), x, MPFR_RNDD);
  mpfr_set(c.hi(), x, MPFR_RNDU);
  return EvalSign(a, c, prec);
}

}  // namespace

IntPoly MinimalPolynomialOfTwoCos(int m) {
  if (m < 1) throw std::invalid_argument("MinimalPolynomialOfTwoCos: m < 1");
  if (m == 1) return {2, 1};
  if (m == 2) return {0, 1};
  // 2cos(pi/m) = z + 1/z with z a primitive 2m-th root of unity.
  const IntPoly phi = Cyclotomic(2 * m);
  const int d = static_cast<int>(phi.size() - 1) / 2;
  // z^-d phi(z) = a_d + sum_j a_{d+j} (z^j + z^-j) and z^j + z^-j = V_j(x)
  // with V_0 = 2, V_1 = x, V_{j+1} = x V_j - V_{j-1}.
  IntPoly psi(d + 1, 0);
  psi[0] = phi[d];
  IntPoly prev = {2};
  IntPoly cur = {0, 1};
  for (int j = 1; j <= d; ++j) {
    for (size_t k = 0; k < cur.size(); ++k) {
      psi[k] = Narrow(CheckedAdd(psi[k], CheckedMul(phi[d + j], cur[k])));
    }
    IntPoly next = PolyMul({0, 1}, cur);
    for (size_t k = 0; k < prev.size(); ++k) next[k] -= prev[k];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return psi;
}

NumberField::NumberField(int conductor) : conductor_(conductor) {
  if (conductor < 1) throw std::invalid_argument("NumberField: conductor < 1");
  modulus_ = MinimalPolynomialOfTwoCos(conductor);
  degree_ = static_cast<int>(modulus_.size()) - 1;
  if (degree_ > 64) {
    throw Error(ErrorCode::kResourceLimit,
                "field degree " + std::to_string(degree_) + " too large");
  }
  c_approx_ = 2.0 * std::cos(std::numbers::pi / conductor);

  // x^(d+k) mod psi for k = 0 .. d-2.
  FieldElem xp(degree_, 0);
  for (int k = 0; k + 1 < degree_; ++k) {
    // x^d = -(psi_0 + ... + psi_{d-1} x^{d-1}) when k == 0, else shift.
    FieldElem next(degree_, 0);
    if (k == 0) {
      for (int i = 0; i < degree_; ++i) next[i] = -modulus_[i];
    } else {
      const i64 top = xp[degree_ - 1];
      for (int i = degree_ - 1; i > 0; --i) next[i] = xp[i - 1];
      next[0] = 0;
      for (int i = 0; i < degree_; ++i) {
        next[i] = Narrow(CheckedAdd(next[i], -CheckedMul(top, modulus_[i])));
      }
    }
    reduction_.push_back(next);
    xp = next;
  }

  if (degree_ == 1) {
    c_lo_ = c_hi_ = static_cast<double>(-modulus_[0]);
    return;
  }
  // Certify that psi changes sign across the bracket, and that the bracket
  // sits inside (2cos(pi/(N-1)), 2) where c is psi's only root.
  // The enclosure from cos() is too thin to evaluate psi on, so widen it.
  constexpr mpfr_prec_t kPrec = 128;
  Interval c(kPrec);
  bool certified = false;
  for (long shift = 80; shift >= 20 && !certified; shift -= 12) {
    TwoCosBracket(conductor_, kPrec, c);
    mpfr_t eps;
    mpfr_init2(eps, kPrec);
    mpfr_set_ui_2exp(eps, 1, -shift, MPFR_RNDN);
    mpfr_sub(c.lo(), c.lo(), eps, MPFR_RNDD);
    mpfr_add(c.hi(), c.hi(), eps, MPFR_RNDU);
    mpfr_clear(eps);
    const int s_lo = PointSign(modulus_, c.lo(), kPrec);
    const int s_hi = PointSign(modulus_, c.hi(), kPrec);
    certified = s_lo != 0 && s_hi != 0 && s_lo != s_hi;
  }
  if (!certified) {
    throw std::logic_error("NumberField: minimal polynomial does not bracket c");
  }
  Interval below(kPrec);
  TwoCosBracket(conductor_ - 1, kPrec, below);
  if (!mpfr_greater_p(c.lo(), below.hi()) || mpfr_cmp_ui(c.hi(), 2) >= 0) {
    throw std::logic_error("NumberField: bracket of c not isolating");
  }
  c_lo_ = mpfr_get_d(c.lo(), MPFR_RNDD);
  c_hi_ = mpfr_get_d(c.hi(), MPFR_RNDU);
}

FieldElem NumberField::FromInt(std::int64_t v) const {
  FieldElem e(degree_, 0);
  e[0] = v;
  return e;
}

FieldElem NumberField::Generator() const {
  if (degree_ == 1) return FromInt(-modulus_[0]);
  FieldElem e(degree_, 0);
  e[1] = 1;
  return e;
}

FieldElem NumberField::TwoCosPiOver(int m) const {
  if (m == 2) return FromInt(0);
  if (m == 3) return FromInt(1);
  if (m < 1 || conductor_ % m != 0) {
    throw std::invalid_argument("TwoCosPiOver: " + std::to_string(m) +
                                " does not divide the conductor");
  }
  const int k = conductor_ / m;
  const FieldElem c = Generator();
  FieldElem prev = FromInt(2);
  FieldElem cur = c;
  if (k == 0) return prev;
  for (int j = 1; j < k; ++j) {
    FieldElem next = Sub(Mul(c, cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

void NumberField::AddMul(std::span<std::int64_t> acc,
                         std::span<const std::int64_t> a,
                         std::span<const std::int64_t> b) const {
  const int d = degree_;
  if (d == 1) {
    acc[0] = Narrow(CheckedAdd(acc[0], CheckedMul(a[0], b[0])));
    return;
  }
  i128 prod[2 * 64] = {};
  bool any = false;
  for (int i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] = CheckedAdd(prod[i + j], CheckedMul(a[i], b[j]));
      any = true;
    }
  }
  if (!any) return;
  i128 out[64];
  for (int i = 0; i < d; ++i) out[i] = CheckedAdd(prod[i], acc[i]);
  for (int k = 0; k + 1 < d; ++k) {
    const i128 top = prod[d + k];
    if (top == 0) continue;
    const FieldElem& r = reduction_[k];
    for (int i = 0; i < d; ++i) out[i] = CheckedAdd(out[i], CheckedMul(top, r[i]));
  }
  for (int i = 0; i < d; ++i) acc[i] = Narrow(out[i]);
}

void NumberField::Mul(std::span<const std::int64_t> a,
                      std::span<const std::int64_t> b,
                      std::span<std::int64_t> out) const {
  std::fill(out.begin(), out.end(), 0);
  AddMul(out, a, b);
}

FieldElem NumberField::Mul(const FieldElem& a, const FieldElem& b) const {
  FieldElem out(degree_, 0);
  AddMul(out, a, b);
  return out;
}

FieldElem NumberField::Add(const FieldElem& a, const FieldElem& b) const {
  FieldElem out(degree_);
  for (int i = 0; i < degree_; ++i) out[i] = Narrow(CheckedAdd(a[i], b[i]));
  return out;
}

FieldElem NumberField::Sub(const FieldElem& a, const FieldElem& b) const {
  FieldElem out(degree_);
  for (int i = 0; i < degree_; ++i) out[i] = Narrow(CheckedAdd(a[i], -static_cast<i128>(b[i])));
  return out;
}

FieldElem NumberField::Neg(const FieldElem& a) const {
  FieldElem out(degree_);
  for (int i = 0; i < degree_; ++i) out[i] = Narrow(-static_cast<i128>(a[i]));
  return out;
}

bool NumberField::IsZero(std::span<const std::int64_t> a) {
  return std::all_of(a.begin(), a.end(), [](i64 v) { return v == 0; });
}

double NumberField::Approx(std::span<const std::int64_t> a) const {
  double v = 0.0;
  for (size_t i = a.size(); i-- > 0;) v = v * c_approx_ + static_cast<double>(a[i]);
  return v;
}

int NumberField::Sign(std::span<const std::int64_t> a) const {
  if (IsZero(a)) return 0;
  if (degree_ == 1) return a[0] > 0 ? 1 : -1;
  // Fast path: Horner in double against a deliberately loose error bound.
  constexpr double kTwo53 = 9007199254740992.0;
  double v = 0.0;
  double mag = 0.0;
  const double cabs = std::max(1.0, std::abs(c_approx_));
  bool exact_inputs = true;
  for (size_t i = a.size(); i-- > 0;) {
    const double ai = static_cast<double>(a[i]);
    if (std::abs(ai) >= kTwo53) exact_inputs = false;
    v = v * c_approx_ + ai;
    mag = mag * cabs + std::abs(ai);
  }
  const double bound = 1e-13 * (degree_ + 2) * mag;
  if (exact_inputs && std::abs(v) > bound) return v > 0 ? 1 : -1;
  return SignMultiprecision(a);
}

int NumberField::SignMultiprecision(std::span<const std::int64_t> a) const {
  for (mpfr_prec_t prec = 128; prec <= 16384; prec *= 2) {
    Interval c(prec);
    TwoCosBracket(conductor_, prec, c);
    const int s = EvalSign(a, c, prec);
    if (s != 0) return s;
  }
  throw std::logic_error("NumberField::Sign: nonzero element not separated from 0");
}

}  // namespace coxwall
