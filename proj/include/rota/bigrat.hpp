// Copyright 2026 The Authors.
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

#pragma once

#include <gmp.h>

#include <cstdint>
#include <string>

namespace rota {

// Exact rational number backed by GMP, kept canonical (lowest terms,
// denominator > 0) after every operation.
class BigRat {
 public:
  BigRat() { mpq_init(q_); }

  BigRat(long value) {  // NOLINT(runtime/explicit): integers embed naturally
    mpq_init(q_);
    mpq_set_si(q_, value, 1);
  }

  BigRat(long num, unsigned long den);

  BigRat(const BigRat& other) {
    mpq_init(q_);
    mpq_set(q_, other.q_);
  }

  BigRat(BigRat&& other) noexcept {
    mpq_init(q_);
    mpq_swap(q_, other.q_);
  }

  BigRat& operator=(const BigRat& other) {
    mpq_set(q_, other.q_);
    return *this;
  }

  BigRat& operator=(BigRat&& other) noexcept {
    mpq_swap(q_, other.q_);
    return *this;
  }

  ~BigRat() { mpq_clear(q_); }

  // C(n, k); zero whenever k > n.
  static BigRat binomial(unsigned long n, unsigned long k);

  // Exact e-th power; pow_ui(0) is 1 for every value including 0.
  BigRat pow_ui(unsigned long e) const;

  BigRat& operator+=(const BigRat& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  BigRat& operator-=(const BigRat& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  BigRat& operator*=(const BigRat& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  BigRat& operator/=(const BigRat& o);

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return mpq_sgn(q_) == 0; }

  int compare(const BigRat& o) const { return mpq_cmp(q_, o.q_); }

  bool operator==(const BigRat& o) const { return mpq_equal(q_, o.q_) != 0; }
  bool operator!=(const BigRat& o) const { return !(*this == o); }
  bool operator<(const BigRat& o) const { return compare(o) < 0; }
  bool operator<=(const BigRat& o) const { return compare(o) <= 0; }
  bool operator>(const BigRat& o) const { return compare(o) > 0; }
  bool operator>=(const BigRat& o) const { return compare(o) >= 0; }

  // "num/den" with den >= 1, e.g. "1/32", "-7/9", "0/1".
  std::string fraction_string() const;

  // Decimal rendering with the given number of significant digits.
  std::string decimal_string(int sig_digits) const;

  double to_double() const { return mpq_get_d(q_); }

  mpq_srcptr raw() const { return q_; }

 private:
  mpq_t q_;
};

inline BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
inline BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
inline BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
inline BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

}  // namespace rota
