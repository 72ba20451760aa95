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

#include <mpfr.h>

#include <string>

#include "rota/bigrat.hpp"

namespace rota {

// Closed interval [lower, upper] in MPFR floats. Every operation rounds the
// lower endpoint down and the upper endpoint up, so the exact mathematical
// result is guaranteed to lie inside. Comparisons against rationals are only
// reported when the whole interval is on one side of the value; anything else
// is inconclusive and the caller should retry at higher precision.
class RInterval {
 public:
  explicit RInterval(mpfr_prec_t bits);
  RInterval(const RInterval& other);
  RInterval(RInterval&& other) noexcept;
  RInterval& operator=(const RInterval& other);
  RInterval& operator=(RInterval&& other) noexcept;
  ~RInterval();

  static RInterval exact_int(long value, mpfr_prec_t bits);
  static RInterval from_rational(const BigRat& value, mpfr_prec_t bits);
  // Euler's number e, enclosed at the given precision.
  static RInterval euler(mpfr_prec_t bits);

  mpfr_prec_t precision_bits() const { return prec_; }

  RInterval operator+(const RInterval& o) const;
  RInterval operator-(const RInterval& o) const;
  RInterval operator*(const RInterval& o) const;
  // Divisor interval must not contain zero.
  RInterval operator/(const RInterval& o) const;

  RInterval exp() const;
  // Requires lower > 0.
  RInterval log() const;
  // Requires lower >= 0; monotone endpoint powers.
  RInterval pow_ui(unsigned long e) const;
  // base^expo for base with lower > 0, via exp(expo * log(base)).
  RInterval pow(const RInterval& expo) const;

  bool certainly_less(const BigRat& v) const;
  bool certainly_greater(const BigRat& v) const;
  bool contains(const BigRat& v) const;
  // True when the other interval's endpoints are inside this one.
  bool encloses(const RInterval& o) const;

  double lower_double() const;
  double upper_double() const;
  std::string lower_string(int sig_digits) const;
  std::string upper_string(int sig_digits) const;

 private:
  mpfr_t lo_, up_;
  mpfr_prec_t prec_;
};

// ceil(ln n) for n >= 1, certified: the returned t satisfies e^(t-1) < n <= e^t,
// verified with outward-rounded exponentials (precision escalates until the
// comparison is strict; ln n is irrational for integer n >= 2, so it always
// concludes).
long ceil_log(unsigned long n);

}  // namespace rota
