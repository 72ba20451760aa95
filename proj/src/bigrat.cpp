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

#include "rota/bigrat.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <vector>

namespace rota {

BigRat::BigRat(long num, unsigned long den) {
  mpq_init(q_);
  if (den == 0) {
    mpq_clear(q_);
    throw std::domain_error("BigRat: zero denominator");
  }
  mpq_set_si(q_, num, den);
  mpq_canonicalize(q_);
}

BigRat BigRat::binomial(unsigned long n, unsigned long k) {
  BigRat r;
  mpz_bin_uiui(mpq_numref(r.q_), n, k);
  return r;
}

BigRat BigRat::pow_ui(unsigned long e) const {
  BigRat r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(q_), e);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(q_), e);
  // num/den coprime implies num^e/den^e coprime; no canonicalize needed.
  return r;
}

BigRat& BigRat::operator/=(const BigRat& o) {
  if (o.is_zero()) {
    throw std::domain_error("BigRat: division by zero");
  }
  mpq_div(q_, q_, o.q_);
  return *this;
}

std::string BigRat::fraction_string() const {
  std::vector<char> buf(mpz_sizeinbase(mpq_numref(q_), 10) +
                        mpz_sizeinbase(mpq_denref(q_), 10) + 8);
  gmp_snprintf(buf.data(), buf.size(), "%Qd", q_);
  std::string s(buf.data());
  if (s.find('/') == std::string::npos) {
    s += "/1";
  }
  return s;
}

std::string BigRat::decimal_string(int sig_digits) const {
  if (sig_digits < 1) {
    throw std::invalid_argument("BigRat::decimal_string: need at least one digit");
  }
  mpfr_t x;
  mpfr_init2(x, static_cast<mpfr_prec_t>(sig_digits) * 4 + 64);
  mpfr_set_q(x, q_, MPFR_RNDN);
  std::vector<char> buf(static_cast<std::size_t>(sig_digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", sig_digits, x);
  mpfr_clear(x);
  return std::string(buf.data());
}

}  // namespace rota
