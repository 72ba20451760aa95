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

#include "rota/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace rota {

RInterval::RInterval(mpfr_prec_t bits) : prec_(bits) {
  if (bits < MPFR_PREC_MIN) {
    throw std::invalid_argument("RInterval: precision too small");
  }
  mpfr_init2(lo_, bits);
  mpfr_init2(up_, bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(up_, 1);
}

RInterval::RInterval(const RInterval& other) : prec_(other.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(up_, prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(up_, other.up_, MPFR_RNDU);
}

RInterval::RInterval(RInterval&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(up_, MPFR_PREC_MIN);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(up_, other.up_);
}

RInterval& RInterval::operator=(const RInterval& other) {
  if (this != &other) {
    mpfr_set_prec(lo_, other.prec_);
    mpfr_set_prec(up_, other.prec_);
    prec_ = other.prec_;
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(up_, other.up_, MPFR_RNDU);
  }
  return *this;
}

RInterval& RInterval::operator=(RInterval&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(up_, other.up_);
  std::swap(prec_, other.prec_);
  return *this;
}

RInterval::~RInterval() {
  mpfr_clear(lo_);
  mpfr_clear(up_);
}

RInterval RInterval::exact_int(long value, mpfr_prec_t bits) {
  RInterval r(bits);
  mpfr_set_si(r.lo_, value, MPFR_RNDD);
  mpfr_set_si(r.up_, value, MPFR_RNDU);
  return r;
}

RInterval RInterval::from_rational(const BigRat& value, mpfr_prec_t bits) {
  RInterval r(bits);
  mpfr_set_q(r.lo_, value.raw(), MPFR_RNDD);
  mpfr_set_q(r.up_, value.raw(), MPFR_RNDU);
  return r;
}

RInterval RInterval::euler(mpfr_prec_t bits) {
  RInterval r(bits);
  mpfr_t one;
  mpfr_init2(one, bits);
  mpfr_set_ui(one, 1, MPFR_RNDN);
  mpfr_exp(r.lo_, one, MPFR_RNDD);
  mpfr_exp(r.up_, one, MPFR_RNDU);
  mpfr_clear(one);
  return r;
}

RInterval RInterval::operator+(const RInterval& o) const {
  RInterval r(std::max(prec_, o.prec_));
  mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(r.up_, up_, o.up_, MPFR_RNDU);
  return r;
}

RInterval RInterval::operator-(const RInterval& o) const {
  RInterval r(std::max(prec_, o.prec_));
  mpfr_sub(r.lo_, lo_, o.up_, MPFR_RNDD);
  mpfr_sub(r.up_, up_, o.lo_, MPFR_RNDU);
  return r;
}

RInterval RInterval::operator*(const RInterval& o) const {
  RInterval r(std::max(prec_, o.prec_));
  // Endpoint products; min rounded down, max rounded up.
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_srcptr a[2] = {lo_, up_};
  const mpfr_srcptr b[2] = {o.lo_, o.up_};
  bool first = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      mpfr_mul(t, a[i], b[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) {
        mpfr_set(r.lo_, t, MPFR_RNDD);
      }
      mpfr_mul(t, a[i], b[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, r.up_) > 0) {
        mpfr_set(r.up_, t, MPFR_RNDU);
      }
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

RInterval RInterval::operator/(const RInterval& o) const {
  if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.up_) >= 0) {
    throw std::domain_error("RInterval: divisor interval contains zero");
  }
  RInterval r(std::max(prec_, o.prec_));
  mpfr_t t;
  mpfr_init2(t, r.prec_);
  const mpfr_srcptr a[2] = {lo_, up_};
  const mpfr_srcptr b[2] = {o.lo_, o.up_};
  bool first = true;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      mpfr_div(t, a[i], b[j], MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) {
        mpfr_set(r.lo_, t, MPFR_RNDD);
      }
      mpfr_div(t, a[i], b[j], MPFR_RNDU);
      if (first || mpfr_cmp(t, r.up_) > 0) {
        mpfr_set(r.up_, t, MPFR_RNDU);
      }
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

RInterval RInterval::exp() const {
  RInterval r(prec_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.up_, up_, MPFR_RNDU);
  return r;
}

RInterval RInterval::log() const {
  if (mpfr_sgn(lo_) <= 0) {
    throw std::domain_error("RInterval::log: interval must be strictly positive");
  }
  RInterval r(prec_);
  mpfr_log(r.lo_, lo_, MPFR_RNDD);
  mpfr_log(r.up_, up_, MPFR_RNDU);
  return r;
}

RInterval RInterval::pow_ui(unsigned long e) const {
  if (mpfr_sgn(lo_) < 0) {
    throw std::domain_error("RInterval::pow_ui: negative base not supported");
  }
  RInterval r(prec_);
  if (e == 0) {
    mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
    mpfr_set_ui(r.up_, 1, MPFR_RNDU);
    return r;
  }
  mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
  mpfr_pow_ui(r.up_, up_, e, MPFR_RNDU);
  return r;
}

RInterval RInterval::pow(const RInterval& expo) const {
  return (expo * log()).exp();
}

bool RInterval::certainly_less(const BigRat& v) const {
  return mpfr_cmp_q(up_, v.raw()) < 0;
}

bool RInterval::certainly_greater(const BigRat& v) const {
  return mpfr_cmp_q(lo_, v.raw()) > 0;
}

bool RInterval::contains(const BigRat& v) const {
  return mpfr_cmp_q(lo_, v.raw()) <= 0 && mpfr_cmp_q(up_, v.raw()) >= 0;
}

bool RInterval::encloses(const RInterval& o) const {
  return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(up_, o.up_) >= 0;
}

double RInterval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }

double RInterval::upper_double() const { return mpfr_get_d(up_, MPFR_RNDU); }

namespace {

std::string format_endpoint(mpfr_srcptr x, int sig_digits, mpfr_rnd_t rnd) {
  std::vector<char> buf(static_cast<std::size_t>(sig_digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*R*e", sig_digits - 1, rnd, x);
  return std::string(buf.data());
}

}  // namespace

std::string RInterval::lower_string(int sig_digits) const {
  return format_endpoint(lo_, sig_digits, MPFR_RNDD);
}

std::string RInterval::upper_string(int sig_digits) const {
  return format_endpoint(up_, sig_digits, MPFR_RNDU);
}

long ceil_log(unsigned long n) {
  if (n == 0) {
    throw std::invalid_argument("ceil_log: n must be positive");
  }
  if (n == 1) {
    return 0;  // ln 1 == 0 exactly
  }
  long candidate = static_cast<long>(std::ceil(std::log(static_cast<double>(n))));
  candidate = std::max<long>(candidate, 1);
  for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
    for (int probe = 0; probe < 4; ++probe) {
      const RInterval below = RInterval::exact_int(candidate - 1, prec).exp();
      const RInterval above = RInterval::exact_int(candidate, prec).exp();
      const BigRat nv(static_cast<long>(n));
      if (below.certainly_greater(nv)) {
        --candidate;
        continue;
      }
      if (above.certainly_less(nv)) {
        ++candidate;
        continue;
      }
      if (below.certainly_less(nv) && above.certainly_greater(nv)) {
        return candidate;  // e^(t-1) < n < e^t certified
      }
      break;  // an endpoint straddles n: raise precision
    }
  }
  throw std::runtime_error("ceil_log: could not certify at 4096 bits");
}

}  // namespace rota
