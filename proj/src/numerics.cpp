// Copyright 2026 The pareto-cover Authors
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

#include "pareto_cover/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "pareto_cover/errors.hpp"

namespace pareto_cover {

namespace {

// Natural log of a positive integer that may be far outside double range.
double log_integer(const Integer& v) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

double log_rational(const Rational& v) {
  return log_integer(v.get_num()) - log_integer(v.get_den());
}

// -1 / 0 / +1 comparing base^e against x, computed without forming the
// rational power: compares num^e * x.den with den^e * x.num (e >= 0) or the
// mirrored products for e < 0.
int compare_power(const Rational& base, std::int64_t e, const Rational& x) {
  Integer a, b;
  const auto ue = static_cast<unsigned long>(e >= 0 ? e : -e);
  mpz_pow_ui(a.get_mpz_t(), base.get_num().get_mpz_t(), ue);
  mpz_pow_ui(b.get_mpz_t(), base.get_den().get_mpz_t(), ue);
  if (e < 0) swap(a, b);
  // base^e = a / b with b > 0 (base > 1 here).
  return cmp(a * x.get_den(), b * x.get_num());
}

}  // namespace

Rational pow_rational(const Rational& base, std::int64_t e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw DomainError("0 raised to a negative power");
    return Rational(0);
  }
  const auto ue = static_cast<unsigned long>(e >= 0 ? e : -e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), ue);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), ue);
  Rational out = e > 0 ? Rational(num, den) : Rational(den, num);
  out.canonicalize();  // only moves the sign for negative bases
  return out;
}

std::int64_t floor_log(const Rational& base, const Rational& x) {
  if (base <= 1) throw DomainError("floor_log: base must exceed 1");
  if (x <= 0) throw DomainError("floor_log: argument must be positive");

  // Seed. Any integer works; a good one keeps the bracket tiny.
  std::int64_t guess = 0;
  const double est = log_rational(x) / log_rational(base);
  if (std::isfinite(est) && std::abs(est) < 4e18) {
    guess = static_cast<std::int64_t>(std::floor(est));
  }

  // Find lo <= e < hi with base^lo <= x < base^hi by exponential widening.
  std::int64_t lo = guess;
  std::int64_t hi = guess + 1;
  std::int64_t step = 1;
  while (compare_power(base, lo, x) > 0) {
    hi = lo;
    lo -= step;
    step *= 2;
  }
  step = 1;
  while (compare_power(base, hi, x) <= 0) {
    lo = hi;
    hi += step;
    step *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (compare_power(base, mid, x) <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::int64_t ceil_log(const Rational& base, const Rational& x) {
  const std::int64_t e = floor_log(base, x);
  return compare_power(base, e, x) == 0 ? e : e + 1;
}

Rational approx_exp_neg(const Rational& x, int m) {
  if (x < 0 || x > 2) throw DomainError("approx_exp_neg: x must lie in [0,2]");
  if (m < 1) throw DomainError("approx_exp_neg: precision m must be >= 1");
  const int terms = std::max(32, 2 * m + 4);
  Rational sum = 1;
  Rational term = 1;
  for (int t = 1; t <= terms; ++t) {
    term *= -x;
    term /= t;
    sum += term;
  }
  return sum;
}

PowerLadder::PowerLadder(const Rational& base)
    : base_(base), log_base_(0), num_pows_{Integer(1)}, den_pows_{Integer(1)} {
  if (base_ <= 1) throw DomainError("PowerLadder: base must exceed 1");
  log_base_ = log_rational(base_);
}

const Integer& PowerLadder::num_pow(std::int64_t e) {
  while (static_cast<std::int64_t>(num_pows_.size()) <= e) {
    num_pows_.push_back(num_pows_.back() * base_.get_num());
  }
  return num_pows_[static_cast<std::size_t>(e)];
}

const Integer& PowerLadder::den_pow(std::int64_t e) {
  while (static_cast<std::int64_t>(den_pows_.size()) <= e) {
    den_pows_.push_back(den_pows_.back() * base_.get_den());
  }
  return den_pows_[static_cast<std::size_t>(e)];
}

int PowerLadder::compare(std::int64_t e, const Integer& x, const Integer& y) {
  // base^e against x/y: num^e * y vs x * den^e, mirrored for e < 0.
  if (e >= 0) {
    mpz_mul(lhs_.get_mpz_t(), num_pow(e).get_mpz_t(), y.get_mpz_t());
    mpz_mul(rhs_.get_mpz_t(), x.get_mpz_t(), den_pow(e).get_mpz_t());
  } else {
    mpz_mul(lhs_.get_mpz_t(), den_pow(-e).get_mpz_t(), y.get_mpz_t());
    mpz_mul(rhs_.get_mpz_t(), x.get_mpz_t(), num_pow(-e).get_mpz_t());
  }
  return cmp(lhs_, rhs_);
}

std::int64_t PowerLadder::floor_log(const Integer& x, const Integer& y) {
  if (sgn(x) <= 0 || sgn(y) <= 0) {
    throw DomainError("PowerLadder::floor_log: arguments must be positive");
  }
  std::int64_t guess = 0;
  const double est = (log_integer(x) - log_integer(y)) / log_base_;
  if (std::isfinite(est) && std::abs(est) < 4e18) {
    guess = static_cast<std::int64_t>(std::floor(est));
  }
  std::int64_t lo = guess;
  std::int64_t hi = guess + 1;
  std::int64_t step = 1;
  while (compare(lo, x, y) > 0) {
    hi = lo;
    lo -= step;
    step *= 2;
  }
  step = 1;
  while (compare(hi, x, y) <= 0) {
    lo = hi;
    hi += step;
    step *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (compare(mid, x, y) <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

Rational ExponentOrZero::value(const Rational& base) const {
  if (is_zero()) return Rational(0);
  return pow_rational(base, raw_);
}

std::string to_string(ExponentOrZero v) {
  return v.is_zero() ? std::string("ZERO") : "^" + std::to_string(v.exponent());
}

ExponentOrZero round_to_power(const Rational& x, const Rational& delta) {
  if (x < 0) throw DomainError("round_to_power: negative value");
  if (x == 0) return ExponentOrZero::zero();
  return ExponentOrZero::power(floor_log(Rational(1 + delta), x));
}

}  // namespace pareto_cover
