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

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pareto_cover/rational.hpp"

namespace pareto_cover {

// Exact base^e. Throws DomainError for 0 raised to a negative power.
Rational pow_rational(const Rational& base, std::int64_t e);

// The unique integer e with base^e <= x < base^(e+1), for base > 1 and
// x > 0. The bracket is always established and confirmed by exact rational
// comparison; a double-precision estimate is only used to pick where the
// exponential search starts.
std::int64_t floor_log(const Rational& base, const Rational& x);

// ceil(log_base x) for base > 1, x > 0.
std::int64_t ceil_log(const Rational& base, const Rational& x);

// Rational y with (1 - 2^-m) e^-x <= y <= (1 + 2^-m) e^-x, for x in [0, 2].
// Sums the alternating Taylor series up to index max(32, 2m + 4).
Rational approx_exp_neg(const Rational& x, int m);

// Either ZERO or the value base^exponent for the rounding base in use.
// ZERO orders strictly below every exponent.
class ExponentOrZero {
 public:
  constexpr ExponentOrZero() = default;

  static constexpr ExponentOrZero zero() { return ExponentOrZero(); }
  static constexpr ExponentOrZero power(std::int64_t exponent) {
    ExponentOrZero v;
    v.raw_ = exponent;
    return v;
  }

  constexpr bool is_zero() const { return raw_ == kZero; }
  constexpr std::int64_t exponent() const { return raw_; }

  // Exact value: 0 or base^exponent.
  Rational value(const Rational& base) const;

  friend constexpr auto operator<=>(ExponentOrZero, ExponentOrZero) = default;

 private:
  static constexpr std::int64_t kZero = std::numeric_limits<std::int64_t>::min();
  std::int64_t raw_ = kZero;
};

std::string to_string(ExponentOrZero v);

// Powers of a fixed rational base > 1, cached as numerator and denominator
// integer powers, with exact floor logarithms of integer ratios. Not
// thread-safe; give each thread its own ladder.
class PowerLadder {
 public:
  explicit PowerLadder(const Rational& base);

  const Rational& base() const { return base_; }
  const Integer& num_pow(std::int64_t e);  // num^e, e >= 0
  const Integer& den_pow(std::int64_t e);  // den^e, e >= 0

  // The e with base^e <= x / y < base^(e+1), for integers x, y > 0.
  std::int64_t floor_log(const Integer& x, const Integer& y);

 private:
  int compare(std::int64_t e, const Integer& x, const Integer& y);

  Rational base_;
  double log_base_;
  std::vector<Integer> num_pows_;
  std::vector<Integer> den_pows_;
  Integer lhs_, rhs_;
};

// ZERO when x == 0, else floor_log(1 + delta, x). Negative x is a DomainError.
ExponentOrZero round_to_power(const Rational& x, const Rational& delta);

}  // namespace pareto_cover
