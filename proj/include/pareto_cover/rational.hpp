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

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <string>
#include <string_view>
#include <vector>

namespace pareto_cover {

// Exact fraction, always kept in canonical form (positive denominator,
// coprime numerator and denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "p/q", "-p/q" or a plain decimal such as "0.125". Throws
// ValidationError on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "num/den" form; integers keep an explicit "/1".
std::string format_rational(const Rational& value);

// Decimal rendering for display only.
std::string format_decimal(const Rational& value, int digits = 12);

// Comma separated list of rationals, e.g. "1/2,1/3,1".
std::vector<Rational> parse_rational_list(std::string_view text);

// Rational extended by -inf and +inf. Used for interval endpoints where the
// conventions max {} = -inf and min {} = +inf apply.
class ExtendedRational {
 public:
  enum class Kind { kNegInf, kFinite, kPosInf };

  ExtendedRational() : kind_(Kind::kNegInf) {}
  ExtendedRational(Rational value)  // NOLINT: implicit by intent
      : kind_(Kind::kFinite), value_(std::move(value)) {}
  template <std::integral T>
  ExtendedRational(T value)  // NOLINT: implicit by intent
      : kind_(Kind::kFinite), value_(static_cast<long>(value)) {}

  static ExtendedRational neg_inf() { return ExtendedRational(Kind::kNegInf); }
  static ExtendedRational pos_inf() { return ExtendedRational(Kind::kPosInf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_neg_inf() const { return kind_ == Kind::kNegInf; }
  bool is_pos_inf() const { return kind_ == Kind::kPosInf; }
  const Rational& value() const { return value_; }

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a,
                                          const ExtendedRational& b);

 private:
  explicit ExtendedRational(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational value_;
};

std::string to_string(const ExtendedRational& value);

}  // namespace pareto_cover
