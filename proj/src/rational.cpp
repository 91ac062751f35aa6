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

#include "pareto_cover/rational.hpp"

#include <cctype>
#include <string>

#include "pareto_cover/errors.hpp"

namespace pareto_cover {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw ValidationError("not a rational number: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    Integer d(std::string(den), 10);
    if (d == 0) throw ValidationError("zero denominator in '" +
                                      std::string(text) + "'");
    result = Rational(Integer(std::string(num), 10), d);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((whole.empty() && frac.empty()) ||
        (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      bad_rational(text);
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer w = whole.empty() ? Integer(0) : Integer(std::string(whole), 10);
    Integer f = frac.empty() ? Integer(0) : Integer(std::string(frac), 10);
    result = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(s)) bad_rational(text);
    result = Rational(Integer(std::string(s), 10));
  }
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_decimal(const Rational& value, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(value) * scale;
  // Round half up on the absolute value.
  Integer q = (scaled.get_num() * 2 + scaled.get_den()) /
              (scaled.get_den() * 2);
  std::string s = q.get_str();
  if (static_cast<int>(s.size()) <= digits) {
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  }
  s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (value < 0 && q != 0) s.insert(0, "-");
  return s;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const ExtendedRational& a,
                                 const ExtendedRational& b) {
  using K = ExtendedRational::Kind;
  if (a.kind_ != b.kind_ || a.kind_ != K::kFinite) {
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  }
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

std::string to_string(const ExtendedRational& value) {
  if (value.is_neg_inf()) return "-inf";
  if (value.is_pos_inf()) return "+inf";
  return format_rational(value.value());
}

}  // namespace pareto_cover
