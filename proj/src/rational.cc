// Copyright 2026 The ISV Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "isv/rational.h"

#include <cctype>

#include "isv/error.h"

namespace isv {

Integer Floor(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

Integer Ceil(const Rational& x) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

bool IsInteger(const Rational& x) { return x.get_den() == 1; }

Rational Remainder(const Rational& x) { return x - Rational(Floor(x)); }

std::string ToString(const Rational& x) {
  if (IsInteger(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view digits = num;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    digits.remove_prefix(1);
  }
  if (!IsDigits(digits) || !IsDigits(den)) {
    throw Error(ErrorCode::kParseError,
                "malformed rational '" + std::string(text) + "'");
  }
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::kParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  Integer n(std::string(digits), 10);
  if (num[0] == '-') n = -n;
  Rational out(n, d);
  out.canonicalize();
  return out;
}

long long ToInt64(const Integer& x) {
  if (!x.fits_slong_p()) {
    throw Error(ErrorCode::kInvalidArgument,
                "integer " + x.get_str() + " does not fit in 64 bits");
  }
  return x.get_si();
}

}  // namespace isv
