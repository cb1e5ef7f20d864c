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

#ifndef ISV_RATIONAL_H_
#define ISV_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace isv {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

using RationalVector = std::vector<Rational>;
using IntVector = std::vector<long long>;

Integer Floor(const Rational& x);
Integer Ceil(const Rational& x);
bool IsInteger(const Rational& x);

// Fractional part x - floor(x), in [0, 1).
Rational Remainder(const Rational& x);

// "<num>/<den>", or the bare integer when the denominator is one.
std::string ToString(const Rational& x);

// Accepts "<int>" or "<int>/<positive int>", with an optional sign on the
// numerator. Throws Error(kParseError) otherwise.
Rational ParseRational(std::string_view text);

long long ToInt64(const Integer& x);

// gmpxx has no long long constructors; long is 64 bits on the targets we
// build for.
static_assert(sizeof(long) == sizeof(long long));
inline Rational ToRational(long long num, long long den = 1) {
  Rational q{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

}  // namespace isv

#endif  // ISV_RATIONAL_H_
