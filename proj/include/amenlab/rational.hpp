// Copyright 2026 The amenlab Authors.
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

#ifndef AMENLAB_RATIONAL_HPP_
#define AMENLAB_RATIONAL_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace amenlab {

// Exact arbitrary-precision rational. GMP keeps every value in canonical
// form (gcd-reduced, positive denominator) after each operation.
using Rational = mpq_class;

// Thrown when an enumeration or problem size exceeds a configured cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation's mathematical precondition does not hold.
class PreconditionFailure : public std::runtime_error {
 public:
  explicit PreconditionFailure(const std::string& what)
      : std::runtime_error(what) {}
};

// Parses "p/q", "p" or "-p/q". Rejects decimals, exponents and zero
// denominators; no floating point crosses this boundary.
Rational ParseRational(std::string_view text);

// Always emits "p/q" (denominator included even when it is 1).
std::string FormatRational(const Rational& value);

Rational Abs(const Rational& value);

// base^exponent for exponent >= 0.
Rational Pow(const Rational& base, int exponent);

// Default enumeration cap: AMENLAB_CAP if set, otherwise `fallback`.
int DefaultCap(int fallback);

}  // namespace amenlab

#endif  // AMENLAB_RATIONAL_HPP_
