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

#include "amenlab/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace amenlab {

namespace {

bool IsIntegerLiteral(std::string_view text) {
  if (text.empty()) return false;
  size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsIntegerLiteral(num) || !IsIntegerLiteral(den) || den[0] == '-' ||
      den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "' (expected p/q)");
  }
  std::string num_str(num[0] == '+' ? num.substr(1) : num);
  mpz_class p(num_str, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string FormatRational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational Abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Rational Pow(const Rational& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Rational result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

int DefaultCap(int fallback) {
  if (const char* env = std::getenv("AMENLAB_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < (1L << 30)) {
      return static_cast<int>(v);
    }
  }
  return fallback;
}

}  // namespace amenlab
