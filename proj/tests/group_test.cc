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

#include <random>

#include "amenlab/group.hpp"
#include "doctest.h"

namespace amenlab {
namespace {

using R = Rational;

Element Z(int v) { return Element{{v}}; }

TEST_CASE("free group multiplication reduces") {
  Group f2 = Group::Free(2);
  CHECK(f2.Multiply(f2.Parse("a"), f2.Parse("A")) == f2.Identity());
  CHECK(f2.Multiply(f2.Parse("ab"), f2.Parse("Ba")) == f2.Parse("aa"));
  CHECK(f2.Format(f2.Parse("aBa")) == "aBa");
  CHECK(f2.Parse("aAb") == f2.Parse("b"));
  CHECK(f2.Format(f2.Identity()) == "e");
}

TEST_CASE("integer and cyclic arithmetic") {
  Group z = Group::FreeAbelian(1);
  CHECK(z.Multiply(Z(3), Z(4)) == Z(7));
  CHECK(z.Parse("-2") == Z(-2));
  CHECK(z.Parse("aaA") == Z(1));
  Group c5 = Group::Cyclic(5);
  CHECK(c5.Inverse(Z(2)) == Z(3));
  CHECK(c5.Multiply(Z(4), Z(3)) == Z(2));
}

TEST_CASE("inverses") {
  Group f2 = Group::Free(2);
  CHECK(f2.Inverse(f2.Identity()) == f2.Identity());
  CHECK(f2.Inverse(f2.Parse("aB")) == f2.Parse("bA"));
}

TEST_CASE("descriptor mismatch is rejected") {
  Group f2 = Group::Free(2);
  Group z2 = Group::FreeAbelian(2);
  CHECK_THROWS_AS(f2.Multiply(Element{{7}}, f2.Identity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(z2.Multiply(Z(1), z2.Identity()), std::invalid_argument);
  // Adjacent cancelling pair is not canonical.
  CHECK_FALSE(f2.IsValid(Element{{0, 1}}));
}

TEST_CASE("finite tables are validated") {
  // Z/3 with identity at index 2.
  std::vector<std::vector<int>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  Group g = Group::FiniteTable(t);
  CHECK(g.Identity() == Z(2));
  CHECK(g.associativity_verified());
  CHECK(g.Multiply(Z(0), g.Inverse(Z(0))) == Z(2));
  CHECK(g.Generators().size() == 1);
  CHECK_THROWS_AS(Group::FiniteTable({{0, 1}, {0, 1}}), std::invalid_argument);
  // Latin square without associativity (a quasigroup with identity 0).
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(Group::FiniteTable(loop), std::invalid_argument);
}

TEST_CASE("generator names must be distinct letters") {
  CHECK_THROWS_AS(Group::Free({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(Group::Free({"e"}), std::invalid_argument);
  CHECK_THROWS_AS(Group::Free(0), std::invalid_argument);
  CHECK_THROWS_AS(Group::FreeAbelian(0), std::invalid_argument);
}

TEST_CASE("balls") {
  Group z = Group::FreeAbelian(1);
  ElementSet b3 = Ball(z, 3);
  CHECK(b3.size() == 7);
  CHECK(b3[0] == Z(-3));
  CHECK(b3[6] == Z(3));

  Group f2 = Group::Free(2);
  ElementSet b1 = Ball(f2, 1);
  REQUIRE(b1.size() == 5);
  // Canonical order: e < a < A < b < B.
  CHECK(f2.Format(b1[0]) == "e");
  CHECK(f2.Format(b1[1]) == "a");
  CHECK(f2.Format(b1[2]) == "A");
  CHECK(f2.Format(b1[3]) == "b");
  CHECK(f2.Format(b1[4]) == "B");
  CHECK(Ball(f2, 2).size() == 17);
  CHECK(Ball(f2, 0) == ElementSet({f2.Identity()}));
  CHECK_THROWS_AS(Ball(f2, 6, 100), CapExceeded);
}

TEST_CASE("ball monotonicity, symmetry and growth bound") {
  std::vector<Group> groups = {Group::Free(2), Group::Free(3),
                               Group::FreeAbelian(1), Group::FreeAbelian(2),
                               Group::Cyclic(5), Group::Cyclic(12)};
  for (const Group& g : groups) {
    const int s = static_cast<int>(g.Generators().size());
    ElementSet prev;
    for (int n = 0; n <= 5; ++n) {
      ElementSet b = Ball(g, n);
      CHECK(prev.is_subset_of(b));
      double bound = 1;
      for (int i = 0; i < n; ++i) bound *= 2 * s + 1;
      CHECK(static_cast<double>(b.size()) <= bound);
      for (const auto& x : b) CHECK(b.contains(g.Inverse(x)));
      prev = b;
    }
  }
}

TEST_CASE("word length agrees with ball membership") {
  Group c7 = Group::Cyclic(7);
  CHECK(WordLength(c7, Z(3)) == 3);
  CHECK(WordLength(c7, Z(4)) == 3);
  Group f2 = Group::Free(2);
  CHECK(WordLength(f2, f2.Parse("abA")) == 3);
}

TEST_CASE("translation of sets") {
  Group z = Group::FreeAbelian(1);
  ElementSet e01({Z(0), Z(1)});
  CHECK(TranslateSet(z, z.Identity(), e01) == e01);
  CHECK(TranslateSet(z, Z(2), e01) == ElementSet({Z(2), Z(3)}));
  Group f2 = Group::Free(2);
  ElementSet s({f2.Identity(), f2.Parse("A")});
  CHECK(TranslateSet(f2, f2.Parse("a"), s) ==
        ElementSet({f2.Parse("a"), f2.Identity()}));
}

TEST_CASE("convolution") {
  Group f2 = Group::Free(2);
  Element a = f2.Parse("a"), b = f2.Parse("b"), e = f2.Identity();
  CHECK(Convolve(f2, RationalMeasure::PointMass(a),
                 RationalMeasure::PointMass(b)) ==
        RationalMeasure::PointMass(f2.Parse("ab")));
  RationalMeasure mu = RationalMeasure::Uniform(ElementSet({e, a}));
  RationalMeasure nu = RationalMeasure::Uniform(ElementSet({e, b}));
  RationalMeasure conv = Convolve(f2, mu, nu);
  CHECK(conv.weights().size() == 4);
  for (const char* w : {"e", "b", "a", "ab"}) {
    CHECK(conv.weight(f2.Parse(w)) == R(1, 4));
  }
  // Z/2: brute force over the four product terms with merging.
  Group c2 = Group::Cyclic(2);
  RationalMeasure u = RationalMeasure::Uniform(ElementSet({Z(0), Z(1)}));
  RationalMeasure::WeightMap brute;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) brute[Z((x + y) % 2)] += R(1, 4);
  }
  CHECK(Convolve(c2, u, u) == RationalMeasure::FromWeights(brute));
}

TEST_CASE("measures and evaluation") {
  Group z = Group::FreeAbelian(1);
  RationalMeasure nu = RationalMeasure::Uniform(ElementSet({Z(-1), Z(0), Z(1)}));
  CHECK(MeasureOf(nu, ElementSet()) == 0);
  CHECK(MeasureOf(nu, [](const Element&) { return true; }) == 1);
  CHECK(MeasureOf(nu, [](const Element& x) { return x.data[0] % 2 == 0; }) ==
        R(1, 3));
  CHECK(Evaluate(nu, [](const Element&) { return R(1); }) == 1);
  ElementSet evens({Z(0)});
  CHECK(Evaluate(nu, [&](const Element& x) {
          return R(evens.contains(x) ? 1 : 0);
        }) == MeasureOf(nu, evens));

  Group f2 = Group::Free(2);
  RationalMeasure half = RationalMeasure::FromWeights(
      {{f2.Identity(), R(1, 2)}, {f2.Parse("a"), R(1, 2)}});
  std::map<Element, R> f = {{f2.Identity(), R(0)}, {f2.Parse("a"), R(1)}};
  CHECK(Evaluate(f2, half, f) == R(1, 2));
  f.erase(f2.Parse("a"));
  CHECK_THROWS_AS(Evaluate(f2, half, f), std::invalid_argument);

  CHECK_THROWS_AS(RationalMeasure::FromWeights({{Z(0), R(1, 2)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      RationalMeasure::FromWeights({{Z(0), R(3, 2)}, {Z(1), R(-1, 2)}}),
      std::invalid_argument);
}

RationalMeasure RandomMeasure(std::mt19937_64& rng, const ElementSet& pool) {
  std::uniform_int_distribution<int> w(0, 4);
  RationalMeasure::WeightMap m;
  R total = 0;
  for (const auto& x : pool) {
    int v = w(rng);
    if (v) {
      m[x] = v;
      total += v;
    }
  }
  if (total == 0) {
    m[pool[0]] = 1;
    total = 1;
  }
  for (auto& [x, p] : m) p /= total;
  return RationalMeasure::FromWeights(m);
}

TEST_CASE("convolution is bilinear, associative and unital") {
  Group f2 = Group::Free(2);
  ElementSet b2 = Ball(f2, 2);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    RationalMeasure m1 = RandomMeasure(rng, b2), m2 = RandomMeasure(rng, b2),
                    nu = RandomMeasure(rng, b2);
    R alpha(trial % 5, 4);
    CHECK(Convolve(f2, RationalMeasure::Mix(alpha, m1, m2), nu) ==
          RationalMeasure::Mix(alpha, Convolve(f2, m1, nu),
                               Convolve(f2, m2, nu)));
    CHECK(Convolve(f2, Convolve(f2, m1, m2), nu) ==
          Convolve(f2, m1, Convolve(f2, m2, nu)));
    RationalMeasure delta_e = RationalMeasure::PointMass(f2.Identity());
    CHECK(Convolve(f2, delta_e, nu) == nu);
    CHECK(Convolve(f2, nu, delta_e) == nu);
  }
}

TEST_CASE("translation identity g nu(E) = nu(g^-1 E)") {
  Group f2 = Group::Free(2);
  ElementSet b3 = Ball(f2, 3);
  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin(0.4);
  for (const auto& g : b3) {
    RationalMeasure nu = RandomMeasure(rng, Ball(f2, 2));
    std::vector<Element> pick;
    for (const auto& x : b3) {
      if (coin(rng)) pick.push_back(x);
    }
    ElementSet e(pick);
    CHECK(MeasureOf(TranslateMeasure(f2, g, nu), e) ==
          MeasureOf(nu, TranslateSet(f2, f2.Inverse(g), e)));
  }
}

TEST_CASE("canonical form idempotence") {
  Group f2 = Group::Free(2);
  for (const auto& x : Ball(f2, 4)) {
    CHECK(f2.Parse(f2.Format(x)) == x);
    CHECK(f2.Multiply(x, f2.Identity()) == x);
  }
  Group z2 = Group::FreeAbelian(2);
  for (const auto& x : Ball(z2, 3)) CHECK(z2.Parse(z2.Format(x)) == x);
}

}  // namespace
}  // namespace amenlab
