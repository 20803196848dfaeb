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


#include "amenlab/pictures.hpp"

#include <random>
#include <string>

#include "doctest.h"

namespace amenlab {
namespace {

using R = Rational;

Element Z(int v) { return Element{{v}}; }

// Free reduction on strings, independent of the library's word arithmetic.
std::string Reduce(const std::string& w) {
  std::string out;
  for (char c : w) {
    if (!out.empty() && out.back() != c &&
        std::tolower(out.back()) == std::tolower(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string Word(const Group& g, const Element& x) {
  std::string s = g.Format(x);
  return s == "e" ? "" : s;
}

R MaxTranslateGap(const Group& g, const ElementSet& a,
                  const RationalMeasure& nu, const ElementPredicate& e) {
  std::vector<R> vals;
  for (const auto& x : a) vals.push_back(MeasureOf(TranslateMeasure(g, x, nu), e));
  return *std::max_element(vals.begin(), vals.end()) -
         *std::min_element(vals.begin(), vals.end());
}

TEST_CASE("picture examples") {
  Group z = Group::FreeAbelian(1);
  ElementSet a({Z(0), Z(1)});
  PictureContext all(z, a, [](const Element&) { return true; });
  PictureContext none(z, a, ElementSet());
  PictureContext evens(z, a, Compile(z, SetSpec::Residue(0, 2, {0})));
  for (int g = -5; g <= 5; ++g) {
    CHECK(Picture(all, Z(g)) == 0b11);
    CHECK(Picture(none, Z(g)) == 0);
    CHECK(Picture(evens, Z(g)) == (g % 2 == 0 ? Mask{0b01} : Mask{0b10}));
  }
  CHECK(RealizedFamily(evens, Ball(z, 3)).members() ==
        std::vector<Mask>{0b01, 0b10});
  CHECK(RealizedFamily(none, Ball(z, 3)).members() == std::vector<Mask>{0});
}

TEST_CASE("first-letter family on F2 against string reduction") {
  Group f2 = Group::Free(2);
  ElementSet a = Ball(f2, 1);
  ElementSet domain = Ball(f2, 2);
  // Fixtures recorded from the string oracle below.
  PictureContext just_a(f2, a, Compile(f2, SetSpec::FirstLetter({"a"})));
  CHECK(RealizedFamily(just_a, domain).members() ==
        std::vector<Mask>{0, 2, 3, 7, 10, 18});
  PictureContext a_or_ai(f2, a,
                         Compile(f2, SetSpec::FirstLetter({"a", "A"})));
  CHECK(RealizedFamily(a_or_ai, domain).members() ==
        std::vector<Mask>{3, 5, 6, 7, 14, 22});
  for (const auto& g : Ball(f2, 3)) {
    Mask expect = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      std::string w = Reduce(Word(f2, a[i]) + Word(f2, g));
      if (!w.empty() && w[0] == 'a') expect |= Mask{1} << i;
    }
    CHECK(Picture(just_a, g) == expect);
  }
}

TEST_CASE("picture locality") {
  Group f2 = Group::Free(2);
  ElementSet a = Ball(f2, 1);
  std::mt19937_64 rng(2);
  std::bernoulli_distribution coin(0.5);
  std::vector<Element> pick;
  for (const auto& x : Ball(f2, 3)) {
    if (coin(rng)) pick.push_back(x);
  }
  ElementSet e(pick);
  for (const auto& g : Ball(f2, 2)) {
    std::vector<Element> ag;
    for (const auto& x : a) ag.push_back(f2.Multiply(x, g));
    ElementSet touched(ag);
    // Flip membership outside A g.
    std::vector<Element> mutated;
    for (const auto& x : Ball(f2, 4)) {
      bool in = e.contains(x);
      if (!touched.contains(x)) in = !in;
      if (in) mutated.push_back(x);
    }
    PictureContext c1(f2, a, e), c2(f2, a, ElementSet(mutated));
    CHECK(Picture(c1, g) == Picture(c2, g));
  }
}

TEST_CASE("measure to balanced family") {
  Group z = Group::FreeAbelian(1);
  ElementSet a = Ball(z, 1);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> w(0, 3);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 50; ++trial) {
    RationalMeasure::WeightMap m;
    R total = 0;
    for (const auto& x : Ball(z, 2)) {
      int v = w(rng);
      if (v) {
        m[x] = v;
        total += v;
      }
    }
    if (total == 0) {
      m[Z(0)] = 1;
      total = 1;
    }
    for (auto& [x, p] : m) p /= total;
    RationalMeasure nu = RationalMeasure::FromWeights(m);
    std::vector<Element> pick;
    for (const auto& x : Ball(z, 3)) {
      if (coin(rng)) pick.push_back(x);
    }
    ElementSet e(pick);
    PictureContext ctx(z, a, e);
    const R gap = MaxTranslateGap(z, a, nu, [&](const Element& x) {
      return e.contains(x);
    });
    auto [family, witness] = MeasureToBalanced(ctx, nu);
    CHECK(witness.gap == gap);
    CHECK(VerifyBalanceWitness(family, witness, gap));
    CHECK(IsEpsilonBalanced(family, gap).has_value());
  }
}

TEST_CASE("balanced family to measure") {
  Group z = Group::FreeAbelian(1);
  ElementSet a = Ball(z, 1);
  ElementSet b = Ball(z, 2);
  std::mt19937_64 rng(8);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Element> pick;
    for (const auto& x : Ball(z, 3)) {
      if (coin(rng)) pick.push_back(x);
    }
    ElementSet e(pick);
    PictureContext ctx(z, a, e);
    SetFamily family = RealizedFamily(ctx, b);
    auto [eps, witness] = BalanceDeficiency(family);
    RationalMeasure nu = MeasureFromBalance(ctx, b, family, witness);
    CHECK(nu.support().is_subset_of(b));
    CHECK(MaxTranslateGap(z, a, nu, [&](const Element& x) {
            return e.contains(x);
          }) <= eps);
  }
}

TEST_CASE("realization search finds a certificate on F2") {
  Group f2 = Group::Free(2);
  ElementSet a = Ball(f2, 1);
  std::vector<R> f = {1, 1, 1, R(-3, 2), R(-3, 2)};
  for (int radius = 1; radius <= 4; ++radius) {
    auto cert = RealizationSearch(f2, a, f, radius);
    REQUIRE(cert.has_value());
    CHECK(cert->e == SetSpec::FirstLetter({"a", "A"}));
    if (radius >= 2) {
      CHECK(cert->family.members() == std::vector<Mask>{3, 5, 6, 7, 14, 22});
    }
    CHECK(VerifyNonAmenabilityCertificate(f2, *cert));
    for (Mask m : cert->family.members()) CHECK(SubsetSum(f, m) > 0);
    CHECK_FALSE(IsEpsilonBalanced(cert->family, R(0)).has_value());
  }
  auto cert = RealizationSearch(f2, a, f, 2);
  cert->family = SetFamily(cert->family.ground(), {3, 5});
  CHECK_FALSE(VerifyNonAmenabilityCertificate(f2, *cert));
}

TEST_CASE("realization search on Z finds nothing") {
  Group z = Group::FreeAbelian(1);
  ElementSet a = Ball(z, 1);
  for (const std::vector<R>& f : std::vector<std::vector<R>>{
           {1, -2, 1}, {-1, 2, -1}, {1, 0, -1}, {2, -1, -1}, {R(1, 3), R(-1, 3), 0}}) {
    CHECK_FALSE(RealizationSearch(z, a, f, 4).has_value());
  }
  CHECK_THROWS_AS(RealizationSearch(z, a, {0, 0, 0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(RealizationSearch(z, a, {1, 0, 0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(RealizationSearch(z, a, {1, -1}, 2), std::invalid_argument);
}

TEST_CASE("candidate pools") {
  CHECK(CandidatePool(Group::Cyclic(5), 3).empty());
  CHECK(CandidatePool(Group::Cyclic(6), 3).size() == 2 + 6);
  CHECK(CandidatePool(Group::FiniteTable({{0, 1}, {1, 0}}), 3).empty());
  auto pool = CandidatePool(Group::Free(2), 2);
  CHECK(pool.front() == SetSpec::FirstLetter({"a"}));
  CHECK(pool.size() == 38 + 38 * 37);
}

TEST_CASE("set specs") {
  Group f2 = Group::Free(2);
  auto x = Compile(f2, SetSpec::Union({SetSpec::FirstLetter({"a", "A"}),
                                       SetSpec::Complement(SetSpec::HAbove(0))}));
  CHECK(x(f2.Parse("aB")));
  CHECK(x(f2.Parse("b")));
  CHECK_FALSE(x(f2.Parse("B")));
  CHECK(Compile(f2, SetSpec::Intersection({}))(f2.Parse("ab")));
  CHECK_FALSE(Compile(f2, SetSpec::Union({}))(f2.Parse("ab")));
  CHECK(Compile(f2, SetSpec::Explicit({"ab", "e"}))(f2.Identity()));
  CHECK_THROWS_AS(Compile(Group::FreeAbelian(1), SetSpec::HAbove(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(Compile(f2, SetSpec::Residue(0, 2, {0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(Compile(Group::Cyclic(5), SetSpec::Residue(0, 2, {0})),
                  std::invalid_argument);
  Group z2 = Group::FreeAbelian(2);
  auto diag = Compile(z2, SetSpec::Residue(-1, 3, {1}));
  CHECK(diag(z2.Parse("(2,2)")));
  CHECK_FALSE(diag(z2.Parse("(1,1)")));
  CHECK(Describe(SetSpec::Complement(SetSpec::HAbove(1))) == "complement(h>1)");
}

}  // namespace
}  // namespace amenlab
