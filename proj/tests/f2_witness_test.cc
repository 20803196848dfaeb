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


#include "amenlab/f2_witness.hpp"

#include <random>

#include "amenlab/set_spec.hpp"
#include "doctest.h"

namespace amenlab {
namespace {

using R = Rational;

TEST_CASE("h values") {
  Group f2 = Group::Free(2);
  CHECK(H(f2.Identity()) == 0);
  CHECK(H(f2.Parse("aB")) == 2);
  CHECK(H(f2.Parse("ab")) == 0);
  const ElementSet b4 = Ball(f2, 4);
  for (const auto& u : b4) {
    CHECK(H(u) == HValue(f2, u));
    for (const auto& v : b4) {
      if (H(f2.Multiply(u, v)) != H(u) + H(v)) FAIL("h is not additive");
    }
  }
  CHECK_THROWS_AS(H(Element{{7}}), std::invalid_argument);
}

TEST_CASE("membership examples") {
  Group f2 = Group::Free(2);
  CHECK(F2Set::A().Contains(f2.Parse("Ab")));
  CHECK(F2Set::Z().Contains(f2.Parse("aB")));
  CHECK_FALSE(F2Set::XPrime().Contains(f2.Parse("b")));
  CHECK(F2Set::Zk(1).Contains(f2.Parse("aB")));
  CHECK_FALSE(F2Set::Zk(2).Contains(f2.Parse("aB")));
  CHECK(F2Set::X().name() == "X");
  CHECK(F2Set::Complement(F2Set::Z()).name() == "complement(Z)");
  auto five = F2Set::Five();
  REQUIRE(five.size() == 5);
  CHECK(five[3].name() == "Y'");
  // e: not in A, h = 0.
  const Element e = f2.Identity();
  CHECK(F2Set::X().Contains(e));
  CHECK_FALSE(F2Set::XPrime().Contains(e));
  CHECK(F2Set::Y().Contains(e));
  CHECK(F2Set::YPrime().Contains(e));
  CHECK_FALSE(F2Set::Z().Contains(e));
}

TEST_CASE("word enumeration is the ball in shortlex order") {
  Group f2 = Group::Free(2);
  for (int l = 0; l <= 6; ++l) {
    std::vector<Element> seen;
    ForEachWord(l, [&](const Element& u) { seen.push_back(u); });
    CHECK(seen == Ball(f2, l).elements());
  }
}

TEST_CASE("identities hold on B_8 and B_10") {
  for (int l : {8, 10}) {
    auto rep = VerifyIdentities(l);
    CHECK(rep.pass());
    CHECK(rep.max_length == l);
    REQUIRE(rep.results.size() == 11);
    uint64_t words = 1;
    for (int i = 0, p = 1; i < l; ++i) p *= 3, words = 2 * p - 1;
    for (size_t i = 0; i + 1 < rep.results.size(); ++i) {
      CHECK(rep.results[i].checked == words);
    }
    for (const auto& r : rep.results) CHECK_MESSAGE(r.pass(), r.name);
  }
  CHECK_THROWS_AS(VerifyIdentities(13), CapExceeded);
}

TEST_CASE("translation identity") {
  Group f2 = Group::Free(2);
  // h(a b^-1) = 2, h(a b) = 0.
  auto r = VerifyTranslation(f2.Parse("aB"), 8);
  CHECK(r.pass());
  CHECK(r.checked == 13121);
  CHECK(VerifyTranslation(f2.Parse("ab"), 8).pass());
  // Direct spot check: (ab^-1 Z)(u) agrees with h(u) > 2, not with h(u) > 0.
  const Element w = f2.Parse("aB"), wi = f2.Inverse(w);
  int differ = 0;
  ForEachWord(6, [&](const Element& u) {
    const bool lhs = H(f2.Multiply(wi, u)) > 0;
    CHECK(lhs == (H(u) > 2));
    differ += lhs != (H(u) > 0);
  });
  CHECK(differ > 0);
}

TEST_CASE("disjoint translates") {
  auto rep = VerifyDisjointTranslates(4, 10);
  CHECK(rep.pass());
  REQUIRE(rep.results.size() == 4);
  for (const auto& r : rep.results) CHECK(r.checked == 6u * 118097u);
  CHECK(VerifyDisjointPair(TranslateFamily::kAPowYPrime, 0, 3, 8).pass());
  CHECK(VerifyDisjointPair(TranslateFamily::kBPowA, 5, 2, 8).pass());
  CHECK_THROWS_AS(VerifyDisjointPair(TranslateFamily::kBPowA, 2, 2, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(VerifyDisjointPair(TranslateFamily::kBPowA, -1, 2, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(VerifyDisjointTranslates(9, 4), CapExceeded);
  CHECK_THROWS_AS(VerifyDisjointTranslates(4, 13), CapExceeded);
  CHECK(TranslateFamilyName(TranslateFamily::kAPowAComplement) == "a^k A^c");
}

// |nu(w^-1 E) - nu(E)| for every row of the system, from the predicates.
R MaxGap(const InvarianceSystem& sys, const std::vector<R>& point) {
  Group f2 = Group::Free(2);
  R worst = 0;
  for (const auto& e : F2Set::Five()) {
    for (const auto& w : sys.translates) {
      R gap = 0;
      for (size_t j = 0; j < sys.support.size(); ++j) {
        const Element& x = sys.support[j];
        gap += point[j] * (int(e.Contains(f2.Multiply(w, x))) - int(e.Contains(x)));
      }
      worst = std::max(worst, Abs(gap));
    }
  }
  return worst;
}

TEST_CASE("simultaneous invariance system") {
  auto easy = SimultaneousInvarianceSystem(2, R(1), 2);
  auto out = SimultaneousInvariance(easy);
  CHECK(out.feasible);
  CHECK(IsFeasiblePoint(easy.system, out.point));
  CHECK(easy.support.size() == 17);
  CHECK(easy.translates.size() == 2);

  auto hard = SimultaneousInvarianceSystem(8, R(1, 100), 6);
  CHECK(hard.support.size() == 1457);
  CHECK(hard.translates.size() == 14);
  auto no = SimultaneousInvariance(hard);
  CHECK_FALSE(no.feasible);
  CHECK(VerifyFarkas(hard.system, no.farkas));
  CHECK(VerifyCertificate(hard.system, no));

  CHECK_THROWS_AS(SimultaneousInvarianceSystem(1, R(1), 2), std::invalid_argument);
  CHECK_THROWS_AS(SimultaneousInvarianceSystem(2, R(-1), 2), std::invalid_argument);
  CHECK_THROWS_AS(SimultaneousInvarianceSystem(2, R(1), 9, 20000), CapExceeded);
}

TEST_CASE("minimal invariance error matches the floating-point oracle") {
  CHECK(MinimalInvarianceError(2, 2) == R(1, 6));
  CHECK(MinimalInvarianceError(4, 3) == R(3, 7));
  CHECK(MinimalInvarianceError(8, 4) == R(1, 2));
  CHECK(MinimalInvarianceError(8, 6) == R(1, 2));
}

TEST_CASE("threshold bisection for K = 8, r = 6") {
  auto s = BisectInvarianceThreshold(8, 6, R(1, 1024));
  CHECK(s.lo == R(511, 1024));
  CHECK(s.hi == R(1, 2));
  CHECK(s.steps == 10);
  CHECK_FALSE(s.at_lo.feasible);
  CHECK(s.at_hi.feasible);
  auto lo = SimultaneousInvarianceSystem(8, s.lo, 6);
  auto hi = SimultaneousInvarianceSystem(8, s.hi, 6);
  CHECK(VerifyFarkas(lo.system, s.at_lo.farkas));
  CHECK(IsFeasiblePoint(hi.system, s.at_hi.point));
  CHECK(MaxGap(hi, s.at_hi.point) <= s.hi);
  // Infeasibility is inherited by smaller deltas.
  for (R d : {R(1, 4), R(1, 100)}) {
    auto sys = SimultaneousInvarianceSystem(8, d, 6);
    auto o = SimultaneousInvariance(sys);
    CHECK_FALSE(o.feasible);
    CHECK(VerifyFarkas(sys.system, o.farkas));
  }
  CHECK_THROWS_AS(BisectInvarianceThreshold(8, 6, R(0)), std::invalid_argument);
}

}  // namespace
}  // namespace amenlab
