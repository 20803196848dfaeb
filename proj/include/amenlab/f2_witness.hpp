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


#ifndef AMENLAB_F2_WITNESS_HPP_
#define AMENLAB_F2_WITNESS_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "amenlab/group.hpp"
#include "amenlab/lp.hpp"

namespace amenlab {

// Subsets of F2 built from A (first letter a or a^-1) and
// Z_k = {w : h(w) > k}, with Z = Z_0. Words use the free-group letter codes
// a = 0, a^-1 = 1, b = 2, b^-1 = 3.
class F2Set {
 public:
  enum class Op { kA, kZk, kComplement, kUnion, kIntersection };

  static F2Set A();
  static F2Set Zk(int k);
  static F2Set Z();
  static F2Set X();        // A u Z^c
  static F2Set XPrime();   // A n Z
  static F2Set Y();        // A^c u Z
  static F2Set YPrime();   // A^c n Z^c
  static F2Set Complement(const F2Set& s);
  static F2Set Union(const F2Set& s, const F2Set& t);
  static F2Set Intersection(const F2Set& s, const F2Set& t);
  // The five sets in the order X, X', Y, Y', Z.
  static std::vector<F2Set> Five();

  bool Contains(const Element& w) const;
  const std::string& name() const { return name_; }
  Op op() const { return op_; }

 private:
  F2Set(std::string name, Op op, int k,
        std::vector<std::shared_ptr<const F2Set>> args);
  F2Set Named(std::string name) const;

  std::string name_;
  Op op_;
  int k_ = 0;
  std::vector<std::shared_ptr<const F2Set>> args_;
};

// The homomorphism F2 -> Z with a -> 1, b -> -1.
int H(const Element& w);

// Visits every reduced word of length <= max_length in shortlex order.
void ForEachWord(int max_length, const std::function<void(const Element&)>& f);

struct IdentityResult {
  std::string name;
  uint64_t checked = 0;
  uint64_t failures = 0;
  std::optional<Element> first_failure;
  bool pass() const { return failures == 0; }
};

// Pointwise checks on all words of length <= max_length: verified up to that
// length, which can refute but not prove the infinite statement.
struct IdentityReport {
  int max_length = 0;
  std::vector<IdentityResult> results;
  bool pass() const;
};

constexpr int kMaxWordLength = 12;

// Set identities and inclusions, the definitions of X, X', Y, Y' against
// direct formulas, and w Z = Z_{h(w)} for w in B_3 on words of length
// <= max_length - 3. Throws CapExceeded above kMaxWordLength.
IdentityReport VerifyIdentities(int max_length);

// (w Z)(u) = Z_{h(w)}(u) for |u| <= max_length.
IdentityResult VerifyTranslation(const Element& w, int max_length);

enum class TranslateFamily { kAPowYPrime, kBPowXPrime, kBPowA, kAPowAComplement };
std::string_view TranslateFamilyName(TranslateFamily family);
inline constexpr TranslateFamily kTranslateFamilies[] = {
    TranslateFamily::kAPowYPrime, TranslateFamily::kBPowXPrime,
    TranslateFamily::kBPowA, TranslateFamily::kAPowAComplement};

constexpr int kMaxTranslates = 8;

// Words u with |u| <= max_length lying in both g^i E and g^j E. Throws
// std::invalid_argument when i == j or an index is negative.
IdentityResult VerifyDisjointPair(TranslateFamily family, int i, int j,
                                  int max_length);

// All pairs 0 <= i < j < count for the four families. Throws CapExceeded
// when count > kMaxTranslates or max_length > kMaxWordLength.
IdentityReport VerifyDisjointTranslates(int count, int max_length);

// The LP over nu in P(B_r): for E in X, X', Y, Y', Z and w in
// {a^k, b^k : 1 <= k < K}, |nu(w^-1 E) - nu(E)| <= delta. Variable j is
// the weight of support[j]; rows with no nonzero coefficient are dropped.
// k = 0 gives w = e, whose rows are vacuous.
struct InvarianceSystem {
  int count = 0;
  Rational delta;
  int radius = 0;
  ElementSet support;
  std::vector<Element> translates;
  LinearSystem system{1};
};

InvarianceSystem SimultaneousInvarianceSystem(int count, const Rational& delta,
                                              int radius,
                                              size_t ball_cap = 20000);

FeasibilityOutcome SimultaneousInvariance(const InvarianceSystem& sys);

// Least delta for which the system is feasible, as an exact LP optimum.
Rational MinimalInvarianceError(int count, int radius, size_t ball_cap = 20000);

struct ThresholdSearch {
  Rational lo, hi;              // infeasible at lo, feasible at hi
  FeasibilityOutcome at_lo, at_hi;
  int steps = 0;
};

// Bisection on dyadic deltas in [0, 1] until hi - lo <= tolerance. Throws
// PreconditionFailure when delta = 0 is already feasible.
ThresholdSearch BisectInvarianceThreshold(int count, int radius,
                                          const Rational& tolerance,
                                          size_t ball_cap = 20000);

}  // namespace amenlab

#endif  // AMENLAB_F2_WITNESS_HPP_
