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


#ifndef AMENLAB_RAMSEY_HPP_
#define AMENLAB_RAMSEY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "amenlab/balance.hpp"
#include "amenlab/group.hpp"
#include "amenlab/lp.hpp"
#include "amenlab/pictures.hpp"

namespace amenlab {

// C = {b in B : a b in B for all a in A}.
ElementSet Interior(const Group& group, const ElementSet& a,
                    const ElementSet& b);

enum class RamseyMethod { kDirect, kPictures };
enum class NotRamseyReason { kNone, kEmptyInterior, kCounterexample };

std::string_view MethodName(RamseyMethod method);
std::string_view ReasonName(NotRamseyReason reason);

// Translate measures (a nu)(E) = nu(a^-1 E) for a in A, in window order.
std::vector<Rational> TranslateMasses(const Group& group, const ElementSet& a,
                                      const RationalMeasure& nu,
                                      const ElementPredicate& in_e);
// max - min of TranslateMasses.
Rational TranslateGap(const Group& group, const ElementSet& a,
                      const RationalMeasure& nu, const ElementPredicate& in_e);

// Variables: nu on C (in order), then an envelope t. Rows: sum nu = 1 and
// t <= nu(a^-1 E) <= t + eps for each a. This is equivalent to the pairwise
// form |nu(a^-1 E) - nu(a'^-1 E)| <= eps.
LinearSystem RamseySystem(const Group& group, const ElementSet& a,
                          const ElementSet& c, const ElementPredicate& in_e,
                          const Rational& eps);

struct RamseyMeasureWitness {
  Mask e = 0;  // bits over A.C
  RationalMeasure nu;

  friend bool operator==(const RamseyMeasureWitness&,
                         const RamseyMeasureWitness&) = default;
};

struct RamseyFamilyWitness {
  SetFamily family;
  BalanceWitness witness;

  friend bool operator==(const RamseyFamilyWitness&,
                         const RamseyFamilyWitness&) = default;
};

struct RamseyVerdict {
  bool ramsey = false;
  RamseyMethod method = RamseyMethod::kDirect;
  ElementSet a, b, c, ac;  // ac = A.C, the ground for subset masks
  Rational eps;
  uint64_t subsets_checked = 0;
  bool witnesses_elided = false;
  // Ramsey, direct method: one measure per subset E of A.C.
  std::vector<RamseyMeasureWitness> measures;
  // Ramsey, pictures method: one balance witness per distinct family.
  std::vector<RamseyFamilyWitness> families;
  // NotRamsey.
  NotRamseyReason reason = NotRamseyReason::kNone;
  ElementSet counterexample;
  std::vector<Rational> farkas;  // against RamseySystem or EpsilonBalanceSystem
  std::optional<UnbalanceWitness> unbalance;  // pictures method, eps = 0
  // False when the counterexample came from the named-set pool because
  // A.C was over the enumeration cap; it is then not the least failing E.
  bool minimal = true;
  std::optional<SetSpec> counterexample_spec;

  friend bool operator==(const RamseyVerdict&, const RamseyVerdict&) = default;
};

struct RamseyOptions {
  int cap = 24;  // maximum |A.C| for exhaustive enumeration
  bool keep_witnesses = true;
  // Try the named-set pool when A.C is over the cap.
  bool pool_fallback = true;
  int pool_radius = 2;
};

RamseyOptions DefaultRamseyOptions();

// Exhausts every E subset of A.C in increasing mask order (bit i is the
// i-th element of A.C in canonical order), stopping at the first failure.
RamseyVerdict IsEpsilonRamsey(const Group& group, const ElementSet& a,
                              const ElementSet& b, const Rational& eps,
                              RamseyMethod method,
                              const RamseyOptions& options = DefaultRamseyOptions());

// Single-set check over the interior. E may be any subset of the group;
// only E n A.C matters. Fills nu on success and farkas on failure.
bool CheckSubset(const Group& group, const ElementSet& a, const ElementSet& c,
                 const ElementPredicate& in_e, const Rational& eps,
                 RamseyMethod method, RationalMeasure* nu,
                 std::vector<Rational>* farkas);

// Re-checks every embedded certificate by exact arithmetic.
bool VerifyRamseyVerdict(const Group& group, const RamseyVerdict& verdict);

enum class FunctionStatus { kFound, kExhausted, kCapExceeded };

std::string_view FunctionStatusName(FunctionStatus status);

struct RamseyFunctionRow {
  int n = 0;
  bool ramsey = false;
  NotRamseyReason reason = NotRamseyReason::kNone;
  bool minimal = true;
  bool cap_exceeded = false;
};

struct RamseyFunctionResult {
  FunctionStatus status = FunctionStatus::kExhausted;
  int value = -1;  // least n when found
  std::vector<RamseyFunctionRow> rows;
};

// Least n <= n_max with B_n eps-Ramsey with respect to B_m.
RamseyFunctionResult RamseyFunction(const Group& group, int m,
                                    const Rational& eps, int n_max,
                                    RamseyMethod method = RamseyMethod::kPictures,
                                    RamseyOptions options = DefaultRamseyOptions());

// f maps B to [0,1]. Uses the 1/2-Ramsey measure for E = {f >= 1/2} and
// checks |a nu(f) - a' nu(f)| <= 3/4 exactly. Throws PreconditionFailure
// when no such measure exists for that E.
RationalMeasure BinaryToUnit(const Group& group, const ElementSet& a,
                             const ElementSet& b,
                             const std::map<Element, Rational>& f);

// max - min over g in A of g nu(f) = sum_x nu(x) f(g x).
Rational FunctionGap(const Group& group, const ElementSet& a,
                     const RationalMeasure& nu, const ElementFunction& f);

// Least n with (3/4)^n <= eps.
int BoostSteps(const Rational& eps);

// Given windows B_i and a function on B_{i+1} with values in [0,1],
// returns nu in P(B_{i+1}) with P(B_i) nu in P(B_{i+1}) and gap <= 3/4 over
// B_i.
using StepOracle = std::function<RationalMeasure(
    int step, const ElementSet& from, const ElementSet& to,
    const std::map<Element, Rational>& f)>;

StepOracle BinaryToUnitOracle(const Group& group);

struct BoostResult {
  int steps = 0;
  std::vector<RationalMeasure> chain;  // nu_0 .. nu_{n-1}
  RationalMeasure composed;            // nu_0 * ... * nu_{n-1}
  Rational gap;                        // over g, g' in B_0
  std::vector<Rational> step_gaps;     // gap of nu_i .. nu_{n-1} over B_i
};

// windows[0] = A; needs windows[i] u windows[i] windows[i] inside
// windows[i+1] for the steps used. f must take values in [0,1] on the last
// window used.
BoostResult Boost(const Group& group, const std::vector<ElementSet>& windows,
                  const Rational& eps, const ElementFunction& f,
                  const StepOracle& oracle, int max_steps);

// Radii 1, 3, 9, ... for the integers: B_{3r} is used as the step window
// after B_r.
std::vector<ElementSet> TripledBalls(const Group& group, int r0, int count);

}  // namespace amenlab

#endif  // AMENLAB_RAMSEY_HPP_
