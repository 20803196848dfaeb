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


#ifndef AMENLAB_FOLNER_HPP_
#define AMENLAB_FOLNER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "amenlab/group.hpp"
#include "amenlab/ramsey.hpp"

namespace amenlab {

struct FolnerReport {
  ElementSet a, b;
  Rational eps;
  std::vector<int64_t> counts;  // |a B symdiff B| per a, window order
  int64_t total = 0;
  Rational threshold;  // eps |B|
  bool folner = false;

  friend bool operator==(const FolnerReport&, const FolnerReport&) = default;
};

// sum over a in A of |aB symdiff B| <= eps |B|. Throws on empty B.
FolnerReport IsEpsilonFolner(const Group& group, const ElementSet& a,
                             const ElementSet& b, const Rational& eps);

struct FolnerSearchResult {
  int k = 0;
  bool found = false;
  ElementSet set;       // least cardinality, then lexicographically least
  bool exact = false;   // false: only an upper bound on the true minimum
  uint64_t candidates = 0;
};

// Least |B| over subsets B of the window containing the identity that are
// 1/k-Folner for the generators S (not symmetrised). For free abelian groups
// the identity is also required to be the least element. Exact for rank-1
// free abelian groups when the window holds {0, ..., |B|-1}, and for finite
// groups when the window is the whole group.
FolnerSearchResult FolnerFunction(const Group& group, int k,
                                  const ElementSet& window,
                                  uint64_t cap = uint64_t{1} << 24);

struct WeightedFolnerValue {
  int m = 0, n = 0;
  Rational value;  // min over admissible nu of sum_{g in B_m} |g nu - nu|_1
  RationalMeasure nu;

  friend bool operator==(const WeightedFolnerValue&,
                         const WeightedFolnerValue&) = default;
};

// sum over g in a of |g nu - nu|_1.
Rational TranslationDefect(const Group& group, const ElementSet& a,
                           const RationalMeasure& nu);

// Exact L1 LP over nu supported on the interior of B_n relative to B_m.
// Throws CapExceeded when |B_n| > ball_cap; nullopt when the interior is
// empty.
std::optional<WeightedFolnerValue> WeightedFolner(const Group& group, int m,
                                                  int n, int ball_cap = 64);

struct WeightedFolnerFunction {
  FunctionStatus status = FunctionStatus::kExhausted;
  int value = -1;
  std::vector<std::optional<Rational>> values;  // F*(m, n) for n = 0..
};

// Least n <= n_max with F*(m, n) <= eps.
WeightedFolnerFunction WeightedFolnerSearch(const Group& group, int m,
                                            const Rational& eps, int n_max,
                                            int ball_cap = 64);

// Level set {x : nu(x) >= t} that is eps-Folner for A, scanning thresholds
// from the largest weight down. Requires TranslationDefect(A, nu) <= eps.
ElementSet FolnerFromWeighted(const Group& group, const RationalMeasure& nu,
                              const ElementSet& a, const Rational& eps);

enum class CheckStatus { kHolds, kViolated, kUntested };
std::string_view CheckStatusName(CheckStatus status);

struct InequalityCheck {
  std::string name;
  std::string instance;
  CheckStatus status = CheckStatus::kUntested;
  std::string detail;
};

// One computed value. A missing value means the search hit a cap or found
// nothing inside its limits.
struct HarnessCell {
  std::string function;  // Fol, F*, F, R
  int m = -1, n = -1, k = -1;
  std::string eps;
  std::optional<Rational> value;
  bool exact = true;
  std::string note;
};

struct HarnessOptions {
  int m_max = 1;
  int k_max = 2;
  int n_max = 8;
  int f_n_max = 32;  // F(m, eps) may scan F* this far when needed
  int folner_window = 6;  // radius of the Folner search window
  RamseyOptions ramsey = DefaultRamseyOptions();
  int ball_cap = 64;
};

struct HarnessReport {
  std::vector<HarnessCell> cells;
  std::vector<InequalityCheck> checks;
  bool ok() const;  // no violated check
};

// Computes Fol, F and R on small instances and checks
//   R(m, 1/k) <= F(m, 1/k),
//   Fol(k) <= (2|S|+1)^F(1, 1/k),
//   F(m, 2 eps |S|) <= R^{|S| p}(m) with (3/4)^p < eps, eps = 1/2,
//   Fol(k) <= (2|S|+1)^{R^{ps}(1)} with (3/4)^p < 1/(2ks).
HarnessReport InequalityHarness(const Group& group,
                                const HarnessOptions& options);

}  // namespace amenlab

#endif  // AMENLAB_FOLNER_HPP_
