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

#ifndef AMENLAB_BALANCE_HPP_
#define AMENLAB_BALANCE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amenlab/lp.hpp"
#include "amenlab/rational.hpp"

namespace amenlab {

// Bit i is set when the i-th ground element belongs to the subset.
using Mask = uint64_t;

inline constexpr int kMaxGround = 64;

// A family of subsets of a labelled ground set. Members are kept sorted by
// mask value and free of duplicates.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::vector<std::string> ground, std::vector<Mask> members);

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<Mask>& members() const { return members_; }
  int ground_size() const { return static_cast<int>(ground_.size()); }
  size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Mask m) const;
  Mask full_mask() const;

  std::vector<std::string> Labels(Mask m) const;
  // Throws std::invalid_argument on an unknown label.
  Mask MaskOf(const std::vector<std::string>& labels) const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::vector<std::string> ground_;
  std::vector<Mask> members_;
};

// Convex weights on the members of a family (aligned with members()).
struct BalanceWitness {
  std::vector<Rational> weights;
  std::vector<Rational> v;  // sum of weight * indicator, per ground element
  Rational gap;             // max(v) - min(v)

  friend bool operator==(const BalanceWitness&,
                         const BalanceWitness&) = default;
};

// f on the ground set with zero total and member sums >= margin > 0.
struct UnbalanceWitness {
  std::vector<Rational> f;
  Rational margin;

  friend bool operator==(const UnbalanceWitness&,
                         const UnbalanceWitness&) = default;
};

// Fills v and gap from the weights.
BalanceWitness MakeBalanceWitness(const SetFamily& family,
                                  std::vector<Rational> weights);

Rational SubsetSum(const std::vector<Rational>& f, Mask m);

// Least achievable max(v) - min(v) over convex combinations of members.
std::pair<Rational, BalanceWitness> BalanceDeficiency(const SetFamily& family);

// Variables: one weight per member, then a lower envelope t. Rows: weights
// sum to 1 and t <= v(a) <= t + eps for every ground element a.
LinearSystem EpsilonBalanceSystem(const SetFamily& family, const Rational& eps);

// On failure, fills farkas (when given) with a certificate against
// EpsilonBalanceSystem(family, eps).
std::optional<BalanceWitness> IsEpsilonBalanced(
    const SetFamily& family, const Rational& eps,
    std::vector<Rational>* farkas = nullptr);

// Returns a witness exactly when the family is not 0-balanced.
std::optional<UnbalanceWitness> FindUnbalanceWitness(const SetFamily& family);

// All subsets with strictly positive f-sum. Requires sum(f) = 0 and at most
// 20 ground elements.
SetFamily FamilyOfPositiveSets(std::vector<std::string> ground,
                               const std::vector<Rational>& f);

// Exact re-checks; they never consult the solver.
bool VerifyBalanceWitness(const SetFamily& family, const BalanceWitness& w,
                          const Rational& eps);
bool VerifyUnbalanceWitness(const SetFamily& family,
                            const UnbalanceWitness& w);

}  // namespace amenlab

#endif  // AMENLAB_BALANCE_HPP_
