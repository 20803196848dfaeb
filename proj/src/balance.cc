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

#include "amenlab/balance.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "amenlab/lp.hpp"

namespace amenlab {

SetFamily::SetFamily(std::vector<std::string> ground,
                     std::vector<Mask> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
  if (ground_.size() > kMaxGround) {
    throw std::invalid_argument("ground set larger than 64 elements");
  }
  if (std::set<std::string>(ground_.begin(), ground_.end()).size() !=
      ground_.size()) {
    throw std::invalid_argument("duplicate ground label");
  }
  const Mask full = full_mask();
  for (Mask m : members_) {
    if (m & ~full) throw std::invalid_argument("member outside ground set");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool SetFamily::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

Mask SetFamily::full_mask() const {
  return ground_.size() == 64 ? ~Mask{0}
                              : (Mask{1} << ground_.size()) - 1;
}

std::vector<std::string> SetFamily::Labels(Mask m) const {
  std::vector<std::string> out;
  for (size_t i = 0; i < ground_.size(); ++i) {
    if (m >> i & 1) out.push_back(ground_[i]);
  }
  return out;
}

Mask SetFamily::MaskOf(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) {
    auto it = std::find(ground_.begin(), ground_.end(), l);
    if (it == ground_.end()) {
      throw std::invalid_argument("unknown ground label: " + l);
    }
    m |= Mask{1} << (it - ground_.begin());
  }
  return m;
}

Rational SubsetSum(const std::vector<Rational>& f, Mask m) {
  Rational s = 0;
  for (size_t i = 0; i < f.size(); ++i) {
    if (m >> i & 1) s += f[i];
  }
  return s;
}

BalanceWitness MakeBalanceWitness(const SetFamily& family,
                                  std::vector<Rational> weights) {
  if (weights.size() != family.size()) {
    throw std::invalid_argument("weight count != family size");
  }
  BalanceWitness w;
  w.weights = std::move(weights);
  w.v.assign(family.ground_size(), Rational(0));
  for (size_t y = 0; y < family.size(); ++y) {
    if (w.weights[y] == 0) continue;
    for (int a = 0; a < family.ground_size(); ++a) {
      if (family.members()[y] >> a & 1) w.v[a] += w.weights[y];
    }
  }
  if (!w.v.empty()) {
    auto [lo, hi] = std::minmax_element(w.v.begin(), w.v.end());
    w.gap = *hi - *lo;
  }
  return w;
}

namespace {

void RequireNonempty(const SetFamily& family) {
  if (family.empty()) throw std::invalid_argument("empty family");
  if (family.ground_size() == 0) throw std::invalid_argument("empty ground");
}

// Variables: one lambda per member, then t (a lower envelope of v).
// Rows: sum lambda = 1, v(a) - t >= 0 for every a.
LinearSystem EnvelopeSystem(const SetFamily& family) {
  const int k = static_cast<int>(family.size());
  const int n = family.ground_size();
  LinearSystem sys(k + 1);
  std::vector<std::pair<int, Rational>> sum;
  for (int y = 0; y < k; ++y) sum.emplace_back(y, Rational(1));
  sys.AddSparseRow(sum, Relation::kEqual, Rational(1));
  for (int a = 0; a < n; ++a) {
    std::vector<std::pair<int, Rational>> row;
    for (int y = 0; y < k; ++y) {
      if (family.members()[y] >> a & 1) row.emplace_back(y, Rational(1));
    }
    row.emplace_back(k, Rational(-1));
    sys.AddSparseRow(row, Relation::kGreaterEqual, Rational(0));
  }
  return sys;
}

std::vector<Rational> Head(const std::vector<Rational>& point, size_t k) {
  return std::vector<Rational>(point.begin(), point.begin() + k);
}

}  // namespace

std::pair<Rational, BalanceWitness> BalanceDeficiency(
    const SetFamily& family) {
  RequireNonempty(family);
  const int k = static_cast<int>(family.size());
  const int n = family.ground_size();
  // Append t_hi as variable k+1: v(a) - t_hi <= 0; minimise t_hi - t_lo.
  LinearSystem base = EnvelopeSystem(family);
  LinearSystem sys(k + 2);
  for (const auto& row : base.rows()) {
    std::vector<Rational> c = row.coeffs;
    c.push_back(0);
    sys.AddRow(std::move(c), row.rel, row.rhs);
  }
  for (int a = 0; a < n; ++a) {
    std::vector<std::pair<int, Rational>> row;
    for (int y = 0; y < k; ++y) {
      if (family.members()[y] >> a & 1) row.emplace_back(y, Rational(1));
    }
    row.emplace_back(k + 1, Rational(-1));
    sys.AddSparseRow(row, Relation::kLessEqual, Rational(0));
  }
  std::vector<Rational> obj(k + 2);
  obj[k] = -1;
  obj[k + 1] = 1;
  sys.SetObjective(obj, Sense::kMinimize);
  OptimizationOutcome out = Optimize(sys);
  if (out.status != OptimizationStatus::kOptimal) {
    throw std::logic_error("balance LP is always feasible and bounded");
  }
  BalanceWitness w = MakeBalanceWitness(family, Head(out.optimum.point, k));
  if (w.gap != out.optimum.value) {
    throw std::logic_error("balance witness does not attain the optimum");
  }
  return {out.optimum.value, std::move(w)};
}

LinearSystem EpsilonBalanceSystem(const SetFamily& family,
                                  const Rational& eps) {
  RequireNonempty(family);
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  const int k = static_cast<int>(family.size());
  LinearSystem sys = EnvelopeSystem(family);
  for (int a = 0; a < family.ground_size(); ++a) {
    std::vector<std::pair<int, Rational>> row;
    for (int y = 0; y < k; ++y) {
      if (family.members()[y] >> a & 1) row.emplace_back(y, Rational(1));
    }
    row.emplace_back(k, Rational(-1));
    sys.AddSparseRow(row, Relation::kLessEqual, eps);
  }
  return sys;
}

std::optional<BalanceWitness> IsEpsilonBalanced(const SetFamily& family,
                                                const Rational& eps,
                                                std::vector<Rational>* farkas) {
  FeasibilityOutcome out = SolveFeasibility(EpsilonBalanceSystem(family, eps));
  if (!out.feasible) {
    if (farkas) *farkas = std::move(out.farkas);
    return std::nullopt;
  }
  BalanceWitness w =
      MakeBalanceWitness(family, Head(out.point, family.size()));
  if (w.gap > eps) throw std::logic_error("balance witness exceeds eps");
  return w;
}

std::optional<UnbalanceWitness> FindUnbalanceWitness(
    const SetFamily& family) {
  RequireNonempty(family);
  const int n = family.ground_size();
  LinearSystem sys(n, /*nonnegative=*/false);
  sys.AddRow(std::vector<Rational>(n, Rational(1)), Relation::kEqual,
             Rational(0));
  for (Mask m : family.members()) {
    std::vector<Rational> row(n);
    for (int a = 0; a < n; ++a) row[a] = (m >> a & 1) ? 1 : 0;
    sys.AddRow(std::move(row), Relation::kGreaterEqual, Rational(1));
  }
  FeasibilityOutcome out = SolveFeasibility(sys);
  if (!out.feasible) return std::nullopt;
  UnbalanceWitness w{out.point, Rational(0)};
  w.margin = SubsetSum(w.f, family.members()[0]);
  for (Mask m : family.members()) w.margin = std::min(w.margin, SubsetSum(w.f, m));
  return w;
}

SetFamily FamilyOfPositiveSets(std::vector<std::string> ground,
                               const std::vector<Rational>& f) {
  if (f.size() != ground.size()) {
    throw std::invalid_argument("f length != ground size");
  }
  if (ground.size() > 20) {
    throw CapExceeded("positive-set enumeration limited to 20 elements");
  }
  Rational total = 0;
  for (const auto& x : f) total += x;
  if (total != 0) throw std::invalid_argument("f must sum to zero");
  std::vector<Mask> members;
  const Mask limit = Mask{1} << ground.size();
  for (Mask m = 0; m < limit; ++m) {
    if (SubsetSum(f, m) > 0) members.push_back(m);
  }
  return SetFamily(std::move(ground), std::move(members));
}

bool VerifyBalanceWitness(const SetFamily& family, const BalanceWitness& w,
                          const Rational& eps) {
  if (w.weights.size() != family.size()) return false;
  Rational total = 0;
  for (const auto& x : w.weights) {
    if (x < 0) return false;
    total += x;
  }
  if (total != 1) return false;
  BalanceWitness again = MakeBalanceWitness(family, w.weights);
  return again.v == w.v && again.gap == w.gap && w.gap <= eps;
}

bool VerifyUnbalanceWitness(const SetFamily& family,
                            const UnbalanceWitness& w) {
  if (static_cast<int>(w.f.size()) != family.ground_size()) return false;
  if (family.empty() || w.margin <= 0) return false;
  Rational total = 0;
  for (const auto& x : w.f) total += x;
  if (total != 0) return false;
  for (Mask m : family.members()) {
    if (SubsetSum(w.f, m) < w.margin) return false;
  }
  return true;
}

}  // namespace amenlab
