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

#include <algorithm>
#include <map>
#include <stdexcept>

namespace amenlab {

PictureContext::PictureContext(Group g, ElementSet a, ElementPredicate e)
    : group(std::move(g)), window(std::move(a)), in_e(std::move(e)) {
  if (window.empty()) throw std::invalid_argument("window is empty");
  if (window.size() > kMaxGround) {
    throw std::invalid_argument("window larger than 64 elements");
  }
  for (const auto& x : window) {
    if (!group.IsValid(x)) throw std::invalid_argument("window not in group");
  }
}

PictureContext::PictureContext(Group g, ElementSet a, const ElementSet& e)
    : PictureContext(std::move(g), std::move(a),
                     [e](const Element& x) { return e.contains(x); }) {}

Mask Picture(const PictureContext& ctx, const Element& g) {
  Mask m = 0;
  for (size_t i = 0; i < ctx.window.size(); ++i) {
    if (ctx.in_e(ctx.group.Multiply(ctx.window[i], g))) m |= Mask{1} << i;
  }
  return m;
}

std::vector<std::string> WindowLabels(const Group& group,
                                      const ElementSet& window) {
  std::vector<std::string> labels;
  for (const auto& x : window) labels.push_back(group.Format(x));
  return labels;
}

SetFamily RealizedFamily(const PictureContext& ctx, const ElementSet& domain) {
  std::vector<Mask> masks;
  masks.reserve(domain.size());
  for (const auto& g : domain) masks.push_back(Picture(ctx, g));
  return SetFamily(WindowLabels(ctx.group, ctx.window), std::move(masks));
}

RationalMeasure MeasureFromBalance(const PictureContext& ctx,
                                   const ElementSet& domain,
                                   const SetFamily& family,
                                   const BalanceWitness& witness) {
  if (witness.weights.size() != family.size()) {
    throw std::invalid_argument("witness does not match family");
  }
  std::map<Mask, Element> first;
  for (const auto& g : domain) first.emplace(Picture(ctx, g), g);
  RationalMeasure::WeightMap w;
  for (size_t y = 0; y < family.size(); ++y) {
    if (witness.weights[y] == 0) continue;
    auto it = first.find(family.members()[y]);
    if (it == first.end()) {
      throw std::invalid_argument("picture not realized on the domain");
    }
    w[it->second] += witness.weights[y];
  }
  return RationalMeasure::FromWeights(std::move(w));
}

std::pair<SetFamily, BalanceWitness> MeasureToBalanced(
    const PictureContext& ctx, const RationalMeasure& nu) {
  std::map<Mask, Rational> mass;
  for (const auto& [g, p] : nu.weights()) mass[Picture(ctx, g)] += p;
  std::vector<Mask> members;
  std::vector<Rational> weights;
  for (const auto& [m, p] : mass) {
    members.push_back(m);
    weights.push_back(p);
  }
  SetFamily family(WindowLabels(ctx.group, ctx.window), std::move(members));
  BalanceWitness w = MakeBalanceWitness(family, std::move(weights));
  return {std::move(family), std::move(w)};
}

namespace {

std::vector<std::vector<int>> ProperSubsets(int n) {
  std::vector<std::vector<int>> out;
  for (int m = 1; m + 1 < (1 << n); ++m) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (m >> i & 1) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<SetSpec> FreePool(const Group& group) {
  std::vector<std::string> letters;
  for (const auto& name : group.generator_names()) {
    letters.push_back(name);
    letters.push_back(std::string(1, static_cast<char>(std::toupper(name[0]))));
  }
  std::vector<SetSpec> atoms;
  for (const auto& subset : ProperSubsets(static_cast<int>(letters.size()))) {
    std::vector<std::string> chosen;
    for (int i : subset) chosen.push_back(letters[i]);
    atoms.push_back(SetSpec::FirstLetter(std::move(chosen)));
  }
  if (group.rank_or_order() == 2) {
    for (int k = -2; k <= 2; ++k) atoms.push_back(SetSpec::HAbove(k));
  }
  std::vector<SetSpec> singles = atoms;
  for (const auto& a : atoms) singles.push_back(SetSpec::Complement(a));
  std::vector<SetSpec> pool = singles;
  for (size_t i = 0; i < singles.size(); ++i) {
    for (size_t j = i + 1; j < singles.size(); ++j) {
      pool.push_back(SetSpec::Union({singles[i], singles[j]}));
      pool.push_back(SetSpec::Intersection({singles[i], singles[j]}));
    }
  }
  return pool;
}

void AddResidues(int coord, int modulus, std::vector<SetSpec>* pool) {
  for (const auto& subset : ProperSubsets(modulus)) {
    pool->push_back(SetSpec::Residue(coord, modulus, subset));
  }
}

}  // namespace

std::vector<SetSpec> CandidatePool(const Group& group, int radius) {
  std::vector<SetSpec> pool;
  switch (group.kind()) {
    case GroupKind::kFree:
      return FreePool(group);
    case GroupKind::kFreeAbelian: {
      const int d = group.rank_or_order();
      const int top = std::min(2 * radius + 1, 8);
      for (int m = 2; m <= top; ++m) {
        for (int c = 0; c < d; ++c) AddResidues(c, m, &pool);
        if (d >= 2) AddResidues(-1, m, &pool);
      }
      return pool;
    }
    case GroupKind::kCyclic: {
      const int n = group.rank_or_order();
      for (int m = 2; m < n; ++m) {
        if (n % m == 0) AddResidues(0, m, &pool);
      }
      return pool;
    }
    case GroupKind::kFiniteTable:
      return pool;
  }
  return pool;
}

std::optional<NonAmenabilityCertificate> RealizationSearch(
    const Group& group, const ElementSet& window,
    const std::vector<Rational>& f, int radius, size_t cap) {
  if (f.size() != window.size()) {
    throw std::invalid_argument("f length != window size");
  }
  Rational total = 0;
  bool all_zero = true;
  for (const auto& x : f) {
    total += x;
    if (x != 0) all_zero = false;
  }
  if (total != 0) throw std::invalid_argument("f must sum to zero");
  if (all_zero) {
    throw std::invalid_argument("f is identically zero; no set has positive sum");
  }
  const ElementSet domain = Ball(group, radius, cap);
  for (const SetSpec& spec : CandidatePool(group, radius)) {
    PictureContext ctx(group, window, Compile(group, spec));
    Rational margin;
    bool ok = true;
    for (size_t i = 0; i < domain.size() && ok; ++i) {
      const Rational s = SubsetSum(f, Picture(ctx, domain[i]));
      if (s <= 0) ok = false;
      if (i == 0 || s < margin) margin = s;
    }
    if (!ok) continue;
    NonAmenabilityCertificate cert;
    cert.window = window;
    cert.f = f;
    cert.radius = radius;
    cert.e = spec;
    cert.family = RealizedFamily(ctx, domain);
    cert.witness.f = f;
    for (auto& x : cert.witness.f) x /= margin;
    cert.witness.margin = 1;
    if (!VerifyNonAmenabilityCertificate(group, cert)) {
      throw std::logic_error("realization certificate failed to verify");
    }
    return cert;
  }
  return std::nullopt;
}

bool VerifyNonAmenabilityCertificate(const Group& group,
                                     const NonAmenabilityCertificate& cert) {
  if (cert.f.size() != cert.window.size()) return false;
  Rational total = 0;
  for (const auto& x : cert.f) total += x;
  if (total != 0) return false;
  PictureContext ctx(group, cert.window, Compile(group, cert.e));
  SetFamily family = RealizedFamily(ctx, Ball(group, cert.radius));
  if (!(family == cert.family)) return false;
  if (!VerifyUnbalanceWitness(family, cert.witness)) return false;
  // Every picture must lie in the positive-set family of f itself.
  for (Mask m : family.members()) {
    if (SubsetSum(cert.f, m) <= 0) return false;
  }
  return true;
}

}  // namespace amenlab
