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

#ifndef AMENLAB_PICTURES_HPP_
#define AMENLAB_PICTURES_HPP_

#include <optional>
#include <vector>

#include "amenlab/balance.hpp"
#include "amenlab/group.hpp"
#include "amenlab/set_spec.hpp"

namespace amenlab {

// A window A and a target set E, seen through pictures
// X_E(g) = {a in A : a g in E}.
struct PictureContext {
  Group group;
  ElementSet window;
  ElementPredicate in_e;

  PictureContext(Group g, ElementSet a, ElementPredicate e);
  PictureContext(Group g, ElementSet a, const ElementSet& e);
};

// Bit i set iff window[i] * g lies in E.
Mask Picture(const PictureContext& ctx, const Element& g);

// Ground labels are the formatted window elements.
std::vector<std::string> WindowLabels(const Group& group,
                                      const ElementSet& window);

// Pictures over a finite probe domain. This is only a subfamily of the
// family realized over the whole group.
SetFamily RealizedFamily(const PictureContext& ctx, const ElementSet& domain);

// From a balance witness over the pictures realized on `domain`: puts the
// weight of each picture on the least domain element carrying it.
RationalMeasure MeasureFromBalance(const PictureContext& ctx,
                                   const ElementSet& domain,
                                   const SetFamily& family,
                                   const BalanceWitness& witness);

// The pictures charged by nu with their masses as convex weights. The
// witness gap equals max - min over a of (a nu)(E).
std::pair<SetFamily, BalanceWitness> MeasureToBalanced(
    const PictureContext& ctx, const RationalMeasure& nu);

struct NonAmenabilityCertificate {
  ElementSet window;
  std::vector<Rational> f;
  int radius = 0;  // probe domain is the ball of this radius
  SetSpec e;
  SetFamily family;
  UnbalanceWitness witness;

  friend bool operator==(const NonAmenabilityCertificate&,
                         const NonAmenabilityCertificate&) = default;
};

// Candidate sets E tried by RealizationSearch, in search order.
//  free groups: first-letter sets over nonempty proper letter subsets, and
//    for F2 the level sets h > k with |k| <= 2; then complements; then
//    pairwise unions and intersections of those.
//  free abelian: residue classes of each coordinate (and of the coordinate
//    sum when rank >= 2) modulo 2..min(2r+1, 8), every nonempty proper
//    residue subset.
//  cyclic: residue classes modulo proper divisors of the order.
//  finite tables: none.
std::vector<SetSpec> CandidatePool(const Group& group, int radius);

// Searches the pool for E whose pictures over the radius ball all have
// positive f-sum. nullopt means the pool was exhausted, not that the group
// is amenable.
std::optional<NonAmenabilityCertificate> RealizationSearch(
    const Group& group, const ElementSet& window,
    const std::vector<Rational>& f, int radius, size_t cap = 1u << 20);

// Recomputes the family from (window, E, radius) and checks the witness.
bool VerifyNonAmenabilityCertificate(const Group& group,
                                     const NonAmenabilityCertificate& cert);

}  // namespace amenlab

#endif  // AMENLAB_PICTURES_HPP_
