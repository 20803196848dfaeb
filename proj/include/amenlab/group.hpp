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

#ifndef AMENLAB_GROUP_HPP_
#define AMENLAB_GROUP_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amenlab/rational.hpp"

namespace amenlab {

enum class GroupKind { kFree, kFreeAbelian, kCyclic, kFiniteTable };

std::string_view KindName(GroupKind kind);

// Canonical form of a group element. The meaning of `data` depends on the
// owning group's kind:
//   free          reduced word of letter codes; generator i is 2i and its
//                 inverse 2i+1, so code order is "a < A < b < B < ...";
//   free_abelian  exponent vector of length rank;
//   cyclic/table  a single index.
// Equality is structural. Ordering is shortlex on `data`, which is the
// documented canonical order for every kind (all vectors of an abelian group
// share one length, so shortlex reduces to lexicographic there).
struct Element {
  std::vector<int32_t> data;

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (a.data.size() != b.data.size()) return a.data.size() <=> b.data.size();
    return a.data <=> b.data;
  }
};

struct ElementHash {
  size_t operator()(const Element& e) const noexcept;
};

// Deduplicated, canonically ordered finite set of elements.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::vector<Element> elements);

  size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const Element& operator[](size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  const std::vector<Element>& elements() const { return elements_; }

  bool contains(const Element& e) const;
  std::optional<size_t> index_of(const Element& e) const;
  bool is_subset_of(const ElementSet& other) const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<Element> elements_;
};

ElementSet Union(const ElementSet& a, const ElementSet& b);

// A finitely generated group with decidable canonical forms: free groups,
// free abelian groups, cyclic groups and finite groups given by a Cayley
// table. Immutable after construction.
class Group {
 public:
  static Group Free(int rank);
  static Group Free(std::vector<std::string> generator_names);
  static Group FreeAbelian(int rank);
  static Group Cyclic(int order);
  // table[g][h] is the index of g*h. When `generators` is empty a generating
  // set is chosen greedily (least index not yet generated). Associativity is
  // checked for order <= 256; larger tables are accepted unverified.
  static Group FiniteTable(std::vector<std::vector<int>> table,
                           std::vector<int> generators = {});

  GroupKind kind() const { return kind_; }
  // Rank for free/free_abelian, order for cyclic/finite_table.
  int rank_or_order() const { return size_param_; }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  const std::vector<int>& table_generators() const { return table_gens_; }
  bool associativity_verified() const { return associativity_verified_; }
  bool is_finite() const {
    return kind_ == GroupKind::kCyclic || kind_ == GroupKind::kFiniteTable;
  }

  Element Identity() const;
  // The generating set S in declaration order (not closed under inversion).
  const std::vector<Element>& Generators() const { return generators_; }
  // S followed by the inverses of S, deduplicated and canonically ordered.
  ElementSet SymmetricGenerators() const;

  bool IsValid(const Element& e) const;
  // Both throw std::invalid_argument when an operand is not a canonical
  // element of this group.
  Element Multiply(const Element& g, const Element& h) const;
  Element Inverse(const Element& g) const;

  // Word syntax: generator letters, uppercase for inverses, "e" for the
  // identity ("aBa" = a b^-1 a). Abelian groups also accept "3" (rank 1) and
  // "(1,-2)"; finite groups accept an index.
  Element Parse(std::string_view text) const;
  std::string Format(const Element& e) const;

  friend bool operator==(const Group& a, const Group& b);

 private:
  Group() = default;
  void CheckMember(const Element& e) const;
  Element GeneratorWord(int generator, bool inverse) const;

  GroupKind kind_ = GroupKind::kFree;
  int size_param_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> table_inverse_;
  std::vector<int> table_gens_;
  int table_identity_ = 0;
  bool associativity_verified_ = true;
  std::vector<Element> generators_;
};

// B_n: elements at word-metric distance <= n from the identity, where the
// metric uses S together with its inverses. Throws CapExceeded when |B_n|
// would exceed `cap`.
ElementSet Ball(const Group& group, int radius, size_t cap = 1u << 22);

// Word length with respect to S and S^-1.
int WordLength(const Group& group, const Element& e);

// {g x : x in set}.
ElementSet TranslateSet(const Group& group, const Element& g,
                        const ElementSet& set);

// A . B = {a b : a in A, b in B}.
ElementSet ProductSet(const Group& group, const ElementSet& a,
                      const ElementSet& b);

// Finitely supported probability measure with exact weights. Only nonzero
// weights are stored; weights are nonnegative and sum to exactly one.
class RationalMeasure {
 public:
  using WeightMap = std::map<Element, Rational>;

  // Throws std::invalid_argument on negative weights or total != 1.
  static RationalMeasure FromWeights(WeightMap weights);
  static RationalMeasure PointMass(const Element& e);
  static RationalMeasure Uniform(const ElementSet& support);
  // alpha*mu + (1-alpha)*nu, alpha in [0,1].
  static RationalMeasure Mix(const Rational& alpha, const RationalMeasure& mu,
                             const RationalMeasure& nu);

  const WeightMap& weights() const { return weights_; }
  Rational weight(const Element& e) const;
  ElementSet support() const;

  friend bool operator==(const RationalMeasure&,
                         const RationalMeasure&) = default;

 private:
  WeightMap weights_;
};

using ElementPredicate = std::function<bool(const Element&)>;
using ElementFunction = std::function<Rational(const Element&)>;

// mu * nu: weight at z is the sum of mu(x) nu(y) over x y = z.
RationalMeasure Convolve(const Group& group, const RationalMeasure& mu,
                         const RationalMeasure& nu);

// Left translate g nu, i.e. the convolution of the point mass at g with nu.
RationalMeasure TranslateMeasure(const Group& group, const Element& g,
                                 const RationalMeasure& nu);

Rational MeasureOf(const RationalMeasure& nu, const ElementSet& set);
Rational MeasureOf(const RationalMeasure& nu, const ElementPredicate& in_set);

// nu(f) = sum over the support of nu(g) f(g). `f` may throw to signal an
// undefined value; lookup tables go through the map overload, which reports
// the missing element.
Rational Evaluate(const RationalMeasure& nu, const ElementFunction& f);
Rational Evaluate(const Group& group, const RationalMeasure& nu,
                  const std::map<Element, Rational>& f);

}  // namespace amenlab

#endif  // AMENLAB_GROUP_HPP_
