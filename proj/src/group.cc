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

#include "amenlab/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace amenlab {

std::string_view KindName(GroupKind kind) {
  switch (kind) {
    case GroupKind::kFree:
      return "free";
    case GroupKind::kFreeAbelian:
      return "free_abelian";
    case GroupKind::kCyclic:
      return "cyclic";
    case GroupKind::kFiniteTable:
      return "finite_table";
  }
  return "?";
}

size_t ElementHash::operator()(const Element& e) const noexcept {
  size_t h = 1469598103934665603ull ^ e.data.size();
  for (int32_t v : e.data) {
    h ^= static_cast<uint32_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

ElementSet::ElementSet(std::vector<Element> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

bool ElementSet::contains(const Element& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

std::optional<size_t> ElementSet::index_of(const Element& e) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || !(*it == e)) return std::nullopt;
  return static_cast<size_t>(it - elements_.begin());
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

ElementSet Union(const ElementSet& a, const ElementSet& b) {
  std::vector<Element> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return ElementSet(std::move(all));
}

// ---------------------------------------------------------------------------
// Group construction.

namespace {

void CheckGeneratorNames(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.size() != 1 || !std::islower(static_cast<unsigned char>(n[0])) ||
        n == "e") {
      throw std::invalid_argument(
          "generator names must be single lowercase letters other than 'e', "
          "got '" + n + "'");
    }
    if (!seen.insert(n).second) {
      throw std::invalid_argument("duplicate generator name '" + n + "'");
    }
  }
}

std::vector<std::string> DefaultNames(int count) {
  std::vector<std::string> names;
  for (char c = 'a'; c <= 'z' && static_cast<int>(names.size()) < count; ++c) {
    if (c != 'e') names.emplace_back(1, c);
  }
  if (static_cast<int>(names.size()) < count) {
    throw std::invalid_argument("rank too large for letter generator names");
  }
  return names;
}

}  // namespace

Group Group::Free(int rank) {
  if (rank < 1) throw std::invalid_argument("free group rank must be >= 1");
  return Free(DefaultNames(rank));
}

Group Group::Free(std::vector<std::string> generator_names) {
  if (generator_names.empty()) {
    throw std::invalid_argument("free group rank must be >= 1");
  }
  CheckGeneratorNames(generator_names);
  Group g;
  g.kind_ = GroupKind::kFree;
  g.size_param_ = static_cast<int>(generator_names.size());
  g.names_ = std::move(generator_names);
  for (int i = 0; i < g.size_param_; ++i) {
    g.generators_.push_back(Element{{2 * i}});
  }
  return g;
}

Group Group::FreeAbelian(int rank) {
  if (rank < 1) {
    throw std::invalid_argument("free abelian group rank must be >= 1");
  }
  Group g;
  g.kind_ = GroupKind::kFreeAbelian;
  g.size_param_ = rank;
  g.names_ = DefaultNames(rank);
  for (int i = 0; i < rank; ++i) {
    Element e{std::vector<int32_t>(rank, 0)};
    e.data[i] = 1;
    g.generators_.push_back(std::move(e));
  }
  return g;
}

Group Group::Cyclic(int order) {
  if (order < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  Group g;
  g.kind_ = GroupKind::kCyclic;
  g.size_param_ = order;
  g.names_ = {"a"};
  g.generators_.push_back(Element{{order == 1 ? 0 : 1}});
  return g;
}

Group Group::FiniteTable(std::vector<std::vector<int>> table,
                         std::vector<int> generators) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw std::invalid_argument("multiplication table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("multiplication table is not square");
    }
    std::vector<bool> seen(n, false);
    for (int v : row) {
      if (v < 0 || v >= n || seen[v]) {
        throw std::invalid_argument("table row is not a permutation");
      }
      seen[v] = true;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<bool> seen(n, false);
    for (int r = 0; r < n; ++r) {
      if (seen[table[r][c]]) {
        throw std::invalid_argument("table column is not a permutation");
      }
      seen[table[r][c]] = true;
    }
  }
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      ok = table[e][x] == x && table[x][e] == x;
    }
    if (ok) identity = e;
  }
  if (identity < 0) throw std::invalid_argument("table has no identity");

  Group g;
  g.kind_ = GroupKind::kFiniteTable;
  g.size_param_ = n;
  g.table_identity_ = identity;
  g.associativity_verified_ = n <= 256;
  if (g.associativity_verified_) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        const int xy = table[x][y];
        for (int z = 0; z < n; ++z) {
          if (table[xy][z] != table[x][table[y][z]]) {
            throw std::invalid_argument("table is not associative");
          }
        }
      }
    }
  }
  g.table_inverse_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (table[x][y] == identity) g.table_inverse_[x] = y;
    }
  }
  g.table_ = std::move(table);

  if (generators.empty()) {
    // Greedy: add the least index outside the subgroup generated so far.
    std::vector<bool> in_subgroup(n, false);
    in_subgroup[identity] = true;
    for (int cand = 0; cand < n; ++cand) {
      if (in_subgroup[cand]) continue;
      generators.push_back(cand);
      std::deque<int> queue;
      for (int x = 0; x < n; ++x) {
        if (in_subgroup[x]) queue.push_back(x);
      }
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int s : generators) {
          for (int y : {g.table_[s][x], g.table_[x][s]}) {
            if (!in_subgroup[y]) {
              in_subgroup[y] = true;
              queue.push_back(y);
            }
          }
        }
      }
    }
    if (generators.empty()) generators.push_back(identity);
  }
  for (int s : generators) {
    if (s < 0 || s >= n) {
      throw std::invalid_argument("generator index out of range");
    }
    g.generators_.push_back(Element{{s}});
    g.names_.push_back("g" + std::to_string(s));
  }
  g.table_gens_ = std::move(generators);
  return g;
}

bool operator==(const Group& a, const Group& b) {
  return a.kind_ == b.kind_ && a.size_param_ == b.size_param_ &&
         a.names_ == b.names_ && a.table_ == b.table_ &&
         a.table_gens_ == b.table_gens_;
}

// ---------------------------------------------------------------------------
// Group law.

Element Group::Identity() const {
  switch (kind_) {
    case GroupKind::kFree:
      return Element{};
    case GroupKind::kFreeAbelian:
      return Element{std::vector<int32_t>(size_param_, 0)};
    case GroupKind::kCyclic:
      return Element{{0}};
    case GroupKind::kFiniteTable:
      return Element{{table_identity_}};
  }
  return Element{};
}

ElementSet Group::SymmetricGenerators() const {
  std::vector<Element> all;
  for (const auto& s : generators_) {
    all.push_back(s);
    all.push_back(Inverse(s));
  }
  return ElementSet(std::move(all));
}

bool Group::IsValid(const Element& e) const {
  switch (kind_) {
    case GroupKind::kFree:
      for (size_t i = 0; i < e.data.size(); ++i) {
        if (e.data[i] < 0 || e.data[i] >= 2 * size_param_) return false;
        if (i > 0 && (e.data[i] ^ 1) == e.data[i - 1]) return false;
      }
      return true;
    case GroupKind::kFreeAbelian:
      return static_cast<int>(e.data.size()) == size_param_;
    case GroupKind::kCyclic:
    case GroupKind::kFiniteTable:
      return e.data.size() == 1 && e.data[0] >= 0 && e.data[0] < size_param_;
  }
  return false;
}

void Group::CheckMember(const Element& e) const {
  if (!IsValid(e)) {
    throw std::invalid_argument("element is not a canonical element of this " +
                                std::string(KindName(kind_)) + " group");
  }
}

Element Group::Multiply(const Element& g, const Element& h) const {
  CheckMember(g);
  CheckMember(h);
  switch (kind_) {
    case GroupKind::kFree: {
      Element r = g;
      for (int32_t letter : h.data) {
        if (!r.data.empty() && r.data.back() == (letter ^ 1)) {
          r.data.pop_back();
        } else {
          r.data.push_back(letter);
        }
      }
      return r;
    }
    case GroupKind::kFreeAbelian: {
      Element r = g;
      for (int i = 0; i < size_param_; ++i) r.data[i] += h.data[i];
      return r;
    }
    case GroupKind::kCyclic:
      return Element{{(g.data[0] + h.data[0]) % size_param_}};
    case GroupKind::kFiniteTable:
      return Element{{table_[g.data[0]][h.data[0]]}};
  }
  return Element{};
}

Element Group::Inverse(const Element& g) const {
  CheckMember(g);
  switch (kind_) {
    case GroupKind::kFree: {
      Element r;
      r.data.reserve(g.data.size());
      for (auto it = g.data.rbegin(); it != g.data.rend(); ++it) {
        r.data.push_back(*it ^ 1);
      }
      return r;
    }
    case GroupKind::kFreeAbelian: {
      Element r = g;
      for (auto& v : r.data) v = -v;
      return r;
    }
    case GroupKind::kCyclic:
      return Element{{(size_param_ - g.data[0]) % size_param_}};
    case GroupKind::kFiniteTable:
      return Element{{table_inverse_[g.data[0]]}};
  }
  return Element{};
}

Element Group::GeneratorWord(int generator, bool inverse) const {
  const Element& s = generators_.at(generator);
  return inverse ? Inverse(s) : s;
}

// ---------------------------------------------------------------------------
// Parsing and formatting.

namespace {

bool LooksNumeric(std::string_view text) {
  return !text.empty() &&
         (std::isdigit(static_cast<unsigned char>(text[0])) ||
          text[0] == '-' || text[0] == '+');
}

int32_t ParseInt(std::string_view text) {
  std::string s(text);
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed integer '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("malformed integer '" + s + "'");
  return static_cast<int32_t>(v);
}

}  // namespace

Element Group::Parse(std::string_view text) const {
  if (text.empty()) throw std::invalid_argument("empty element literal");
  if (text == "e") return Identity();
  if (kind_ == GroupKind::kFiniteTable ||
      (kind_ == GroupKind::kCyclic && LooksNumeric(text))) {
    int32_t v = ParseInt(text);
    if (kind_ == GroupKind::kCyclic) {
      v = ((v % size_param_) + size_param_) % size_param_;
    }
    Element e{{v}};
    CheckMember(e);
    return e;
  }
  if (kind_ == GroupKind::kFreeAbelian) {
    if (text.front() == '(' && text.back() == ')') {
      Element e;
      std::string inner(text.substr(1, text.size() - 2));
      std::stringstream ss(inner);
      std::string item;
      while (std::getline(ss, item, ',')) e.data.push_back(ParseInt(item));
      CheckMember(e);
      return e;
    }
    if (LooksNumeric(text)) {
      if (size_param_ != 1) {
        throw std::invalid_argument("bare integer needs a rank-1 group");
      }
      return Element{{ParseInt(text)}};
    }
  }
  Element r = Identity();
  for (char c : text) {
    const bool inverse = std::isupper(static_cast<unsigned char>(c)) != 0;
    const std::string name(
        1, static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      throw std::invalid_argument("unknown generator '" + std::string(1, c) +
                                  "' in word '" + std::string(text) + "'");
    }
    r = Multiply(r, GeneratorWord(static_cast<int>(it - names_.begin()), inverse));
  }
  return r;
}

std::string Group::Format(const Element& e) const {
  CheckMember(e);
  switch (kind_) {
    case GroupKind::kFree: {
      if (e.data.empty()) return "e";
      std::string s;
      for (int32_t letter : e.data) {
        char c = names_[letter / 2][0];
        s.push_back((letter & 1) ? static_cast<char>(std::toupper(c)) : c);
      }
      return s;
    }
    case GroupKind::kFreeAbelian: {
      if (size_param_ == 1) return std::to_string(e.data[0]);
      std::string s = "(";
      for (size_t i = 0; i < e.data.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e.data[i]);
      }
      return s + ")";
    }
    case GroupKind::kCyclic:
    case GroupKind::kFiniteTable:
      return std::to_string(e.data[0]);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Balls, translates, word length.

ElementSet Ball(const Group& group, int radius, size_t cap) {
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  const ElementSet steps = group.SymmetricGenerators();
  std::unordered_set<Element, ElementHash> seen;
  std::vector<Element> frontier{group.Identity()};
  seen.insert(group.Identity());
  for (int r = 0; r < radius && !frontier.empty(); ++r) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& s : steps) {
        Element y = group.Multiply(s, x);
        if (seen.insert(y).second) {
          if (seen.size() > cap) {
            throw CapExceeded("ball of radius " + std::to_string(radius) +
                              " exceeds cap " + std::to_string(cap));
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return ElementSet(std::vector<Element>(seen.begin(), seen.end()));
}

int WordLength(const Group& group, const Element& e) {
  switch (group.kind()) {
    case GroupKind::kFree:
      return static_cast<int>(e.data.size());
    case GroupKind::kFreeAbelian: {
      int total = 0;
      for (int32_t v : e.data) total += v < 0 ? -v : v;
      return total;
    }
    default:
      break;
  }
  const ElementSet steps = group.SymmetricGenerators();
  std::unordered_set<Element, ElementHash> seen{group.Identity()};
  std::vector<Element> frontier{group.Identity()};
  for (int r = 0; !frontier.empty(); ++r) {
    for (const auto& x : frontier) {
      if (x == e) return r;
    }
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& s : steps) {
        Element y = group.Multiply(s, x);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  throw std::invalid_argument("element not reachable from the generators");
}

ElementSet TranslateSet(const Group& group, const Element& g,
                        const ElementSet& set) {
  std::vector<Element> out;
  out.reserve(set.size());
  for (const auto& x : set) out.push_back(group.Multiply(g, x));
  return ElementSet(std::move(out));
}

ElementSet ProductSet(const Group& group, const ElementSet& a,
                      const ElementSet& b) {
  std::vector<Element> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(group.Multiply(x, y));
  }
  return ElementSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Measures.

RationalMeasure RationalMeasure::FromWeights(WeightMap weights) {
  Rational total = 0;
  for (auto it = weights.begin(); it != weights.end();) {
    it->second.canonicalize();
    if (it->second < 0) {
      throw std::invalid_argument("measure weight is negative");
    }
    total += it->second;
    if (it->second == 0) {
      it = weights.erase(it);
    } else {
      ++it;
    }
  }
  if (total != 1) {
    throw std::invalid_argument("measure weights sum to " +
                                FormatRational(total) + ", not 1");
  }
  RationalMeasure m;
  m.weights_ = std::move(weights);
  return m;
}

RationalMeasure RationalMeasure::PointMass(const Element& e) {
  RationalMeasure m;
  m.weights_.emplace(e, Rational(1));
  return m;
}

RationalMeasure RationalMeasure::Uniform(const ElementSet& support) {
  if (support.empty()) {
    throw std::invalid_argument("uniform measure needs a nonempty support");
  }
  const Rational w(1, support.size());
  RationalMeasure m;
  for (const auto& e : support) m.weights_.emplace(e, w);
  return m;
}

RationalMeasure RationalMeasure::Mix(const Rational& alpha,
                                     const RationalMeasure& mu,
                                     const RationalMeasure& nu) {
  if (alpha < 0 || alpha > 1) {
    throw std::invalid_argument("mixing weight must lie in [0,1]");
  }
  WeightMap w;
  for (const auto& [e, p] : mu.weights_) w[e] += alpha * p;
  for (const auto& [e, p] : nu.weights_) w[e] += (1 - alpha) * p;
  return FromWeights(std::move(w));
}

Rational RationalMeasure::weight(const Element& e) const {
  auto it = weights_.find(e);
  return it == weights_.end() ? Rational(0) : it->second;
}

ElementSet RationalMeasure::support() const {
  std::vector<Element> s;
  s.reserve(weights_.size());
  for (const auto& [e, p] : weights_) s.push_back(e);
  return ElementSet(std::move(s));
}

RationalMeasure Convolve(const Group& group, const RationalMeasure& mu,
                         const RationalMeasure& nu) {
  RationalMeasure::WeightMap out;
  for (const auto& [x, p] : mu.weights()) {
    for (const auto& [y, q] : nu.weights()) {
      out[group.Multiply(x, y)] += p * q;
    }
  }
  return RationalMeasure::FromWeights(std::move(out));
}

RationalMeasure TranslateMeasure(const Group& group, const Element& g,
                                 const RationalMeasure& nu) {
  return Convolve(group, RationalMeasure::PointMass(g), nu);
}

Rational MeasureOf(const RationalMeasure& nu, const ElementSet& set) {
  Rational total = 0;
  for (const auto& [e, p] : nu.weights()) {
    if (set.contains(e)) total += p;
  }
  return total;
}

Rational MeasureOf(const RationalMeasure& nu, const ElementPredicate& in_set) {
  Rational total = 0;
  for (const auto& [e, p] : nu.weights()) {
    if (in_set(e)) total += p;
  }
  return total;
}

Rational Evaluate(const RationalMeasure& nu, const ElementFunction& f) {
  Rational total = 0;
  for (const auto& [e, p] : nu.weights()) total += p * f(e);
  return total;
}

Rational Evaluate(const Group& group, const RationalMeasure& nu,
                  const std::map<Element, Rational>& f) {
  Rational total = 0;
  for (const auto& [e, p] : nu.weights()) {
    auto it = f.find(e);
    if (it == f.end()) {
      throw std::invalid_argument("function undefined at " + group.Format(e));
    }
    total += p * it->second;
  }
  return total;
}

}  // namespace amenlab
