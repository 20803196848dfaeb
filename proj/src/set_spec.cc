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

#include "amenlab/set_spec.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

namespace amenlab {

SetSpec SetSpec::FirstLetter(std::vector<std::string> letters) {
  SetSpec s;
  s.kind = Kind::kFirstLetter;
  s.letters = std::move(letters);
  return s;
}

SetSpec SetSpec::HAbove(int k) {
  SetSpec s;
  s.kind = Kind::kHAbove;
  s.k = k;
  return s;
}

SetSpec SetSpec::Union(std::vector<SetSpec> of) {
  SetSpec s;
  s.kind = Kind::kUnion;
  s.of = std::move(of);
  return s;
}

SetSpec SetSpec::Intersection(std::vector<SetSpec> of) {
  SetSpec s;
  s.kind = Kind::kIntersection;
  s.of = std::move(of);
  return s;
}

SetSpec SetSpec::Complement(SetSpec of) {
  SetSpec s;
  s.kind = Kind::kComplement;
  s.of.push_back(std::move(of));
  return s;
}

SetSpec SetSpec::Explicit(std::vector<std::string> elements) {
  SetSpec s;
  s.kind = Kind::kExplicit;
  s.elements = std::move(elements);
  return s;
}

SetSpec SetSpec::Residue(int coord, int modulus, std::vector<int> residues) {
  SetSpec s;
  s.kind = Kind::kResidue;
  s.coord = coord;
  s.modulus = modulus;
  s.residues = std::move(residues);
  return s;
}

std::string_view SetKindName(SetSpec::Kind kind) {
  switch (kind) {
    case SetSpec::Kind::kFirstLetter: return "first_letter";
    case SetSpec::Kind::kHAbove: return "h_above";
    case SetSpec::Kind::kUnion: return "union";
    case SetSpec::Kind::kIntersection: return "intersection";
    case SetSpec::Kind::kComplement: return "complement";
    case SetSpec::Kind::kExplicit: return "explicit";
    case SetSpec::Kind::kResidue: return "residue";
  }
  return "?";
}

namespace {

std::string Join(const std::vector<std::string>& items) {
  std::string s;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) s += ",";
    s += items[i];
  }
  return s;
}

bool IsF2(const Group& g) {
  return g.kind() == GroupKind::kFree && g.rank_or_order() == 2;
}

}  // namespace

std::string Describe(const SetSpec& spec) {
  switch (spec.kind) {
    case SetSpec::Kind::kFirstLetter:
      return "first_letter[" + Join(spec.letters) + "]";
    case SetSpec::Kind::kHAbove:
      return "h>" + std::to_string(spec.k);
    case SetSpec::Kind::kUnion:
    case SetSpec::Kind::kIntersection:
    case SetSpec::Kind::kComplement: {
      std::vector<std::string> parts;
      for (const auto& s : spec.of) parts.push_back(Describe(s));
      return std::string(SetKindName(spec.kind)) + "(" + Join(parts) + ")";
    }
    case SetSpec::Kind::kExplicit:
      return "{" + Join(spec.elements) + "}";
    case SetSpec::Kind::kResidue: {
      std::vector<std::string> r;
      for (int x : spec.residues) r.push_back(std::to_string(x));
      const std::string form =
          spec.coord < 0 ? "sum" : "x" + std::to_string(spec.coord);
      return form + " mod " + std::to_string(spec.modulus) + " in {" +
             Join(r) + "}";
    }
  }
  return "?";
}

int HValue(const Group& group, const Element& w) {
  if (!IsF2(group)) throw std::invalid_argument("h is defined on F2 only");
  if (!group.IsValid(w)) throw std::invalid_argument("not a reduced word");
  int h = 0;
  for (int32_t c : w.data) {
    // a -> +1, A -> -1, b -> -1, B -> +1.
    const int sign = (c & 1) ? -1 : 1;
    h += (c >> 1) == 0 ? sign : -sign;
  }
  return h;
}

ElementPredicate Compile(const Group& group, const SetSpec& spec) {
  auto g = std::make_shared<const Group>(group);
  switch (spec.kind) {
    case SetSpec::Kind::kFirstLetter: {
      if (group.kind() != GroupKind::kFree) {
        throw std::invalid_argument("first_letter needs a free group");
      }
      std::vector<int32_t> codes;
      for (const auto& l : spec.letters) {
        if (l.size() != 1 || l == "e") {
          throw std::invalid_argument("first_letter takes single letters");
        }
        codes.push_back(group.Parse(l).data.at(0));
      }
      return [g, codes](const Element& w) {
        g->Format(w);  // rejects non-members
        return !w.data.empty() &&
               std::find(codes.begin(), codes.end(), w.data[0]) != codes.end();
      };
    }
    case SetSpec::Kind::kHAbove: {
      if (!IsF2(group)) throw std::invalid_argument("h_above needs F2");
      const int k = spec.k;
      return [g, k](const Element& w) { return HValue(*g, w) > k; };
    }
    case SetSpec::Kind::kUnion:
    case SetSpec::Kind::kIntersection: {
      std::vector<ElementPredicate> parts;
      for (const auto& s : spec.of) parts.push_back(Compile(group, s));
      const bool any = spec.kind == SetSpec::Kind::kUnion;
      return [parts, any](const Element& w) {
        for (const auto& p : parts) {
          if (p(w) == any) return any;
        }
        return !any;
      };
    }
    case SetSpec::Kind::kComplement: {
      if (spec.of.size() != 1) {
        throw std::invalid_argument("complement takes exactly one set");
      }
      ElementPredicate inner = Compile(group, spec.of[0]);
      return [inner](const Element& w) { return !inner(w); };
    }
    case SetSpec::Kind::kExplicit: {
      std::vector<Element> items;
      for (const auto& s : spec.elements) items.push_back(group.Parse(s));
      auto set = std::make_shared<const ElementSet>(std::move(items));
      return [g, set](const Element& w) {
        g->Format(w);
        return set->contains(w);
      };
    }
    case SetSpec::Kind::kResidue: {
      const bool abelian = group.kind() == GroupKind::kFreeAbelian;
      if (!abelian && group.kind() != GroupKind::kCyclic) {
        throw std::invalid_argument("residue needs free abelian or cyclic");
      }
      if (spec.modulus < 1) throw std::invalid_argument("modulus must be >= 1");
      if (!abelian && group.rank_or_order() % spec.modulus != 0) {
        throw std::invalid_argument("modulus must divide the cyclic order");
      }
      const int dim = abelian ? group.rank_or_order() : 1;
      if (spec.coord >= dim) throw std::invalid_argument("coordinate out of range");
      std::vector<bool> in(spec.modulus, false);
      for (int r : spec.residues) {
        in[((r % spec.modulus) + spec.modulus) % spec.modulus] = true;
      }
      const int coord = spec.coord, m = spec.modulus;
      return [g, in, coord, m](const Element& w) {
        g->Format(w);
        long long v = 0;
        if (coord >= 0) {
          v = w.data[coord];
        } else {
          for (int32_t x : w.data) v += x;
        }
        return in[((v % m) + m) % m];
      };
    }
  }
  throw std::invalid_argument("unknown set kind");
}

}  // namespace amenlab
