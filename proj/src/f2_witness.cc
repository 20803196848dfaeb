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


#include "amenlab/f2_witness.hpp"

#include <stdexcept>

namespace amenlab {

namespace {

const Group& F2() {
  static const Group group = Group::Free(2);
  return group;
}

Element Power(int letter, int k) {
  return Element{std::vector<int32_t>(k, letter)};
}

bool DirectA(const Element& w) { return !w.data.empty() && w.data[0] < 2; }

}  // namespace

F2Set::F2Set(std::string name, Op op, int k,
             std::vector<std::shared_ptr<const F2Set>> args)
    : name_(std::move(name)), op_(op), k_(k), args_(std::move(args)) {}

F2Set F2Set::Named(std::string name) const {
  F2Set s = *this;
  s.name_ = std::move(name);
  return s;
}

F2Set F2Set::A() { return F2Set("A", Op::kA, 0, {}); }
F2Set F2Set::Zk(int k) {
  return F2Set("Z_" + std::to_string(k), Op::kZk, k, {});
}
F2Set F2Set::Z() { return Zk(0).Named("Z"); }

F2Set F2Set::Complement(const F2Set& s) {
  return F2Set("complement(" + s.name_ + ")", Op::kComplement, 0,
               {std::make_shared<const F2Set>(s)});
}
F2Set F2Set::Union(const F2Set& s, const F2Set& t) {
  return F2Set("union(" + s.name_ + "," + t.name_ + ")", Op::kUnion, 0,
               {std::make_shared<const F2Set>(s),
                std::make_shared<const F2Set>(t)});
}
F2Set F2Set::Intersection(const F2Set& s, const F2Set& t) {
  return F2Set("intersection(" + s.name_ + "," + t.name_ + ")",
               Op::kIntersection, 0,
               {std::make_shared<const F2Set>(s),
                std::make_shared<const F2Set>(t)});
}

F2Set F2Set::X() { return Union(A(), Complement(Z())).Named("X"); }
F2Set F2Set::XPrime() { return Intersection(A(), Z()).Named("X'"); }
F2Set F2Set::Y() { return Union(Complement(A()), Z()).Named("Y"); }
F2Set F2Set::YPrime() {
  return Intersection(Complement(A()), Complement(Z())).Named("Y'");
}

std::vector<F2Set> F2Set::Five() { return {X(), XPrime(), Y(), YPrime(), Z()}; }

bool F2Set::Contains(const Element& w) const {
  switch (op_) {
    case Op::kA: return DirectA(w);
    case Op::kZk: return H(w) > k_;
    case Op::kComplement: return !args_[0]->Contains(w);
    case Op::kUnion: return args_[0]->Contains(w) || args_[1]->Contains(w);
    case Op::kIntersection:
      return args_[0]->Contains(w) && args_[1]->Contains(w);
  }
  return false;
}

int H(const Element& w) {
  static constexpr int kValue[] = {1, -1, -1, 1};
  int h = 0;
  for (int32_t c : w.data) {
    if (c < 0 || c > 3) throw std::invalid_argument("not an F2 word");
    h += kValue[c];
  }
  return h;
}

void ForEachWord(int max_length,
                 const std::function<void(const Element&)>& f) {
  Element w;
  int len = 0;
  // Depth-first per length, so the visit order is shortlex.
  std::function<void()> level = [&]() {
    if (static_cast<int>(w.data.size()) == len) {
      f(w);
      return;
    }
    for (int32_t c = 0; c < 4; ++c) {
      if (!w.data.empty() && (w.data.back() ^ 1) == c) continue;
      w.data.push_back(c);
      level();
      w.data.pop_back();
    }
  };
  for (len = 0; len <= max_length; ++len) level();
}

bool IdentityReport::pass() const {
  for (const auto& r : results) {
    if (!r.pass()) return false;
  }
  return true;
}

namespace {

IdentityResult Pointwise(std::string name, int max_length,
                         const std::function<bool(const Element&)>& holds) {
  IdentityResult r;
  r.name = std::move(name);
  ForEachWord(max_length, [&](const Element& u) {
    ++r.checked;
    if (!holds(u)) {
      if (!r.first_failure) r.first_failure = u;
      ++r.failures;
    }
  });
  return r;
}

void CheckLength(int max_length) {
  if (max_length < 0) throw std::invalid_argument("length must be >= 0");
  if (max_length > kMaxWordLength) {
    throw CapExceeded("word length above " + std::to_string(kMaxWordLength));
  }
}

}  // namespace

IdentityResult VerifyTranslation(const Element& w, int max_length) {
  CheckLength(max_length);
  const Group& g = F2();
  const Element wi = g.Inverse(w);
  const F2Set z = F2Set::Z();
  const F2Set zh = F2Set::Zk(H(w));
  return Pointwise("wZ = Z_h(w)", max_length, [&](const Element& u) {
    return z.Contains(g.Multiply(wi, u)) == zh.Contains(u);
  });
}

IdentityReport VerifyIdentities(int max_length) {
  CheckLength(max_length);
  const F2Set a = F2Set::A(), z = F2Set::Z(), x = F2Set::X(),
              xp = F2Set::XPrime(), y = F2Set::Y(), yp = F2Set::YPrime();
  IdentityReport rep;
  rep.max_length = max_length;
  auto add = [&](std::string name, std::function<bool(const Element&)> f) {
    rep.results.push_back(Pointwise(std::move(name), max_length, f));
  };
  add("A symdiff Z^c = X' u Y'", [&](const Element& u) {
    return (a.Contains(u) != !z.Contains(u)) ==
           (xp.Contains(u) || yp.Contains(u));
  });
  add("A^c symdiff Z = X' u Y'", [&](const Element& u) {
    return (!a.Contains(u) != z.Contains(u)) ==
           (xp.Contains(u) || yp.Contains(u));
  });
  add("X' subset Z", [&](const Element& u) { return !xp.Contains(u) || z.Contains(u); });
  add("Z subset Y", [&](const Element& u) { return !z.Contains(u) || y.Contains(u); });
  add("Y' subset Z^c", [&](const Element& u) { return !yp.Contains(u) || !z.Contains(u); });
  add("Z^c subset X", [&](const Element& u) { return z.Contains(u) || x.Contains(u); });
  add("X = A u Z^c", [&](const Element& u) {
    return x.Contains(u) == (DirectA(u) || H(u) <= 0);
  });
  add("X' = A n Z", [&](const Element& u) {
    return xp.Contains(u) == (DirectA(u) && H(u) > 0);
  });
  add("Y = A^c u Z", [&](const Element& u) {
    return y.Contains(u) == (!DirectA(u) || H(u) > 0);
  });
  add("Y' = A^c n Z^c", [&](const Element& u) {
    return yp.Contains(u) == (!DirectA(u) && H(u) <= 0);
  });
  IdentityResult tr;
  tr.name = "wZ = Z_h(w) for w in B_3";
  for (const auto& w : Ball(F2(), 3)) {
    IdentityResult one = VerifyTranslation(w, std::max(max_length - 3, 0));
    tr.checked += one.checked;
    tr.failures += one.failures;
    if (!tr.first_failure && one.first_failure) tr.first_failure = one.first_failure;
  }
  rep.results.push_back(tr);
  return rep;
}

std::string_view TranslateFamilyName(TranslateFamily family) {
  switch (family) {
    case TranslateFamily::kAPowYPrime: return "a^k Y'";
    case TranslateFamily::kBPowXPrime: return "b^k X'";
    case TranslateFamily::kBPowA: return "b^k A";
    case TranslateFamily::kAPowAComplement: return "a^k A^c";
  }
  return "?";
}

IdentityResult VerifyDisjointPair(TranslateFamily family, int i, int j,
                                  int max_length) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative translate index");
  if (i == j) throw std::invalid_argument("translate indices must differ");
  CheckLength(max_length);
  int letter = 0;
  F2Set e = F2Set::A();
  switch (family) {
    case TranslateFamily::kAPowYPrime: letter = 0; e = F2Set::YPrime(); break;
    case TranslateFamily::kBPowXPrime: letter = 2; e = F2Set::XPrime(); break;
    case TranslateFamily::kBPowA: letter = 2; e = F2Set::A(); break;
    case TranslateFamily::kAPowAComplement:
      letter = 0;
      e = F2Set::Complement(F2Set::A());
      break;
  }
  const Group& g = F2();
  // (g^i E)(u) = E(g^-i u).
  const Element gi = Power(letter ^ 1, i), gj = Power(letter ^ 1, j);
  return Pointwise(std::string(TranslateFamilyName(family)) + " i=" +
                       std::to_string(i) + " j=" + std::to_string(j),
                   max_length, [&](const Element& u) {
                     return !(e.Contains(g.Multiply(gi, u)) &&
                              e.Contains(g.Multiply(gj, u)));
                   });
}

IdentityReport VerifyDisjointTranslates(int count, int max_length) {
  if (count < 0) throw std::invalid_argument("count must be >= 0");
  if (count > kMaxTranslates) {
    throw CapExceeded("translate count above " + std::to_string(kMaxTranslates));
  }
  CheckLength(max_length);
  IdentityReport rep;
  rep.max_length = max_length;
  for (TranslateFamily f : kTranslateFamilies) {
    IdentityResult agg;
    agg.name = std::string(TranslateFamilyName(f)) + " pairwise disjoint, k < " +
               std::to_string(count);
    for (int i = 0; i < count; ++i) {
      for (int j = i + 1; j < count; ++j) {
        IdentityResult one = VerifyDisjointPair(f, i, j, max_length);
        agg.checked += one.checked;
        agg.failures += one.failures;
        if (!agg.first_failure && one.first_failure) {
          agg.first_failure = one.first_failure;
        }
      }
    }
    rep.results.push_back(agg);
  }
  return rep;
}

namespace {

struct InvarianceRows {
  ElementSet support;
  std::vector<Element> translates;
  std::vector<std::vector<std::pair<int, Rational>>> rows;
};

InvarianceRows BuildRows(int count, int radius, size_t ball_cap) {
  if (count < 2) throw std::invalid_argument("K must be >= 2");
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  const Group& g = F2();
  InvarianceRows out;
  out.support = Ball(g, radius, ball_cap);
  for (int letter : {0, 2}) {
    for (int k = 1; k < count; ++k) out.translates.push_back(Power(letter, k));
  }
  const auto five = F2Set::Five();
  for (const auto& e : five) {
    std::vector<char> base(out.support.size());
    for (size_t j = 0; j < out.support.size(); ++j) base[j] = e.Contains(out.support[j]);
    for (const auto& w : out.translates) {
      // nu(w^-1 E) - nu(E) = sum_x nu(x) (1[wx in E] - 1[x in E]).
      std::vector<std::pair<int, Rational>> row;
      for (size_t j = 0; j < out.support.size(); ++j) {
        const int d = int(e.Contains(g.Multiply(w, out.support[j]))) - base[j];
        if (d != 0) row.emplace_back(static_cast<int>(j), Rational(d));
      }
      if (!row.empty()) out.rows.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace

InvarianceSystem SimultaneousInvarianceSystem(int count, const Rational& delta,
                                              int radius, size_t ball_cap) {
  if (delta < 0) throw std::invalid_argument("delta must be >= 0");
  InvarianceRows rows = BuildRows(count, radius, ball_cap);
  const int n = static_cast<int>(rows.support.size());
  InvarianceSystem out;
  out.count = count;
  out.delta = delta;
  out.radius = radius;
  out.support = rows.support;
  out.translates = rows.translates;
  out.system = LinearSystem(n);
  std::vector<std::pair<int, Rational>> sum;
  for (int j = 0; j < n; ++j) sum.emplace_back(j, Rational(1));
  out.system.AddSparseRow(sum, Relation::kEqual, Rational(1));
  for (const auto& row : rows.rows) {
    out.system.AddSparseRow(row, Relation::kLessEqual, delta);
    out.system.AddSparseRow(row, Relation::kGreaterEqual, -delta);
  }
  return out;
}

FeasibilityOutcome SimultaneousInvariance(const InvarianceSystem& sys) {
  return SolveFeasibility(sys.system);
}

Rational MinimalInvarianceError(int count, int radius, size_t ball_cap) {
  InvarianceRows rows = BuildRows(count, radius, ball_cap);
  const int n = static_cast<int>(rows.support.size());
  LinearSystem sys(n + 1);
  std::vector<std::pair<int, Rational>> sum;
  for (int j = 0; j < n; ++j) sum.emplace_back(j, Rational(1));
  sys.AddSparseRow(sum, Relation::kEqual, Rational(1));
  for (auto row : rows.rows) {
    row.emplace_back(n, Rational(-1));
    sys.AddSparseRow(row, Relation::kLessEqual, Rational(0));
    row.back().second = 1;
    sys.AddSparseRow(row, Relation::kGreaterEqual, Rational(0));
  }
  std::vector<Rational> obj(n + 1);
  obj[n] = 1;
  sys.SetObjective(obj, Sense::kMinimize);
  OptimizationOutcome out = Optimize(sys);
  if (out.status != OptimizationStatus::kOptimal) {
    throw std::logic_error("invariance error LP is feasible and bounded");
  }
  return out.optimum.value;
}

ThresholdSearch BisectInvarianceThreshold(int count, int radius,
                                          const Rational& tolerance,
                                          size_t ball_cap) {
  if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
  auto solve = [&](const Rational& d) {
    return SimultaneousInvariance(
        SimultaneousInvarianceSystem(count, d, radius, ball_cap));
  };
  ThresholdSearch s;
  s.lo = 0;
  s.hi = 1;
  s.at_lo = solve(s.lo);
  if (s.at_lo.feasible) {
    throw PreconditionFailure("already feasible at delta = 0");
  }
  s.at_hi = solve(s.hi);
  if (!s.at_hi.feasible) {
    throw std::logic_error("invariance system is feasible at delta = 1");
  }
  while (s.hi - s.lo > tolerance) {
    const Rational mid = (s.lo + s.hi) / 2;
    FeasibilityOutcome out = solve(mid);
    ++s.steps;
    if (out.feasible) {
      s.hi = mid;
      s.at_hi = std::move(out);
    } else {
      s.lo = mid;
      s.at_lo = std::move(out);
    }
  }
  return s;
}

}  // namespace amenlab
