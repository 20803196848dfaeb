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


#include "amenlab/ramsey.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <stdexcept>

namespace amenlab {

ElementSet Interior(const Group& group, const ElementSet& a,
                    const ElementSet& b) {
  std::vector<Element> c;
  for (const auto& x : b) {
    bool inside = true;
    for (const auto& s : a) {
      if (!b.contains(group.Multiply(s, x))) {
        inside = false;
        break;
      }
    }
    if (inside) c.push_back(x);
  }
  return ElementSet(std::move(c));
}

std::string_view MethodName(RamseyMethod method) {
  return method == RamseyMethod::kDirect ? "direct" : "pictures";
}

std::string_view ReasonName(NotRamseyReason reason) {
  switch (reason) {
    case NotRamseyReason::kNone: return "none";
    case NotRamseyReason::kEmptyInterior: return "empty_interior";
    case NotRamseyReason::kCounterexample: return "counterexample";
  }
  return "?";
}

std::string_view FunctionStatusName(FunctionStatus status) {
  switch (status) {
    case FunctionStatus::kFound: return "found";
    case FunctionStatus::kExhausted: return "exhausted";
    case FunctionStatus::kCapExceeded: return "cap_exceeded";
  }
  return "?";
}

RamseyOptions DefaultRamseyOptions() {
  RamseyOptions o;
  o.cap = DefaultCap(24);
  return o;
}

std::vector<Rational> TranslateMasses(const Group& group, const ElementSet& a,
                                      const RationalMeasure& nu,
                                      const ElementPredicate& in_e) {
  std::vector<Rational> out;
  out.reserve(a.size());
  for (const auto& s : a) {
    Rational m = 0;
    for (const auto& [x, p] : nu.weights()) {
      if (in_e(group.Multiply(s, x))) m += p;
    }
    out.push_back(m);
  }
  return out;
}

Rational TranslateGap(const Group& group, const ElementSet& a,
                      const RationalMeasure& nu, const ElementPredicate& in_e) {
  std::vector<Rational> m = TranslateMasses(group, a, nu, in_e);
  if (m.empty()) return 0;
  auto [lo, hi] = std::minmax_element(m.begin(), m.end());
  return *hi - *lo;
}

LinearSystem RamseySystem(const Group& group, const ElementSet& a,
                          const ElementSet& c, const ElementPredicate& in_e,
                          const Rational& eps) {
  if (c.empty()) throw std::invalid_argument("empty interior");
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  const int k = static_cast<int>(c.size());
  LinearSystem sys(k + 1);
  std::vector<std::pair<int, Rational>> sum;
  for (int j = 0; j < k; ++j) sum.emplace_back(j, Rational(1));
  sys.AddSparseRow(sum, Relation::kEqual, Rational(1));
  for (const auto& s : a) {
    std::vector<std::pair<int, Rational>> row;
    for (int j = 0; j < k; ++j) {
      if (in_e(group.Multiply(s, c[j]))) row.emplace_back(j, Rational(1));
    }
    row.emplace_back(k, Rational(-1));
    sys.AddSparseRow(row, Relation::kGreaterEqual, Rational(0));
    sys.AddSparseRow(row, Relation::kLessEqual, eps);
  }
  return sys;
}

namespace {

RationalMeasure MeasureOnInterior(const ElementSet& c,
                                  const std::vector<Rational>& point) {
  RationalMeasure::WeightMap w;
  for (size_t j = 0; j < c.size(); ++j) {
    if (point[j] != 0) w[c[j]] = point[j];
  }
  return RationalMeasure::FromWeights(std::move(w));
}

ElementPredicate InSet(const ElementSet& e) {
  return [e](const Element& x) { return e.contains(x); };
}

ElementSet MaskToSet(const ElementSet& ground, Mask m) {
  std::vector<Element> out;
  for (size_t i = 0; i < ground.size(); ++i) {
    if (m >> i & 1) out.push_back(ground[i]);
  }
  return ElementSet(std::move(out));
}

// Witnesses found without solving: an empty or full member alone, two or
// three members at equal weight whose gap is within eps, or a cached witness whose support lies in
// the family. Each is an exact witness for `family`.
class QuickBalance {
 public:
  explicit QuickBalance(const Rational& eps) : eps2_(eps * 2), eps3_(eps * 3) {}

  std::optional<BalanceWitness> Try(const SetFamily& family) {
    const auto& m = family.members();
    const Mask full = family.full_mask();
    auto at = [&](Mask x) -> std::optional<size_t> {
      auto j = std::lower_bound(m.begin(), m.end(), x);
      if (j == m.end() || *j != x) return std::nullopt;
      return j - m.begin();
    };
    std::vector<Rational> w(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0 || m[i] == full) {  // gap 0
        w[i] = 1;
        return MakeBalanceWitness(family, std::move(w));
      }
    }
    // Equal weights on two or three members: v takes values count/r, so the
    // gap is (most - fewest) / r, read off bitwise.
    const size_t k = m.size();
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = i + 1; j < k; ++j) {
        const Mask ge1 = m[i] | m[j], ge2 = m[i] & m[j];
        if (Spread(full, ge1, ge2, 0) <= eps2_) {
          w[i] = w[j] = Rational(1, 2);
          return MakeBalanceWitness(family, std::move(w));
        }
      }
    }
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = i + 1; j < k; ++j) {
        for (size_t l = j + 1; l < k; ++l) {
          const Mask ge1 = m[i] | m[j] | m[l];
          const Mask ge2 = (m[i] & m[j]) | (m[i] & m[l]) | (m[j] & m[l]);
          const Mask ge3 = m[i] & m[j] & m[l];
          if (Spread(full, ge1, ge2, ge3) <= eps3_) {
            w[i] = w[j] = w[l] = Rational(1, 3);
            return MakeBalanceWitness(family, std::move(w));
          }
        }
      }
    }
    for (auto it = cache_.begin(); it != cache_.end(); ++it) {
      std::vector<size_t> pos;
      for (Mask x : it->first) {
        auto p = at(x);
        if (!p) break;
        pos.push_back(*p);
      }
      if (pos.size() != it->first.size()) continue;
      for (size_t k = 0; k < pos.size(); ++k) w[pos[k]] = it->second[k];
      cache_.splice(cache_.begin(), cache_, it);
      return MakeBalanceWitness(family, std::move(w));
    }
    return std::nullopt;
  }

  void Remember(const SetFamily& family, const BalanceWitness& w) {
    std::vector<Mask> support;
    std::vector<Rational> weights;
    for (size_t i = 0; i < w.weights.size(); ++i) {
      if (w.weights[i] != 0) {
        support.push_back(family.members()[i]);
        weights.push_back(w.weights[i]);
      }
    }
    cache_.emplace_front(std::move(support), std::move(weights));
    if (cache_.size() > kCacheSize) cache_.pop_back();
  }

 private:
  // Largest minus smallest count, given the elements covered at least
  // once, twice and three times.
  static int Spread(Mask full, Mask ge1, Mask ge2, Mask ge3) {
    const int most = ge3 ? 3 : ge2 ? 2 : ge1 ? 1 : 0;
    const int fewest = (full & ~ge1) ? 0 : (full & ~ge2) ? 1 : (full & ~ge3) ? 2 : 3;
    return most - fewest;
  }

  static constexpr size_t kCacheSize = 256;
  Rational eps2_, eps3_;
  std::list<std::pair<std::vector<Mask>, std::vector<Rational>>> cache_;
};

// Family of pictures {a : a c in E} over the interior, window order on A.
SetFamily InteriorFamily(const Group& group, const ElementSet& a,
                         const ElementSet& c, const ElementPredicate& in_e) {
  PictureContext ctx(group, a, in_e);
  return RealizedFamily(ctx, c);
}

}  // namespace

bool CheckSubset(const Group& group, const ElementSet& a, const ElementSet& c,
                 const ElementPredicate& in_e, const Rational& eps,
                 RamseyMethod method, RationalMeasure* nu,
                 std::vector<Rational>* farkas) {
  if (method == RamseyMethod::kDirect) {
    FeasibilityOutcome out =
        SolveFeasibility(RamseySystem(group, a, c, in_e, eps));
    if (out.feasible) {
      if (nu) *nu = MeasureOnInterior(c, out.point);
    } else if (farkas) {
      *farkas = std::move(out.farkas);
    }
    return out.feasible;
  }
  PictureContext ctx(group, a, in_e);
  SetFamily family = RealizedFamily(ctx, c);
  auto w = IsEpsilonBalanced(family, eps, farkas);
  if (w && nu) *nu = MeasureFromBalance(ctx, c, family, *w);
  return w.has_value();
}

RamseyVerdict IsEpsilonRamsey(const Group& group, const ElementSet& a,
                              const ElementSet& b, const Rational& eps,
                              RamseyMethod method,
                              const RamseyOptions& options) {
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  if (a.empty()) throw std::invalid_argument("window A is empty");
  RamseyVerdict v;
  v.method = method;
  v.a = a;
  v.b = b;
  v.eps = eps;
  v.witnesses_elided = !options.keep_witnesses;
  v.c = Interior(group, a, b);
  if (v.c.empty()) {
    v.reason = NotRamseyReason::kEmptyInterior;
    return v;
  }
  v.ac = ProductSet(group, a, v.c);
  const int n = static_cast<int>(v.ac.size());

  auto fail = [&](const ElementSet& e, std::vector<Rational> farkas) {
    v.ramsey = false;
    v.reason = NotRamseyReason::kCounterexample;
    v.counterexample = e;
    v.farkas = std::move(farkas);
    v.measures.clear();
    v.families.clear();
    if (method == RamseyMethod::kPictures && eps == 0) {
      v.unbalance = FindUnbalanceWitness(InteriorFamily(group, a, v.c, InSet(e)));
    }
  };

  if (n > options.cap || n >= kMaxGround) {
    if (options.pool_fallback) {
      for (const SetSpec& spec : CandidatePool(group, options.pool_radius)) {
        ElementPredicate pred = Compile(group, spec);
        std::vector<Element> pick;
        for (const auto& x : v.ac) {
          if (pred(x)) pick.push_back(x);
        }
        ElementSet e(std::move(pick));
        ++v.subsets_checked;
        std::vector<Rational> farkas;
        if (!CheckSubset(group, a, v.c, InSet(e), eps, method, nullptr,
                         &farkas)) {
          fail(e, std::move(farkas));
          v.minimal = false;
          v.counterexample_spec = spec;
          return v;
        }
      }
    }
    throw CapExceeded("|A.C| = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(options.cap));
  }

  // index[s][j]: bit of s * c_j inside A.C.
  std::vector<std::vector<int>> index(a.size(), std::vector<int>(v.c.size()));
  for (size_t s = 0; s < a.size(); ++s) {
    for (size_t j = 0; j < v.c.size(); ++j) {
      index[s][j] =
          static_cast<int>(*v.ac.index_of(group.Multiply(a[s], v.c[j])));
    }
  }
  std::map<std::vector<Mask>, size_t> seen_families;
  const std::vector<std::string> labels = WindowLabels(group, a);
  QuickBalance quick(eps);
  const Mask limit = Mask{1} << n;
  for (Mask e = 0; e < limit; ++e) {
    ++v.subsets_checked;
    auto in_e = [&](const Element& x) {
      auto i = v.ac.index_of(x);
      return i && (e >> *i & 1);
    };
    if (method == RamseyMethod::kDirect) {
      RationalMeasure nu;
      std::vector<Rational> farkas;
      if (!CheckSubset(group, a, v.c, in_e, eps, method, &nu, &farkas)) {
        fail(MaskToSet(v.ac, e), std::move(farkas));
        return v;
      }
      if (options.keep_witnesses) v.measures.push_back({e, std::move(nu)});
      continue;
    }
    std::vector<Mask> pics;
    pics.reserve(v.c.size());
    for (size_t j = 0; j < v.c.size(); ++j) {
      Mask p = 0;
      for (size_t s = 0; s < a.size(); ++s) {
        if (e >> index[s][j] & 1) p |= Mask{1} << s;
      }
      pics.push_back(p);
    }
    std::sort(pics.begin(), pics.end());
    pics.erase(std::unique(pics.begin(), pics.end()), pics.end());
    if (seen_families.count(pics)) continue;
    SetFamily family(labels, pics);
    std::vector<Rational> farkas;
    auto w = quick.Try(family);
    if (!w) {
      w = IsEpsilonBalanced(family, eps, &farkas);
      if (w) quick.Remember(family, *w);
    }
    if (!w) {
      fail(MaskToSet(v.ac, e), std::move(farkas));
      return v;
    }
    seen_families.emplace(pics, v.families.size());
    if (options.keep_witnesses) {
      v.families.push_back({std::move(family), std::move(*w)});
    } else {
      v.families.emplace_back();  // placeholder keeps indices stable
    }
  }
  if (!options.keep_witnesses) v.families.clear();
  v.ramsey = true;
  return v;
}

bool VerifyRamseyVerdict(const Group& group, const RamseyVerdict& v) {
  if (v.eps < 0 || v.a.empty()) return false;
  if (!(Interior(group, v.a, v.b) == v.c)) return false;
  if (v.c.empty()) {
    return !v.ramsey && v.reason == NotRamseyReason::kEmptyInterior;
  }
  if (!(ProductSet(group, v.a, v.c) == v.ac)) return false;
  if (!v.ramsey) {
    if (v.reason != NotRamseyReason::kCounterexample) return false;
    if (!v.counterexample.is_subset_of(v.ac)) return false;
    const ElementPredicate in_e = InSet(v.counterexample);
    if (v.method == RamseyMethod::kDirect) {
      return VerifyFarkas(RamseySystem(group, v.a, v.c, in_e, v.eps),
                          v.farkas);
    }
    SetFamily family = InteriorFamily(group, v.a, v.c, in_e);
    if (!VerifyFarkas(EpsilonBalanceSystem(family, v.eps), v.farkas)) {
      return false;
    }
    return !v.unbalance || VerifyUnbalanceWitness(family, *v.unbalance);
  }
  if (v.reason != NotRamseyReason::kNone) return false;
  if (v.witnesses_elided) return true;
  if (v.ac.size() >= kMaxGround) return false;
  const Mask limit = Mask{1} << v.ac.size();
  if (v.method == RamseyMethod::kDirect) {
    if (v.measures.size() != limit) return false;
    for (Mask e = 0; e < limit; ++e) {
      const auto& w = v.measures[e];
      if (w.e != e || !w.nu.support().is_subset_of(v.c)) return false;
      if (TranslateGap(group, v.a, w.nu, InSet(MaskToSet(v.ac, e))) > v.eps) {
        return false;
      }
    }
    return true;
  }
  std::map<std::vector<Mask>, const RamseyFamilyWitness*> by_family;
  for (const auto& w : v.families) {
    if (!VerifyBalanceWitness(w.family, w.witness, v.eps)) return false;
    by_family[w.family.members()] = &w;
  }
  for (Mask e = 0; e < limit; ++e) {
    SetFamily family =
        InteriorFamily(group, v.a, v.c, InSet(MaskToSet(v.ac, e)));
    if (!by_family.count(family.members())) return false;
  }
  return true;
}

RamseyFunctionResult RamseyFunction(const Group& group, int m,
                                    const Rational& eps, int n_max,
                                    RamseyMethod method,
                                    RamseyOptions options) {
  if (m < 0 || n_max < 0) throw std::invalid_argument("radii must be >= 0");
  options.keep_witnesses = false;
  RamseyFunctionResult result;
  const ElementSet a = Ball(group, m);
  for (int n = 0; n <= n_max; ++n) {
    RamseyFunctionRow row;
    row.n = n;
    try {
      RamseyVerdict v =
          IsEpsilonRamsey(group, a, Ball(group, n), eps, method, options);
      row.ramsey = v.ramsey;
      row.reason = v.reason;
      row.minimal = v.minimal;
    } catch (const CapExceeded&) {
      row.cap_exceeded = true;
      result.rows.push_back(row);
      result.status = FunctionStatus::kCapExceeded;
      return result;
    }
    result.rows.push_back(row);
    if (row.ramsey) {
      result.status = FunctionStatus::kFound;
      result.value = n;
      return result;
    }
  }
  result.status = FunctionStatus::kExhausted;
  return result;
}

Rational FunctionGap(const Group& group, const ElementSet& a,
                     const RationalMeasure& nu, const ElementFunction& f) {
  std::optional<Rational> lo, hi;
  for (const auto& g : a) {
    Rational s = 0;
    for (const auto& [x, p] : nu.weights()) s += p * f(group.Multiply(g, x));
    if (!lo || s < *lo) lo = s;
    if (!hi || s > *hi) hi = s;
  }
  return lo ? *hi - *lo : Rational(0);
}

namespace {

ElementFunction Lookup(const std::map<Element, Rational>& f) {
  return [&f](const Element& x) {
    auto it = f.find(x);
    if (it == f.end()) throw std::invalid_argument("function undefined");
    return it->second;
  };
}

}  // namespace

RationalMeasure BinaryToUnit(const Group& group, const ElementSet& a,
                             const ElementSet& b,
                             const std::map<Element, Rational>& f) {
  std::vector<Element> e;
  for (const auto& x : b) {
    auto it = f.find(x);
    if (it == f.end()) throw std::invalid_argument("f undefined on B");
    if (it->second < 0 || it->second > 1) {
      throw std::invalid_argument("f must take values in [0,1]");
    }
    if (it->second >= Rational(1, 2)) e.push_back(x);
  }
  const ElementSet c = Interior(group, a, b);
  if (c.empty()) throw PreconditionFailure("B has empty interior");
  RationalMeasure nu;
  if (!CheckSubset(group, a, c, InSet(ElementSet(std::move(e))),
                   Rational(1, 2), RamseyMethod::kDirect, &nu, nullptr)) {
    throw PreconditionFailure("B is not 1/2-Ramsey for E = {f >= 1/2}");
  }
  if (FunctionGap(group, a, nu, Lookup(f)) > Rational(3, 4)) {
    throw std::logic_error("binary-to-unit gap exceeds 3/4");
  }
  return nu;
}

int BoostSteps(const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  int n = 0;
  Rational p = 1;
  while (p > eps) {
    p *= Rational(3, 4);
    ++n;
  }
  return n;
}

StepOracle BinaryToUnitOracle(const Group& group) {
  return [group](int, const ElementSet& from, const ElementSet& to,
                 const std::map<Element, Rational>& f) {
    return BinaryToUnit(group, from, to, f);
  };
}

BoostResult Boost(const Group& group, const std::vector<ElementSet>& windows,
                  const Rational& eps, const ElementFunction& f,
                  const StepOracle& oracle, int max_steps) {
  const int n = BoostSteps(eps);
  if (n > max_steps) {
    throw std::invalid_argument("eps needs " + std::to_string(n) +
                                " steps, more than max_steps");
  }
  if (static_cast<int>(windows.size()) < n + 1) {
    throw std::invalid_argument("need " + std::to_string(n + 1) + " windows");
  }
  for (int i = 0; i < n; ++i) {
    if (!Union(windows[i], ProductSet(group, windows[i], windows[i]))
             .is_subset_of(windows[i + 1])) {
      throw std::invalid_argument("window " + std::to_string(i + 1) +
                                  " does not contain B u B.B");
    }
  }
  const Rational q(3, 4);
  BoostResult result;
  result.steps = n;
  result.chain.resize(n, RationalMeasure::PointMass(group.Identity()));
  result.step_gaps.resize(n);
  RationalMeasure tail = RationalMeasure::PointMass(group.Identity());
  for (int i = n - 1; i >= 0; --i) {
    const ElementSet& from = windows[i];
    const ElementSet& to = windows[i + 1];
    std::map<Element, Rational> phi;
    for (const auto& g : to) {
      Rational s = 0;
      for (const auto& [x, p] : tail.weights()) s += p * f(group.Multiply(g, x));
      phi[g] = s;
    }
    Rational lo = phi.begin()->second;
    for (const auto& [g, s] : phi) lo = std::min(lo, s);
    const Rational scale = Pow(1 / q, n - i - 1);
    std::map<Element, Rational> fi;
    for (const auto& [g, s] : phi) {
      Rational v = i == n - 1 ? s : scale * (s - lo);
      if (v < 0 || v > 1) {
        throw std::logic_error("step function left [0,1] at step " +
                               std::to_string(i));
      }
      fi[g] = v;
    }
    RationalMeasure nu;
    try {
      nu = oracle(i, from, to, fi);
    } catch (const std::exception& ex) {
      throw PreconditionFailure("step oracle failed at step " +
                                std::to_string(i) + ": " + ex.what());
    }
    if (!nu.support().is_subset_of(Interior(group, from, to)) ||
        FunctionGap(group, from, nu, Lookup(fi)) > q) {
      throw PreconditionFailure("step oracle returned an invalid measure at "
                                "step " + std::to_string(i));
    }
    tail = Convolve(group, nu, tail);
    result.chain[i] = std::move(nu);
    result.step_gaps[i] = FunctionGap(group, from, tail, f);
    if (result.step_gaps[i] > Pow(q, n - i)) {
      throw std::logic_error("boost contraction failed at step " +
                             std::to_string(i));
    }
  }
  result.composed = std::move(tail);
  result.gap = FunctionGap(group, windows[0], result.composed, f);
  if (result.gap > eps) throw std::logic_error("boost missed eps");
  return result;
}

std::vector<ElementSet> TripledBalls(const Group& group, int r0, int count) {
  std::vector<ElementSet> out;
  int r = r0;
  for (int i = 0; i < count; ++i) {
    out.push_back(Ball(group, r));
    r *= 3;
  }
  return out;
}

}  // namespace amenlab
