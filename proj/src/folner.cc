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


#include "amenlab/folner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "amenlab/lp.hpp"

namespace amenlab {

FolnerReport IsEpsilonFolner(const Group& group, const ElementSet& a,
                             const ElementSet& b, const Rational& eps) {
  if (b.empty()) throw std::invalid_argument("B is empty");
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  FolnerReport r;
  r.a = a;
  r.b = b;
  r.eps = eps;
  for (const auto& s : a) {
    int64_t inside = 0;
    for (const auto& x : b) inside += b.contains(group.Multiply(s, x));
    const int64_t d = 2 * (static_cast<int64_t>(b.size()) - inside);
    r.counts.push_back(d);
    r.total += d;
  }
  r.threshold = eps * static_cast<long>(b.size());
  r.folner = r.total <= r.threshold;
  return r;
}

namespace {

size_t GroupOrder(const Group& group) {
  return group.kind() == GroupKind::kCyclic
             ? static_cast<size_t>(group.rank_or_order())
             : group.table().size();
}

}  // namespace

FolnerSearchResult FolnerFunction(const Group& group, int k,
                                  const ElementSet& window, uint64_t cap) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const Element e = group.Identity();
  if (!window.contains(e)) {
    throw std::invalid_argument("window must contain the identity");
  }
  const bool abelian = group.kind() == GroupKind::kFreeAbelian;
  std::vector<Element> others;
  for (const auto& x : window) {
    if (x == e || (abelian && x < e)) continue;
    others.push_back(x);
  }
  if (others.size() >= 63 || (uint64_t{1} << others.size()) > cap) {
    throw CapExceeded("Folner window has too many candidate subsets");
  }
  // Index 0 is the identity, then `others`.
  std::vector<Element> pts{e};
  pts.insert(pts.end(), others.begin(), others.end());
  std::map<Element, int> where;
  for (size_t i = 0; i < pts.size(); ++i) where[pts[i]] = static_cast<int>(i);
  const auto& gens = group.Generators();
  std::vector<std::vector<int>> step(gens.size(), std::vector<int>(pts.size()));
  for (size_t s = 0; s < gens.size(); ++s) {
    for (size_t i = 0; i < pts.size(); ++i) {
      auto it = where.find(group.Multiply(gens[s], pts[i]));
      step[s][i] = it == where.end() ? -1 : it->second;
    }
  }

  FolnerSearchResult r;
  r.k = k;
  const int m = static_cast<int>(others.size());
  std::vector<int> chosen;
  std::vector<char> in(pts.size(), 0);
  in[0] = 1;
  std::function<bool(int, int)> pick = [&](int start, int left) -> bool {
    if (left == 0) {
      ++r.candidates;
      const int64_t size = static_cast<int64_t>(chosen.size()) + 1;
      int64_t boundary = 0;
      for (size_t s = 0; s < gens.size(); ++s) {
        int64_t stay = 0;
        for (size_t i = 0; i < pts.size(); ++i) {
          if (in[i] && step[s][i] >= 0 && in[step[s][i]]) ++stay;
        }
        boundary += 2 * (size - stay);
      }
      return boundary * k <= size;
    }
    for (int j = start; j + left <= m; ++j) {
      chosen.push_back(j);
      in[j + 1] = 1;
      if (pick(j + 1, left - 1)) return true;
      in[j + 1] = 0;
      chosen.pop_back();
    }
    return false;
  };
  for (int size = 1; size <= m + 1; ++size) {
    if (pick(0, size - 1)) {
      std::vector<Element> b{e};
      for (int j : chosen) b.push_back(others[j]);
      r.found = true;
      r.set = ElementSet(std::move(b));
      break;
    }
  }
  if (!r.found) return r;
  if (group.is_finite()) {
    r.exact = window.size() == GroupOrder(group);
  } else if (abelian && group.rank_or_order() == 1) {
    r.exact = true;
    for (int i = 0; i < static_cast<int>(r.set.size()); ++i) {
      if (!window.contains(Element{{i}})) r.exact = false;
    }
  }
  return r;
}

Rational TranslationDefect(const Group& group, const ElementSet& a,
                           const RationalMeasure& nu) {
  Rational total = 0;
  for (const auto& g : a) {
    RationalMeasure moved = TranslateMeasure(group, g, nu);
    std::map<Element, Rational> diff;
    for (const auto& [x, p] : moved.weights()) diff[x] += p;
    for (const auto& [x, p] : nu.weights()) diff[x] -= p;
    for (const auto& [x, d] : diff) total += Abs(d);
  }
  return total;
}

std::optional<WeightedFolnerValue> WeightedFolner(const Group& group, int m,
                                                  int n, int ball_cap) {
  if (m < 0 || n < 0) throw std::invalid_argument("radii must be >= 0");
  const ElementSet bm = Ball(group, m);
  const ElementSet bn = Ball(group, n, static_cast<size_t>(ball_cap));
  const ElementSet c = Interior(group, bm, bn);
  if (c.empty()) return std::nullopt;
  const int k = static_cast<int>(c.size());
  // Terms (g nu - nu)(x) = nu(g^-1 x) - nu(x) for x in C u gC.
  struct Term {
    int plus, minus;
  };
  std::vector<Term> terms;
  for (const auto& g : bm) {
    if (g == group.Identity()) continue;
    const Element gi = group.Inverse(g);
    const ElementSet touched = Union(c, TranslateSet(group, g, c));
    for (const auto& x : touched) {
      auto p = c.index_of(group.Multiply(gi, x));
      auto q = c.index_of(x);
      terms.push_back({p ? static_cast<int>(*p) : -1,
                       q ? static_cast<int>(*q) : -1});
    }
  }
  const int nt = static_cast<int>(terms.size());
  LinearSystem sys(k + nt);
  std::vector<std::pair<int, Rational>> sum;
  for (int j = 0; j < k; ++j) sum.emplace_back(j, Rational(1));
  sys.AddSparseRow(sum, Relation::kEqual, Rational(1));
  for (int i = 0; i < nt; ++i) {
    for (int sign : {1, -1}) {
      std::vector<std::pair<int, Rational>> row{{k + i, Rational(1)}};
      if (terms[i].plus >= 0) row.emplace_back(terms[i].plus, Rational(-sign));
      if (terms[i].minus >= 0) row.emplace_back(terms[i].minus, Rational(sign));
      sys.AddSparseRow(row, Relation::kGreaterEqual, Rational(0));
    }
  }
  std::vector<Rational> obj(k + nt);
  for (int i = 0; i < nt; ++i) obj[k + i] = 1;
  sys.SetObjective(obj, Sense::kMinimize);
  OptimizationOutcome out = Optimize(sys);
  if (out.status != OptimizationStatus::kOptimal) {
    throw std::logic_error("weighted Folner LP is feasible and bounded");
  }
  RationalMeasure::WeightMap w;
  for (int j = 0; j < k; ++j) {
    if (out.optimum.point[j] != 0) w[c[j]] = out.optimum.point[j];
  }
  WeightedFolnerValue v;
  v.m = m;
  v.n = n;
  v.value = out.optimum.value;
  v.nu = RationalMeasure::FromWeights(std::move(w));
  if (TranslationDefect(group, bm, v.nu) != v.value) {
    throw std::logic_error("weighted Folner value does not recompute");
  }
  return v;
}

WeightedFolnerFunction WeightedFolnerSearch(const Group& group, int m,
                                            const Rational& eps, int n_max,
                                            int ball_cap) {
  WeightedFolnerFunction r;
  for (int n = 0; n <= n_max; ++n) {
    std::optional<WeightedFolnerValue> v;
    try {
      v = WeightedFolner(group, m, n, ball_cap);
    } catch (const CapExceeded&) {
      r.status = FunctionStatus::kCapExceeded;
      return r;
    }
    r.values.push_back(v ? std::optional<Rational>(v->value) : std::nullopt);
    if (v && v->value <= eps) {
      r.status = FunctionStatus::kFound;
      r.value = n;
      return r;
    }
  }
  r.status = FunctionStatus::kExhausted;
  return r;
}

ElementSet FolnerFromWeighted(const Group& group, const RationalMeasure& nu,
                              const ElementSet& a, const Rational& eps) {
  if (TranslationDefect(group, a, nu) > eps) {
    throw PreconditionFailure("translation defect of nu exceeds eps");
  }
  std::vector<Rational> levels;
  for (const auto& [x, p] : nu.weights()) levels.push_back(p);
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (const auto& t : levels) {
    std::vector<Element> set;
    for (const auto& [x, p] : nu.weights()) {
      if (p >= t) set.push_back(x);
    }
    ElementSet b(std::move(set));
    if (IsEpsilonFolner(group, a, b, eps).folner) return b;
  }
  throw std::logic_error("no level set is Folner despite the defect bound");
}

std::string_view CheckStatusName(CheckStatus status) {
  switch (status) {
    case CheckStatus::kHolds: return "holds";
    case CheckStatus::kViolated: return "violated";
    case CheckStatus::kUntested: return "untested";
  }
  return "?";
}

bool HarnessReport::ok() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kViolated) return false;
  }
  return true;
}

namespace {

ElementSet FolnerWindow(const Group& group, int radius) {
  if (group.is_finite()) return Ball(group, static_cast<int>(GroupOrder(group)));
  if (group.kind() == GroupKind::kFreeAbelian && group.rank_or_order() == 1) {
    return Ball(group, radius);
  }
  return Ball(group, std::min(radius, 2));
}

// Least p with (3/4)^p < bound.
int StrictSteps(const Rational& bound) {
  int p = 0;
  Rational q = 1;
  while (q >= bound) {
    q *= Rational(3, 4);
    ++p;
  }
  return p;
}

std::string EpsText(const Rational& eps) { return FormatRational(eps); }

struct Context {
  const Group& group;
  const HarnessOptions& options;
  HarnessReport report;
  std::map<int, std::vector<std::optional<Rational>>> fstar;  // by m
  std::map<int, bool> fstar_capped;
  std::map<std::pair<int, Rational>, std::pair<int, bool>> fvalues;
  std::map<std::pair<int, Rational>, RamseyFunctionResult> ramsey;
  bool partial = false;  // last Iterate stopped early

  // Appends F*(m, n) up to n = upto, stopping at the cap.
  void ExtendFStar(int m, int upto) {
    auto& values = fstar[m];
    if (fstar_capped[m]) return;
    for (int n = static_cast<int>(values.size()); n <= upto; ++n) {
      HarnessCell cell{"F*", m, n, -1, "", std::nullopt, true, ""};
      try {
        auto v = WeightedFolner(group, m, n, options.ball_cap);
        if (v) {
          values.push_back(v->value);
          cell.value = v->value;
        } else {
          values.push_back(std::nullopt);
          cell.note = "empty interior";
        }
      } catch (const CapExceeded&) {
        cell.note = "cap";
        report.cells.push_back(cell);
        fstar_capped[m] = true;
        return;
      }
      report.cells.push_back(cell);
    }
  }

  // F*(m, n) for n = 0..n_max, stopping at the cap.
  const std::vector<std::optional<Rational>>& FStar(int m) {
    ExtendFStar(m, options.n_max);
    return fstar[m];
  }

  // F(m, eps); -1 when not reached within f_n_max (second: whether a cap
  // cut the scan short). The scan runs past n_max only when needed.
  std::pair<int, bool> F(int m, const Rational& eps) {
    auto key = std::make_pair(m, eps);
    auto memo = fvalues.find(key);
    if (memo != fvalues.end()) return memo->second;
    FStar(m);
    int found = -1;
    for (int n = 0;; ++n) {
      const auto& values = fstar[m];
      if (n >= static_cast<int>(values.size())) {
        if (n > std::max(options.n_max, options.f_n_max)) break;
        ExtendFStar(m, n);
        if (n >= static_cast<int>(fstar[m].size())) break;
      }
      const auto& v = fstar[m][n];
      if (v && *v <= eps) {
        found = n;
        break;
      }
    }
    HarnessCell cell{"F", m, -1, -1, EpsText(eps), std::nullopt, true, ""};
    if (found >= 0) {
      cell.value = found;
    } else {
      cell.note = fstar_capped[m] ? "cap" : "> n_max";
    }
    report.cells.push_back(cell);
    return fvalues[key] = {found, fstar_capped[m]};
  }

  const RamseyFunctionResult& R(int m, const Rational& eps, int n_max) {
    auto key = std::make_pair(m, eps);
    auto it = ramsey.find(key);
    if (it != ramsey.end() && it->second.rows.size() > 0 &&
        (it->second.status != FunctionStatus::kExhausted ||
         static_cast<int>(it->second.rows.size()) > n_max)) {
      return it->second;
    }
    RamseyFunctionResult r = RamseyFunction(group, m, eps, n_max,
                                            RamseyMethod::kPictures,
                                            options.ramsey);
    HarnessCell cell{"R", m, -1, -1, EpsText(eps), std::nullopt, true, ""};
    if (r.status == FunctionStatus::kFound) {
      cell.value = r.value;
    } else {
      cell.note = std::string(FunctionStatusName(r.status));
    }
    report.cells.push_back(cell);
    return ramsey[key] = r;
  }

  // R^times(m) at eps = 1/2; nullopt when some iterate is not found. On an
  // infinite group R(x) >= x since balls grow strictly, so the iterates only
  // increase and the walk may stop once `enough` holds.
  std::optional<int> Iterate(int m, int times,
                             const std::function<bool(int)>& enough) {
    int x = m;
    partial = false;
    for (int i = 0; i < times; ++i) {
      if (!group.is_finite() && enough(x)) {
        if (i < times) partial = true;
        return x;
      }
      const auto& r = R(x, Rational(1, 2), std::max(options.n_max, 4 * x + 4));
      if (r.status != FunctionStatus::kFound) return std::nullopt;
      x = r.value;
    }
    return x;
  }

  void Add(std::string name, std::string instance, CheckStatus status,
           std::string detail) {
    report.checks.push_back(
        {std::move(name), std::move(instance), status, std::move(detail)});
  }
};

}  // namespace

HarnessReport InequalityHarness(const Group& group,
                                const HarnessOptions& options) {
  Context ctx{group, options, {}, {}, {}, {}, {}};
  const int s = static_cast<int>(group.Generators().size());
  const ElementSet window = FolnerWindow(group, options.folner_window);

  std::map<int, FolnerSearchResult> fol;
  for (int k = 1; k <= options.k_max; ++k) {
    HarnessCell cell{"Fol", -1, -1, k, "", std::nullopt, true, ""};
    try {
      fol[k] = FolnerFunction(group, k, window);
      if (fol[k].found) {
        cell.value = static_cast<long>(fol[k].set.size());
        cell.exact = fol[k].exact;
        if (!cell.exact) cell.note = "upper bound";
      } else {
        cell.note = "none in window";
      }
    } catch (const CapExceeded&) {
      cell.note = "cap";
    }
    ctx.report.cells.push_back(cell);
  }

  // R(m, 1/k) <= F(m, 1/k).
  for (int m = 1; m <= options.m_max; ++m) {
    for (int k = 1; k <= options.k_max; ++k) {
      const Rational eps(1, k);
      const std::string inst =
          "m=" + std::to_string(m) + " eps=" + EpsText(eps);
      auto [f, f_capped] = ctx.F(m, eps);
      const auto& r = ctx.R(m, eps, options.n_max);
      if (f >= 0 && r.status == FunctionStatus::kFound) {
        ctx.Add("R<=F", inst, r.value <= f ? CheckStatus::kHolds : CheckStatus::kViolated,
                std::to_string(r.value) + " <= " + std::to_string(f));
      } else if (f >= 0 && r.status == FunctionStatus::kExhausted &&
                 f <= options.n_max) {
        ctx.Add("R<=F", inst, CheckStatus::kViolated,
                "R > n_max >= F = " + std::to_string(f));
      } else {
        ctx.Add("R<=F", inst, CheckStatus::kUntested, "value missing");
      }
      (void)f_capped;
    }
  }

  // Fol(k) <= (2s+1)^F(1, 1/k).
  for (int k = 1; k <= options.k_max; ++k) {
    const std::string inst = "k=" + std::to_string(k);
    auto [f, capped] = ctx.F(1, Rational(1, k));
    (void)capped;
    const auto it = fol.find(k);
    if (f < 0 || it == fol.end() || !it->second.found) {
      ctx.Add("Fol<=(2s+1)^F", inst, CheckStatus::kUntested, "value missing");
      continue;
    }
    const Rational bound = Pow(Rational(2 * s + 1), f);
    const long size = static_cast<long>(it->second.set.size());
    const std::string detail =
        std::to_string(size) + " <= " + FormatRational(bound);
    if (size <= bound) {
      ctx.Add("Fol<=(2s+1)^F", inst, CheckStatus::kHolds, detail);
    } else {
      ctx.Add("Fol<=(2s+1)^F", inst,
              it->second.exact ? CheckStatus::kViolated : CheckStatus::kUntested,
              detail);
    }
  }

  // F(m, 2 eps s) <= R^{s p}(m), eps = 1/2.
  {
    const Rational eps(1, 2);
    const int p = StrictSteps(eps);
    for (int m = 1; m <= options.m_max; ++m) {
      const std::string inst = "m=" + std::to_string(m) + " eps=1/2";
      auto [f, capped] = ctx.F(m, 2 * eps * s);
      auto it = ctx.Iterate(m, s * p, [&](int x) { return f >= 0 && f <= x; });
      if (!it) {
        ctx.Add("F(m,2eps|S|)<=R^{|S|p}(m)", inst, CheckStatus::kUntested,
                "Ramsey iterate not computed");
      } else if (f >= 0) {
        ctx.Add("F(m,2eps|S|)<=R^{|S|p}(m)", inst,
                f <= *it ? CheckStatus::kHolds : CheckStatus::kViolated,
                std::to_string(f) + " <= " + std::to_string(*it) +
                    (ctx.partial ? " (partial iterate)" : ""));
      } else if (!capped && *it <= options.n_max) {
        ctx.Add("F(m,2eps|S|)<=R^{|S|p}(m)", inst, CheckStatus::kViolated,
                "F > n_max >= " + std::to_string(*it));
      } else {
        ctx.Add("F(m,2eps|S|)<=R^{|S|p}(m)", inst, CheckStatus::kUntested,
                "F not reached");
      }
    }
  }

  // Fol(k) <= (2s+1)^{R^{ps}(1)} with (3/4)^p < 1/(2ks).
  for (int k = 1; k <= options.k_max; ++k) {
    const std::string inst = "k=" + std::to_string(k);
    const int p = StrictSteps(Rational(1, 2 * k * s));
    const auto f = fol.find(k);
    auto it = ctx.Iterate(1, p * s, [&](int x) {
      return f != fol.end() && f->second.found &&
             static_cast<long>(f->second.set.size()) <=
                 Pow(Rational(2 * s + 1), x);
    });
    if (!it || f == fol.end() || !f->second.found) {
      ctx.Add("Fol<=(2s+1)^{R^{ps}(1)}", inst, CheckStatus::kUntested,
              "value missing");
      continue;
    }
    const Rational bound = Pow(Rational(2 * s + 1), *it);
    const long size = static_cast<long>(f->second.set.size());
    const std::string detail =
        std::to_string(size) + " <= " + FormatRational(bound) +
        (ctx.partial ? " (partial iterate)" : "");
    if (size <= bound) {
      ctx.Add("Fol<=(2s+1)^{R^{ps}(1)}", inst, CheckStatus::kHolds, detail);
    } else {
      ctx.Add("Fol<=(2s+1)^{R^{ps}(1)}", inst,
              f->second.exact ? CheckStatus::kViolated : CheckStatus::kUntested,
              detail);
    }
  }
  return ctx.report;
}

}  // namespace amenlab
