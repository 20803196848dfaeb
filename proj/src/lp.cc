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

#include "amenlab/lp.hpp"

#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace amenlab {

std::string_view RelationSymbol(Relation rel) {
  switch (rel) {
    case Relation::kLessEqual:
      return "<=";
    case Relation::kEqual:
      return "=";
    case Relation::kGreaterEqual:
      return ">=";
  }
  return "?";
}

LinearSystem::LinearSystem(int num_vars, bool nonnegative)
    : num_vars_(num_vars), nonnegative_(num_vars > 0 ? num_vars : 0, nonnegative) {
  if (num_vars < 1) {
    throw std::invalid_argument("linear system needs at least one variable");
  }
}

void LinearSystem::AddRow(std::vector<Rational> coeffs, Relation rel,
                          Rational rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars_) {
    throw std::invalid_argument("row length " + std::to_string(coeffs.size()) +
                                " != variable count " +
                                std::to_string(num_vars_));
  }
  rows_.push_back(Constraint{std::move(coeffs), rel, std::move(rhs)});
}

void LinearSystem::AddSparseRow(
    const std::vector<std::pair<int, Rational>>& terms, Relation rel,
    Rational rhs) {
  std::vector<Rational> coeffs(num_vars_);
  for (const auto& [var, c] : terms) {
    if (var < 0 || var >= num_vars_) {
      throw std::invalid_argument("sparse row variable out of range");
    }
    coeffs[var] += c;
  }
  AddRow(std::move(coeffs), rel, std::move(rhs));
}

void LinearSystem::SetNonnegative(int var, bool nonnegative) {
  nonnegative_.at(var) = nonnegative;
}

void LinearSystem::SetObjective(std::vector<Rational> coeffs, Sense sense) {
  if (static_cast<int>(coeffs.size()) != num_vars_) {
    throw std::invalid_argument("objective length != variable count");
  }
  objective_ = Objective{std::move(coeffs), sense};
}

void LinearSystem::Validate() const {
  if (num_vars_ < 1) throw std::invalid_argument("no variables");
  if (static_cast<int>(nonnegative_.size()) != num_vars_) {
    throw std::invalid_argument("nonnegativity flags have the wrong length");
  }
  for (const auto& row : rows_) {
    if (static_cast<int>(row.coeffs.size()) != num_vars_) {
      throw std::invalid_argument("row has the wrong length");
    }
  }
  if (objective_ && static_cast<int>(objective_->coeffs.size()) != num_vars_) {
    throw std::invalid_argument("objective has the wrong length");
  }
}

namespace {

// Sign that turns row i into "<=" form for the Farkas convention.
int RowSign(Relation rel) { return rel == Relation::kGreaterEqual ? -1 : 1; }

uint64_t SaturatingBinomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  const unsigned __int128 limit = std::numeric_limits<uint64_t>::max();
  for (uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > limit) return std::numeric_limits<uint64_t>::max();
  }
  return static_cast<uint64_t>(r);
}

// Dense two-phase tableau. Columns are ordered structural (one per
// nonnegative variable, two per free variable), then slacks, then one
// artificial per row; the artificial block starts as the identity, so it
// carries B^-1 for reading off duals.
class Tableau {
 public:
  Tableau(const LinearSystem& system, const std::vector<int>& kept_vars)
      : system_(system), m_(system.num_rows()) {
    for (int v : kept_vars) {
      structural_.push_back({v, +1});
      if (!system.nonnegative()[v]) structural_.push_back({v, -1});
    }
    row_sign_.assign(m_, 1);
    row_slack_.assign(m_, -1);
    int col = static_cast<int>(structural_.size());
    for (int i = 0; i < m_; ++i) {
      if (system.rows()[i].rel != Relation::kEqual) row_slack_[i] = col++;
    }
    art_begin_ = col;
    ncols_ = col + m_;
    rhs_ = ncols_;
    t_.assign(m_ + 1, std::vector<Rational>(ncols_ + 1));
    for (int i = 0; i < m_; ++i) {
      const Constraint& row = system.rows()[i];
      row_sign_[i] = row.rhs < 0 ? -1 : 1;
      const int tau = row_sign_[i];
      for (size_t c = 0; c < structural_.size(); ++c) {
        const auto& [v, s] = structural_[c];
        if (row.coeffs[v] != 0) t_[i][c] = tau * s * row.coeffs[v];
      }
      if (row_slack_[i] >= 0) {
        t_[i][row_slack_[i]] = row.rel == Relation::kLessEqual ? tau : -tau;
      }
      t_[i][art_begin_ + i] = 1;
      t_[i][rhs_] = tau * row.rhs;
    }
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) basis_[i] = art_begin_ + i;
    pivot_cap_ = SaturatingBinomial(ncols_ + m_, m_);
  }

  // Returns true when the system is feasible; otherwise fills `farkas`.
  bool PhaseOne(std::vector<Rational>* farkas) {
    cost_.assign(ncols_, Rational(0));
    for (int i = 0; i < m_; ++i) cost_[art_begin_ + i] = 1;
    ResetObjectiveRow();
    RunSimplex(/*allow_artificial=*/false);
    // Objective row rhs holds -w.
    const Rational w = -t_[m_][rhs_];
    if (w > 0) {
      farkas->assign(m_, Rational(0));
      for (int i = 0; i < m_; ++i) {
        // y_i = c_art - r_art = 1 - r_art; Farkas vector z = -y.
        const Rational y = 1 - t_[m_][art_begin_ + i];
        const Rational u = row_sign_[i] * -y;
        (*farkas)[i] = RowSign(system_.rows()[i].rel) * u;
      }
      return false;
    }
    DriveOutArtificials();
    return true;
  }

  // Phase two on cost vector c' (already negated for maximisation).
  // Returns false when unbounded, filling `ray`.
  bool PhaseTwo(const std::vector<Rational>& effective_cost,
                std::vector<Rational>* ray) {
    cost_.assign(ncols_, Rational(0));
    for (size_t c = 0; c < structural_.size(); ++c) {
      const auto& [v, s] = structural_[c];
      cost_[c] = s * effective_cost[v];
    }
    ResetObjectiveRow();
    const int unbounded_col = RunSimplex(/*allow_artificial=*/false);
    if (unbounded_col >= 0) {
      ray->assign(system_.num_vars(), Rational(0));
      AddStructural(unbounded_col, Rational(1), ray);
      for (int i = 0; i < m_; ++i) {
        if (t_[i][unbounded_col] != 0) {
          AddStructural(basis_[i], -t_[i][unbounded_col], ray);
        }
      }
      return false;
    }
    return true;
  }

  std::vector<Rational> Point() const {
    std::vector<Rational> x(system_.num_vars());
    for (int i = 0; i < m_; ++i) AddStructural(basis_[i], t_[i][rhs_], &x);
    return x;
  }

  // Duals of the current phase-two basis in the original row space.
  std::vector<Rational> Duals() const {
    std::vector<Rational> u(m_);
    for (int i = 0; i < m_; ++i) {
      const Rational y = -t_[m_][art_begin_ + i];  // c_art = 0 in phase two
      u[i] = row_sign_[i] * y;
    }
    return u;
  }

 private:
  void AddStructural(int col, const Rational& value,
                     std::vector<Rational>* x) const {
    if (col < static_cast<int>(structural_.size())) {
      const auto& [v, s] = structural_[col];
      (*x)[v] += s * value;
    }
  }

  void ResetObjectiveRow() {
    auto& obj = t_[m_];
    for (int j = 0; j <= ncols_; ++j) obj[j] = j < ncols_ ? cost_[j] : Rational(0);
    for (int i = 0; i < m_; ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= ncols_; ++j) {
        if (t_[i][j] != 0) obj[j] -= cb * t_[i][j];
      }
    }
  }

  void Pivot(int p, int q) {
    if (++pivots_ > pivot_cap_) {
      throw std::logic_error("simplex exceeded its pivot bound");
    }
    const Rational inv = 1 / t_[p][q];
    auto& prow = t_[p];
    std::vector<int> nz;
    for (int j = 0; j <= ncols_; ++j) {
      if (prow[j] != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    }
    for (int i = 0; i <= m_; ++i) {
      if (i == p || t_[i][q] == 0) continue;
      const Rational f = t_[i][q];
      auto& row = t_[i];
      for (int j : nz) row[j] -= f * prow[j];
    }
    basis_[p] = q;
  }

  // Bland's rule. Returns -1 at optimality or the entering column that
  // certifies unboundedness.
  int RunSimplex(bool allow_artificial) {
    const int limit = allow_artificial ? ncols_ : art_begin_;
    while (true) {
      int q = -1;
      for (int j = 0; j < limit; ++j) {
        if (t_[m_][j] < 0) {
          q = j;
          break;
        }
      }
      if (q < 0) return -1;
      int p = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (t_[i][q] <= 0) continue;
        Rational ratio = t_[i][rhs_] / t_[i][q];
        if (p < 0 || ratio < best || (ratio == best && basis_[i] < basis_[p])) {
          p = i;
          best = std::move(ratio);
        }
      }
      if (p < 0) return q;
      Pivot(p, q);
    }
  }

  void DriveOutArtificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < art_begin_) continue;
      for (int j = 0; j < art_begin_; ++j) {
        if (t_[i][j] != 0) {
          Pivot(i, j);
          break;
        }
      }
      // A row with no nonzero non-artificial entry is redundant; its
      // artificial stays basic at zero and no later pivot can change it.
    }
  }

  const LinearSystem& system_;
  int m_;
  std::vector<std::pair<int, int>> structural_;  // (variable, +1/-1)
  std::vector<int> row_sign_;
  std::vector<int> row_slack_;
  int art_begin_ = 0;
  int ncols_ = 0;
  int rhs_ = 0;
  std::vector<std::vector<Rational>> t_;
  std::vector<int> basis_;
  std::vector<Rational> cost_;
  uint64_t pivots_ = 0;
  uint64_t pivot_cap_ = 0;
};

// Representative variable per column class. Only nonnegative variables with
// identical columns (and identical objective coefficient) are merged.
std::vector<int> MergeDuplicateColumns(const LinearSystem& system,
                                       std::vector<int>* representative) {
  const int n = system.num_vars();
  representative->assign(n, -1);
  std::map<std::vector<Rational>, int> seen;
  std::vector<int> kept;
  for (int v = 0; v < n; ++v) {
    if (!system.nonnegative()[v]) {
      (*representative)[v] = v;
      kept.push_back(v);
      continue;
    }
    std::vector<Rational> key;
    key.reserve(system.num_rows() + 1);
    for (const auto& row : system.rows()) key.push_back(row.coeffs[v]);
    key.push_back(system.objective() ? system.objective()->coeffs[v]
                                     : Rational(0));
    auto [it, inserted] = seen.emplace(std::move(key), v);
    (*representative)[v] = it->second;
    if (inserted) kept.push_back(v);
  }
  return kept;
}

std::vector<Rational> EffectiveCost(const LinearSystem& system) {
  std::vector<Rational> c = system.objective()->coeffs;
  if (system.objective()->sense == Sense::kMaximize) {
    for (auto& v : c) v = -v;
  }
  return c;
}

Rational Dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

void CheckLength(const std::vector<Rational>& v, int expected,
                 const char* what) {
  if (static_cast<int>(v.size()) != expected) {
    throw std::invalid_argument(std::string(what) + " has length " +
                                std::to_string(v.size()) + ", expected " +
                                std::to_string(expected));
  }
}

}  // namespace

FeasibilityOutcome SolveFeasibility(const LinearSystem& system) {
  system.Validate();
  std::vector<int> rep;
  const std::vector<int> kept = MergeDuplicateColumns(system, &rep);
  Tableau tableau(system, kept);
  FeasibilityOutcome out;
  out.feasible = tableau.PhaseOne(&out.farkas);
  if (out.feasible) {
    out.point = tableau.Point();
    if (!IsFeasiblePoint(system, out.point)) {
      throw std::logic_error("simplex produced an infeasible point");
    }
  } else if (!VerifyFarkas(system, out.farkas)) {
    throw std::logic_error("simplex produced an invalid Farkas certificate");
  }
  return out;
}

OptimizationOutcome Optimize(const LinearSystem& system) {
  system.Validate();
  if (!system.objective()) {
    throw std::invalid_argument("Optimize needs an objective");
  }
  std::vector<int> rep;
  const std::vector<int> kept = MergeDuplicateColumns(system, &rep);
  Tableau tableau(system, kept);
  OptimizationOutcome out;
  if (!tableau.PhaseOne(&out.farkas)) {
    out.status = OptimizationStatus::kInfeasible;
    return out;
  }
  const std::vector<Rational> cost = EffectiveCost(system);
  std::vector<Rational> ray;
  if (!tableau.PhaseTwo(cost, &ray)) {
    out.status = OptimizationStatus::kUnbounded;
    out.point = tableau.Point();
    out.ray = std::move(ray);
  } else {
    out.status = OptimizationStatus::kOptimal;
    out.optimum.point = tableau.Point();
    out.optimum.duals = tableau.Duals();
    out.optimum.value = Dot(system.objective()->coeffs, out.optimum.point);
  }
  if (!VerifyCertificate(system, out)) {
    throw std::logic_error("simplex produced an invalid certificate");
  }
  return out;
}

bool IsFeasiblePoint(const LinearSystem& system,
                     const std::vector<Rational>& point) {
  CheckLength(point, system.num_vars(), "point");
  for (int j = 0; j < system.num_vars(); ++j) {
    if (system.nonnegative()[j] && point[j] < 0) return false;
  }
  for (const auto& row : system.rows()) {
    const Rational lhs = Dot(row.coeffs, point);
    switch (row.rel) {
      case Relation::kLessEqual:
        if (lhs > row.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != row.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < row.rhs) return false;
        break;
    }
  }
  return true;
}

bool VerifyFarkas(const LinearSystem& system,
                  const std::vector<Rational>& multipliers) {
  CheckLength(multipliers, system.num_rows(), "Farkas multipliers");
  std::vector<Rational> combo(system.num_vars());
  Rational bound = 0;
  for (int i = 0; i < system.num_rows(); ++i) {
    const Constraint& row = system.rows()[i];
    const Rational& lambda = multipliers[i];
    if (row.rel != Relation::kEqual && lambda < 0) return false;
    if (lambda == 0) continue;
    const Rational w = RowSign(row.rel) * lambda;
    for (int j = 0; j < system.num_vars(); ++j) {
      if (row.coeffs[j] != 0) combo[j] += w * row.coeffs[j];
    }
    bound += w * row.rhs;
  }
  for (int j = 0; j < system.num_vars(); ++j) {
    if (system.nonnegative()[j] ? combo[j] < 0 : combo[j] != 0) return false;
  }
  return bound < 0;
}

bool VerifyCertificate(const LinearSystem& system,
                       const FeasibilityOutcome& outcome) {
  system.Validate();
  return outcome.feasible ? IsFeasiblePoint(system, outcome.point)
                          : VerifyFarkas(system, outcome.farkas);
}

bool VerifyCertificate(const LinearSystem& system,
                       const OptimizationOutcome& outcome) {
  system.Validate();
  if (!system.objective()) {
    throw std::invalid_argument("optimisation certificate needs an objective");
  }
  const std::vector<Rational> cost = EffectiveCost(system);
  switch (outcome.status) {
    case OptimizationStatus::kInfeasible:
      return VerifyFarkas(system, outcome.farkas);
    case OptimizationStatus::kUnbounded: {
      if (!IsFeasiblePoint(system, outcome.point)) return false;
      CheckLength(outcome.ray, system.num_vars(), "ray");
      for (int j = 0; j < system.num_vars(); ++j) {
        if (system.nonnegative()[j] && outcome.ray[j] < 0) return false;
      }
      for (const auto& row : system.rows()) {
        const Rational d = Dot(row.coeffs, outcome.ray);
        if ((row.rel == Relation::kLessEqual && d > 0) ||
            (row.rel == Relation::kEqual && d != 0) ||
            (row.rel == Relation::kGreaterEqual && d < 0)) {
          return false;
        }
      }
      return Dot(cost, outcome.ray) < 0;
    }
    case OptimizationStatus::kOptimal: {
      const Optimum& opt = outcome.optimum;
      if (!IsFeasiblePoint(system, opt.point)) return false;
      CheckLength(opt.duals, system.num_rows(), "duals");
      std::vector<Rational> reduced = cost;
      Rational dual_value = 0;
      for (int i = 0; i < system.num_rows(); ++i) {
        const Constraint& row = system.rows()[i];
        const Rational& u = opt.duals[i];
        if ((row.rel == Relation::kLessEqual && u > 0) ||
            (row.rel == Relation::kGreaterEqual && u < 0)) {
          return false;
        }
        if (u == 0) continue;
        for (int j = 0; j < system.num_vars(); ++j) {
          if (row.coeffs[j] != 0) reduced[j] -= u * row.coeffs[j];
        }
        dual_value += u * row.rhs;
      }
      for (int j = 0; j < system.num_vars(); ++j) {
        if (system.nonnegative()[j] ? reduced[j] < 0 : reduced[j] != 0) {
          return false;
        }
      }
      if (Dot(cost, opt.point) != dual_value) return false;
      return opt.value == Dot(system.objective()->coeffs, opt.point);
    }
  }
  return false;
}

}  // namespace amenlab
