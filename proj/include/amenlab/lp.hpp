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

#ifndef AMENLAB_LP_HPP_
#define AMENLAB_LP_HPP_

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "amenlab/rational.hpp"

namespace amenlab {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMinimize, kMaximize };

std::string_view RelationSymbol(Relation rel);

struct Constraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::kLessEqual;
  Rational rhs;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct Objective {
  std::vector<Rational> coeffs;
  Sense sense = Sense::kMinimize;

  friend bool operator==(const Objective&, const Objective&) = default;
};

// Rows a.x (<=|=|>=) b over `num_vars` rational variables, each either
// nonnegative or free, with an optional linear objective.
class LinearSystem {
 public:
  explicit LinearSystem(int num_vars, bool nonnegative = true);

  int num_vars() const { return num_vars_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<Constraint>& rows() const { return rows_; }
  const std::vector<bool>& nonnegative() const { return nonnegative_; }
  const std::optional<Objective>& objective() const { return objective_; }

  void AddRow(std::vector<Rational> coeffs, Relation rel, Rational rhs);
  // Sparse form: (variable, coefficient) pairs; repeated variables add up.
  void AddSparseRow(const std::vector<std::pair<int, Rational>>& terms,
                    Relation rel, Rational rhs);
  void SetNonnegative(int var, bool nonnegative);
  void SetObjective(std::vector<Rational> coeffs, Sense sense);

  // Throws std::invalid_argument when a row or the objective has the wrong
  // length or there are no variables.
  void Validate() const;

  friend bool operator==(const LinearSystem&, const LinearSystem&) = default;

 private:
  int num_vars_;
  std::vector<Constraint> rows_;
  std::vector<bool> nonnegative_;
  std::optional<Objective> objective_;
};

// Either a point satisfying every row exactly, or Farkas multipliers.
//
// Farkas convention: one multiplier per row, nonnegative for <= and >= rows,
// unrestricted for = rows. Each row is first written as s.a.x <= s.b with
// s = -1 for >= rows and s = +1 otherwise; the multiplier combination
// c.x <= d of these rows must have c_j >= 0 on nonnegative variables,
// c_j = 0 on free variables and d < 0, which is the contradiction
// 0 <= c.x <= d < 0.
struct FeasibilityOutcome {
  bool feasible = false;
  std::vector<Rational> point;
  std::vector<Rational> farkas;

  friend bool operator==(const FeasibilityOutcome&,
                         const FeasibilityOutcome&) = default;
};

// Optimal point with a dual certificate. Duals u follow the minimisation
// convention for c' = c (minimize) or c' = -c (maximize): u_i >= 0 on >=
// rows, u_i <= 0 on <= rows, c' - sum u_i a_i is >= 0 on nonnegative
// variables and 0 on free ones, and c'.x = u.b.
struct Optimum {
  Rational value;
  std::vector<Rational> point;
  std::vector<Rational> duals;

  friend bool operator==(const Optimum&, const Optimum&) = default;
};

enum class OptimizationStatus { kOptimal, kInfeasible, kUnbounded };

struct OptimizationOutcome {
  OptimizationStatus status = OptimizationStatus::kOptimal;
  Optimum optimum;                // kOptimal
  std::vector<Rational> farkas;   // kInfeasible
  std::vector<Rational> point;    // kUnbounded: a feasible point ...
  std::vector<Rational> ray;      // ... and an improving recession direction

  friend bool operator==(const OptimizationOutcome&,
                         const OptimizationOutcome&) = default;
};

// Two-phase primal simplex over exact rationals with Bland's rule (lowest
// index entering column, lowest index basic variable on ratio ties).
// Identical nonnegative columns are merged before solving; the merged weight
// is reported on the first of them. Deterministic for a given system.
FeasibilityOutcome SolveFeasibility(const LinearSystem& system);

// Requires an objective. Honours the objective's sense.
OptimizationOutcome Optimize(const LinearSystem& system);

// Independent exact checks; no pivoting. Throw std::invalid_argument when
// vector shapes do not match the system.
bool IsFeasiblePoint(const LinearSystem& system,
                     const std::vector<Rational>& point);
bool VerifyFarkas(const LinearSystem& system,
                  const std::vector<Rational>& multipliers);
bool VerifyCertificate(const LinearSystem& system,
                       const FeasibilityOutcome& outcome);
bool VerifyCertificate(const LinearSystem& system,
                       const OptimizationOutcome& outcome);

}  // namespace amenlab

#endif  // AMENLAB_LP_HPP_
