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

// Test-only reference computations. Nothing here calls the simplex code.
#ifndef AMENLAB_TESTS_ORACLES_HPP_
#define AMENLAB_TESTS_ORACLES_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "amenlab/lp.hpp"

namespace amenlab::oracle {

struct DenseRow {
  std::vector<Rational> a;
  Relation rel;
  Rational b;
};

inline std::vector<DenseRow> AllRows(const LinearSystem& sys) {
  std::vector<DenseRow> rows;
  for (const auto& r : sys.rows()) rows.push_back({r.coeffs, r.rel, r.rhs});
  for (int j = 0; j < sys.num_vars(); ++j) {
    if (!sys.nonnegative()[j]) continue;
    std::vector<Rational> a(sys.num_vars());
    a[j] = 1;
    rows.push_back({a, Relation::kGreaterEqual, Rational(0)});
  }
  return rows;
}

inline bool Satisfies(const std::vector<DenseRow>& rows,
                      const std::vector<Rational>& x) {
  for (const auto& r : rows) {
    Rational lhs = 0;
    for (size_t j = 0; j < x.size(); ++j) lhs += r.a[j] * x[j];
    if (r.rel == Relation::kLessEqual && lhs > r.b) return false;
    if (r.rel == Relation::kEqual && lhs != r.b) return false;
    if (r.rel == Relation::kGreaterEqual && lhs < r.b) return false;
  }
  return true;
}

// Gaussian elimination on [A | b]. Returns the rank of A and, when the
// system is consistent, one solution with non-pivot variables set to 0.
inline int SolveEqualities(std::vector<std::vector<Rational>> m, int n,
                           std::optional<std::vector<Rational>>* solution) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int k = 0; k <= n; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (solution) {
    bool consistent = true;
    for (int i = r; i < rows; ++i) {
      if (m[i][n] != 0) consistent = false;
    }
    if (consistent) {
      std::vector<Rational> x(n);
      for (int i = 0; i < r; ++i) x[pivot_col[i]] = m[i][n];
      *solution = x;
    } else {
      solution->reset();
    }
  }
  return r;
}

// Candidate points: one point on every minimal face (rank-r row subsets
// solved as equalities). The polyhedron is nonempty iff one of them is
// feasible, and a bounded LP attains its optimum at one of them.
inline std::vector<std::vector<Rational>> FeasibleFacePoints(
    const LinearSystem& sys) {
  const int n = sys.num_vars();
  const std::vector<DenseRow> rows = AllRows(sys);
  std::vector<std::vector<Rational>> full;
  for (const auto& r : rows) {
    auto v = r.a;
    v.push_back(r.b);
    full.push_back(v);
  }
  const int rank = SolveEqualities(full, n, nullptr);
  std::vector<std::vector<Rational>> out;
  if (rank == 0) {
    std::vector<Rational> zero(n);
    if (Satisfies(rows, zero)) out.push_back(zero);
    return out;
  }
  const int total = static_cast<int>(rows.size());
  std::vector<int> idx(rank);
  for (int i = 0; i < rank; ++i) idx[i] = i;
  while (true) {
    std::vector<std::vector<Rational>> sub;
    for (int i : idx) sub.push_back(full[i]);
    std::optional<std::vector<Rational>> x;
    if (SolveEqualities(sub, n, &x) == rank && x && Satisfies(rows, *x)) {
      out.push_back(*x);
    }
    int k = rank - 1;
    while (k >= 0 && idx[k] == total - rank + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int i = k + 1; i < rank; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

inline bool BruteForceFeasible(const LinearSystem& sys) {
  return !FeasibleFacePoints(sys).empty();
}

inline LinearSystem RandomSystem(std::mt19937_64& rng, int max_vars,
                                 int max_rows, int coeff_bound) {
  std::uniform_int_distribution<int> nv(1, max_vars), nr(1, max_rows),
      coef(-coeff_bound, coeff_bound), rel(0, 2), coin(0, 3);
  const int n = nv(rng);
  LinearSystem sys(n);
  for (int j = 0; j < n; ++j) {
    if (coin(rng) == 0) sys.SetNonnegative(j, false);
  }
  const int m = nr(rng);
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> a(n);
    for (auto& v : a) v = coef(rng);
    sys.AddRow(a, static_cast<Relation>(rel(rng)), Rational(coef(rng)));
  }
  return sys;
}

}  // namespace amenlab::oracle

#endif  // AMENLAB_TESTS_ORACLES_HPP_
