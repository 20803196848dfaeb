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

#include <random>

#include "amenlab/lp.hpp"
#include "doctest.h"
#include "oracles.hpp"

namespace amenlab {
namespace {

using R = Rational;

TEST_CASE("box constraint is feasible") {
  LinearSystem sys(1);
  sys.AddRow({R(1)}, Relation::kGreaterEqual, R(0));
  sys.AddRow({R(1)}, Relation::kLessEqual, R(1));
  FeasibilityOutcome out = SolveFeasibility(sys);
  REQUIRE(out.feasible);
  // Bland pivoting lands on the vertex x = 1; both vertices are valid witnesses.
  REQUIRE(out.point.size() == 1);
  CHECK(out.point[0] >= 0);
  CHECK(out.point[0] <= 1);
  CHECK(VerifyCertificate(sys, out));
}

TEST_CASE("one-variable contradiction yields multipliers (1,1)") {
  LinearSystem sys(1, /*nonnegative=*/false);
  sys.AddRow({R(1)}, Relation::kGreaterEqual, R(1));
  sys.AddRow({R(1)}, Relation::kLessEqual, R(0));
  FeasibilityOutcome out = SolveFeasibility(sys);
  REQUIRE_FALSE(out.feasible);
  CHECK(VerifyCertificate(sys, out));
  CHECK(out.farkas == std::vector<R>{R(1), R(1)});
  // Hand-built certificate: -x <= -1 plus x <= 0 gives 0 <= -1.
  FeasibilityOutcome hand{false, {}, {R(1), R(1)}};
  CHECK(VerifyCertificate(sys, hand));
  CHECK_FALSE(VerifyFarkas(sys, {R(1), R(0)}));
  CHECK_FALSE(VerifyFarkas(sys, {R(-1), R(-1)}));
}

TEST_CASE("simplex with a difference constraint has the unique solution") {
  // Oracle: x1 + x2 = 1 and x1 - x2 = 1/3 give x1 = 2/3, x2 = 1/3.
  LinearSystem sys(2);
  sys.AddRow({R(1), R(1)}, Relation::kEqual, R(1));
  sys.AddRow({R(1), R(-1)}, Relation::kEqual, R(1, 3));
  FeasibilityOutcome out = SolveFeasibility(sys);
  REQUIRE(out.feasible);
  CHECK(out.point == std::vector<R>{R(2, 3), R(1, 3)});
}

TEST_CASE("verification is exact") {
  LinearSystem sys(2);
  sys.AddRow({R(1), R(1)}, Relation::kLessEqual, R(1));
  FeasibilityOutcome ok{true, {R(1, 2), R(1, 2)}, {}};
  CHECK(VerifyCertificate(sys, ok));
  FeasibilityOutcome off{true, {R(1, 2), R(1, 2) + R(1, 1000000)}, {}};
  CHECK_FALSE(VerifyCertificate(sys, off));
  FeasibilityOutcome wrong_shape{true, {R(0)}, {}};
  CHECK_THROWS_AS(VerifyCertificate(sys, wrong_shape), std::invalid_argument);
}

TEST_CASE("malformed systems are rejected") {
  CHECK_THROWS_AS(LinearSystem(0), std::invalid_argument);
  LinearSystem sys(2);
  CHECK_THROWS_AS(sys.AddRow({R(1)}, Relation::kEqual, R(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(Optimize(sys), std::invalid_argument);
}

TEST_CASE("minimise x subject to x >= 3") {
  LinearSystem sys(1, false);
  sys.AddRow({R(1)}, Relation::kGreaterEqual, R(3));
  sys.SetObjective({R(1)}, Sense::kMinimize);
  OptimizationOutcome out = Optimize(sys);
  REQUIRE(out.status == OptimizationStatus::kOptimal);
  CHECK(out.optimum.value == 3);
  CHECK(VerifyCertificate(sys, out));
}

TEST_CASE("L1 linearisation") {
  // vars x1, x2 free; t1, t2 >= 0. min t1 + t2, t_i >= |x_i|, x1 = 1/2.
  LinearSystem sys(4);
  sys.SetNonnegative(0, false);
  sys.SetNonnegative(1, false);
  sys.AddRow({R(-1), R(0), R(1), R(0)}, Relation::kGreaterEqual, R(0));
  sys.AddRow({R(1), R(0), R(1), R(0)}, Relation::kGreaterEqual, R(0));
  sys.AddRow({R(0), R(-1), R(0), R(1)}, Relation::kGreaterEqual, R(0));
  sys.AddRow({R(0), R(1), R(0), R(1)}, Relation::kGreaterEqual, R(0));
  sys.AddRow({R(1), R(0), R(0), R(0)}, Relation::kEqual, R(1, 2));
  sys.SetObjective({R(0), R(0), R(1), R(1)}, Sense::kMinimize);
  OptimizationOutcome out = Optimize(sys);
  REQUIRE(out.status == OptimizationStatus::kOptimal);
  CHECK(out.optimum.value == R(1, 2));
  CHECK(VerifyCertificate(sys, out));
}

TEST_CASE("max-min gap of a single-member family") {
  // Family {{0}} over {0,1}: lambda = 1 forces v = (1,0); min t_hi - t_lo.
  // vars: lambda, t_hi, t_lo.
  LinearSystem sys(3);
  sys.SetNonnegative(1, false);
  sys.SetNonnegative(2, false);
  sys.AddRow({R(1), R(0), R(0)}, Relation::kEqual, R(1));
  sys.AddRow({R(1), R(-1), R(0)}, Relation::kLessEqual, R(0));   // v(0)
  sys.AddRow({R(0), R(-1), R(0)}, Relation::kLessEqual, R(0));   // v(1)
  sys.AddRow({R(1), R(0), R(-1)}, Relation::kGreaterEqual, R(0));
  sys.AddRow({R(0), R(0), R(-1)}, Relation::kGreaterEqual, R(0));
  sys.SetObjective({R(0), R(1), R(-1)}, Sense::kMinimize);
  OptimizationOutcome out = Optimize(sys);
  REQUIRE(out.status == OptimizationStatus::kOptimal);
  CHECK(out.optimum.value == 1);
}

TEST_CASE("infeasible and unbounded optimisation carry certificates") {
  LinearSystem bad(1);
  bad.AddRow({R(1)}, Relation::kLessEqual, R(-1));
  bad.SetObjective({R(1)}, Sense::kMinimize);
  OptimizationOutcome inf = Optimize(bad);
  CHECK(inf.status == OptimizationStatus::kInfeasible);
  CHECK(VerifyCertificate(bad, inf));

  LinearSystem open(2);
  open.AddRow({R(1), R(-1)}, Relation::kLessEqual, R(1));
  open.SetObjective({R(1), R(1)}, Sense::kMaximize);
  OptimizationOutcome unb = Optimize(open);
  REQUIRE(unb.status == OptimizationStatus::kUnbounded);
  CHECK(VerifyCertificate(open, unb));
}

TEST_CASE("maximisation duals verify") {
  LinearSystem sys(2);
  sys.AddRow({R(1), R(2)}, Relation::kLessEqual, R(4));
  sys.AddRow({R(3), R(1)}, Relation::kLessEqual, R(6));
  sys.SetObjective({R(1), R(1)}, Sense::kMaximize);
  OptimizationOutcome out = Optimize(sys);
  REQUIRE(out.status == OptimizationStatus::kOptimal);
  // Vertex (8/5, 6/5).
  CHECK(out.optimum.value == R(14, 5));
  CHECK(VerifyCertificate(sys, out));
  OptimizationOutcome tampered = out;
  tampered.optimum.duals[0] += R(1, 7);
  CHECK_FALSE(VerifyCertificate(sys, tampered));
}

TEST_CASE("duplicate columns are merged onto the first representative") {
  LinearSystem sys(3);
  sys.AddRow({R(1), R(1), R(1)}, Relation::kEqual, R(1));
  sys.AddRow({R(1), R(1), R(0)}, Relation::kGreaterEqual, R(1, 2));
  FeasibilityOutcome out = SolveFeasibility(sys);
  REQUIRE(out.feasible);
  CHECK(out.point[1] == 0);
  CHECK(VerifyCertificate(sys, out));
}

TEST_CASE("random systems agree with the vertex-enumeration oracle") {
  std::mt19937_64 rng(20261018);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    LinearSystem sys = oracle::RandomSystem(rng, 6, 10, 3);
    FeasibilityOutcome out = SolveFeasibility(sys);
    CHECK(VerifyCertificate(sys, out));
    CHECK(out.feasible == oracle::BruteForceFeasible(sys));
    feasible += out.feasible;
    // Determinism: a second solve is bit-identical.
    CHECK(SolveFeasibility(sys) == out);
  }
  CHECK(feasible > 30);
  CHECK(feasible < 270);
}

TEST_CASE("random optima match the best face point") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  int optimal = 0;
  for (int trial = 0; trial < 200; ++trial) {
    LinearSystem sys = oracle::RandomSystem(rng, 4, 7, 3);
    std::vector<R> c(sys.num_vars());
    for (auto& v : c) v = coef(rng);
    sys.SetObjective(c, Sense::kMinimize);
    OptimizationOutcome out = Optimize(sys);
    CHECK(VerifyCertificate(sys, out));
    const auto points = oracle::FeasibleFacePoints(sys);
    CHECK((out.status == OptimizationStatus::kInfeasible) == points.empty());
    if (out.status != OptimizationStatus::kOptimal) continue;
    ++optimal;
    R best;
    bool first = true;
    for (const auto& p : points) {
      R v = 0;
      for (size_t j = 0; j < p.size(); ++j) v += c[j] * p[j];
      if (first || v < best) best = v;
      first = false;
    }
    CHECK(out.optimum.value == best);
  }
  CHECK(optimal > 10);
}

}  // namespace
}  // namespace amenlab
