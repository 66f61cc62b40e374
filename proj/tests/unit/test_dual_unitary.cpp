// Copyright 2026 The dilkit Authors
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

#include <gtest/gtest.h>

#include <vector>

#include "dilkit/dual_unitary.hpp"
#include "dilkit/errors.hpp"
#include "dilkit/instances.hpp"
#include "dilkit/schur.hpp"
#include "dilkit/verify.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace dilkit {
namespace {

// V|a>|b> = |b>|a> from C^da (x) C^db to C^db (x) C^da.
Matrix rectangular_swap(int da, int db) {
  Matrix v = Matrix::Zero(da * db, da * db);
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b) v(b * da + a, a * db + b) = 1.0;
  return v;
}

// Square catalytic unitaries: Schur builds with n = 2^rank, mixed-unitary
// builds with k = d, CNOT and products with a unitary on the environment.
std::vector<Matrix> catalytic_population() {
  std::vector<Matrix> out{gates::cnot(), identity(4)};
  gen::Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    const SchurDilation s =
        build_schur_dilation(random_gram_schur(4, 2, rng.seed()));
    if (s.dilation.dim_env == 4) out.push_back(s.dilation.unitary);
    const int d = rng.integer(2, 3);
    MixedUnitaryDecomposition dec;
    for (int k = 0; k < d; ++k) dec.terms.push_back({1.0 / d, rng.unitary(d)});
    out.push_back(dec.dilation().unitary);
  }
  return out;
}

TEST(IsDualUnitary, Anchors) {
  EXPECT_TRUE(is_dual_unitary(swap_operator(2), {2, 2}).pass());
  EXPECT_TRUE(is_dual_unitary(swap_operator(3), {3, 3}).pass());
  const VerificationReport id = is_dual_unitary(identity(4), {2, 2});
  EXPECT_FALSE(id.pass());
  EXPECT_LT(id.value("unitarity_residual"), 1e-12);
  // reshuffle(1) = 2|Omega><Omega|: ||4|Omega><Omega| - 1||_F / 2.
  EXPECT_NEAR(id.value("reshuffled_unitarity_residual"), std::sqrt(12.0) / 2.0,
              1e-12);
  EXPECT_FALSE(is_dual_unitary(gates::cnot(), {2, 2}).pass());
}

TEST(IsDualUnitary, CnotReshuffleHasZeroRows) {
  const Matrix r = oracle::realign(oracle::cnot(), 2, 2);
  EXPECT_EQ(reshuffle(gates::cnot(), {2, 2}), r);
  int zero_rows = 0;
  for (int i = 0; i < 4; ++i) zero_rows += r.row(i).norm() == 0.0;
  EXPECT_EQ(zero_rows, 2);
}

TEST(IsDualUnitary, RectangularSplit) {
  const Matrix v = rectangular_swap(2, 3);
  EXPECT_LT(unitarity_residual(v), 1e-12);
  EXPECT_TRUE(is_dual_unitary(v, FactoredDims{3, 2}, FactoredDims{2, 3}).pass());
  const VerificationReport bad = is_dual_unitary(identity(6), FactoredDims{2, 3},
                                                 FactoredDims{3, 2});
  EXPECT_FALSE(bad.pass());
  EXPECT_THROW(is_dual_unitary(identity(6), {2, 2}), DimensionError);
}

TEST(CatalyticToDual, Examples) {
  const Matrix v_id = catalytic_to_dual(identity(4), {2, 2});
  EXPECT_EQ(v_id, oracle::swap(2));
  const Matrix v_cnot = catalytic_to_dual(gates::cnot(), {2, 2});
  EXPECT_EQ(v_cnot, oracle::cnot() * oracle::swap(2));
  EXPECT_TRUE(is_dual_unitary(v_cnot, {2, 2}).pass());
  try {
    catalytic_to_dual(swap_operator(2), {2, 2});
    FAIL() << "expected NotCatalyticUnitaryError";
  } catch (const NotCatalyticUnitaryError& e) {
    EXPECT_GT(e.residual(), 0.1);
  }
  EXPECT_THROW(catalytic_to_dual(identity(6), {2, 3}), DimensionError);
}

TEST(DualToCatalytic, Examples) {
  EXPECT_EQ(dual_to_catalytic(swap_operator(2), {2, 2}), oracle::eye(4));
  const Matrix v = catalytic_to_dual(gates::cnot(), {2, 2});
  EXPECT_EQ(dual_to_catalytic(v, {2, 2}), oracle::cnot());
  EXPECT_THROW(dual_to_catalytic(identity(4), {2, 2}), NotDualUnitaryError);
}

TEST(Correspondence, PopulationRoundTrips) {
  const auto population = catalytic_population();
  EXPECT_GE(population.size(), 12u);
  for (const Matrix& u : population) {
    const int d = static_cast<int>(std::lround(std::sqrt(u.rows())));
    const FactoredDims dims{d, d};
    EXPECT_LT(catalytic_unitary_residual(u, dims), 1e-9);
    const Matrix v = catalytic_to_dual(u, dims);
    EXPECT_LT(is_dual_unitary(v, dims).value("reshuffled_unitarity_residual"),
              1e-9);
    const Matrix back = dual_to_catalytic(v, dims);
    EXPECT_EQ(back, u);
    EXPECT_TRUE(
        structural_catalytic_check(make_dilation(back, maximally_mixed(d)))
            .report.pass);
  }
}

TEST(Correspondence, HaarUnitariesAreNeither) {
  gen::Rng rng(78);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix u = rng.unitary(4);
    EXPECT_GT(catalytic_unitary_residual(u, {2, 2}), 1e-6);
    EXPECT_FALSE(is_dual_unitary(times_swap(u, 2), {2, 2}).pass());
  }
}

TEST(TimesSwap, ExactPermutation) {
  gen::Rng rng(79);
  const Matrix m = rng.gaussian(9, 9);
  EXPECT_EQ(times_swap(m, 3), m * oracle::swap(3));
  EXPECT_EQ(times_swap(times_swap(m, 3), 3), m);
}

}  // namespace
}  // namespace dilkit
