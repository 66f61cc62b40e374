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

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "dilkit/errors.hpp"
#include "dilkit/linalg.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace dilkit {
namespace {

constexpr double kTight = 1e-12;

TEST(PartialTrace, ProductState) {
  gen::Rng rng(11);
  const Matrix rho = rng.density(3), sigma = rng.gaussian(4, 4);
  const Matrix pt = partial_trace(tensor_product(rho, sigma), {3, 4}, {0});
  EXPECT_LT(residual(pt - rho * sigma.trace()), kTight);
}

TEST(PartialTrace, MaximallyEntangledMarginal) {
  const Matrix pt = partial_trace(max_entangled(2), {2, 2}, {1});
  EXPECT_LT(residual(pt - oracle::eye(2) / 2.0), kTight);
}

TEST(PartialTrace, CnotWithMixedControlTarget) {
  gen::Rng rng(12);
  const Matrix rho = rng.density(2);
  const Matrix joint =
      gates::cnot() * tensor_product(rho, maximally_mixed(2)) * gates::cnot();
  const Matrix z = oracle::pauli_z();
  EXPECT_LT(residual(partial_trace(joint, {2, 2}, {0}) - (rho + z * rho * z) / 2.0),
            kTight);
}

TEST(PartialTrace, MatchesLoopOracle) {
  gen::Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const int da = rng.integer(1, 4), db = rng.integer(1, 4);
    const Matrix m = rng.gaussian(da * db, da * db);
    EXPECT_LT(residual(partial_trace(m, {da, db}, {0}) -
                       oracle::trace_second(m, da, db)),
              kTight);
    EXPECT_LT(residual(partial_trace(m, {da, db}, {1}) -
                       oracle::trace_first(m, da, db)),
              kTight);
  }
}

TEST(PartialTrace, PreservesTraceOnThreeFactors) {
  gen::Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const FactoredDims dims{rng.integer(1, 3), rng.integer(1, 3),
                            rng.integer(1, 3)};
    const Matrix m = rng.gaussian(dims.total(), dims.total());
    for (const std::array<int, 2> keep :
         {std::array<int, 2>{0, 2}, std::array<int, 2>{1, 2}}) {
      const Matrix pt = partial_trace(m, dims, keep);
      EXPECT_LT(std::abs(pt.trace() - m.trace()), dims.total() * 1e-9);
    }
  }
}

TEST(PartialTrace, KeepOrderFollowsFactors) {
  gen::Rng rng(15);
  const Matrix a = rng.density(2), b = rng.density(3), c = rng.density(2);
  const std::array<Matrix, 3> f{a, b, c};
  const Matrix m = tensor_product(f);
  EXPECT_LT(residual(partial_trace(m, {2, 3, 2}, {0, 2}) - tensor_product(a, c)),
            kTight);
}

TEST(PartialTrace, RejectsInconsistentDims) {
  EXPECT_THROW(partial_trace(identity(6), {2, 2}, {0}), DimensionError);
}

TEST(PartialTranspose, ProductCase) {
  gen::Rng rng(21);
  const Matrix a = rng.gaussian(3, 3), b = rng.gaussian(2, 2);
  EXPECT_LT(residual(partial_transpose(tensor_product(a, b), {3, 2}, 0) -
                     tensor_product(a.transpose(), b)),
            kTight);
}

TEST(PartialTranspose, CnotInvariant) {
  EXPECT_EQ(partial_transpose(gates::cnot(), {2, 2}, 0), oracle::cnot());
}

TEST(PartialTranspose, SwapBecomesRankOne) {
  const Matrix pt = partial_transpose(swap_operator(2), {2, 2}, 0);
  EXPECT_LT(residual(pt - 2.0 * max_entangled(2)), kTight);
  EXPECT_NEAR(pt.trace().real(), 2.0, kTight);
  Eigen::ComplexEigenSolver<Matrix> es(pt);
  int nonzero = 0;
  for (int i = 0; i < 4; ++i) nonzero += std::abs(es.eigenvalues()(i)) > 1e-9;
  EXPECT_EQ(nonzero, 1);
  EXPECT_GT(unitarity_residual(pt), 0.1);
}

TEST(PartialTranspose, InvolutionAndLoopOracle) {
  gen::Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const int da = rng.integer(1, 4), db = rng.integer(1, 4);
    const Matrix m = rng.gaussian(da * db, da * db);
    const Matrix pt = partial_transpose(m, {da, db}, 0);
    EXPECT_EQ(pt, oracle::transpose_first(m, da, db));
    EXPECT_EQ(partial_transpose(pt, {da, db}, 0), m);
    EXPECT_EQ(partial_transpose(partial_transpose(m, {da, db}, 1), {da, db}, 1),
              m);
  }
}

TEST(Reshuffle, SwapIsDualUnitary) {
  const Matrix r = reshuffle(swap_operator(2), {2, 2});
  EXPECT_EQ(r, oracle::realign(oracle::swap(2), 2, 2));
  EXPECT_LT(unitarity_residual(r), kTight);
}

TEST(Reshuffle, IdentityIsRankOne) {
  // The realignment of the identity is sum |ii><jj| = d |Omega><Omega|.
  const Matrix r = reshuffle(identity(4), {2, 2});
  EXPECT_EQ(r, oracle::realign(oracle::eye(4), 2, 2));
  EXPECT_LT(residual(r - 2.0 * max_entangled(2)), kTight);
  Eigen::JacobiSVD<Matrix> svd(r);
  int rank = 0;
  for (int i = 0; i < 4; ++i) rank += svd.singularValues()(i) > 1e-9;
  EXPECT_EQ(rank, 1);
  EXPECT_GT(unitarity_residual(r), 0.1);
}

TEST(Reshuffle, InvolutionOnRandomOperators) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int d1 = rng.integer(1, 3), d2 = rng.integer(1, 3);
    const Matrix v = rng.gaussian(d1 * d2, d1 * d2);
    const Matrix r = reshuffle(v, {d1, d2}, {d1, d2});
    EXPECT_EQ(r, oracle::realign(v, d1, d2));
    EXPECT_EQ(reshuffle(r, {d1, d1}, {d2, d2}), v);
    if (d1 == d2) EXPECT_EQ(reshuffle(reshuffle(v, {d1, d2}), {d1, d2}), v);
  }
}

TEST(Reshuffle, RejectsNonBipartite) {
  EXPECT_THROW(reshuffle(identity(8), FactoredDims{2, 2, 2}), DimensionError);
}

TEST(PermuteSubsystems, MovesFactors) {
  gen::Rng rng(32);
  const Matrix a = rng.gaussian(2, 2), b = rng.gaussian(3, 3),
               c = rng.gaussian(2, 2);
  const std::array<Matrix, 3> in{a, b, c}, out{c, a, b};
  const std::array<int, 3> perm{2, 0, 1};
  EXPECT_LT(residual(permute_subsystems(tensor_product(in), {2, 3, 2}, perm) -
                     tensor_product(out)),
            kTight);
}

TEST(Spectral, DiagonalSortedDescending) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 3.0;
  m(1, 1) = 1.0;
  m(2, 2) = 2.0;
  const Spectrum s = hermitian_spectral(m);
  EXPECT_NEAR(s.values(0), 3.0, kTight);
  EXPECT_NEAR(s.values(1), 2.0, kTight);
  EXPECT_NEAR(s.values(2), 1.0, kTight);
}

TEST(Spectral, PauliX) {
  const Spectrum s = hermitian_spectral(gates::pauli_x());
  EXPECT_NEAR(s.values(0), 1.0, kTight);
  EXPECT_NEAR(s.values(1), -1.0, kTight);
}

TEST(Spectral, ReconstructionAndPhaseConvention) {
  gen::Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = rng.integer(1, 8);
    const Matrix h = rng.hermitian(d);
    const Spectrum s = hermitian_spectral(h);
    EXPECT_LT(residual(h - s.vectors * s.values.cast<Complex>().asDiagonal() *
                               s.vectors.adjoint()),
              1e-10);
    for (Eigen::Index i = 1; i < s.values.size(); ++i)
      EXPECT_GE(s.values(i - 1), s.values(i));
    for (int c = 0; c < d; ++c) {
      int first = 0;
      while (std::abs(s.vectors(first, c)) <= 1e-10) ++first;
      EXPECT_NEAR(s.vectors(first, c).imag(), 0.0, kTight);
      EXPECT_GT(s.vectors(first, c).real(), 0.0);
    }
  }
}

TEST(Spectral, RejectsNonHermitian) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(hermitian_spectral(m), ValidationError);
}

TEST(Spectral, SectorsMergeDegenerateEigenvalues) {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 0.4;
  m(1, 1) = 0.4 + 1e-12;
  m(2, 2) = 0.2;
  m(3, 3) = 0.0;
  const auto sectors = eigen_sectors(m);
  ASSERT_EQ(sectors.size(), 3u);
  EXPECT_EQ(sectors[0].basis.cols(), 2);
  EXPECT_FALSE(nondegenerate_spectrum(m));
  EXPECT_LT(residual(support_projector(m) -
                     (oracle::ket_bra(4, 0, 0) + oracle::ket_bra(4, 1, 1) +
                      oracle::ket_bra(4, 2, 2))),
            kTight);
}

TEST(PowerIt, ZeroTimeIsIdentity) {
  gen::Rng rng(51);
  EXPECT_LT(residual(matrix_power_it(rng.density(3), 0.0) - identity(3)), 1e-10);
}

TEST(PowerIt, DiagonalCase) {
  Matrix w = Matrix::Zero(2, 2);
  w(0, 0) = 2.0 / 3.0;
  w(1, 1) = 1.0 / 3.0;
  const double t = 0.83;
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = std::exp(Complex(0.0, t * std::log(2.0 / 3.0)));
  expected(1, 1) = std::exp(Complex(0.0, t * std::log(1.0 / 3.0)));
  EXPECT_LT(residual(matrix_power_it(w, t) - expected), kTight);
}

TEST(PowerIt, UnitaryOnSupportAndGroupLaw) {
  gen::Rng rng(52);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = rng.integer(2, 5);
    const Matrix w = rng.density(d);
    const double s = rng.real(-3.0, 3.0), t = rng.real(-3.0, 3.0);
    const Matrix ws = matrix_power_it(w, s), wt = matrix_power_it(w, t);
    EXPECT_LT(residual(wt * wt.adjoint() - support_projector(w)), 1e-10);
    EXPECT_LT(residual(ws * wt - matrix_power_it(w, s + t)), 1e-9);
  }
}

TEST(PowerIt, VanishesOffSupport) {
  const Matrix w = oracle::ket_bra(2, 0, 0);
  const Matrix p = matrix_power_it(w, 1.3);
  EXPECT_NEAR(std::abs(p(1, 1)), 0.0, kTight);
  EXPECT_NEAR(std::abs(p(0, 0)), 1.0, kTight);
}

TEST(Entropy, KnownValues) {
  gen::Rng rng(61);
  EXPECT_NEAR(von_neumann_entropy(rng.pure(3)), 0.0, 1e-9);
  for (int d = 1; d <= 6; ++d)
    EXPECT_NEAR(von_neumann_entropy(maximally_mixed(d)), std::log(d), 1e-12);
  Matrix w = Matrix::Zero(2, 2);
  w(0, 0) = 2.0 / 3.0;
  w(1, 1) = 1.0 / 3.0;
  EXPECT_NEAR(von_neumann_entropy(w), oracle::shannon({2.0 / 3.0, 1.0 / 3.0}),
              1e-12);
  EXPECT_NEAR(von_neumann_entropy(w), 0.6365, 1e-4);
}

TEST(Entropy, Bounds) {
  gen::Rng rng(62);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = rng.integer(1, 6);
    const double h = von_neumann_entropy(rng.density(d));
    EXPECT_GE(h, 0.0);
    EXPECT_LE(h, std::log(d) + 1e-9);
  }
}

TEST(MutualInformation, KnownValues) {
  gen::Rng rng(71);
  EXPECT_NEAR(mutual_information(tensor_product(rng.density(2), rng.density(3)),
                                 {2, 3}),
              0.0, 1e-9);
  EXPECT_NEAR(mutual_information(max_entangled(2), {2, 2}), 2.0 * std::log(2.0),
              1e-12);
  const Matrix classical =
      (oracle::ket_bra(4, 0, 0) + oracle::ket_bra(4, 3, 3)) / 2.0;
  EXPECT_NEAR(mutual_information(classical, {2, 2}), std::log(2.0), 1e-12);
}

TEST(MutualInformation, ZeroExactlyOnProducts) {
  gen::Rng rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    const int da = rng.integer(2, 3), db = rng.integer(2, 3);
    const FactoredDims dims{da, db};
    const Matrix product = tensor_product(rng.density(da), rng.density(db));
    const double i_prod = mutual_information(product, dims);
    EXPECT_GE(i_prod, -dims.total() * 1e-9);
    EXPECT_LT(i_prod, 1e-9);

    const Matrix correlated = rng.density(da * db);
    const Matrix marg = tensor_product(partial_trace(correlated, dims, {0}),
                                       partial_trace(correlated, dims, {1}));
    ASSERT_GT(residual(correlated - marg), 1e-6);
    EXPECT_GT(mutual_information(correlated, dims), 1e-9);
  }
}

TEST(RelativeEntropy, KnownValues) {
  gen::Rng rng(81);
  const Matrix rho = rng.density(3);
  EXPECT_NEAR(relative_entropy(rho, rho), 0.0, 1e-9);
  for (int d = 2; d <= 5; ++d)
    EXPECT_NEAR(relative_entropy(rng.pure(d), maximally_mixed(d)), std::log(d),
                1e-9);
  EXPECT_EQ(relative_entropy(oracle::ket_bra(2, 0, 0), oracle::ket_bra(2, 1, 1)),
            std::numeric_limits<double>::infinity());
}

TEST(RelativeEntropy, NonNegative) {
  gen::Rng rng(82);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = rng.integer(2, 4);
    EXPECT_GE(relative_entropy(rng.density(d), rng.density(d)), -1e-9);
  }
}

TEST(Constructors, SwapMaxEntangledHaar) {
  Matrix ket01 = Matrix::Zero(4, 1), ket10 = Matrix::Zero(4, 1);
  ket01(1) = 1.0;
  ket10(2) = 1.0;
  EXPECT_EQ(swap_operator(2) * ket01, ket10);
  EXPECT_EQ(swap_operator(3), oracle::swap(3));
  EXPECT_LT(residual(partial_trace(max_entangled(3), {3, 3}, {0}) -
                     maximally_mixed(3)),
            kTight);
  const Matrix u = haar_random_unitary(4, 99);
  EXPECT_LT((u.adjoint() * u - identity(4)).norm(), 1e-12);
  EXPECT_EQ(u, haar_random_unitary(4, 99));
  EXPECT_NE(u, haar_random_unitary(4, 100));
  const Matrix rho = random_density(4, 5);
  EXPECT_EQ(rho, random_density(4, 5));
  EXPECT_NO_THROW(check_density(rho, {}, "rho"));
  EXPECT_THROW(identity(0), InputError);
  EXPECT_THROW(haar_random_unitary(0, 1), InputError);
}

TEST(Constructors, GatesMatchOracle) {
  EXPECT_EQ(gates::cnot(), oracle::cnot());
  EXPECT_EQ(gates::pauli_x(), oracle::pauli_x());
  EXPECT_EQ(gates::pauli_z(), oracle::pauli_z());
  EXPECT_LT(unitarity_residual(gates::hadamard()), kTight);
  EXPECT_LT(unitarity_residual(gates::pauli_y()), kTight);
}

TEST(Checks, ResidualNormalisation) {
  EXPECT_NEAR(residual(identity(4)), 1.0, kTight);
  EXPECT_NEAR(residual(2.0 * identity(9)), 2.0, kTight);
  EXPECT_THROW(check_unitary(2.0 * identity(2), {}, "u"), ValidationError);
  Matrix bad = identity(2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_FALSE(is_finite(bad));
  EXPECT_THROW(check_density(bad, {}, "rho"), ValidationError);
  EXPECT_THROW(check_density(identity(2), {}, "rho"), ValidationError);
  EXPECT_THROW((Tolerance{-1.0, 1e-8}.validate()), ValidationError);
}

}  // namespace
}  // namespace dilkit
