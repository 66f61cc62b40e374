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
#include <vector>

#include "dilkit/errors.hpp"
#include "dilkit/instances.hpp"
#include "dilkit/schur.hpp"
#include "dilkit/verify.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace dilkit {
namespace {

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

// Eq. (4)-(5) checked on every matrix unit: Tr_sys U (E_ij (x) env) U^dag
// must equal delta_ij env.
double exhaustive_catalytic_residual(const Dilation& dil) {
  double worst = 0.0;
  for (int i = 0; i < dil.dim_sys; ++i)
    for (int j = 0; j < dil.dim_sys; ++j) {
      const Matrix joint = dil.unitary *
                           oracle::kron(oracle::ket_bra(dil.dim_sys, i, j),
                                        dil.env_state) *
                           dil.unitary.adjoint();
      Matrix expected = Matrix::Zero(dil.dim_env, dil.dim_env);
      if (i == j) expected = dil.env_state;
      worst = std::max(worst, oracle::frob(oracle::trace_first(
                                               joint, dil.dim_sys, dil.dim_env) -
                                           expected));
    }
  return worst;
}

TEST(Equilibrating, CnotWithMaximallyMixedStates) {
  const EquilibriumReport r =
      equilibrating_check(cnot_dilation(), maximally_mixed(2));
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.fixed_point_residual, 1e-12);
  EXPECT_LT(r.env_preservation_residual, 1e-12);
  EXPECT_LT(r.joint_product_residual, 1e-12);
  EXPECT_LT(r.commutator_residual, 1e-12);
}

TEST(Equilibrating, CommutingBlocksPassAndDecorrelate) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::array<int, 2> dims{2 + static_cast<int>(seed % 2),
                                  2 + static_cast<int>(seed % 3)};
    const EquilibriumInstance inst =
        commuting_block_equilibrium(dims, 0.8, seed);
    const EquilibriumReport r =
        equilibrating_check(inst.dilation(), inst.states[0]);
    ASSERT_LT(r.fixed_point_residual, 1e-12);
    ASSERT_LT(r.env_preservation_residual, 1e-12);
    EXPECT_TRUE(r.pass);
    EXPECT_LT(r.joint_product_residual, 1e-8);
    EXPECT_LT(r.mutual_info_out, 1e-8);
    EXPECT_LT(r.commutator_residual, 1e-8);
  }
}

TEST(Equilibrating, HaarDilationsGenericallyFail) {
  int failures = 0;
  gen::Rng rng(200);
  for (int trial = 0; trial < 100; ++trial) {
    const Dilation dil = haar_dilation(2, 2, rng.seed());
    const EquilibriumReport r = equilibrating_check(dil, rng.density(2));
    failures += r.env_preservation_residual > 1e-6;
    EXPECT_FALSE(r.pass);
  }
  EXPECT_GE(failures, 99);
}

TEST(Equilibrating, ReportGating) {
  const EquilibriumReport r =
      equilibrating_check(swap_dilation(), diag2(0.8, 0.2));
  EXPECT_FALSE(r.pass);
  const VerificationReport v = r.to_report({});
  EXPECT_FALSE(v.pass());
  EXPECT_EQ(v.worst_failure()->name, "fixed_point_residual");
  EXPECT_THROW(equilibrating_check(cnot_dilation(), maximally_mixed(3)),
               DimensionError);
}

TEST(Catalytic, Examples) {
  MixedUnitaryDecomposition dec = random_mixed_unitary(3, 3, 4);
  EXPECT_TRUE(catalytic_check(dec.dilation()).pass);
  const CatalyticReport cnot = catalytic_check(cnot_dilation());
  EXPECT_TRUE(cnot.pass);
  EXPECT_LT(cnot.marginal_residual, 1e-12);
  for (const Matrix& env :
       {maximally_mixed(2), diag2(0.9, 0.1), diag2(1.0, 0.0)}) {
    const CatalyticReport swap =
        catalytic_check(make_dilation(swap_operator(2), env));
    EXPECT_FALSE(swap.pass);
    EXPECT_GT(swap.marginal_residual, 0.1);
  }
}

TEST(Catalytic, SwapMarginalOracle) {
  // Tr_sys of (1 (x) SWAP)(|Omega><Omega| (x) 1/2) is |Omega><Omega| on R,env.
  const CatalyticReport r = catalytic_check(swap_dilation());
  EXPECT_NEAR(r.marginal_residual,
              oracle::frob(max_entangled(2) - maximally_mixed(4)), 1e-12);
}

TEST(Catalytic, SingleEntangledTestMatchesExhaustiveCheck) {
  gen::Rng rng(300);
  std::vector<Dilation> population{cnot_dilation(), swap_dilation()};
  for (int i = 0; i < 10; ++i) {
    population.push_back(random_mixed_unitary(rng.integer(2, 3),
                                              rng.integer(1, 4), rng.seed())
                             .dilation());
    population.push_back(haar_dilation(2, rng.integer(1, 3), rng.seed()));
    population.push_back(
        build_schur_dilation(random_gram_schur(rng.integer(2, 4),
                                               rng.integer(1, 3), rng.seed()))
            .dilation);
  }
  for (const Dilation& dil : population) {
    const bool single = catalytic_check(dil).pass;
    const bool exhaustive = exhaustive_catalytic_residual(dil) < 1e-9;
    EXPECT_EQ(single, exhaustive);
    EXPECT_EQ(single, structural_catalytic_check(dil).report.pass);
  }
}

TEST(Structural, CnotPassesSwapFails) {
  const StructuralCatalyticResult cnot =
      structural_catalytic_check(cnot_dilation());
  EXPECT_TRUE(cnot.report.pass);
  ASSERT_EQ(cnot.blocks.blocks.size(), 1u);
  EXPECT_EQ(cnot.blocks.total_dimension(), 4);
  EXPECT_LT(cnot.report.sector_pt_unitarity_residuals[0], 1e-12);

  const StructuralCatalyticResult swap =
      structural_catalytic_check(swap_dilation());
  EXPECT_FALSE(swap.report.pass);
  EXPECT_LT(swap.report.structural_commutator_residual, 1e-12);
  // SWAP^{T_A} = 2|Omega><Omega|, whose unitarity residual is
  // ||4|Omega><Omega| - 1||_F / 2 = sqrt(9 + 3) / 2.
  EXPECT_NEAR(swap.report.sector_pt_unitarity_residuals[0],
              std::sqrt(12.0) / 2.0, 1e-12);
}

TEST(Structural, ControlledUnitaryWithDiagonalEnvironment) {
  gen::Rng rng(301);
  MixedUnitaryDecomposition dec;
  dec.terms = {{0.5, rng.unitary(3)}, {0.3, rng.unitary(3)}, {0.2, rng.unitary(3)}};
  const StructuralCatalyticResult r = structural_catalytic_check(dec.dilation());
  EXPECT_TRUE(r.report.pass);
  EXPECT_EQ(r.blocks.blocks.size(), 3u);
  EXPECT_EQ(r.blocks.total_dimension(), 9);
  for (const auto& b : r.blocks.blocks)
    EXPECT_LT(unitarity_residual(b.block), 1e-12);
}

TEST(Structural, KernelSectorIsIgnored) {
  // Arbitrary action on sys (x) ker(env) does not affect the channel.
  gen::Rng rng(302);
  const Matrix p0 = oracle::ket_bra(2, 0, 0), p1 = oracle::ket_bra(2, 1, 1);
  const Matrix v = tensor_product(rng.unitary(2), p0) +
                   tensor_product(gates::hadamard() * gates::pauli_x(), p1);
  const Dilation dil = make_dilation(v, p0);
  EXPECT_TRUE(catalytic_check(dil).pass);
  const StructuralCatalyticResult r = structural_catalytic_check(dil);
  EXPECT_TRUE(r.report.pass);
  EXPECT_EQ(r.report.sector_pt_unitarity_residuals.size(), 1u);
}

TEST(Nondegenerate, ThresholdSemantics) {
  EXPECT_TRUE(nondegenerate_spectrum(diag2(0.7, 0.3)));
  EXPECT_FALSE(nondegenerate_spectrum(maximally_mixed(2)));
  const double g = 1e-8 * 0.5 / 2.0;
  EXPECT_FALSE(nondegenerate_spectrum(diag2(0.5, 0.5 - g)));
}

TEST(Extract, ReadsOffBlocks) {
  const Matrix u = tensor_product(identity(2), oracle::ket_bra(2, 0, 0)) +
                   tensor_product(gates::pauli_x(), oracle::ket_bra(2, 1, 1));
  const MixedUnitaryDecomposition dec =
      extract_mixed_unitary(make_dilation(u, diag2(0.7, 0.3)));
  ASSERT_EQ(dec.terms.size(), 2u);
  EXPECT_NEAR(dec.terms[0].probability, 0.7, 1e-12);
  EXPECT_NEAR(dec.terms[1].probability, 0.3, 1e-12);
  EXPECT_LT(residual(dec.terms[0].unitary - identity(2)), 1e-12);
  EXPECT_LT(residual(dec.terms[1].unitary - gates::pauli_x()), 1e-12);
}

TEST(Extract, RoundTripDistinctProbabilities) {
  gen::Rng rng(400);
  for (int trial = 0; trial < 30; ++trial) {
    const MixedUnitaryDecomposition dec = random_mixed_unitary(
        rng.integer(1, 4), rng.integer(1, 4), rng.seed());
    const MixedUnitaryDecomposition back = extract_mixed_unitary(dec.dilation());
    EXPECT_LT(channel_distance(back.channel(), dec.channel()), 1e-9);
    EXPECT_EQ(back.terms.size(), dec.terms.size());
  }
}

TEST(Extract, Errors) {
  try {
    extract_mixed_unitary(cnot_dilation());
    FAIL() << "expected DegeneracyError";
  } catch (const DegeneracyError& e) {
    EXPECT_EQ(e.residual_name(), "min_eigenvalue_gap");
  }
  const Dilation haar = make_dilation(haar_random_unitary(4, 3), diag2(0.7, 0.3));
  EXPECT_THROW(extract_mixed_unitary(haar), NotEquilibratingError);
}

TEST(EntropyFlow, CatalyticIsInvariant) {
  gen::Rng rng(500);
  for (int trial = 0; trial < 10; ++trial) {
    const Dilation dil =
        random_mixed_unitary(3, 3, rng.seed()).dilation();
    EXPECT_LT(entropy_flow_check(dil).residual, 1e-9);
    EXPECT_LT(entropy_flow_check(rotate_environment(dil, rng.seed())).residual,
              1e-9);
  }
}

TEST(EntropyFlow, CnotWithBiasedEnvironment) {
  // With the system as control, a maximally mixed input flips the target with
  // probability 1/2, so the environment ends maximally mixed.
  const EntropyFlow f = entropy_flow_check(
      make_dilation(gates::cnot(), diag2(0.9, 0.1)));
  EXPECT_NEAR(f.s_before, oracle::shannon({0.9, 0.1}), 1e-12);
  EXPECT_NEAR(f.s_after, std::log(2.0), 1e-12);
  EXPECT_NEAR(f.residual, std::log(2.0) - oracle::shannon({0.9, 0.1}), 1e-12);
}

TEST(EntropyFlow, SwapWithPureEnvironment) {
  const EntropyFlow f =
      entropy_flow_check(make_dilation(swap_operator(2), diag2(1.0, 0.0)));
  EXPECT_NEAR(f.s_before, 0.0, 1e-12);
  EXPECT_NEAR(f.s_after, std::log(2.0), 1e-12);
  EXPECT_NEAR(f.residual, std::log(2.0), 1e-9);
}

TEST(Multipartite, ProductOfEquilibriaWithSpectator) {
  const std::array<int, 2> dims{2, 2};
  const EquilibriumInstance ab = commuting_block_equilibrium(dims, 1.0, 7);
  gen::Rng rng(600);
  const Matrix wc = rng.density(2);
  const std::array<Matrix, 3> states{ab.states[0], ab.states[1], wc};
  const MultipartiteReport r = multipartite_equilibrium_check(
      tensor_product(ab.unitary, identity(2)), states, {2, 2, 2});
  EXPECT_TRUE(r.pass);
  EXPECT_LT(r.joint_product_residual, 1e-9);
}

TEST(Multipartite, CommutingBlocksForThreeAndFourParties) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::vector<int> dims(3 + seed % 2, 2);
    const EquilibriumInstance inst = commuting_block_equilibrium(dims, 1.2, seed);
    const MultipartiteReport r =
        multipartite_equilibrium_check(inst.unitary, inst.states, inst.dims);
    for (double m : r.marginal_residuals) ASSERT_LT(m, 1e-12);
    EXPECT_TRUE(r.pass);
    EXPECT_LT(r.joint_product_residual, 1e-8);
  }
}

TEST(Multipartite, HaarFailsAndDimsChecked) {
  gen::Rng rng(601);
  const std::array<Matrix, 3> states{rng.density(2), rng.density(2),
                                     rng.density(2)};
  EXPECT_FALSE(
      multipartite_equilibrium_check(rng.unitary(8), states, {2, 2, 2}).pass);
  EXPECT_THROW(
      multipartite_equilibrium_check(rng.unitary(8), states, {2, 4}),
      DimensionError);
  const std::array<Matrix, 1> one{rng.density(2)};
  EXPECT_THROW(multipartite_equilibrium_check(identity(2), one, {2}),
               DimensionError);
}

}  // namespace
}  // namespace dilkit
