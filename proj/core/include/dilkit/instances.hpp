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

/**
 * @file instances.hpp
 * @brief Seeded generators for the dilations used in tests, benchmarks and
 *   the command line tool.
 */
#ifndef DILKIT_INSTANCES_HPP_
#define DILKIT_INSTANCES_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "dilkit/channel.hpp"
#include "dilkit/thermal.hpp"

namespace dilkit {

// A unitary on a product of parties that commutes with a product of Gibbs
// states, together with those states and their Hamiltonians.
struct EquilibriumInstance {
  Matrix unitary;
  FactoredDims dims;
  std::vector<Matrix> states;
  std::vector<HamiltonianSpec> hamiltonians;
  double beta = 1.0;

  // Bipartite instances only: party 0 is the system.
  Dilation dilation() const;
};

// Each party gets integer energy levels in {0, 1, 2} and a Haar-rotated
// eigenbasis; U is Haar random inside every sector of fixed total energy.
EquilibriumInstance commuting_block_equilibrium(std::span<const int> dims,
                                                double beta,
                                                std::uint64_t seed);

// exp(-i theta SWAP) on C^d (x) C^d.
Matrix partial_swap(int d, double theta);

// Qubit partial swap with both qubits at energies {0, 1}.
EquilibriumInstance thermal_partial_swap(double theta, double beta);

// U = sum_c U_c (x) |c><c| controlled by a qubit catalyst, ordered
// system (x) catalyst (x) environment with all three parties qubits at
// energies {0, 1}. U_0 = 1 and U_1 = exp(-i theta SWAP) on system and
// environment. tau_cat = omega_cat.
RobustCatalysisProblem controlled_catalysis_instance(double theta, double beta);

// U = U_AB (x) 1_C in the same ordering, with U_AB = exp(-i theta SWAP).
RobustCatalysisProblem spectator_catalysis_instance(double theta, double beta,
                                                    const Matrix& tau_cat);

// tau_cat + eps X, off the diagonal of the catalyst.
RobustCatalysisProblem perturb_catalyst(RobustCatalysisProblem p, double eps);

// k terms on C^d with pairwise distinct probabilities.
MixedUnitaryDecomposition random_mixed_unitary(int d, int k,
                                               std::uint64_t seed);

// Haar unitary with a random full-rank environment state.
Dilation haar_dilation(int d_sys, int d_env, std::uint64_t seed);

// CNOT (system controls) with a maximally mixed qubit environment.
Dilation cnot_dilation();
// SWAP with a maximally mixed qubit environment.
Dilation swap_dilation();

// (1 (x) W) U for a Haar W on the environment.
Dilation rotate_environment(const Dilation& dil, std::uint64_t seed);

// rho -> K0 rho K0^dag + K1 rho K1^dag with K1 = sqrt(gamma) |0><1|.
ChannelChoi amplitude_damping(double gamma);

}  // namespace dilkit

#endif  // DILKIT_INSTANCES_HPP_
