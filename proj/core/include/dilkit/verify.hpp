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
 * @file verify.hpp
 * @brief Verifiers for equilibrating and catalytic dilations.
 *
 * "For all inputs" conditions are checked exactly through linearity: either
 * on a matrix-unit basis or on one maximally entangled reference state.
 */
#ifndef DILKIT_VERIFY_HPP_
#define DILKIT_VERIFY_HPP_

#include <span>
#include <vector>

#include "dilkit/channel.hpp"
#include "dilkit/linalg.hpp"
#include "dilkit/report.hpp"

namespace dilkit {

struct EquilibriumReport {
  // residual(Tr_env(sigma) - omega_sys), sigma = U (omega_sys (x) omega_env) U^dag
  double fixed_point_residual = 0.0;
  // residual(Tr_sys(sigma) - omega_env)
  double env_preservation_residual = 0.0;
  // residual(sigma - omega_sys (x) omega_env)
  double joint_product_residual = 0.0;
  // residual([U, omega_sys (x) omega_env])
  double commutator_residual = 0.0;
  // I(sys:env) of sigma, nats
  double mutual_info_out = 0.0;
  bool pass = false;

  VerificationReport to_report(const Tolerance& tol = {}) const;
};

struct CatalyticReport {
  // Reference-system test: residual of Tr_sys((1 (x) U)(Omega (x) env)(...)^dag)
  // against 1/d (x) env. Filled by catalytic_check.
  double marginal_residual = 0.0;
  // residual([U, 1 (x) env]). Filled by structural_catalytic_check.
  double structural_commutator_residual = 0.0;
  // Unitarity residual of the system-partial-transpose of each block of U on
  // an eigenspace of env with non-zero eigenvalue.
  std::vector<double> sector_pt_unitarity_residuals;
  bool pass = false;

  VerificationReport to_report(const Tolerance& tol = {}) const;
};

// U restricted to sys (x) (eigenspace of env), one block per eigenvalue
// cluster of the environment state.
struct BlockDecomposition {
  struct Block {
    double env_eigenvalue = 0.0;
    int env_multiplicity = 0;
    int dimension = 0;  // dim_sys * env_multiplicity
    bool in_support = false;
    Matrix env_basis;  // dim_env x env_multiplicity
    Matrix block;      // (1 (x) V)^dag U (1 (x) V)
  };
  std::vector<Block> blocks;

  int total_dimension() const;
};

struct StructuralCatalyticResult {
  CatalyticReport report;
  BlockDecomposition blocks;
};

struct EntropyFlow {
  double s_before = 0.0;  // H(env)
  double s_after = 0.0;   // H(Tr_sys(U (1/d (x) env) U^dag))
  double residual = 0.0;  // |s_before - s_after|
};

struct MultipartiteReport {
  std::vector<double> marginal_residuals;
  double joint_product_residual = 0.0;
  double commutator_residual = 0.0;
  bool pass = false;

  VerificationReport to_report(const Tolerance& tol = {}) const;
};

EquilibriumReport equilibrating_check(const Dilation& dil,
                                      const Matrix& omega_sys,
                                      const Tolerance& tol = {});

CatalyticReport catalytic_check(const Dilation& dil, const Tolerance& tol = {});

// Commutation with 1 (x) env plus unitarity of every support block's system
// partial transpose. Agrees with catalytic_check.
StructuralCatalyticResult structural_catalytic_check(const Dilation& dil,
                                                     const Tolerance& tol = {});

// Reads off U = sum_i U_i (x) |i><i| in the eigenbasis of a non-degenerate
// environment state. Throws DegeneracyError or NotEquilibratingError.
MixedUnitaryDecomposition extract_mixed_unitary(const Dilation& dil,
                                                const Tolerance& tol = {});

EntropyFlow entropy_flow_check(const Dilation& dil, const Tolerance& tol = {});

MultipartiteReport multipartite_equilibrium_check(
    const Matrix& unitary, std::span<const Matrix> states,
    const FactoredDims& dims, const Tolerance& tol = {});

}  // namespace dilkit

#endif  // DILKIT_VERIFY_HPP_
