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
 * @file thermal.hpp
 * @brief Gibbs states, emergent Hamiltonians and thermal-operation checks.
 *
 * The inverse temperature is an explicit argument everywhere; nothing here
 * mixes states prepared at different beta.
 */
#ifndef DILKIT_THERMAL_HPP_
#define DILKIT_THERMAL_HPP_

#include <optional>
#include <string>

#include "dilkit/channel.hpp"
#include "dilkit/linalg.hpp"
#include "dilkit/report.hpp"
#include "dilkit/verify.hpp"

namespace dilkit {

struct HamiltonianSpec {
  Matrix h;
  std::string label;

  void validate(const Tolerance& tol = {}) const;
};

struct GibbsSpec {
  HamiltonianSpec hamiltonian;
  double beta = 0.0;
  double partition_function = 1.0;
};

struct GibbsState {
  Matrix state;
  GibbsSpec spec;
};

// e^{-beta H} / Tr e^{-beta H}. beta must be >= 0.
GibbsState gibbs(const HamiltonianSpec& h, double beta,
                 const Tolerance& tol = {});

// H = -(log(omega) + log(Z)) / beta, so that gibbs(H, beta) == omega with
// partition function Z. Without Z the ground energy is placed at 0, i.e.
// Z = 1 / lambda_max = Tr e^{-beta H}. Throws RankError for rank-deficient
// omega.
HamiltonianSpec emergent_hamiltonian(
    const Matrix& omega, double beta,
    std::optional<double> partition_function = std::nullopt,
                                     const Tolerance& tol = {});

// Gating residuals: env_gibbs_residual, energy_commutator_residual
// (||[U, H]||_F / max(||H||_F, sqrt(dim)) for H = H_sys + H_env) and the
// equilibrium residuals of the dilation with respect to gibbs(H_sys, beta).
VerificationReport thermal_operation_check(const Dilation& dil,
                                           const HamiltonianSpec& h_sys,
                                           const HamiltonianSpec& h_env,
                                           double beta,
                                           const Tolerance& tol = {});

struct ThermalIdentification {
  HamiltonianSpec h_sys;
  HamiltonianSpec h_env;
  // Environment restricted to the support of its state.
  Dilation restricted;
  EquilibriumReport equilibrium;
};

// Reads Hamiltonians off an equilibrating dilation with full-rank omega_sys
// (partition functions fixed to 1). Throws RankError / NotEquilibratingError.
ThermalIdentification equilibrating_to_thermal(const Dilation& dil,
                                               const Matrix& omega_sys,
                                               double beta,
                                               const Tolerance& tol = {});

// residual(Tr_sys(U (omega_sys (x) env) U^dag) - env).
double nonequilibrium_witness(const Dilation& dil, const Matrix& omega_sys,
                              const Tolerance& tol = {});

// A unitary on sys (x) catalyst (x) env, in that factor order, with the Gibbs
// states it conserves and the catalyst state actually used.
struct RobustCatalysisProblem {
  Matrix unitary;
  FactoredDims dims;  // [d_sys, d_cat, d_env]
  Matrix omega_sys;
  Matrix omega_cat;
  Matrix tau_cat;
  Matrix omega_env;
};

struct RobustReduction {
  // Same unitary with environment cat (x) env in state tau_cat (x) omega_env.
  Dilation merged;
  // Largest residual of Tr_{sys,env}(U (E_ij (x) tau (x) omega_env) U^dag)
  // against delta_ij tau over matrix units E_ij.
  double catalyst_preservation_residual = 0.0;
  VerificationReport report;
};

// Throws NotThermalError when U does not commute with the Gibbs product, and
// NotRobustError when the catalyst is not preserved for every system input.
RobustReduction robust_catalysis_reduce(const RobustCatalysisProblem& problem,
                                        double beta,
                                        const Tolerance& tol = {});

}  // namespace dilkit

#endif  // DILKIT_THERMAL_HPP_
