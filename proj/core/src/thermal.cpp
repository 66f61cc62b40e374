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

#include "dilkit/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dilkit/errors.hpp"

namespace dilkit {

void HamiltonianSpec::validate(const Tolerance& tol) const {
  check_square(h, "Hamiltonian");
  if (!is_finite(h)) throw ValidationError("Hamiltonian: non-finite entries");
  const double scale = std::max(1.0, residual(h));
  if (!(hermiticity_residual(h) < tol.abs_tol * scale))
    throw ValidationError("Hamiltonian '" + label + "' is not Hermitian");
}

GibbsState gibbs(const HamiltonianSpec& h, double beta, const Tolerance& tol) {
  if (!(beta >= 0.0) || !std::isfinite(beta))
    throw ValidationError("gibbs: beta must be finite and >= 0");
  h.validate(tol);
  const Spectrum s = hermitian_spectral(h.h, tol);
  const double e_min = s.values(s.values.size() - 1);
  RealVector weights(s.values.size());
  for (Eigen::Index i = 0; i < s.values.size(); ++i)
    weights(i) = std::exp(-beta * (s.values(i) - e_min));
  const double shifted_z = weights.sum();
  GibbsState g;
  g.state = s.vectors * (weights / shifted_z).cast<Complex>().asDiagonal() *
            s.vectors.adjoint();
  g.state = 0.5 * (g.state + g.state.adjoint());
  g.spec.hamiltonian = h;
  g.spec.beta = beta;
  g.spec.partition_function = shifted_z * std::exp(-beta * e_min);
  return g;
}

HamiltonianSpec emergent_hamiltonian(const Matrix& omega, double beta,
                                     std::optional<double> partition_function,
                                     const Tolerance& tol) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw ValidationError("emergent_hamiltonian: beta must be > 0");
  if (partition_function && !(*partition_function > 0.0))
    throw ValidationError("emergent_hamiltonian: partition function must be > 0");
  check_density(omega, tol, "emergent_hamiltonian state");
  const Spectrum s = hermitian_spectral(omega, tol);
  const double lambda_min = s.values(s.values.size() - 1);
  if (!(lambda_min > tol.degeneracy_gap * s.values(0)))
    throw RankError("emergent_hamiltonian: state is not full rank "
                    "(min eigenvalue " + std::to_string(lambda_min) + ")");
  const double log_z = partition_function ? std::log(*partition_function)
                                           : -std::log(s.values(0));
  RealVector energies(s.values.size());
  for (Eigen::Index i = 0; i < s.values.size(); ++i)
    energies(i) = -(std::log(s.values(i)) + log_z) / beta;
  HamiltonianSpec out;
  out.h = s.vectors * energies.cast<Complex>().asDiagonal() *
          s.vectors.adjoint();
  out.h = 0.5 * (out.h + out.h.adjoint());
  out.label = "emergent";
  return out;
}

VerificationReport thermal_operation_check(const Dilation& dil,
                                           const HamiltonianSpec& h_sys,
                                           const HamiltonianSpec& h_env,
                                           double beta,
                                           const Tolerance& tol) {
  dil.validate(tol);
  if (h_sys.h.rows() != dil.dim_sys || h_env.h.rows() != dil.dim_env)
    throw DimensionError("thermal_operation_check: Hamiltonian dimension mismatch");
  h_sys.validate(tol);
  h_env.validate(tol);

  const GibbsState env_gibbs = gibbs(h_env, beta, tol);
  const Matrix h_total = tensor_product(h_sys.h, identity(dil.dim_env)) +
                         tensor_product(identity(dil.dim_sys), h_env.h);
  // Relative to ||H||_F, falling back to the absolute residual when H is
  // close to a multiple of zero.
  const double h_norm = std::max(
      h_total.norm(), std::sqrt(static_cast<double>(h_total.rows())));
  const double comm = commutator(dil.unitary, h_total).norm() / h_norm;

  VerificationReport r("thermal_operation");
  r.add("env_gibbs_residual", residual(dil.env_state - env_gibbs.state),
        tol.abs_tol);
  r.add("energy_commutator_residual", comm, tol.abs_tol);

  const GibbsState sys_gibbs = gibbs(h_sys, beta, tol);
  r.merge(equilibrating_check(dil, sys_gibbs.state, tol).to_report(tol),
          "equilibrium.");
  return r;
}

ThermalIdentification equilibrating_to_thermal(const Dilation& dil,
                                               const Matrix& omega_sys,
                                               double beta,
                                               const Tolerance& tol) {
  dil.validate(tol);
  check_density(omega_sys, tol, "equilibrating_to_thermal system state");
  {
    const Spectrum s = hermitian_spectral(omega_sys, tol);
    if (!(s.values(s.values.size() - 1) > tol.degeneracy_gap * s.values(0)))
      throw RankError("equilibrating_to_thermal: system state is not full rank");
  }
  ThermalIdentification out;
  out.equilibrium = equilibrating_check(dil, omega_sys, tol);
  if (!out.equilibrium.pass) {
    const bool env_worse = out.equilibrium.env_preservation_residual >=
                           out.equilibrium.fixed_point_residual;
    throw NotEquilibratingError(
        "equilibrating_to_thermal: dilation is not equilibrating",
        env_worse ? "env_preservation_residual" : "fixed_point_residual",
        env_worse ? out.equilibrium.env_preservation_residual
                  : out.equilibrium.fixed_point_residual,
        tol.abs_tol);
  }

  // Restrict the environment to the support of its state.
  const Spectrum env = hermitian_spectral(dil.env_state, tol);
  const double cut = tol.degeneracy_gap * env.values(0);
  Eigen::Index rank = 0;
  while (rank < env.values.size() && env.values(rank) > cut) ++rank;
  const Matrix basis = env.vectors.leftCols(rank);
  const Matrix embed = tensor_product(identity(dil.dim_sys), basis);
  Matrix env_state = basis.adjoint() * dil.env_state * basis;
  env_state /= env_state.trace().real();
  env_state = 0.5 * (env_state + env_state.adjoint());

  out.restricted.unitary = embed.adjoint() * dil.unitary * embed;
  out.restricted.env_state = std::move(env_state);
  out.restricted.dim_sys = dil.dim_sys;
  out.restricted.dim_env = static_cast<int>(rank);
  out.restricted.validate(tol);

  out.h_sys = emergent_hamiltonian(omega_sys, beta, std::nullopt, tol);
  out.h_sys.label = "system";
  out.h_env = emergent_hamiltonian(out.restricted.env_state, beta, std::nullopt,
                                   tol);
  out.h_env.label = "environment";
  return out;
}

double nonequilibrium_witness(const Dilation& dil, const Matrix& omega_sys,
                              const Tolerance& tol) {
  dil.validate(tol);
  check_density(omega_sys, tol, "nonequilibrium_witness system state");
  return residual(environment_output(dil, omega_sys) - dil.env_state);
}

RobustReduction robust_catalysis_reduce(const RobustCatalysisProblem& p,
                                        double beta, const Tolerance& tol) {
  const FactoredDims& dims = p.dims;
  if (dims.count() != 3)
    throw DimensionError("robust_catalysis_reduce: expected [sys, cat, env] dims");
  dims.require_total(p.unitary.rows(), "robust_catalysis_reduce");
  check_unitary(p.unitary, tol, "robust_catalysis_reduce unitary");
  const Matrix* states[] = {&p.omega_sys, &p.omega_cat, &p.tau_cat,
                            &p.omega_env};
  const int expected[] = {dims[0], dims[1], dims[1], dims[2]};
  for (int k = 0; k < 4; ++k) {
    if (states[k]->rows() != expected[k])
      throw DimensionError("robust_catalysis_reduce: state dimension mismatch");
    check_density(*states[k], tol, "robust_catalysis_reduce state");
  }
  const int ds = dims[0], dc = dims[1], de = dims[2];

  const Matrix gibbs_product =
      tensor_product(tensor_product(p.omega_sys, p.omega_cat), p.omega_env);
  const double premise = residual(commutator(p.unitary, gibbs_product));
  if (!(premise < tol.abs_tol))
    throw NotThermalError(
        "robust_catalysis_reduce: U does not commute with the Gibbs product",
        "gibbs_commutator_residual", premise, tol.abs_tol);

  // Catalyst preservation for every system input, on the matrix-unit basis.
  // The same pass builds the induced system channel.
  const Matrix cat_env = tensor_product(p.tau_cat, p.omega_env);
  Matrix induced_choi = Matrix::Zero(ds * ds, ds * ds);
  double worst = 0.0;
  Matrix worst_block;
  for (int i = 0; i < ds; ++i)
    for (int j = 0; j < ds; ++j) {
      const Matrix out = p.unitary *
                         tensor_product(matrix_unit(ds, i, j), cat_env) *
                         p.unitary.adjoint();
      const Matrix expected_cat =
          (i == j) ? p.tau_cat : Matrix::Zero(dc, dc).eval();
      const Matrix diff = partial_trace(out, dims, {1}) - expected_cat;
      const double r = residual(diff);
      if (r > worst) {
        worst = r;
        worst_block = diff;
      }
      induced_choi.block(i * ds, j * ds, ds, ds) = partial_trace(out, dims, {0});
    }
  if (!(worst < tol.abs_tol))
    throw NotRobustError(
        "robust_catalysis_reduce: catalyst is not preserved for every input",
        "catalyst_preservation_residual", worst, tol.abs_tol);

  RobustReduction red;
  red.catalyst_preservation_residual = worst;
  red.merged.unitary = p.unitary;
  red.merged.env_state = cat_env;
  red.merged.dim_sys = ds;
  red.merged.dim_env = dc * de;

  VerificationReport& r = red.report;
  r = VerificationReport("robust_catalysis");
  r.add("gibbs_commutator_residual", premise, tol.abs_tol);
  r.add("catalyst_preservation_residual", worst, tol.abs_tol);

  const Matrix sys_state_product =
      tensor_product(p.omega_sys, cat_env);
  const Matrix sigma = p.unitary * sys_state_product * p.unitary.adjoint();
  const double sys_fixed = residual(partial_trace(sigma, dims, {0}) - p.omega_sys);
  const double env_fixed = residual(partial_trace(sigma, dims, {2}) - p.omega_env);
  r.add("system_gibbs_preservation_residual", sys_fixed, tol.abs_tol);
  r.add("env_gibbs_preservation_residual", env_fixed, tol.abs_tol);
  r.add("catalyst_commutator_residual",
        residual(commutator(p.unitary, sys_state_product)), tol.abs_tol);

  const ChannelChoi induced(ds, ds, std::move(induced_choi));
  r.add("merged_channel_distance",
        channel_distance(induced, channel_of_dilation(red.merged, tol)),
        tol.abs_tol);

  if (sys_fixed < tol.abs_tol && env_fixed < tol.abs_tol) {
    const ThermalIdentification ident =
        equilibrating_to_thermal(red.merged, p.omega_sys, beta, tol);
    r.merge(thermal_operation_check(ident.restricted, ident.h_sys,
                                    ident.h_env, beta, tol),
            "merged_thermal.");
  }
  return red;
}

}  // namespace dilkit
