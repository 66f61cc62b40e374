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

#include "dilkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dilkit/errors.hpp"

namespace dilkit {

VerificationReport EquilibriumReport::to_report(const Tolerance& tol) const {
  VerificationReport r("equilibrating");
  r.add("fixed_point_residual", fixed_point_residual, tol.abs_tol);
  r.add("env_preservation_residual", env_preservation_residual, tol.abs_tol);
  r.add("joint_product_residual", joint_product_residual, tol.abs_tol, false);
  r.add("commutator_residual", commutator_residual, tol.abs_tol, false);
  r.add("mutual_info_out", mutual_info_out, tol.abs_tol, false);
  return r;
}

VerificationReport CatalyticReport::to_report(const Tolerance& tol) const {
  VerificationReport r("catalytic");
  r.add("marginal_residual", marginal_residual, tol.abs_tol);
  r.add("structural_commutator_residual", structural_commutator_residual,
        tol.abs_tol);
  for (size_t i = 0; i < sector_pt_unitarity_residuals.size(); ++i)
    r.add("sector_pt_unitarity_residual[" + std::to_string(i) + "]",
          sector_pt_unitarity_residuals[i], tol.abs_tol);
  return r;
}

VerificationReport MultipartiteReport::to_report(const Tolerance& tol) const {
  VerificationReport r("multipartite_equilibrium");
  for (size_t i = 0; i < marginal_residuals.size(); ++i)
    r.add("marginal_residual[" + std::to_string(i) + "]",
          marginal_residuals[i], tol.abs_tol);
  r.add("joint_product_residual", joint_product_residual, tol.abs_tol, false);
  r.add("commutator_residual", commutator_residual, tol.abs_tol, false);
  return r;
}

int BlockDecomposition::total_dimension() const {
  int n = 0;
  for (const auto& b : blocks) n += b.dimension;
  return n;
}

// ---------------------------------------------------------------------------

EquilibriumReport equilibrating_check(const Dilation& dil,
                                      const Matrix& omega_sys,
                                      const Tolerance& tol) {
  dil.validate(tol);
  if (omega_sys.rows() != dil.dim_sys || omega_sys.cols() != dil.dim_sys)
    throw DimensionError("equilibrating_check: system state has wrong dimension");
  check_density(omega_sys, tol, "equilibrating_check system state");

  const FactoredDims dims = dil.dims();
  const Matrix product = tensor_product(omega_sys, dil.env_state);
  const Matrix sigma = dil.unitary * product * dil.unitary.adjoint();

  EquilibriumReport rep;
  rep.fixed_point_residual =
      residual(partial_trace(sigma, dims, {0}) - omega_sys);
  rep.env_preservation_residual =
      residual(partial_trace(sigma, dims, {1}) - dil.env_state);
  rep.joint_product_residual = residual(sigma - product);
  rep.commutator_residual = residual(commutator(dil.unitary, product));
  rep.mutual_info_out = mutual_information(sigma, dims, tol);
  rep.pass = rep.fixed_point_residual < tol.abs_tol &&
             rep.env_preservation_residual < tol.abs_tol;
  return rep;
}

CatalyticReport catalytic_check(const Dilation& dil, const Tolerance& tol) {
  dil.validate(tol);
  const int ds = dil.dim_sys;
  // Tr_sys((1_R (x) U)(|Omega><Omega| (x) env)(1_R (x) U)^dag) equals the
  // environment Choi matrix divided by d, ordered as R (x) env.
  const Matrix state = environment_choi(dil) / static_cast<double>(ds);
  const Matrix target = tensor_product(maximally_mixed(ds), dil.env_state);
  CatalyticReport rep;
  rep.marginal_residual = residual(state - target);
  rep.pass = rep.marginal_residual < tol.abs_tol;
  return rep;
}

StructuralCatalyticResult structural_catalytic_check(const Dilation& dil,
                                                     const Tolerance& tol) {
  dil.validate(tol);
  const int ds = dil.dim_sys;
  const Matrix lifted = tensor_product(identity(ds), dil.env_state);

  StructuralCatalyticResult out;
  CatalyticReport& rep = out.report;
  rep.structural_commutator_residual =
      residual(commutator(dil.unitary, lifted));

  const auto sectors = eigen_sectors(dil.env_state, tol);
  const double cut = tol.degeneracy_gap * sectors.front().value;
  for (const auto& sec : sectors) {
    BlockDecomposition::Block b;
    b.env_eigenvalue = sec.value;
    b.env_multiplicity = static_cast<int>(sec.basis.cols());
    b.dimension = ds * b.env_multiplicity;
    b.in_support = sec.value > cut;
    b.env_basis = sec.basis;
    const Matrix embed = tensor_product(identity(ds), sec.basis);
    b.block = embed.adjoint() * dil.unitary * embed;
    // Only the support matters for the induced maps; U may act arbitrarily
    // on sys (x) ker(env).
    if (b.in_support) {
      const Matrix pt = partial_transpose(
          b.block, FactoredDims{ds, b.env_multiplicity}, 0);
      rep.sector_pt_unitarity_residuals.push_back(unitarity_residual(pt));
    }
    out.blocks.blocks.push_back(std::move(b));
  }

  rep.pass = rep.structural_commutator_residual < tol.abs_tol &&
             std::all_of(rep.sector_pt_unitarity_residuals.begin(),
                         rep.sector_pt_unitarity_residuals.end(),
                         [&](double r) { return r < tol.abs_tol; });
  return out;
}

MixedUnitaryDecomposition extract_mixed_unitary(const Dilation& dil,
                                                const Tolerance& tol) {
  dil.validate(tol);
  const int ds = dil.dim_sys;
  const auto sectors = eigen_sectors(dil.env_state, tol);
  if (static_cast<int>(sectors.size()) != dil.dim_env) {
    double min_gap = std::numeric_limits<double>::infinity();
    const Spectrum s = hermitian_spectral(dil.env_state, tol);
    for (Eigen::Index i = 1; i < s.values.size(); ++i)
      min_gap = std::min(min_gap, s.values(i - 1) - s.values(i));
    throw DegeneracyError("extract_mixed_unitary: environment state is degenerate",
                          "min_eigenvalue_gap", min_gap,
                          tol.degeneracy_gap * s.values(0));
  }
  const double comm = residual(commutator(
      dil.unitary, tensor_product(identity(ds), dil.env_state)));
  if (!(comm < tol.abs_tol))
    throw NotEquilibratingError(
        "extract_mixed_unitary: U does not commute with 1 (x) env",
        "commutator_residual", comm, tol.abs_tol);

  const double cut = tol.degeneracy_gap * sectors.front().value;
  MixedUnitaryDecomposition dec;
  double total = 0.0;
  for (const auto& sec : sectors) {
    if (sec.value <= cut) continue;
    const Matrix embed = tensor_product(identity(ds), sec.basis);
    dec.terms.push_back({sec.value, embed.adjoint() * dil.unitary * embed});
    total += sec.value;
  }
  for (auto& t : dec.terms) t.probability /= total;

  const double dist =
      channel_distance(dec.channel(), channel_of_dilation(dil, tol));
  if (!(dist < tol.abs_tol))
    throw InternalConsistencyError(
        "extract_mixed_unitary: extracted channel differs from the dilation "
        "(distance " + std::to_string(dist) + ")");
  return dec;
}

EntropyFlow entropy_flow_check(const Dilation& dil, const Tolerance& tol) {
  dil.validate(tol);
  EntropyFlow f;
  f.s_before = von_neumann_entropy(dil.env_state, tol);
  f.s_after = von_neumann_entropy(
      environment_output(dil, maximally_mixed(dil.dim_sys)), tol);
  f.residual = std::abs(f.s_before - f.s_after);
  return f;
}

MultipartiteReport multipartite_equilibrium_check(
    const Matrix& unitary, std::span<const Matrix> states,
    const FactoredDims& dims, const Tolerance& tol) {
  if (states.size() < 2)
    throw DimensionError("multipartite_equilibrium_check: need >= 2 parties");
  if (static_cast<int>(states.size()) != dims.count())
    throw DimensionError(
        "multipartite_equilibrium_check: one state per factor required");
  for (int k = 0; k < dims.count(); ++k) {
    if (states[k].rows() != dims[k])
      throw DimensionError(
          "multipartite_equilibrium_check: state dimension mismatch");
    check_density(states[k], tol, "multipartite_equilibrium_check state");
  }
  dims.require_total(unitary.rows(), "multipartite_equilibrium_check");
  check_unitary(unitary, tol, "multipartite_equilibrium_check unitary");

  const Matrix product = tensor_product(states);
  const Matrix sigma = unitary * product * unitary.adjoint();
  MultipartiteReport rep;
  for (int k = 0; k < dims.count(); ++k)
    rep.marginal_residuals.push_back(
        residual(partial_trace(sigma, dims, {k}) - states[k]));
  rep.joint_product_residual = residual(sigma - product);
  rep.commutator_residual = residual(commutator(unitary, product));
  rep.pass = std::all_of(rep.marginal_residuals.begin(),
                         rep.marginal_residuals.end(),
                         [&](double r) { return r < tol.abs_tol; });
  return rep;
}

}  // namespace dilkit
