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

#include "dilkit/instances.hpp"

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <string>

#include "dilkit/errors.hpp"

namespace dilkit {

Dilation EquilibriumInstance::dilation() const {
  if (dims.count() != 2)
    throw DimensionError("EquilibriumInstance::dilation: not bipartite");
  return make_dilation(unitary, states[1]);
}

namespace {

HamiltonianSpec diagonal_hamiltonian(const Matrix& basis,
                                     const std::vector<int>& levels,
                                     std::string label) {
  RealVector e(static_cast<Eigen::Index>(levels.size()));
  for (size_t i = 0; i < levels.size(); ++i) e(i) = levels[i];
  HamiltonianSpec h;
  h.h = basis * e.cast<Complex>().asDiagonal() * basis.adjoint();
  h.h = 0.5 * (h.h + h.h.adjoint());
  h.label = std::move(label);
  return h;
}

Matrix qubit_energy() {
  Matrix h = Matrix::Zero(2, 2);
  h(1, 1) = 1.0;
  return h;
}

}  // namespace

EquilibriumInstance commuting_block_equilibrium(std::span<const int> dims,
                                                double beta,
                                                std::uint64_t seed) {
  if (dims.empty()) throw DimensionError("commuting_block_equilibrium: no parties");
  if (!(beta > 0.0)) throw ValidationError("commuting_block_equilibrium: beta");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> level(0, 2);

  EquilibriumInstance out;
  out.beta = beta;
  out.dims = FactoredDims(std::vector<int>(dims.begin(), dims.end()));
  std::vector<std::vector<int>> levels;
  std::vector<Matrix> bases;
  for (size_t k = 0; k < dims.size(); ++k) {
    std::vector<int> lv(dims[k]);
    for (int& l : lv) l = level(rng);
    const Matrix v = haar_random_unitary(dims[k], rng());
    out.hamiltonians.push_back(
        diagonal_hamiltonian(v, lv, "party" + std::to_string(k)));
    out.states.push_back(gibbs(out.hamiltonians.back(), beta).state);
    levels.push_back(std::move(lv));
    bases.push_back(v);
  }

  // Group product basis states by total energy.
  const int total = out.dims.total();
  std::map<int, std::vector<int>> sectors;
  for (int idx = 0; idx < total; ++idx) {
    int rem = idx, energy = 0;
    for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
      energy += levels[k][rem % dims[k]];
      rem /= dims[k];
    }
    sectors[energy].push_back(idx);
  }
  Matrix block = Matrix::Zero(total, total);
  for (const auto& [energy, idx] : sectors) {
    const int n = static_cast<int>(idx.size());
    const Matrix u = haar_random_unitary(n, rng());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) block(idx[a], idx[b]) = u(a, b);
  }
  const Matrix v = tensor_product(bases);
  out.unitary = v * block * v.adjoint();
  return out;
}

Matrix partial_swap(int d, double theta) {
  return std::cos(theta) * identity(d * d) -
         Complex(0.0, std::sin(theta)) * swap_operator(d);
}

EquilibriumInstance thermal_partial_swap(double theta, double beta) {
  EquilibriumInstance out;
  out.beta = beta;
  out.dims = FactoredDims{2, 2};
  out.unitary = partial_swap(2, theta);
  for (const char* label : {"system", "environment"}) {
    HamiltonianSpec h{qubit_energy(), label};
    out.states.push_back(gibbs(h, beta).state);
    out.hamiltonians.push_back(std::move(h));
  }
  return out;
}

RobustCatalysisProblem controlled_catalysis_instance(double theta,
                                                     double beta) {
  const Matrix g = gibbs(HamiltonianSpec{qubit_energy(), "qubit"}, beta).state;
  // Controlled gate in catalyst (x) system (x) environment order.
  const Matrix p0 = matrix_unit(2, 0, 0), p1 = matrix_unit(2, 1, 1);
  const Matrix ordered = tensor_product(p0, identity(4)) +
                         tensor_product(p1, partial_swap(2, theta));
  const FactoredDims cse{2, 2, 2};
  RobustCatalysisProblem p;
  // Output factor k is input factor perm[k]: (sys, cat, env) from (cat, sys, env).
  p.unitary = permute_subsystems(ordered, cse, std::array<int, 3>{1, 0, 2});
  p.dims = FactoredDims{2, 2, 2};
  p.omega_sys = g;
  p.omega_cat = g;
  p.tau_cat = g;
  p.omega_env = g;
  return p;
}

RobustCatalysisProblem spectator_catalysis_instance(double theta, double beta,
                                                    const Matrix& tau_cat) {
  const Matrix g = gibbs(HamiltonianSpec{qubit_energy(), "qubit"}, beta).state;
  const Matrix ordered = tensor_product(partial_swap(2, theta), identity(2));
  RobustCatalysisProblem p;
  p.unitary = permute_subsystems(ordered, FactoredDims{2, 2, 2},
                                std::array<int, 3>{0, 2, 1});
  p.dims = FactoredDims{2, 2, 2};
  p.omega_sys = g;
  p.omega_cat = g;
  p.tau_cat = tau_cat;
  p.omega_env = g;
  return p;
}

RobustCatalysisProblem perturb_catalyst(RobustCatalysisProblem p, double eps) {
  const int dc = p.dims[1];
  if (dc < 2) throw DimensionError("perturb_catalyst: catalyst must have dim >= 2");
  p.tau_cat(0, 1) += eps;
  p.tau_cat(1, 0) += eps;
  return p;
}

MixedUnitaryDecomposition random_mixed_unitary(int d, int k,
                                               std::uint64_t seed) {
  if (d < 1 || k < 1)
    throw DimensionError("random_mixed_unitary: d and k must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.05, 1.0);
  std::vector<double> w;
  // Distinct weights: resample on (numerically) close collisions.
  while (static_cast<int>(w.size()) < k) {
    const double x = unif(rng);
    bool close = false;
    for (double y : w) close = close || std::abs(x - y) < 1e-3;
    if (!close) w.push_back(x);
  }
  double total = 0.0;
  for (double x : w) total += x;
  MixedUnitaryDecomposition dec;
  for (double x : w) dec.terms.push_back({x / total, haar_random_unitary(d, rng())});
  return dec;
}

Dilation haar_dilation(int d_sys, int d_env, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Matrix u = haar_random_unitary(d_sys * d_env, rng());
  return make_dilation(u, random_density(d_env, rng()));
}

Dilation cnot_dilation() {
  return make_dilation(gates::cnot(), maximally_mixed(2));
}

Dilation swap_dilation() {
  return make_dilation(swap_operator(2), maximally_mixed(2));
}

Dilation rotate_environment(const Dilation& dil, std::uint64_t seed) {
  Dilation out = dil;
  out.unitary = tensor_product(identity(dil.dim_sys),
                               haar_random_unitary(dil.dim_env, seed)) *
                dil.unitary;
  return out;
}

ChannelChoi amplitude_damping(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw ValidationError("amplitude_damping: gamma must lie in [0, 1]");
  Matrix k0 = Matrix::Zero(2, 2), k1 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  k1(0, 1) = std::sqrt(gamma);
  const std::vector<Matrix> kraus{k0, k1};
  return ChannelChoi::from_kraus(kraus);
}

}  // namespace dilkit
