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

#include "dilkit/schur.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "dilkit/errors.hpp"
#include "dilkit/verify.hpp"

namespace dilkit {

namespace {

constexpr double kRankThreshold = 1e-10;
constexpr double kRenormWarning = 1e-6;
constexpr int kMaxModes = 12;

}  // namespace

SchurMatrix::SchurMatrix(RealMatrix x, const Tolerance& tol)
    : x_(std::move(x)) {
  if (x_.rows() != x_.cols() || x_.rows() == 0)
    throw DimensionError("SchurMatrix: expected a non-empty square matrix");
  if (!x_.allFinite()) throw ValidationError("SchurMatrix: non-finite entries");
  const double asym = (x_ - x_.transpose()).norm();
  if (!(asym < tol.abs_tol))
    throw ValidationError("SchurMatrix: matrix is not symmetric");
  for (Eigen::Index i = 0; i < x_.rows(); ++i)
    if (!(std::abs(x_(i, i) - 1.0) < tol.abs_tol))
      throw ValidationError("SchurMatrix: diagonal entry " + std::to_string(i) +
                            " is not 1");
  x_ = 0.5 * (x_ + x_.transpose()).eval();
  const double min_eig =
      Eigen::SelfAdjointEigenSolver<RealMatrix>(x_, Eigen::EigenvaluesOnly)
          .eigenvalues()(0);
  if (!(min_eig > -tol.abs_tol))
    throw ValidationError("SchurMatrix: not positive semidefinite (min "
                          "eigenvalue " + std::to_string(min_eig) + ")");
}

ChannelChoi schur_channel(const SchurMatrix& x) {
  const int n = x.n();
  Matrix j = Matrix::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) j(a * n + a, b * n + b) = x(a, b);
  return ChannelChoi(n, n, std::move(j));
}

GramFactorization gram_factorize(const SchurMatrix& x) {
  const int n = x.n();
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(x.matrix());
  const RealVector values = es.eigenvalues().reverse();
  RealMatrix vectors = es.eigenvectors().rowwise().reverse();
  const double cut = kRankThreshold * std::max(values(0), 0.0);

  GramFactorization g;
  while (g.rank < n && values(g.rank) > cut) ++g.rank;
  for (int k = 0; k < g.rank; ++k) {
    for (int i = 0; i < n; ++i)
      if (std::abs(vectors(i, k)) > 1e-10) {
        if (vectors(i, k) < 0) vectors.col(k) *= -1.0;
        break;
      }
  }

  for (int i = 0; i < n; ++i) {
    RealVector gi(g.rank);
    for (int k = 0; k < g.rank; ++k) gi(k) = std::sqrt(values(k)) * vectors(i, k);
    const double norm = gi.norm();
    g.renormalization_deviation =
        std::max(g.renormalization_deviation, std::abs(norm - 1.0));
    if (norm > 0.0) gi /= norm;
    g.vectors.push_back(std::move(gi));
  }
  g.warning = g.renormalization_deviation > kRenormWarning;

  for (int k = 0; k < g.rank; ++k) {
    RealMatrix a = RealMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) a(i, i) = g.vectors[i](k);
    g.diagonals.push_back(std::move(a));
  }
  return g;
}

MajoranaSet majorana_ops(int modes) {
  if (modes < 1) throw DimensionError("majorana_ops: need at least one mode");
  if (modes > kMaxModes)
    throw ResourceError("majorana_ops: 2^" + std::to_string(modes) +
                        " dimensional representation is too large");
  const Matrix x = gates::pauli_x();
  const Matrix z = gates::pauli_z();
  const Matrix one = identity(2);
  MajoranaSet set;
  set.modes = modes;
  for (int i = 0; i < modes; ++i) {
    Matrix v = Matrix::Identity(1, 1);
    for (int k = 0; k < modes; ++k)
      v = tensor_product(v, k < i ? z : (k == i ? x : one));
    set.operators.push_back(std::move(v));
  }
  return set;
}

VerificationReport check_majorana(const MajoranaSet& v, const Tolerance& tol) {
  const int dim = 1 << v.modes;
  const Matrix one = Matrix::Identity(dim, dim);
  double anti = 0.0, trace = 0.0, herm = 0.0;
  for (int i = 0; i < v.modes; ++i) {
    herm = std::max(herm, hermiticity_residual(v.operators[i]));
    for (int j = 0; j < v.modes; ++j) {
      const Matrix ac = v.operators[i] * v.operators[j] +
                        v.operators[j] * v.operators[i];
      const double delta = (i == j) ? 1.0 : 0.0;
      anti = std::max(anti, residual(ac - 2.0 * delta * one));
      trace = std::max(
          trace,
          std::abs((v.operators[i] * v.operators[j]).trace() - delta * dim));
    }
  }
  VerificationReport r("majorana");
  r.add("anticommutator_residual", anti, tol.abs_tol);
  r.add("trace_orthogonality_residual", trace, tol.abs_tol);
  r.add("hermiticity_residual", herm, tol.abs_tol);
  return r;
}

SchurDilation build_schur_dilation(const SchurMatrix& x, const Tolerance& tol) {
  const int n = x.n();
  SchurDilation out;
  out.gram = gram_factorize(x);
  const int d = out.gram.rank;
  const MajoranaSet v = majorana_ops(d);
  const int env_dim = 1 << d;

  Matrix u = Matrix::Zero(n * env_dim, n * env_dim);
  for (int k = 0; k < d; ++k)
    u += tensor_product(out.gram.diagonals[k].cast<Complex>(), v.operators[k]);
  for (int i = 0; i < n; ++i)
    out.block_unitaries.push_back(
        u.block(i * env_dim, i * env_dim, env_dim, env_dim));

  out.dilation.unitary = u;
  out.dilation.env_state = maximally_mixed(env_dim);
  out.dilation.dim_sys = n;
  out.dilation.dim_env = env_dim;

  double gram_residual = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Complex t =
          (out.block_unitaries[i] * out.block_unitaries[j]).trace() /
          static_cast<double>(env_dim);
      gram_residual = std::max(gram_residual, std::abs(t - x(i, j)));
    }

  VerificationReport& r = out.report;
  r = VerificationReport("schur_dilation");
  r.add("self_adjoint_residual", residual(u - u.adjoint()), tol.abs_tol);
  r.add("involution_residual", residual(u * u - Matrix::Identity(u.rows(), u.cols())),
        tol.abs_tol);
  r.add("gram_trace_residual", gram_residual, tol.abs_tol);
  if (out.gram.warning)
    r.add_note("Gram vectors needed renormalisation by " +
               std::to_string(out.gram.renormalization_deviation));
  // The involution residual bounds unitarity; validate before building the
  // channel so a broken U is reported here rather than as a ValidationError.
  if (!r.pass())
    throw InternalConsistencyError("build_schur_dilation: U is not a "
                                   "self-adjoint unitary reproducing X");
  r.add("channel_distance",
        channel_distance(channel_of_dilation(out.dilation, tol),
                         schur_channel(x)),
        tol.abs_tol);
  r.add("catalytic_marginal_residual",
        catalytic_check(out.dilation, tol).marginal_residual, tol.abs_tol);
  if (!r.pass()) {
    const auto worst = r.worst_failure();
    throw InternalConsistencyError("build_schur_dilation: post-check " +
                                   worst->name + " failed (" +
                                   std::to_string(worst->value) + ")");
  }
  return out;
}

SchurMatrix random_gram_schur(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw DimensionError("random_gram_schur: n, d must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  RealMatrix g(n, d);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) g(i, k) = normal(rng);
    g.row(i).normalize();
  }
  RealMatrix x = g * g.transpose();
  x = 0.5 * (x + x.transpose()).eval();
  for (int i = 0; i < n; ++i) x(i, i) = 1.0;
  return SchurMatrix(std::move(x));
}

// ---------------------------------------------------------------------------

FactorizableDecomposition factorizable_decompose(const Dilation& dil,
                                                 const Matrix& basis,
                                                 const Tolerance& tol) {
  dil.validate(tol);
  const double mixed = residual(dil.env_state - maximally_mixed(dil.dim_env));
  if (!(mixed < tol.abs_tol))
    throw PreconditionError(
        "factorizable_decompose: environment state is not maximally mixed");
  if (basis.rows() != dil.dim_env)
    throw DimensionError("factorizable_decompose: basis has wrong dimension");
  check_unitary(basis, tol, "factorizable_decompose basis");

  FactorizableDecomposition out;
  out.basis = basis;
  for (int j = 0; j < dil.dim_env; ++j) {
    Dilation pure = dil;
    pure.env_state = basis.col(j) * basis.col(j).adjoint();
    out.components.push_back(channel_of_dilation(pure, tol));
  }
  out.reconstruction_residual = channel_distance(
      uniform_average(out.components), channel_of_dilation(dil, tol));
  return out;
}

std::optional<ExtremalityWitness> extremality_witness_search(
    const Dilation& dil, int n_bases, std::uint64_t seed,
    const Tolerance& tol) {
  dil.validate(tol);
  if (residual(dil.env_state - maximally_mixed(dil.dim_env)) >= tol.abs_tol)
    throw PreconditionError(
        "extremality_witness_search: environment is not maximally mixed");
  const CatalyticReport cat = catalytic_check(dil, tol);
  if (!cat.pass)
    throw PreconditionError(
        "extremality_witness_search: dilation is not catalytic (residual " +
        std::to_string(cat.marginal_residual) + ")");
  if (n_bases < 0)
    throw ValidationError("extremality_witness_search: n_bases must be >= 0");

  // Trial 0 is the computational basis; trials 1..n_bases are Haar random.
  for (int trial = 0; trial <= n_bases; ++trial) {
    const Matrix basis =
        trial == 0 ? identity(dil.dim_env)
                   : haar_random_unitary(dil.dim_env,
                                         seed + static_cast<std::uint64_t>(trial));
    FactorizableDecomposition dec = factorizable_decompose(dil, basis, tol);
    ExtremalityWitness w;
    for (size_t j = 0; j < dec.components.size(); ++j)
      for (size_t k = j + 1; k < dec.components.size(); ++k) {
        const double dist =
            channel_distance(dec.components[j], dec.components[k]);
        if (dist > w.distance) {
          w.distance = dist;
          w.first = static_cast<int>(j);
          w.second = static_cast<int>(k);
        }
      }
    if (w.distance > tol.abs_tol) {
      w.trial = trial;
      w.decomposition = std::move(dec);
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace dilkit
