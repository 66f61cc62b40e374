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
 * @file schur.hpp
 * @brief Schur multiplier channels and their fermionic catalytic dilations.
 *
 * For a real PSD X with unit diagonal and rank d, write X_ij = g_i . g_j with
 * unit vectors g_i in R^d, set a_k = diag((g_1)_k, ..., (g_n)_k) and take d
 * anticommuting Hermitian unitaries v_k on C^{2^d}. Then
 *   U = sum_k a_k (x) v_k
 * is a self-adjoint unitary, and (U, 1/2^d) is a catalytic dilation of
 * x -> x o X.
 */
#ifndef DILKIT_SCHUR_HPP_
#define DILKIT_SCHUR_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "dilkit/channel.hpp"
#include "dilkit/linalg.hpp"
#include "dilkit/report.hpp"

namespace dilkit {

// Real symmetric PSD matrix with unit diagonal.
class SchurMatrix {
 public:
  // Throws ValidationError if an invariant fails within tol.abs_tol.
  explicit SchurMatrix(RealMatrix x, const Tolerance& tol = {});

  int n() const { return static_cast<int>(x_.rows()); }
  const RealMatrix& matrix() const { return x_; }
  double operator()(int i, int j) const { return x_(i, j); }

 private:
  RealMatrix x_;
};

struct GramFactorization {
  int rank = 0;
  std::vector<RealVector> vectors;  // g_i, one per row of X, length rank
  std::vector<RealMatrix> diagonals;  // a_k, n x n diagonal, one per k
  // max_i | ||g_i|| - 1 | before renormalisation.
  double renormalization_deviation = 0.0;
  bool warning = false;  // deviation exceeded 1e-6
};

struct MajoranaSet {
  int modes = 0;
  std::vector<Matrix> operators;  // each 2^modes x 2^modes
};

ChannelChoi schur_channel(const SchurMatrix& x);

// Spectral factorisation; eigenvalues <= 1e-10 * lambda_max are dropped.
GramFactorization gram_factorize(const SchurMatrix& x);

// Jordan-Wigner: v_i = Z^{(x)(i-1)} (x) X (x) 1^{(x)(d-i)}. 1 <= d <= 12.
MajoranaSet majorana_ops(int modes);

// Residuals of the anticommutation and trace-orthogonality relations.
VerificationReport check_majorana(const MajoranaSet& v,
                                  const Tolerance& tol = {});

struct SchurDilation {
  Dilation dilation;
  GramFactorization gram;
  // u_i = <i| U |i>, the diagonal blocks of U.
  std::vector<Matrix> block_unitaries;
  VerificationReport report;
};

// Throws InternalConsistencyError if any post-check fails.
SchurDilation build_schur_dilation(const SchurMatrix& x,
                                   const Tolerance& tol = {});

// Gram matrix of n random unit vectors in R^d.
SchurMatrix random_gram_schur(int n, int d, std::uint64_t seed);

// ---- exact factorisations --------------------------------------------------

struct FactorizableDecomposition {
  Matrix basis;  // columns |j> of the environment basis
  std::vector<ChannelChoi> components;  // T_j(rho) = Tr_env(U (rho (x) |j><j|) U^dag)
  double reconstruction_residual = 0.0;  // distance of the average to T
};

// Requires env = 1/d_env. Throws PreconditionError otherwise.
FactorizableDecomposition factorizable_decompose(const Dilation& dil,
                                                 const Matrix& basis,
                                                 const Tolerance& tol = {});

struct ExtremalityWitness {
  int trial = 0;  // 0 = computational basis, k > 0 = k-th random basis
  int first = 0;
  int second = 0;
  double distance = 0.0;  // channel_distance(components[first], components[second])
  FactorizableDecomposition decomposition;
};

// Searches environment bases for two distinct doubly-stochastic components.
// A result certifies non-extremality; nullopt means "unknown", never
// "extremal". Requires a catalytic dilation with maximally mixed env.
std::optional<ExtremalityWitness> extremality_witness_search(
    const Dilation& dil, int n_bases, std::uint64_t seed,
    const Tolerance& tol = {});

}  // namespace dilkit

#endif  // DILKIT_SCHUR_HPP_
