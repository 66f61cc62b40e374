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
 * @file linalg.hpp
 * @brief Dense complex linear algebra on tensor-product spaces.
 *
 * Index convention: a matrix on a space with factors (d_0, d_1, ..., d_{n-1})
 * uses row-major multi-indices, so factor 0 is the most significant digit.
 * For bipartite system/environment spaces the system factor is always first.
 *
 * Every residual in the library is ||X||_F / sqrt(rows(X)).
 */
#ifndef DILKIT_LINALG_HPP_
#define DILKIT_LINALG_HPP_

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace dilkit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

struct Tolerance {
  double abs_tol = 1e-9;
  // Relative to the spectral radius of the matrix being analysed.
  double degeneracy_gap = 1e-8;

  void validate() const;
};

// Ordered subsystem dimensions of a tensor-product space.
class FactoredDims {
 public:
  FactoredDims() = default;
  FactoredDims(std::initializer_list<int> factors);
  explicit FactoredDims(std::vector<int> factors);

  int count() const { return static_cast<int>(factors_.size()); }
  int operator[](int i) const { return factors_.at(static_cast<size_t>(i)); }
  int total() const;
  const std::vector<int>& factors() const { return factors_; }

  // Throws DimensionError unless total() == dim.
  void require_total(Eigen::Index dim, const char* what) const;

  bool operator==(const FactoredDims&) const = default;

 private:
  std::vector<int> factors_;
};

// ---- tensor structure ------------------------------------------------------

Matrix tensor_product(const Matrix& a, const Matrix& b);
Matrix tensor_product(std::span<const Matrix> factors);

// Traces out every factor not listed in `keep`. Kept factors stay in their
// original order.
Matrix partial_trace(const Matrix& m, const FactoredDims& dims,
                     std::span<const int> keep);
Matrix partial_trace(const Matrix& m, const FactoredDims& dims,
                     std::initializer_list<int> keep);

// Transposes the indices of one factor. Pure entry permutation.
Matrix partial_transpose(const Matrix& m, const FactoredDims& dims,
                         int subsystem);

// Realignment R(V)_{(i,k),(j,l)} = V_{(i,j),(k,l)}.
// The one-argument form takes a square V with row and column split [d1, d2].
// The general form allows distinct row split [r1, r2] and column split
// [c1, c2]; the result has row split [r1, c1] and column split [r2, c2], so
// applying it twice with the swapped splits returns V.
Matrix reshuffle(const Matrix& v, const FactoredDims& dims);
Matrix reshuffle(const Matrix& v, const FactoredDims& row_dims,
                 const FactoredDims& col_dims);

// Reorders tensor factors: output factor k is input factor perm[k].
Matrix permute_subsystems(const Matrix& m, const FactoredDims& dims,
                          std::span<const int> perm);

// ---- spectral functions ----------------------------------------------------

struct Spectrum {
  RealVector values;  // descending
  Matrix vectors;     // columns; first non-negligible entry real positive
};

// Throws ValidationError when M is not Hermitian within tol.abs_tol.
Spectrum hermitian_spectral(const Matrix& m, const Tolerance& tol = {});

// An eigenvalue cluster: eigenvalues within degeneracy_gap * lambda_max of
// their neighbour are merged.
struct EigenSector {
  double value = 0.0;  // mean of the merged eigenvalues
  Matrix basis;        // orthonormal columns spanning the sector
};

std::vector<EigenSector> eigen_sectors(const Matrix& m,
                                       const Tolerance& tol = {});

bool nondegenerate_spectrum(const Matrix& omega, const Tolerance& tol = {});

// Projector onto eigenvectors with eigenvalue > degeneracy_gap * lambda_max.
Matrix support_projector(const Matrix& omega, const Tolerance& tol = {});

// omega^{it} on the support of omega; zero on its complement.
Matrix matrix_power_it(const Matrix& omega, double t,
                       const Tolerance& tol = {});

// Natural logarithm on the support of omega; zero on its complement.
Matrix log_on_support(const Matrix& omega, const Tolerance& tol = {});

// Generic f(M) for Hermitian M via its spectral decomposition.
template <typename F>
Matrix hermitian_function(const Matrix& m, F&& f, const Tolerance& tol = {}) {
  const Spectrum s = hermitian_spectral(m, tol);
  RealVector mapped(s.values.size());
  for (Eigen::Index i = 0; i < s.values.size(); ++i) mapped(i) = f(s.values(i));
  return s.vectors * mapped.cast<Complex>().asDiagonal() *
         s.vectors.adjoint();
}

// ---- entropies (nats) ------------------------------------------------------

double von_neumann_entropy(const Matrix& rho, const Tolerance& tol = {});
double mutual_information(const Matrix& rho_ab, const FactoredDims& dims,
                          const Tolerance& tol = {});
// Returns +infinity when supp(rho) is not contained in supp(sigma).
double relative_entropy(const Matrix& rho, const Matrix& sigma,
                        const Tolerance& tol = {});

// ---- norms and checks ------------------------------------------------------

// ||M||_F / sqrt(rows).
double residual(const Matrix& m);
double unitarity_residual(const Matrix& u);
double hermiticity_residual(const Matrix& m);
Matrix commutator(const Matrix& a, const Matrix& b);

bool is_finite(const Matrix& m);

// Throw ValidationError when the invariant does not hold within tol.abs_tol.
void check_square(const Matrix& m, const char* what);
void check_unitary(const Matrix& u, const Tolerance& tol, const char* what);
void check_density(const Matrix& rho, const Tolerance& tol, const char* what);

// ---- constructors ----------------------------------------------------------

Matrix identity(int d);
Matrix matrix_unit(int d, int i, int j);
// |Omega><Omega| with |Omega> = d^{-1/2} sum_i |ii>.
Matrix max_entangled(int d);
// S|a>|b> = |b>|a> on C^d (x) C^d.
Matrix swap_operator(int d);
// Haar measure via QR of a complex Ginibre matrix, with the phases of R's
// diagonal absorbed into Q. Deterministic in `seed`.
Matrix haar_random_unitary(int d, std::uint64_t seed);
// Normalised Wishart G G^dagger / Tr from a square Ginibre matrix.
Matrix random_density(int d, std::uint64_t seed);
Matrix maximally_mixed(int d);

namespace gates {
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();
Matrix hadamard();
// Control on the first factor.
Matrix cnot();
}  // namespace gates

}  // namespace dilkit

#endif  // DILKIT_LINALG_HPP_
