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

#include "dilkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "dilkit/errors.hpp"

namespace dilkit {

namespace {

// Row-major digit strides for a factored space.
std::vector<Eigen::Index> strides_of(const std::vector<int>& f) {
  std::vector<Eigen::Index> s(f.size(), 1);
  for (int k = static_cast<int>(f.size()) - 2; k >= 0; --k)
    s[k] = s[k + 1] * f[k + 1];
  return s;
}

std::string dims_str(const FactoredDims& d) {
  std::string s = "[";
  for (int i = 0; i < d.count(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + "]";
}

}  // namespace

void Tolerance::validate() const {
  if (!(abs_tol > 0.0) || !(degeneracy_gap > 0.0))
    throw ValidationError("tolerances must be strictly positive");
}

FactoredDims::FactoredDims(std::initializer_list<int> factors)
    : FactoredDims(std::vector<int>(factors)) {}

FactoredDims::FactoredDims(std::vector<int> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw DimensionError("empty dimension list");
  for (int f : factors_)
    if (f < 1) throw DimensionError("subsystem dimension must be >= 1");
}

int FactoredDims::total() const {
  return std::accumulate(factors_.begin(), factors_.end(), 1,
                         std::multiplies<>());
}

void FactoredDims::require_total(Eigen::Index dim, const char* what) const {
  if (total() != dim)
    throw DimensionError(std::string(what) + ": dims " + dims_str(*this) +
                         " do not match matrix dimension " +
                         std::to_string(dim));
}

// ---------------------------------------------------------------------------

Matrix tensor_product(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix tensor_product(std::span<const Matrix> factors) {
  if (factors.empty()) return Matrix::Identity(1, 1);
  Matrix out = factors.front();
  for (size_t k = 1; k < factors.size(); ++k)
    out = tensor_product(out, factors[k]);
  return out;
}

Matrix partial_trace(const Matrix& m, const FactoredDims& dims,
                     std::span<const int> keep) {
  check_square(m, "partial_trace");
  dims.require_total(m.rows(), "partial_trace");
  const auto& f = dims.factors();
  std::vector<bool> kept(f.size(), false);
  for (int k : keep) {
    if (k < 0 || k >= dims.count())
      throw DimensionError("partial_trace: subsystem index out of range");
    if (kept[k]) throw DimensionError("partial_trace: repeated subsystem");
    kept[k] = true;
  }

  // Split every full index into (kept index, discarded index).
  const Eigen::Index n = m.rows();
  std::vector<Eigen::Index> kept_idx(n), disc_idx(n);
  Eigen::Index kept_dim = 1;
  for (size_t k = 0; k < f.size(); ++k)
    if (kept[k]) kept_dim *= f[k];
  for (Eigen::Index idx = 0; idx < n; ++idx) {
    Eigen::Index rem = idx, kv = 0, dv = 0, kmul = 1, dmul = 1;
    for (int k = static_cast<int>(f.size()) - 1; k >= 0; --k) {
      const Eigen::Index digit = rem % f[k];
      rem /= f[k];
      if (kept[k]) {
        kv += digit * kmul;
        kmul *= f[k];
      } else {
        dv += digit * dmul;
        dmul *= f[k];
      }
    }
    kept_idx[idx] = kv;
    disc_idx[idx] = dv;
  }

  Matrix out = Matrix::Zero(kept_dim, kept_dim);
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index r = 0; r < n; ++r)
      if (disc_idx[r] == disc_idx[c]) out(kept_idx[r], kept_idx[c]) += m(r, c);
  return out;
}

Matrix partial_trace(const Matrix& m, const FactoredDims& dims,
                     std::initializer_list<int> keep) {
  return partial_trace(m, dims, std::span<const int>(keep.begin(), keep.size()));
}

Matrix partial_transpose(const Matrix& m, const FactoredDims& dims,
                         int subsystem) {
  check_square(m, "partial_transpose");
  dims.require_total(m.rows(), "partial_transpose");
  if (subsystem < 0 || subsystem >= dims.count())
    throw DimensionError("partial_transpose: subsystem index out of range");
  const auto stride = strides_of(dims.factors())[subsystem];
  const int d = dims[subsystem];
  Matrix out(m.rows(), m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    const Eigen::Index cd = (c / stride) % d;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const Eigen::Index rd = (r / stride) % d;
      out(r + (cd - rd) * stride, c + (rd - cd) * stride) = m(r, c);
    }
  }
  return out;
}

Matrix reshuffle(const Matrix& v, const FactoredDims& dims) {
  if (dims.count() != 2)
    throw DimensionError("reshuffle: expected a bipartite split");
  return reshuffle(v, dims, dims);
}

Matrix reshuffle(const Matrix& v, const FactoredDims& row_dims,
                 const FactoredDims& col_dims) {
  if (row_dims.count() != 2 || col_dims.count() != 2)
    throw DimensionError("reshuffle: expected bipartite splits");
  if (row_dims.total() != v.rows() || col_dims.total() != v.cols())
    throw DimensionError("reshuffle: splits do not match matrix shape");
  const int r1 = row_dims[0], r2 = row_dims[1];
  const int c1 = col_dims[0], c2 = col_dims[1];
  Matrix out(static_cast<Eigen::Index>(r1) * c1,
             static_cast<Eigen::Index>(r2) * c2);
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < r2; ++j)
      for (int k = 0; k < c1; ++k)
        for (int l = 0; l < c2; ++l)
          out(i * c1 + k, j * c2 + l) = v(i * r2 + j, k * c2 + l);
  return out;
}

Matrix permute_subsystems(const Matrix& m, const FactoredDims& dims,
                          std::span<const int> perm) {
  check_square(m, "permute_subsystems");
  dims.require_total(m.rows(), "permute_subsystems");
  const auto& f = dims.factors();
  if (perm.size() != f.size())
    throw DimensionError("permute_subsystems: permutation has wrong length");
  std::vector<bool> seen(f.size(), false);
  std::vector<int> out_f(f.size());
  for (size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] < 0 || perm[k] >= static_cast<int>(f.size()) || seen[perm[k]])
      throw DimensionError("permute_subsystems: not a permutation");
    seen[perm[k]] = true;
    out_f[k] = f[perm[k]];
  }
  const auto in_s = strides_of(f);
  const auto out_s = strides_of(out_f);
  const Eigen::Index n = m.rows();
  // map[in_index] = out_index
  std::vector<Eigen::Index> map(n);
  for (Eigen::Index idx = 0; idx < n; ++idx) {
    Eigen::Index o = 0;
    for (size_t k = 0; k < perm.size(); ++k)
      o += ((idx / in_s[perm[k]]) % f[perm[k]]) * out_s[k];
    map[idx] = o;
  }
  Matrix out(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index r = 0; r < n; ++r) out(map[r], map[c]) = m(r, c);
  return out;
}

// ---------------------------------------------------------------------------

Spectrum hermitian_spectral(const Matrix& m, const Tolerance& tol) {
  check_square(m, "hermitian_spectral");
  if (!is_finite(m))
    throw ValidationError("hermitian_spectral: non-finite entries");
  const double h = hermiticity_residual(m);
  if (h > tol.abs_tol * std::max(1.0, m.norm() / std::sqrt(double(m.rows()))))
    throw ValidationError("hermitian_spectral: matrix is not Hermitian "
                          "(residual " + std::to_string(h) + ")");
  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm);
  if (es.info() != Eigen::Success)
    throw InternalConsistencyError("hermitian_spectral: eigensolver failed");

  const Eigen::Index n = m.rows();
  Spectrum s;
  s.values = es.eigenvalues().reverse();
  s.vectors = es.eigenvectors().rowwise().reverse();
  for (Eigen::Index c = 0; c < n; ++c) {
    auto col = s.vectors.col(c);
    for (Eigen::Index r = 0; r < n; ++r) {
      const double a = std::abs(col(r));
      if (a > 1e-10) {
        col *= std::conj(col(r)) / a;
        break;
      }
    }
  }
  return s;
}

std::vector<EigenSector> eigen_sectors(const Matrix& m, const Tolerance& tol) {
  const Spectrum s = hermitian_spectral(m, tol);
  const Eigen::Index n = s.values.size();
  const double scale =
      std::max(std::abs(s.values(0)), std::abs(s.values(n - 1)));
  const double gap = tol.degeneracy_gap * scale;

  std::vector<EigenSector> out;
  Eigen::Index begin = 0;
  for (Eigen::Index i = 1; i <= n; ++i) {
    if (i == n || s.values(i - 1) - s.values(i) > gap) {
      EigenSector sec;
      sec.value = s.values.segment(begin, i - begin).mean();
      sec.basis = s.vectors.middleCols(begin, i - begin);
      out.push_back(std::move(sec));
      begin = i;
    }
  }
  return out;
}

bool nondegenerate_spectrum(const Matrix& omega, const Tolerance& tol) {
  return static_cast<Eigen::Index>(eigen_sectors(omega, tol).size()) ==
         omega.rows();
}

Matrix support_projector(const Matrix& omega, const Tolerance& tol) {
  const Spectrum s = hermitian_spectral(omega, tol);
  const double cut = tol.degeneracy_gap * s.values(0);
  Matrix p = Matrix::Zero(omega.rows(), omega.cols());
  for (Eigen::Index i = 0; i < s.values.size(); ++i)
    if (s.values(i) > cut) p += s.vectors.col(i) * s.vectors.col(i).adjoint();
  return p;
}

Matrix matrix_power_it(const Matrix& omega, double t, const Tolerance& tol) {
  const Spectrum s = hermitian_spectral(omega, tol);
  const double cut = tol.degeneracy_gap * s.values(0);
  Vector phases = Vector::Zero(s.values.size());
  for (Eigen::Index i = 0; i < s.values.size(); ++i)
    if (s.values(i) > cut)
      phases(i) = std::exp(Complex(0.0, t * std::log(s.values(i))));
  return s.vectors * phases.asDiagonal() * s.vectors.adjoint();
}

Matrix log_on_support(const Matrix& omega, const Tolerance& tol) {
  const Spectrum s = hermitian_spectral(omega, tol);
  const double cut = tol.degeneracy_gap * s.values(0);
  Vector logs = Vector::Zero(s.values.size());
  for (Eigen::Index i = 0; i < s.values.size(); ++i)
    if (s.values(i) > cut) logs(i) = std::log(s.values(i));
  return s.vectors * logs.asDiagonal() * s.vectors.adjoint();
}

// ---------------------------------------------------------------------------

namespace {

// -sum p ln p over strictly positive eigenvalues. The map p -> -p ln p is
// continuous at 0, so rounding noise near zero contributes O(eps ln eps).
double entropy_of(const RealVector& values) {
  double h = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double p = values(i);
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

}  // namespace

double von_neumann_entropy(const Matrix& rho, const Tolerance& tol) {
  return entropy_of(hermitian_spectral(rho, tol).values);
}

double mutual_information(const Matrix& rho_ab, const FactoredDims& dims,
                          const Tolerance& tol) {
  if (dims.count() != 2)
    throw DimensionError("mutual_information: expected a bipartite split");
  dims.require_total(rho_ab.rows(), "mutual_information");
  const Matrix rho_a = partial_trace(rho_ab, dims, {0});
  const Matrix rho_b = partial_trace(rho_ab, dims, {1});
  return von_neumann_entropy(rho_a, tol) + von_neumann_entropy(rho_b, tol) -
         von_neumann_entropy(rho_ab, tol);
}

double relative_entropy(const Matrix& rho, const Matrix& sigma,
                        const Tolerance& tol) {
  check_square(rho, "relative_entropy");
  if (rho.rows() != sigma.rows() || sigma.rows() != sigma.cols())
    throw DimensionError("relative_entropy: dimension mismatch");
  const Matrix kernel =
      Matrix::Identity(sigma.rows(), sigma.cols()) - support_projector(sigma, tol);
  if ((kernel * rho).trace().real() > tol.abs_tol)
    return std::numeric_limits<double>::infinity();
  const double neg_entropy = -von_neumann_entropy(rho, tol);
  const double cross = (rho * log_on_support(sigma, tol)).trace().real();
  return neg_entropy - cross;
}

// ---------------------------------------------------------------------------

double residual(const Matrix& m) {
  if (m.rows() == 0) return 0.0;
  return m.norm() / std::sqrt(static_cast<double>(m.rows()));
}

double unitarity_residual(const Matrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return residual(u.adjoint() * u - Matrix::Identity(u.rows(), u.cols()));
}

double hermiticity_residual(const Matrix& m) {
  return residual(m - m.adjoint());
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

bool is_finite(const Matrix& m) { return m.allFinite(); }

void check_square(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix");
}

void check_unitary(const Matrix& u, const Tolerance& tol, const char* what) {
  check_square(u, what);
  if (!is_finite(u))
    throw ValidationError(std::string(what) + ": non-finite entries");
  const double r = unitarity_residual(u);
  if (!(r < tol.abs_tol))
    throw ValidationError(std::string(what) + ": not unitary (residual " +
                          std::to_string(r) + ")");
}

void check_density(const Matrix& rho, const Tolerance& tol, const char* what) {
  check_square(rho, what);
  if (!is_finite(rho))
    throw ValidationError(std::string(what) + ": non-finite entries");
  if (!(hermiticity_residual(rho) < tol.abs_tol))
    throw ValidationError(std::string(what) + ": not Hermitian");
  if (!(std::abs(rho.trace() - Complex(1.0)) < tol.abs_tol))
    throw ValidationError(std::string(what) + ": trace is not 1");
  const Matrix herm = 0.5 * (rho + rho.adjoint());
  const double min_eig =
      Eigen::SelfAdjointEigenSolver<Matrix>(herm, Eigen::EigenvaluesOnly)
          .eigenvalues()(0);
  if (!(min_eig > -tol.abs_tol))
    throw ValidationError(std::string(what) +
                          ": not positive semidefinite (min eigenvalue " +
                          std::to_string(min_eig) + ")");
}

// ---------------------------------------------------------------------------

namespace {

void require_positive(int d, const char* what) {
  if (d < 1) throw DimensionError(std::string(what) + ": dimension must be >= 1");
}

Matrix ginibre(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(d, d);
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = Complex(re, im);
    }
  return g;
}

}  // namespace

Matrix identity(int d) {
  require_positive(d, "identity");
  return Matrix::Identity(d, d);
}

Matrix matrix_unit(int d, int i, int j) {
  Matrix e = Matrix::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

Matrix max_entangled(int d) {
  require_positive(d, "max_entangled");
  Vector omega = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int i = 0; i < d; ++i) omega(i * d + i) = 1.0 / std::sqrt(double(d));
  return omega * omega.adjoint();
}

Matrix swap_operator(int d) {
  require_positive(d, "swap_operator");
  const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
  Matrix s = Matrix::Zero(n, n);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) s(b * d + a, a * d + b) = 1.0;
  return s;
}

Matrix haar_random_unitary(int d, std::uint64_t seed) {
  require_positive(d, "haar_random_unitary");
  const Matrix g = ginibre(d, seed);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix& r = qr.matrixQR();
  for (int i = 0; i < d; ++i) {
    const Complex rii = r(i, i);
    const double a = std::abs(rii);
    q.col(i) *= (a > 0.0) ? rii / a : Complex(1.0);
  }
  return q;
}

Matrix random_density(int d, std::uint64_t seed) {
  require_positive(d, "random_density");
  const Matrix g = ginibre(d, seed);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

Matrix maximally_mixed(int d) {
  require_positive(d, "maximally_mixed");
  return Matrix::Identity(d, d) / static_cast<double>(d);
}

namespace gates {

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix hadamard() {
  Matrix m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

Matrix cnot() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 1.0;
  m(2, 3) = m(3, 2) = 1.0;
  return m;
}

}  // namespace gates

}  // namespace dilkit
