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

#include "dilkit/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "dilkit/errors.hpp"

namespace dilkit {

ChannelChoi::ChannelChoi(int dim_in, int dim_out, Matrix choi)
    : dim_in_(dim_in), dim_out_(dim_out), choi_(std::move(choi)) {
  if (dim_in < 1 || dim_out < 1)
    throw DimensionError("ChannelChoi: dimensions must be >= 1");
  const Eigen::Index n = static_cast<Eigen::Index>(dim_in) * dim_out;
  if (choi_.rows() != n || choi_.cols() != n)
    throw DimensionError("ChannelChoi: Choi matrix has wrong shape");
  if (!is_finite(choi_))
    throw ValidationError("ChannelChoi: non-finite entries");
}

ChannelChoi ChannelChoi::identity(int d) {
  return from_unitary(dilkit::identity(d));
}

ChannelChoi ChannelChoi::from_unitary(const Matrix& u) {
  const Matrix k[] = {u};
  return from_kraus(k);
}

ChannelChoi ChannelChoi::from_kraus(std::span<const Matrix> kraus) {
  if (kraus.empty()) throw DimensionError("from_kraus: no Kraus operators");
  const int dout = static_cast<int>(kraus.front().rows());
  const int din = static_cast<int>(kraus.front().cols());
  Matrix j = Matrix::Zero(din * dout, din * dout);
  for (const Matrix& k : kraus) {
    if (k.rows() != dout || k.cols() != din)
      throw DimensionError("from_kraus: Kraus operators differ in shape");
    // |K>> = sum_i |i> (x) K|i>
    Vector v(din * dout);
    for (int i = 0; i < din; ++i) v.segment(i * dout, dout) = k.col(i);
    j += v * v.adjoint();
  }
  return ChannelChoi(din, dout, std::move(j));
}

Matrix ChannelChoi::apply(const Matrix& x) const {
  if (x.rows() != dim_in_ || x.cols() != dim_in_)
    throw DimensionError("apply: input has wrong dimension");
  Matrix out = Matrix::Zero(dim_out_, dim_out_);
  for (int j = 0; j < dim_in_; ++j)
    for (int i = 0; i < dim_in_; ++i)
      if (x(i, j) != Complex(0.0))
        out += x(i, j) *
               choi_.block(i * dim_out_, j * dim_out_, dim_out_, dim_out_);
  return out;
}

std::vector<Matrix> ChannelChoi::kraus(const Tolerance& tol) const {
  const Spectrum s = hermitian_spectral(choi_, tol);
  std::vector<Matrix> out;
  for (Eigen::Index c = 0; c < s.values.size(); ++c) {
    if (s.values(c) <= tol.abs_tol) break;
    Matrix k(dim_out_, dim_in_);
    const double w = std::sqrt(s.values(c));
    for (int i = 0; i < dim_in_; ++i)
      k.col(i) = w * s.vectors.col(c).segment(i * dim_out_, dim_out_);
    out.push_back(std::move(k));
  }
  return out;
}

int ChannelChoi::kraus_rank(const Tolerance& tol) const {
  return static_cast<int>(kraus(tol).size());
}

double ChannelChoi::cp_residual() const {
  const Matrix herm = 0.5 * (choi_ + choi_.adjoint());
  const double min_eig =
      Eigen::SelfAdjointEigenSolver<Matrix>(herm, Eigen::EigenvaluesOnly)
          .eigenvalues()(0);
  return std::max(0.0, -min_eig);
}

double ChannelChoi::tp_residual() const {
  const Matrix reduced =
      partial_trace(choi_, FactoredDims{dim_in_, dim_out_}, {0});
  return residual(reduced - Matrix::Identity(dim_in_, dim_in_));
}

void ChannelChoi::validate(const Tolerance& tol) const {
  if (!(hermiticity_residual(choi_) < tol.abs_tol))
    throw ValidationError("channel: Choi matrix is not Hermitian");
  if (!(cp_residual() < tol.abs_tol))
    throw ValidationError("channel: not completely positive");
  if (!(tp_residual() < tol.abs_tol))
    throw ValidationError("channel: not trace preserving");
}

// ---------------------------------------------------------------------------

void Dilation::validate(const Tolerance& tol) const {
  if (dim_sys < 1 || dim_env < 1)
    throw DimensionError("dilation: dimensions must be >= 1");
  const Eigen::Index n = static_cast<Eigen::Index>(dim_sys) * dim_env;
  if (unitary.rows() != n || unitary.cols() != n)
    throw DimensionError("dilation: unitary dimension is not dim_sys*dim_env");
  if (env_state.rows() != dim_env || env_state.cols() != dim_env)
    throw DimensionError("dilation: environment state has wrong dimension");
  check_unitary(unitary, tol, "dilation unitary");
  check_density(env_state, tol, "dilation environment state");
}

Dilation make_dilation(Matrix unitary, Matrix env_state, const Tolerance& tol) {
  check_square(env_state, "make_dilation");
  check_square(unitary, "make_dilation");
  const int de = static_cast<int>(env_state.rows());
  if (unitary.rows() % de != 0)
    throw DimensionError("make_dilation: environment does not divide unitary");
  Dilation d;
  d.dim_sys = static_cast<int>(unitary.rows() / de);
  d.dim_env = de;
  d.unitary = std::move(unitary);
  d.env_state = std::move(env_state);
  d.validate(tol);
  return d;
}

// ---------------------------------------------------------------------------

int MixedUnitaryDecomposition::dim() const {
  if (terms.empty()) throw ValidationError("mixed-unitary: no terms");
  return static_cast<int>(terms.front().unitary.rows());
}

void MixedUnitaryDecomposition::validate(const Tolerance& tol) const {
  const int d = dim();
  double total = 0.0;
  for (const auto& t : terms) {
    if (!(t.probability >= 0.0))
      throw ValidationError("mixed-unitary: negative probability");
    if (t.unitary.rows() != d || t.unitary.cols() != d)
      throw DimensionError("mixed-unitary: unitaries differ in dimension");
    check_unitary(t.unitary, tol, "mixed-unitary term");
    total += t.probability;
  }
  if (!(std::abs(total - 1.0) < tol.abs_tol))
    throw ValidationError("mixed-unitary: probabilities do not sum to 1");
}

ChannelChoi MixedUnitaryDecomposition::channel() const {
  const int d = dim();
  Matrix j = Matrix::Zero(d * d, d * d);
  for (const auto& t : terms) {
    const ChannelChoi c = ChannelChoi::from_unitary(t.unitary);
    j += t.probability * c.choi();
  }
  return ChannelChoi(d, d, std::move(j));
}

Dilation MixedUnitaryDecomposition::dilation() const {
  const int d = dim();
  const int k = static_cast<int>(terms.size());
  Matrix u = Matrix::Zero(d * k, d * k);
  Matrix env = Matrix::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    env(i, i) = terms[i].probability;
    for (int b = 0; b < d; ++b)
      for (int a = 0; a < d; ++a) u(a * k + i, b * k + i) = terms[i].unitary(a, b);
  }
  return Dilation{std::move(u), std::move(env), d, k};
}

// ---------------------------------------------------------------------------

namespace {

enum class Trace { kEnv, kSys };

// sum_{ij} |i><j| (x) Tr_x(U (|i><j| (x) env) U^dagger).
Matrix dilation_choi(const Dilation& dil, Trace which) {
  const int ds = dil.dim_sys;
  const int de = dil.dim_env;
  const int out_dim = (which == Trace::kEnv) ? ds : de;
  std::vector<Matrix> left(ds);
  for (int i = 0; i < ds; ++i)
    left[i] = dil.unitary.middleCols(i * de, de) * dil.env_state;
  Matrix j = Matrix::Zero(ds * out_dim, ds * out_dim);
  for (int b = 0; b < ds; ++b) {
    const Matrix right = dil.unitary.middleCols(b * de, de).adjoint();
    for (int a = 0; a < ds; ++a) {
      const Matrix m = left[a] * right;
      auto block = j.block(a * out_dim, b * out_dim, out_dim, out_dim);
      if (which == Trace::kEnv) {
        for (int e = 0; e < de; ++e)
          block += m(Eigen::seqN(e, ds, de), Eigen::seqN(e, ds, de));
      } else {
        for (int s = 0; s < ds; ++s)
          block += m.block(s * de, s * de, de, de);
      }
    }
  }
  return j;
}

}  // namespace

ChannelChoi channel_of_dilation(const Dilation& dil, const Tolerance& tol) {
  dil.validate(tol);
  return ChannelChoi(dil.dim_sys, dil.dim_sys,
                     dilation_choi(dil, Trace::kEnv));
}

Matrix environment_choi(const Dilation& dil) {
  return dilation_choi(dil, Trace::kSys);
}

Matrix joint_output(const Dilation& dil, const Matrix& rho_sys) {
  if (rho_sys.rows() != dil.dim_sys || rho_sys.cols() != dil.dim_sys)
    throw DimensionError("joint_output: system state has wrong dimension");
  return dil.unitary * tensor_product(rho_sys, dil.env_state) *
         dil.unitary.adjoint();
}

Matrix environment_output(const Dilation& dil, const Matrix& rho_sys) {
  return partial_trace(joint_output(dil, rho_sys), dil.dims(), {1});
}

// ---------------------------------------------------------------------------

VerificationReport is_doubly_stochastic(const ChannelChoi& t,
                                        const Tolerance& tol) {
  if (t.dim_in() != t.dim_out())
    throw DimensionError("is_doubly_stochastic: channel is not square");
  const int d = t.dim_in();
  const Matrix image = t.apply(Matrix::Identity(d, d));
  VerificationReport r("doubly_stochastic");
  r.add("unitality_residual", residual(image - Matrix::Identity(d, d)),
        tol.abs_tol);
  r.add_witness("T(1)", image);
  return r;
}

VerificationReport fixed_point_check(const ChannelChoi& t, const Matrix& omega,
                                     const Tolerance& tol) {
  if (t.dim_in() != t.dim_out() || omega.rows() != t.dim_in() ||
      omega.cols() != t.dim_in())
    throw DimensionError("fixed_point_check: dimension mismatch");
  const Matrix image = t.apply(omega);
  VerificationReport r("fixed_point");
  r.add("fixed_point_residual", residual(image - omega), tol.abs_tol);
  r.add_witness("T(omega)", image);
  return r;
}

std::vector<double> default_time_samples() {
  const double pi = std::numbers::pi;
  return {0.0, 0.5, -0.5, 1.0, -1.0, pi, -pi};
}

VerificationReport covariance_check(const ChannelChoi& t, const Matrix& omega,
                                    std::span<const double> t_samples,
                                    const Tolerance& tol) {
  if (t.dim_in() != t.dim_out() || omega.rows() != t.dim_in())
    throw DimensionError("covariance_check: dimension mismatch");
  const int d = t.dim_in();
  double worst = 0.0;
  double worst_t = 0.0;
  for (double time : t_samples) {
    const Matrix w = matrix_power_it(omega, time, tol);
    const Matrix w_inv = matrix_power_it(omega, -time, tol);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Matrix e = matrix_unit(d, i, j);
        const double r =
            residual(t.apply(w * e * w_inv) - w * t.apply(e) * w_inv);
        if (r > worst) {
          worst = r;
          worst_t = time;
        }
      }
  }
  VerificationReport r("covariance");
  r.add("covariance_residual", worst, tol.abs_tol);
  if (worst > 0.0) r.add_note("worst time sample t=" + std::to_string(worst_t));
  return r;
}

VerificationReport covariance_check(const ChannelChoi& t, const Matrix& omega,
                                    const Tolerance& tol) {
  const auto samples = default_time_samples();
  return covariance_check(t, omega, samples, tol);
}

double channel_distance(const ChannelChoi& a, const ChannelChoi& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out())
    throw DimensionError("channel_distance: dimension mismatch");
  return residual(a.choi() - b.choi());
}

ChannelChoi uniform_average(std::span<const ChannelChoi> channels) {
  if (channels.empty()) throw DimensionError("uniform_average: no channels");
  Matrix j = Matrix::Zero(channels.front().choi().rows(),
                          channels.front().choi().cols());
  for (const auto& c : channels) {
    if (c.dim_in() != channels.front().dim_in() ||
        c.dim_out() != channels.front().dim_out())
      throw DimensionError("uniform_average: dimension mismatch");
    j += c.choi();
  }
  j /= static_cast<double>(channels.size());
  return ChannelChoi(channels.front().dim_in(), channels.front().dim_out(),
                     std::move(j));
}

}  // namespace dilkit
