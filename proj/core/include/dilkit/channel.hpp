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
 * @file channel.hpp
 * @brief Channel representations and the dilation-to-channel map.
 *
 * Channels are stored as unnormalised Choi matrices
 *   J = sum_{ij} |i><j| (x) T(|i><j|),
 * input factor first, so Tr_out J = 1_in for trace-preserving maps.
 */
#ifndef DILKIT_CHANNEL_HPP_
#define DILKIT_CHANNEL_HPP_

#include <span>
#include <vector>

#include "dilkit/linalg.hpp"
#include "dilkit/report.hpp"

namespace dilkit {

class ChannelChoi {
 public:
  // Checks shapes and finiteness only; CP/TP are checked by validate().
  ChannelChoi(int dim_in, int dim_out, Matrix choi);

  static ChannelChoi identity(int d);
  static ChannelChoi from_unitary(const Matrix& u);
  static ChannelChoi from_kraus(std::span<const Matrix> kraus);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const Matrix& choi() const { return choi_; }

  // Linear action on an arbitrary dim_in x dim_in operator.
  Matrix apply(const Matrix& x) const;

  // Kraus operators from the spectral decomposition of the Choi matrix;
  // eigenvalues below tol.abs_tol are dropped.
  std::vector<Matrix> kraus(const Tolerance& tol = {}) const;
  int kraus_rank(const Tolerance& tol = {}) const;

  // Most negative Choi eigenvalue, clipped at 0 from above (so 0 = CP).
  double cp_residual() const;
  // residual(Tr_out J - 1_in).
  double tp_residual() const;
  // Throws ValidationError unless CP and TP hold within tol.abs_tol.
  void validate(const Tolerance& tol = {}) const;

 private:
  int dim_in_;
  int dim_out_;
  Matrix choi_;
};

// A unitary U on system (x) environment together with the environment state.
struct Dilation {
  Matrix unitary;
  Matrix env_state;
  int dim_sys = 0;
  int dim_env = 0;

  FactoredDims dims() const { return FactoredDims{dim_sys, dim_env}; }
  // Throws DimensionError / ValidationError.
  void validate(const Tolerance& tol = {}) const;
};

Dilation make_dilation(Matrix unitary, Matrix env_state,
                       const Tolerance& tol = {});

struct MixedUnitaryDecomposition {
  struct Term {
    double probability = 0.0;
    Matrix unitary;
  };
  std::vector<Term> terms;

  int dim() const;
  void validate(const Tolerance& tol = {}) const;
  ChannelChoi channel() const;
  // U = sum_i U_i (x) |i><i|, env = sum_i p_i |i><i|.
  Dilation dilation() const;
};

// rho -> Tr_env(U (rho (x) env) U^dagger).
ChannelChoi channel_of_dilation(const Dilation& dil,
                                const Tolerance& tol = {});

// Choi matrix of the complementary map rho -> Tr_sys(U (rho (x) env) U^dagger)
// (input = system, output = environment).
Matrix environment_choi(const Dilation& dil);

// Tr_sys(U (rho (x) env) U^dagger) for a single input.
Matrix environment_output(const Dilation& dil, const Matrix& rho_sys);
// U (rho (x) env) U^dagger.
Matrix joint_output(const Dilation& dil, const Matrix& rho_sys);

VerificationReport is_doubly_stochastic(const ChannelChoi& t,
                                        const Tolerance& tol = {});
VerificationReport fixed_point_check(const ChannelChoi& t, const Matrix& omega,
                                     const Tolerance& tol = {});

// {0, +-0.5, +-1, +-pi}.
std::vector<double> default_time_samples();

// Max over t and over matrix units E_ij of
// residual(T(W E W^-1) - W T(E) W^-1), W = omega^{it}.
VerificationReport covariance_check(const ChannelChoi& t, const Matrix& omega,
                                    std::span<const double> t_samples,
                                    const Tolerance& tol = {});
VerificationReport covariance_check(const ChannelChoi& t, const Matrix& omega,
                                    const Tolerance& tol = {});

// residual(J1 - J2).
double channel_distance(const ChannelChoi& a, const ChannelChoi& b);

// Uniform convex combination of channels with matching dimensions.
ChannelChoi uniform_average(std::span<const ChannelChoi> channels);

}  // namespace dilkit

#endif  // DILKIT_CHANNEL_HPP_
