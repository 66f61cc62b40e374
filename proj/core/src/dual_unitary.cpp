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

#include "dilkit/dual_unitary.hpp"

#include <limits>
#include <string>

#include "dilkit/errors.hpp"

namespace dilkit {

namespace {

void require_square_split(const FactoredDims& dims, Eigen::Index n,
                          const char* what) {
  if (dims.count() != 2 || dims[0] != dims[1])
    throw DimensionError(std::string(what) +
                         ": only square bipartitions [d, d] are supported");
  dims.require_total(n, what);
}

}  // namespace

VerificationReport is_dual_unitary(const Matrix& v, const FactoredDims& dims,
                                   const Tolerance& tol) {
  if (dims.count() != 2)
    throw DimensionError("is_dual_unitary: expected a bipartite split");
  return is_dual_unitary(v, dims, dims, tol);
}

VerificationReport is_dual_unitary(const Matrix& v, const FactoredDims& row_dims,
                                   const FactoredDims& col_dims,
                                   const Tolerance& tol) {
  if (!is_finite(v)) throw ValidationError("is_dual_unitary: non-finite entries");
  const Matrix r = reshuffle(v, row_dims, col_dims);
  VerificationReport rep("dual_unitary");
  rep.add("unitarity_residual", unitarity_residual(v), tol.abs_tol);
  rep.add("reshuffled_unitarity_residual",
          r.rows() == r.cols() ? unitarity_residual(r)
                               : std::numeric_limits<double>::infinity(),
          tol.abs_tol);
  return rep;
}

double catalytic_unitary_residual(const Matrix& u, const FactoredDims& dims) {
  return unitarity_residual(partial_transpose(u, dims, 0));
}

Matrix times_swap(const Matrix& m, int d) {
  if (m.cols() != static_cast<Eigen::Index>(d) * d)
    throw DimensionError("times_swap: matrix is not on C^d (x) C^d");
  Matrix out(m.rows(), m.cols());
  // (M S)_{r,(k,l)} = M_{r,(l,k)}
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) out.col(k * d + l) = m.col(l * d + k);
  return out;
}

Matrix catalytic_to_dual(const Matrix& u, const FactoredDims& dims,
                         const Tolerance& tol) {
  require_square_split(dims, u.rows(), "catalytic_to_dual");
  check_unitary(u, tol, "catalytic_to_dual");
  const double r = catalytic_unitary_residual(u, dims);
  if (!(r < tol.abs_tol))
    throw NotCatalyticUnitaryError(
        "catalytic_to_dual: partial transpose is not unitary",
        "pt_unitarity_residual", r, tol.abs_tol);
  return times_swap(u, dims[0]);
}

Matrix dual_to_catalytic(const Matrix& v, const FactoredDims& dims,
                         const Tolerance& tol) {
  require_square_split(dims, v.rows(), "dual_to_catalytic");
  const VerificationReport rep = is_dual_unitary(v, dims, tol);
  if (!rep.pass()) {
    const auto worst = rep.worst_failure();
    throw NotDualUnitaryError("dual_to_catalytic: input is not dual-unitary",
                              worst->name, worst->value, worst->threshold);
  }
  return times_swap(v, dims[0]);
}

}  // namespace dilkit
