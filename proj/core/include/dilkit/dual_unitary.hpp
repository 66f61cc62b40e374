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
 * @file dual_unitary.hpp
 * @brief Correspondence between catalytic unitaries and dual-unitary gates.
 *
 * U on A (x) B has unitary partial transpose on A iff U S is dual-unitary,
 * S the swap. Conversions are exact column permutations.
 */
#ifndef DILKIT_DUAL_UNITARY_HPP_
#define DILKIT_DUAL_UNITARY_HPP_

#include "dilkit/linalg.hpp"
#include "dilkit/report.hpp"

namespace dilkit {

// Residuals: unitarity_residual of V and reshuffled_unitarity_residual of
// reshuffle(V). The square form takes the split [d1, d2] for rows and columns.
VerificationReport is_dual_unitary(const Matrix& v, const FactoredDims& dims,
                                   const Tolerance& tol = {});
// V : H1 (x) H2 -> H3 (x) H4 with row split [d3, d4] and column split
// [d1, d2]; the reshuffled map must be square to be unitary.
VerificationReport is_dual_unitary(const Matrix& v, const FactoredDims& row_dims,
                                   const FactoredDims& col_dims,
                                   const Tolerance& tol = {});

// Unitarity residual of the partial transpose on the first factor.
double catalytic_unitary_residual(const Matrix& u, const FactoredDims& dims);

// V = U S. Requires dims = [d, d] and unitary U^{T_A}; throws
// NotCatalyticUnitaryError otherwise.
Matrix catalytic_to_dual(const Matrix& u, const FactoredDims& dims,
                         const Tolerance& tol = {});

// U = V S. Requires dims = [d, d] and dual-unitary V; throws
// NotDualUnitaryError otherwise.
Matrix dual_to_catalytic(const Matrix& v, const FactoredDims& dims,
                         const Tolerance& tol = {});

// M S computed as a column permutation (exact).
Matrix times_swap(const Matrix& m, int d);

}  // namespace dilkit

#endif  // DILKIT_DUAL_UNITARY_HPP_
