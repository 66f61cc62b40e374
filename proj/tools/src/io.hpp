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
 * @file io.hpp
 * @brief JSON encoding of matrices, dilations and reports.
 *
 * Matrix: {"rows": n, "cols": m, "data": [[re, im], ...]} in row-major order.
 * Dilation: {"dim_sys", "dim_env", "unitary": Matrix, "env_state": Matrix}.
 * SchurMatrix: {"n", "x": [[real, ...], ...]}.
 */
#ifndef DILKIT_TOOLS_IO_HPP_
#define DILKIT_TOOLS_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "dilkit/channel.hpp"
#include "dilkit/hierarchy.hpp"
#include "dilkit/report.hpp"
#include "dilkit/schur.hpp"
#include "dilkit/thermal.hpp"

namespace dilkit::io {

using Json = nlohmann::json;

// Malformed input raises ValidationError or DimensionError.
Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const Dilation& d);
Dilation dilation_from_json(const Json& j, const Tolerance& tol);

SchurMatrix schur_from_json(const Json& j, const Tolerance& tol);
Json to_json(const SchurMatrix& x);

// {"terms": [{"p": real, "unitary": Matrix}, ...]}
MixedUnitaryDecomposition decomposition_from_json(const Json& j,
                                                  const Tolerance& tol);
Json to_json(const MixedUnitaryDecomposition& dec);

// {"dim_in", "dim_out", "choi": Matrix} or {"kraus": [Matrix, ...]}.
ChannelChoi channel_from_json(const Json& j, const Tolerance& tol);
Json to_json(const ChannelChoi& t);

// {"dims": [d_sys, d_cat, d_env], "unitary", "omega_sys", "omega_cat",
//  "tau_cat", "omega_env"}
RobustCatalysisProblem robust_problem_from_json(const Json& j);

Json to_json(const VerificationReport& r);
Json to_json(const HierarchyReport& r);

// Residual name, value, threshold and the offending block when it is at most
// 8 x 8.
Json witness(const std::string& residual, double value, double threshold,
             const std::optional<Matrix>& block = std::nullopt);

}  // namespace dilkit::io

#endif  // DILKIT_TOOLS_IO_HPP_
