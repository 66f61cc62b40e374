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

#include "io.hpp"

#include <fstream>

#include "dilkit/errors.hpp"

namespace dilkit::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int positive_int(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw ValidationError(std::string("field '") + key +
                          "' must be a positive integer");
  return v.get<int>();
}

double number(const Json& v, const char* what) {
  if (!v.is_number()) throw ValidationError(std::string(what) + ": expected a number");
  return v.get<double>();
}

}  // namespace

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

Json to_json(const Matrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      data.push_back({m(i, k).real(), m(i, k).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const Json& j) {
  const int rows = positive_int(j, "rows");
  const int cols = positive_int(j, "cols");
  const Json& data = field(j, "data");
  if (!data.is_array() || data.size() != static_cast<size_t>(rows) * cols)
    throw DimensionError("matrix: data must hold rows * cols entries");
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Json& e = data[static_cast<size_t>(i) * cols + k];
      if (!e.is_array() || e.size() != 2)
        throw ValidationError("matrix: each entry must be [re, im]");
      m(i, k) = {number(e[0], "matrix entry"), number(e[1], "matrix entry")};
    }
  if (!is_finite(m)) throw ValidationError("matrix: non-finite entry");
  return m;
}

Json to_json(const Dilation& d) {
  return {{"dim_sys", d.dim_sys},
          {"dim_env", d.dim_env},
          {"unitary", to_json(d.unitary)},
          {"env_state", to_json(d.env_state)}};
}

Dilation dilation_from_json(const Json& j, const Tolerance& tol) {
  Dilation d;
  d.dim_sys = positive_int(j, "dim_sys");
  d.dim_env = positive_int(j, "dim_env");
  d.unitary = matrix_from_json(field(j, "unitary"));
  d.env_state = matrix_from_json(field(j, "env_state"));
  d.validate(tol);
  return d;
}

SchurMatrix schur_from_json(const Json& j, const Tolerance& tol) {
  const int n = positive_int(j, "n");
  const Json& x = field(j, "x");
  if (!x.is_array() || x.size() != static_cast<size_t>(n))
    throw DimensionError("schur: x must have n rows");
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    if (!x[i].is_array() || x[i].size() != static_cast<size_t>(n))
      throw DimensionError("schur: x must be n x n");
    for (int k = 0; k < n; ++k) m(i, k) = number(x[i][k], "schur entry");
  }
  return SchurMatrix(m, tol);
}

Json to_json(const SchurMatrix& x) {
  Json rows = Json::array();
  for (int i = 0; i < x.n(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < x.n(); ++k) row.push_back(x(i, k));
    rows.push_back(std::move(row));
  }
  return {{"n", x.n()}, {"x", std::move(rows)}};
}

MixedUnitaryDecomposition decomposition_from_json(const Json& j,
                                                  const Tolerance& tol) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array() || terms.empty())
    throw ValidationError("decomposition: 'terms' must be a non-empty array");
  MixedUnitaryDecomposition dec;
  for (const Json& t : terms)
    dec.terms.push_back({number(field(t, "p"), "probability"),
                         matrix_from_json(field(t, "unitary"))});
  dec.validate(tol);
  return dec;
}

Json to_json(const MixedUnitaryDecomposition& dec) {
  Json terms = Json::array();
  for (const auto& t : dec.terms)
    terms.push_back({{"p", t.probability}, {"unitary", to_json(t.unitary)}});
  return {{"terms", std::move(terms)}};
}

ChannelChoi channel_from_json(const Json& j, const Tolerance& tol) {
  if (j.is_object() && j.contains("kraus")) {
    const Json& list = j.at("kraus");
    if (!list.is_array() || list.empty())
      throw ValidationError("channel: 'kraus' must be a non-empty array");
    std::vector<Matrix> kraus;
    for (const Json& k : list) kraus.push_back(matrix_from_json(k));
    for (const auto& k : kraus)
      if (k.rows() != kraus.front().rows() || k.cols() != kraus.front().cols())
        throw DimensionError("channel: Kraus operators differ in shape");
    ChannelChoi t = ChannelChoi::from_kraus(kraus);
    t.validate(tol);
    return t;
  }
  ChannelChoi t(positive_int(j, "dim_in"), positive_int(j, "dim_out"),
                matrix_from_json(field(j, "choi")));
  t.validate(tol);
  return t;
}

Json to_json(const ChannelChoi& t) {
  return {{"dim_in", t.dim_in()}, {"dim_out", t.dim_out()},
          {"choi", to_json(t.choi())}};
}

RobustCatalysisProblem robust_problem_from_json(const Json& j) {
  const Json& dims = field(j, "dims");
  if (!dims.is_array() || dims.size() != 3)
    throw DimensionError("robust problem: dims must be [d_sys, d_cat, d_env]");
  std::vector<int> d;
  for (const Json& v : dims) {
    if (!v.is_number_integer() || v.get<long long>() < 1)
      throw ValidationError("robust problem: dims must be positive integers");
    d.push_back(v.get<int>());
  }
  RobustCatalysisProblem p;
  p.dims = FactoredDims(d);
  p.unitary = matrix_from_json(field(j, "unitary"));
  p.omega_sys = matrix_from_json(field(j, "omega_sys"));
  p.omega_cat = matrix_from_json(field(j, "omega_cat"));
  p.tau_cat = matrix_from_json(field(j, "tau_cat"));
  p.omega_env = matrix_from_json(field(j, "omega_env"));
  return p;
}

Json to_json(const VerificationReport& r) {
  Json residuals = Json::array();
  for (const auto& res : r.residuals())
    residuals.push_back({{"name", res.name},
                         {"value", res.value},
                         {"threshold", res.threshold},
                         {"gating", res.gating}});
  Json out{{"check", r.check()}, {"pass", r.pass()},
           {"residuals", std::move(residuals)}};
  if (!r.notes().empty()) out["notes"] = r.notes();
  return out;
}

Json to_json(const HierarchyReport& r) {
  Json classes = Json::object();
  for (int i = 0; i < kNumClasses; ++i) {
    const ClassStatus& c = r.classes()[i];
    classes[std::string(to_string(static_cast<ChannelClass>(i)))] = {
        {"status", std::string(to_string(c.status))},
        {"certificate", to_json(c.certificate)}};
  }
  return {{"classes", std::move(classes)}};
}

Json witness(const std::string& residual, double value, double threshold,
             const std::optional<Matrix>& block) {
  Json w{{"residual", residual}, {"value", value}, {"threshold", threshold}};
  if (block) {
    if (block->rows() <= 8 && block->cols() <= 8)
      w["block"] = to_json(*block);
    else
      w["block"] = {{"rows", block->rows()},
                    {"cols", block->cols()},
                    {"truncated", true}};
  }
  return w;
}

}  // namespace dilkit::io
