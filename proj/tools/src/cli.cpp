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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dilkit/dual_unitary.hpp"
#include "dilkit/errors.hpp"
#include "dilkit/hierarchy.hpp"
#include "dilkit/schur.hpp"
#include "dilkit/thermal.hpp"
#include "dilkit/verify.hpp"
#include "io.hpp"

namespace dilkit::cli {

namespace fs = std::filesystem;
using io::Json;

namespace {

struct Options {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::optional<double> beta;
  int bases = 32;
  std::string out;

  std::string dilation, state, h_sys, h_env, problem, unitary, matrix,
      decomposition, hamiltonian, basis, channel, catalytic, equilibrating,
      batch;
  std::vector<std::string> states;
  std::vector<int> dims, row_dims, col_dims;
  int dim = 0, n = 0, rank = 0;
};

class Context {
 public:
  Context(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  Tolerance tol() const {
    Tolerance t{o_.tol, 1e-8};
    t.validate();
    return t;
  }

  // Reads a JSON file; a "beta" field must agree with --beta.
  Json load(const std::string& path) const {
    if (path.empty()) throw ValidationError("missing input file argument");
    Json j = io::read_json(path);
    if (j.is_object() && j.contains("beta")) {
      if (!o_.beta)
        throw ValidationError("'" + path + "' carries beta but --beta is not set");
      const double b = j.at("beta").get<double>();
      if (std::abs(b - *o_.beta) > 1e-12 * std::max(1.0, std::abs(b)))
        throw ValidationError("'" + path +
                              "' was produced at a different beta; one "
                              "invocation uses a single inverse temperature");
    }
    return j;
  }

  double beta() const {
    if (!o_.beta) throw ValidationError("--beta is required for this command");
    if (!(*o_.beta > 0.0) || !std::isfinite(*o_.beta))
      throw ValidationError("--beta must be positive");
    return *o_.beta;
  }

  void print(const Json& j) const { out_ << j.dump(2) << '\n'; }

  // Writes the artifact to --out, or prints it when --out is empty.
  void emit(const Json& artifact) const {
    if (o_.out.empty())
      print(artifact);
    else
      io::write_json(o_.out, artifact);
  }

  // Prints the report plus a witness for the worst failing residual.
  int finish(const VerificationReport& r,
             const std::function<std::optional<Matrix>(const std::string&)>&
                 block = {}) const {
    Json j = io::to_json(r);
    if (const auto worst = r.worst_failure()) {
      j["witness"] = io::witness(worst->name, worst->value, worst->threshold,
                                 block ? block(worst->name) : std::nullopt);
      print(j);
      return kExitFail;
    }
    print(j);
    return kExitPass;
  }

  const Options& opt() const { return o_; }

 private:
  const Options& o_;
  std::ostream& out_;
};

Matrix env_difference(const Dilation& dil, const Matrix& rho) {
  return environment_output(dil, rho) - dil.env_state;
}

// ---- verify ----------------------------------------------------------------

int verify_equilibrating(const Context& c) {
  const Tolerance tol = c.tol();
  const Dilation dil = io::dilation_from_json(c.load(c.opt().dilation), tol);
  const Matrix omega = io::matrix_from_json(c.load(c.opt().state));
  const EquilibriumReport r = equilibrating_check(dil, omega, tol);
  return c.finish(r.to_report(tol), [&](const std::string& name)
                                        -> std::optional<Matrix> {
    const Matrix sigma = joint_output(dil, omega);
    if (name == "fixed_point_residual")
      return partial_trace(sigma, dil.dims(), {0}) - omega;
    return partial_trace(sigma, dil.dims(), {1}) - dil.env_state;
  });
}

VerificationReport catalytic_report(const Dilation& dil, const Tolerance& tol) {
  const CatalyticReport cat = catalytic_check(dil, tol);
  const CatalyticReport st = structural_catalytic_check(dil, tol).report;
  VerificationReport r("catalytic");
  r.add("marginal_residual", cat.marginal_residual, tol.abs_tol);
  r.add("structural_commutator_residual", st.structural_commutator_residual,
        tol.abs_tol, false);
  for (size_t i = 0; i < st.sector_pt_unitarity_residuals.size(); ++i)
    r.add("sector_pt_unitarity_residual[" + std::to_string(i) + "]",
          st.sector_pt_unitarity_residuals[i], tol.abs_tol, false);
  return r;
}

Matrix catalytic_block(const Dilation& dil) {
  const double d = dil.dim_sys;
  return environment_choi(dil) / d -
         tensor_product(maximally_mixed(dil.dim_sys), dil.env_state);
}

int verify_catalytic_batch(const Context& c) {
  const Tolerance tol = c.tol();
  const fs::path dir = c.opt().batch;
  if (!fs::is_directory(dir))
    throw ValidationError("--batch: '" + dir.string() + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json")
      files.push_back(e.path());
  std::sort(files.begin(), files.end());

  Json results = Json::array();
  int code = kExitPass;
  for (const auto& f : files) {
    Json entry{{"file", f.filename().string()}};
    try {
      const Dilation dil = io::dilation_from_json(c.load(f.string()), tol);
      const VerificationReport r = catalytic_report(dil, tol);
      entry["report"] = io::to_json(r);
      if (const auto worst = r.worst_failure()) {
        entry["witness"] = io::witness(worst->name, worst->value,
                                       worst->threshold, catalytic_block(dil));
        code = std::max(code, kExitFail);
      }
    } catch (const InputError& e) {
      entry["error"] = e.what();
      code = kExitInput;
    }
    results.push_back(std::move(entry));
  }
  c.print({{"results", std::move(results)}});
  return code;
}

int verify_catalytic(const Context& c) {
  if (!c.opt().batch.empty()) return verify_catalytic_batch(c);
  const Tolerance tol = c.tol();
  const Dilation dil = io::dilation_from_json(c.load(c.opt().dilation), tol);
  return c.finish(catalytic_report(dil, tol),
                  [&](const std::string&) -> std::optional<Matrix> {
                    return catalytic_block(dil);
                  });
}

int verify_thermal(const Context& c) {
  const Tolerance tol = c.tol();
  const double beta = c.beta();
  const Dilation dil = io::dilation_from_json(c.load(c.opt().dilation), tol);
  const HamiltonianSpec hs{io::matrix_from_json(c.load(c.opt().h_sys)), "system"};
  const HamiltonianSpec he{io::matrix_from_json(c.load(c.opt().h_env)),
                           "environment"};
  const VerificationReport r = thermal_operation_check(dil, hs, he, beta, tol);
  return c.finish(r, [&](const std::string& name) -> std::optional<Matrix> {
    if (name == "env_gibbs_residual")
      return dil.env_state - gibbs(he, beta, tol).state;
    if (name == "energy_commutator_residual")
      return commutator(dil.unitary,
                        tensor_product(hs.h, identity(dil.dim_env)) +
                            tensor_product(identity(dil.dim_sys), he.h));
    return env_difference(dil, gibbs(hs, beta, tol).state);
  });
}

int verify_robust(const Context& c) {
  const Tolerance tol = c.tol();
  const double beta = c.beta();
  const RobustCatalysisProblem p =
      io::robust_problem_from_json(c.load(c.opt().problem));
  const RobustReduction red = robust_catalysis_reduce(p, beta, tol);
  if (!c.opt().out.empty()) io::write_json(c.opt().out, io::to_json(red.merged));
  return c.finish(red.report);
}

int verify_dual(const Context& c) {
  const Tolerance tol = c.tol();
  const Matrix v = io::matrix_from_json(c.load(c.opt().unitary));
  FactoredDims rows, cols;
  if (!c.opt().row_dims.empty() || !c.opt().col_dims.empty()) {
    rows = FactoredDims(c.opt().row_dims);
    cols = FactoredDims(c.opt().col_dims);
  } else if (!c.opt().dims.empty()) {
    rows = cols = FactoredDims(c.opt().dims);
  } else {
    const int d = static_cast<int>(std::lround(std::sqrt(double(v.rows()))));
    if (d * d != v.rows())
      throw DimensionError("verify dual: give --dims for non-square splits");
    rows = cols = FactoredDims{d, d};
  }
  const VerificationReport r = is_dual_unitary(v, rows, cols, tol);
  return c.finish(r, [&](const std::string& name) -> std::optional<Matrix> {
    if (name == "unitarity_residual")
      return v.adjoint() * v - identity(static_cast<int>(v.cols()));
    const Matrix rv = reshuffle(v, rows, cols);
    return Matrix(rv.adjoint() * rv -
                  Matrix::Identity(rv.cols(), rv.cols()));
  });
}

int verify_multipartite(const Context& c) {
  const Tolerance tol = c.tol();
  const Matrix u = io::matrix_from_json(c.load(c.opt().unitary));
  std::vector<Matrix> states;
  std::vector<int> dims;
  for (const auto& f : c.opt().states) {
    states.push_back(io::matrix_from_json(c.load(f)));
    dims.push_back(static_cast<int>(states.back().rows()));
  }
  const FactoredDims fd(dims);
  const MultipartiteReport r =
      multipartite_equilibrium_check(u, states, fd, tol);
  return c.finish(r.to_report(tol), [&](const std::string& name)
                                        -> std::optional<Matrix> {
    const auto open = name.find('[');
    if (open == std::string::npos) return std::nullopt;
    const int k = std::stoi(name.substr(open + 1));
    const Matrix sigma = u * tensor_product(states) * u.adjoint();
    return partial_trace(sigma, fd, {k}) - states[k];
  });
}

// ---- build -----------------------------------------------------------------

int build_schur(const Context& c) {
  const Tolerance tol = c.tol();
  const SchurDilation s =
      build_schur_dilation(io::schur_from_json(c.load(c.opt().matrix), tol), tol);
  if (c.opt().out.empty()) {
    c.print(io::to_json(s.dilation));
    return kExitPass;
  }
  io::write_json(c.opt().out, io::to_json(s.dilation));
  Json j = io::to_json(s.report);
  j["rank"] = s.gram.rank;
  if (s.gram.warning) j["warning"] = "Gram vectors needed renormalisation";
  c.print(j);
  return kExitPass;
}

int build_mixed_unitary(const Context& c) {
  const Tolerance tol = c.tol();
  const MixedUnitaryDecomposition dec =
      io::decomposition_from_json(c.load(c.opt().decomposition), tol);
  const Dilation dil = dec.dilation();
  c.emit(io::to_json(dil));
  if (!c.opt().out.empty()) {
    VerificationReport r("mixed_unitary_dilation");
    r.add("marginal_residual", catalytic_check(dil, tol).marginal_residual,
          tol.abs_tol);
    r.add("channel_distance",
          channel_distance(channel_of_dilation(dil, tol), dec.channel()),
          tol.abs_tol);
    return c.finish(r);
  }
  return kExitPass;
}

int build_gibbs(const Context& c) {
  const Tolerance tol = c.tol();
  const double beta = c.beta();
  const HamiltonianSpec h{io::matrix_from_json(c.load(c.opt().hamiltonian)),
                          "hamiltonian"};
  const GibbsState g = gibbs(h, beta, tol);
  Json j = io::to_json(g.state);
  j["beta"] = beta;
  j["partition_function"] = g.spec.partition_function;
  c.emit(j);
  return kExitPass;
}

// ---- decompose / search / classify ---------------------------------------

Json decomposition_json(const FactorizableDecomposition& f,
                        const Tolerance& tol) {
  Json comps = Json::array();
  for (const auto& t : f.components) {
    Json cj = io::to_json(t);
    cj["unitality_residual"] =
        is_doubly_stochastic(t, tol).value("unitality_residual");
    comps.push_back(std::move(cj));
  }
  return {{"basis", io::to_json(f.basis)},
          {"components", std::move(comps)},
          {"reconstruction_residual", f.reconstruction_residual}};
}

int decompose_factorizable(const Context& c) {
  const Tolerance tol = c.tol();
  const Dilation dil = io::dilation_from_json(c.load(c.opt().dilation), tol);
  const Matrix basis = c.opt().basis.empty()
                           ? identity(dil.dim_env)
                           : io::matrix_from_json(c.load(c.opt().basis));
  const FactorizableDecomposition f = factorizable_decompose(dil, basis, tol);
  c.emit(decomposition_json(f, tol));
  return kExitPass;
}

int search_extremality(const Context& c) {
  const Tolerance tol = c.tol();
  const Dilation dil = io::dilation_from_json(c.load(c.opt().dilation), tol);
  if (c.opt().bases < 0) throw ValidationError("--bases must be >= 0");
  const auto w = extremality_witness_search(dil, c.opt().bases, c.opt().seed, tol);
  if (!w) {
    Json j{{"found", false}, {"bases_searched", c.opt().bases + 1}};
    j["witness"] = io::witness("component_distance", 0.0, tol.abs_tol);
    c.print(j);
    return kExitFail;
  }
  Json j{{"found", true},
         {"trial", w->trial},
         {"first", w->first},
         {"second", w->second},
         {"distance", w->distance},
         {"decomposition", decomposition_json(w->decomposition, tol)}};
  c.emit(j);
  return kExitPass;
}

int classify_channel(const Context& c) {
  const Tolerance tol = c.tol();
  const ChannelChoi t = io::channel_from_json(c.load(c.opt().channel), tol);
  Certificates certs;
  if (!c.opt().decomposition.empty())
    certs.mixed_unitary =
        io::decomposition_from_json(c.load(c.opt().decomposition), tol);
  if (!c.opt().catalytic.empty())
    certs.catalytic = io::dilation_from_json(c.load(c.opt().catalytic), tol);
  if (!c.opt().equilibrating.empty())
    certs.equilibrating =
        io::dilation_from_json(c.load(c.opt().equilibrating), tol);
  c.emit(io::to_json(classify(t, certs, tol)));
  return kExitPass;
}

// ---- random ----------------------------------------------------------------

int random_unitary(const Context& c) {
  c.emit(io::to_json(haar_random_unitary(c.opt().dim, c.opt().seed)));
  return kExitPass;
}

int random_density_matrix(const Context& c) {
  c.emit(io::to_json(random_density(c.opt().dim, c.opt().seed)));
  return kExitPass;
}

int random_schur(const Context& c) {
  c.emit(io::to_json(random_gram_schur(c.opt().n, c.opt().rank, c.opt().seed)));
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Verify and construct dilations of quantum channels.", "dilkit"};
  app.require_subcommand(1);
  app.add_option("--tol", o.tol, "Residual threshold")->capture_default_str();
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--beta", o.beta, "Inverse temperature (thermal commands)");
  app.add_option("--bases", o.bases, "Random bases for extremality search")
      ->capture_default_str();
  app.add_option("--out", o.out, "Output file");

  std::function<int(const Context&)> action;
  auto leaf = [&](CLI::App* parent, const std::string& name,
                  const std::string& desc, int (*fn)(const Context&)) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    s->callback([&action, fn] { action = fn; });
    return s;
  };

  CLI::App* verify = app.add_subcommand("verify", "Verify a dilation property");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* v_eq = leaf(verify, "equilibrating", "Equilibrating dilation check",
                    verify_equilibrating);
  v_eq->add_option("--dilation", o.dilation)->required();
  v_eq->add_option("--state", o.state, "System fixed point")->required();
  auto* v_cat = leaf(verify, "catalytic", "Catalytic dilation check",
                     verify_catalytic);
  auto* v_cat_dil = v_cat->add_option("--dilation", o.dilation);
  auto* v_cat_batch =
      v_cat->add_option("--batch", o.batch, "Directory of dilation files");
  v_cat_dil->excludes(v_cat_batch);
  v_cat->require_option(1);
  auto* v_th = leaf(verify, "thermal", "Thermal operation check", verify_thermal);
  v_th->add_option("--dilation", o.dilation)->required();
  v_th->add_option("--h-sys", o.h_sys)->required();
  v_th->add_option("--h-env", o.h_env)->required();
  auto* v_rob = leaf(verify, "robust", "Robust catalysis reduction",
                     verify_robust);
  v_rob->add_option("--problem", o.problem)->required();
  auto* v_dual = leaf(verify, "dual", "Dual-unitarity check", verify_dual);
  v_dual->add_option("--unitary", o.unitary)->required();
  v_dual->add_option("--dims", o.dims)->delimiter(',');
  v_dual->add_option("--row-dims", o.row_dims)->delimiter(',');
  v_dual->add_option("--col-dims", o.col_dims)->delimiter(',');
  auto* v_mp = leaf(verify, "multipartite", "Multipartite equilibrium check",
                    verify_multipartite);
  v_mp->add_option("--unitary", o.unitary)->required();
  v_mp->add_option("--states", o.states)->required()->expected(2, 64);

  CLI::App* build = app.add_subcommand("build", "Construct a dilation or state");
  build->require_subcommand(1);
  build->fallthrough();
  leaf(build, "schur", "Dilation of a Schur multiplier", build_schur)
      ->add_option("--matrix", o.matrix)
      ->required();
  leaf(build, "mixed-unitary", "Dilation of a mixed-unitary channel",
       build_mixed_unitary)
      ->add_option("--decomposition", o.decomposition)
      ->required();
  leaf(build, "gibbs", "Gibbs state of a Hamiltonian", build_gibbs)
      ->add_option("--hamiltonian", o.hamiltonian)
      ->required();

  CLI::App* decompose = app.add_subcommand("decompose", "Decompose a channel");
  decompose->require_subcommand(1);
  decompose->fallthrough();
  auto* d_f = leaf(decompose, "factorizable",
                   "Components for an environment basis",
                   decompose_factorizable);
  d_f->add_option("--dilation", o.dilation)->required();
  d_f->add_option("--basis", o.basis, "Columns form the environment basis");

  CLI::App* search = app.add_subcommand("search", "Search for witnesses");
  search->require_subcommand(1);
  search->fallthrough();
  leaf(search, "extremality", "Non-extremality witness search",
       search_extremality)
      ->add_option("--dilation", o.dilation)
      ->required();

  auto* cls = app.add_subcommand("classify", "Place a channel in the hierarchy");
  cls->fallthrough();
  cls->callback([&action] { action = classify_channel; });
  cls->add_option("--channel", o.channel)->required();
  cls->add_option("--decomposition", o.decomposition);
  cls->add_option("--catalytic", o.catalytic);
  cls->add_option("--equilibrating", o.equilibrating);

  CLI::App* random = app.add_subcommand("random", "Seeded random instances");
  random->require_subcommand(1);
  random->fallthrough();
  leaf(random, "unitary", "Haar random unitary", random_unitary)
      ->add_option("--dim", o.dim)
      ->required();
  leaf(random, "density", "Random density matrix", random_density_matrix)
      ->add_option("--dim", o.dim)
      ->required();
  auto* r_s = leaf(random, "schur", "Random Gram Schur matrix", random_schur);
  r_s->add_option("--n", o.n)->required();
  r_s->add_option("--rank", o.rank)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  const Context ctx(o, out);
  try {
    return action(ctx);
  } catch (const VerificationError& e) {
    ctx.print({{"error", e.what()},
               {"witness", io::witness(e.residual_name(), e.residual(),
                                       e.threshold())}});
    return kExitFail;
  } catch (const InternalConsistencyError& e) {
    ctx.print({{"error", e.what()}});
    return kExitFail;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

}  // namespace dilkit::cli
