/*
 * Copyright 2026 The adhmquot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "adhmquot/geometry.hpp"
#include "adhmquot/io.hpp"
#include "adhmquot/monad.hpp"
#include "adhmquot/punctual.hpp"
#include "adhmquot/quiver.hpp"
#include "adhmquot/quotmod.hpp"
#include "adhmquot/random.hpp"

namespace adhmquot::cli {

namespace {

using io::json;

struct Result {
  json report;
  int code = kOk;
  std::string summary;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AdhmDatum load_datum(const std::string& path) { return io::datum_from_json(io::parse(read_file(path))); }

json commutator_report(const AdhmDatum& X) {
  json out = json::array();
  std::size_t k = 0;
  const auto comms = commutators(X);
  for (std::size_t i = 0; i < X.n(); ++i) {
    for (std::size_t j = i + 1; j < X.n(); ++j, ++k) {
      if (!comms[k].is_zero()) out.push_back({{"i", i}, {"j", j}, {"commutator", io::to_json(comms[k])}});
    }
  }
  return out;
}

Vector parse_point(const std::string& text, Field f) {
  Vector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(f, item));
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// check ----------------------------------------------------------------------

struct CheckFlags {
  bool stable = false;
  bool commuting = false;
  bool nilpotent = false;
};

Result check_one(const AdhmDatum& X, const CheckFlags& flags) {
  const bool commuting = is_adhm(X);
  const std::size_t krylov = krylov_closure(X).dim();
  const bool stable = krylov == X.c();
  const bool nilpotent = is_nilpotent_tuple(X);
  Result res;
  res.report = {{"n", X.n()},
                {"c", X.c()},
                {"r", X.r()},
                {"field", X.field().name()},
                {"commuting", commuting},
                {"stable", stable},
                {"nilpotent", nilpotent},
                {"krylov_dimension", krylov},
                {"stabilizer_lie_dimension", stabilizer_lie_dimension(X)}};
  if (!commuting) res.report["residual_commutators"] = commutator_report(X);
  json failed = json::array();
  if (flags.commuting && !commuting) failed.push_back("commuting");
  if (flags.stable && !stable) failed.push_back("stable");
  if (flags.nilpotent && !nilpotent) failed.push_back("nilpotent");
  res.report["failed"] = failed;
  res.code = failed.empty() ? kOk : kViolation;
  res.summary = "commuting " + yes_no(commuting) + ", stable " + yes_no(stable) + ", nilpotent " + yes_no(nilpotent);
  return res;
}

Result run_check(const std::string& file, const std::string& manifest, const CheckFlags& flags) {
  if (manifest.empty()) {
    if (file.empty()) throw InputError("check needs a datum file or --manifest");
    Result res = check_one(load_datum(file), flags);
    res.report = io::with_schema(res.report, "check");
    return res;
  }
  // One datum path per line, relative to the manifest; '#' starts a comment.
  const std::filesystem::path base = std::filesystem::path(manifest).parent_path();
  std::stringstream lines(read_file(manifest));
  std::string line;
  json items = json::array();
  int code = kOk;
  std::size_t count = 0, failures = 0;
  while (std::getline(lines, line)) {
    line.erase(std::find(line.begin(), line.end(), '#'), line.end());
    line.erase(0, line.find_first_not_of(" \t\r"));
    line.erase(line.find_last_not_of(" \t\r") + 1);
    if (line.empty()) continue;
    ++count;
    const std::filesystem::path p = std::filesystem::path(line).is_absolute() ? std::filesystem::path(line) : base / line;
    json item;
    try {
      Result one = check_one(load_datum(p.string()), flags);
      item = one.report;
      item["exit"] = one.code;
      code = std::max(code, one.code);
      if (one.code != kOk) ++failures;
    } catch (const std::exception& e) {
      item = {{"error", e.what()}, {"exit", static_cast<int>(kInputError)}};
      code = kInputError;
      ++failures;
    }
    item["path"] = line;
    items.push_back(std::move(item));
  }
  Result res;
  res.report = io::with_schema({{"items", items}}, "check-batch");
  res.code = code;
  res.summary = std::to_string(count) + " data checked, " + std::to_string(failures) + " failed";
  return res;
}

// gen ------------------------------------------------------------------------

struct GenOptions {
  std::size_t n = 1, c = 1, r = 1;
  std::uint64_t seed = 0;
  bool nilpotent = false;
  std::string stability = "stable";
  std::string field = "Q";
  long bound = 2;
};

Result run_gen(const GenOptions& g) {
  RandomOptions opt;
  opt.nilpotent = g.nilpotent;
  opt.entry_bound = g.bound;
  opt.field = Field::parse(g.field);
  if (g.stability == "stable") {
    opt.stability = StabilityRequest::stable;
  } else if (g.stability == "unstable") {
    opt.stability = StabilityRequest::unstable;
  } else {
    opt.stability = StabilityRequest::any;
  }
  AdhmDatum X = random_datum(g.n, g.c, g.r, g.seed, opt);
  return {io::with_schema(io::to_json(X), "datum"), kOk,
          "generated (n, c, r) = (" + std::to_string(g.n) + ", " + std::to_string(g.c) + ", " + std::to_string(g.r) + ")"};
}

// support, equiv ---------------------------------------------------------------

Result run_support(const std::string& file) {
  AdhmDatum X = load_datum(file);
  if (!is_adhm(X)) {
    return {io::with_schema({{"commuting", false}, {"residual_commutators", commutator_report(X)}}, "support"),
            kViolation, "data do not commute"};
  }
  SupportReport rep = support(X);
  return {io::with_schema(io::to_json(rep), "support"), kOk,
          std::to_string(rep.points.size()) + " support points" + (rep.complete ? "" : ", spectrum not split over Q")};
}

Result run_equiv(const std::string& a, const std::string& b) {
  AdhmDatum X = load_datum(a), Y = load_datum(b);
  auto g = equivalence(X, Y);
  json rep = {{"equivalent", g.has_value()}};
  if (g) rep["g"] = io::to_json(g->matrix());
  return {io::with_schema(rep, "equiv"), g ? kOk : kViolation, g ? "equivalent" : "not equivalent"};
}

// quot -----------------------------------------------------------------------

Result run_quot_present(const std::string& file, std::optional<std::size_t> degree) {
  AdhmDatum X = load_datum(file);
  if (!is_adhm(X)) return {io::with_schema({{"commuting", false}}, "quot-present"), kViolation, "data do not commute"};
  const std::size_t d = degree.value_or(X.c());
  auto gens = kernel_basis_up_to_degree(X, d);
  json rep = io::generators_to_json(X.n(), X.r(), X.field(), gens);
  rep["degree"] = d;
  return {io::with_schema(rep, "generators"), kOk,
          std::to_string(gens.size()) + " kernel generators up to degree " + std::to_string(d)};
}

Result run_quot_build(const std::string& file, std::optional<std::size_t> cap) {
  std::size_t n = 0, r = 0;
  auto gens = io::generators_from_json(io::parse(read_file(file)), n, r);
  if (gens.empty()) throw InputError("no generators given");
  try {
    QuotientModule q = module_from_generators(n, r, gens, cap);
    return {io::with_schema(io::to_json(q), "quotient"), kOk,
            "quotient of length " + std::to_string(q.datum.c()) + " found at degree " + std::to_string(q.degree)};
  } catch (const QuotientNotFinite& e) {
    return {io::with_schema({{"finite", false}, {"profile", e.profile()}, {"message", e.what()}}, "quotient"),
            kViolation, e.what()};
  }
}

// monad ----------------------------------------------------------------------

Result run_monad_build(const std::string& file, const std::string& map) {
  AdhmDatum X = load_datum(file);
  if (map == "alpha0") return {io::with_schema(io::to_json(alpha0(X)), "linear-form-matrix"), kOk, "alpha0"};
  if (map == "alpha-1") return {io::with_schema(io::to_json(alpha_minus1(X)), "linear-form-matrix"), kOk, "alpha-1"};
  if (map == "alpha-2") {
    if (X.n() != 3) throw InputError("alpha-2 is only built for n = 3");
    return {io::with_schema(io::to_json(alpha_minus2_p3(X)), "linear-form-matrix"), kOk, "alpha-2"};
  }
  json rep = {{"alpha0", io::to_json(alpha0(X))}, {"alpha_minus1", io::to_json(alpha_minus1(X))}};
  if (X.n() == 3) rep["alpha_minus2"] = io::to_json(alpha_minus2_p3(X));
  return {io::with_schema(rep, "monad"), kOk, X.n() == 3 ? "alpha-2, alpha-1, alpha0" : "alpha-1, alpha0"};
}

Result run_monad_check(const std::string& file) {
  AdhmDatum X = load_datum(file);
  QuadraticFormMatrix q = compose(alpha0(X), alpha_minus1(X));
  json rep = {{"commuting", is_adhm(X)}, {"alpha0_alpha_minus1_zero", q.is_zero()}};
  bool ok = q.is_zero();
  if (!q.is_zero()) {
    rep["alpha0_alpha_minus1"] = io::to_json(q);
    rep["residual_commutators"] = commutator_report(X);
  }
  if (X.n() == 3) {
    QuadraticFormMatrix q2 = compose(alpha_minus1(X), alpha_minus2_p3(X));
    rep["alpha_minus1_alpha_minus2_zero"] = q2.is_zero();
    ok = ok && q2.is_zero();
  }
  return {io::with_schema(rep, "monad-check"), ok ? kOk : kViolation,
          ok ? "compositions vanish" : "compositions do not vanish"};
}

json fiber_json(const Vector& point, const FiberReport& f) {
  json rep = {{"point", io::to_json(point)},
              {"rank_alpha0", f.rank_alpha0},
              {"rank_alpha_minus1", f.rank_alpha_minus1},
              {"term_dimensions", f.term_dimensions},
              {"euler_characteristic", f.euler_characteristic},
              {"middle_dimension", f.middle_dimension}};
  if (f.rank_alpha_minus2) rep["rank_alpha_minus2"] = *f.rank_alpha_minus2;
  return rep;
}

Result run_monad_rank(const std::string& file, const std::string& point, std::size_t samples,
                      std::optional<std::uint64_t> seed) {
  AdhmDatum X = load_datum(file);
  if (!is_adhm(X)) {
    return {io::with_schema({{"commuting", false}, {"residual_commutators", commutator_report(X)}}, "monad-rank"),
            kViolation, "data do not commute"};
  }
  if (samples > 0 && !seed) throw InputError("--samples needs --seed");
  std::vector<Vector> points;
  if (!point.empty()) points.push_back(parse_point(point, X.field()));
  Rng rng(seed.value_or(0));
  for (std::size_t k = 0; k < samples; ++k) {
    Vector p;
    do {
      p = rng.vector(X.n() + 1, X.field(), 16);
    } while (is_zero(p));
    points.push_back(std::move(p));
  }
  json fibers = json::array();
  for (const auto& p : points) {
    if (p.size() != X.n() + 1) throw InputError("a point needs n + 1 = " + std::to_string(X.n() + 1) + " coordinates");
    fibers.push_back(fiber_json(p, fiber_report(X, p)));
  }
  SurjectivityCertificate cert = surjectivity_certificate(X);
  json c = {{"surjective", cert.surjective}, {"witness_available", cert.witness_available()}};
  if (cert.covector) {
    c["covector"] = io::to_json(*cert.covector);
    c["point"] = io::to_json(*cert.point);
  }
  return {io::with_schema({{"certificate", c}, {"fibers", fibers}}, "monad-rank"), kOk,
          std::string("alpha0 is ") + (cert.surjective ? "" : "not ") + "surjective on P^" + std::to_string(X.n())};
}

// quiver ---------------------------------------------------------------------

Result run_quiver_check(const std::string& file, const std::string& theta_text) {
  AdhmDatum X = load_datum(file);
  if (!is_adhm(X)) {
    return {io::with_schema({{"commuting", false}, {"residual_commutators", commutator_report(X)}}, "quiver-check"),
            kViolation, "representation violates the relations"};
  }
  auto param = StabilityParameter::on_wall(Scalar::parse(Field::rational(), theta_text), X.c());
  QuiverRep R(X);
  json rep = {{"theta", io::to_json(param.theta())}, {"theta_inf", io::to_json(param.theta_inf())}};
  const bool adhm = is_stable(X);
  rep["adhm_stable"] = adhm;
  bool stable = false;
  if (X.field().is_prime() && X.field().modulus() <= 3 && X.c() <= 3) {
    auto subs = enumerate_subreps(R);
    ThetaVerdict v = definition_verdict(subs, param);
    json dims = json::array();
    for (const auto& [cp, eps] : subs) dims.push_back({cp, eps});
    rep["subrepresentations"] = dims;
    rep["stable"] = v.stable;
    rep["semistable"] = v.semistable;
    rep["method"] = "enumeration";
    stable = v.stable;
  } else if (param.theta().sign() < 0) {
    // for θ < 0 semistability and stability both reduce to ADHM stability
    stable = is_theta_stable(R, param);
    rep["stable"] = stable;
    rep["semistable"] = stable;
    rep["method"] = "krylov";
  } else {
    throw InputError("theta >= 0 needs a representation over GF(2) or GF(3) with c <= 3");
  }
  return {io::with_schema(rep, "quiver-check"), stable ? kOk : kViolation,
          std::string(stable ? "theta-stable" : "not theta-stable")};
}

// path -----------------------------------------------------------------------

void check_path_input(const AdhmDatum& X, bool experimental) {
  if (!experimental && X.r() != X.c()) throw InputError("the homotopy needs r = c (use --experimental otherwise)");
}

Result run_path_run(const std::string& file, const std::string& t_text, bool experimental) {
  AdhmDatum X = load_datum(file);
  check_path_input(X, experimental);
  if (!is_adhm(X) || !is_stable(X)) {
    return {io::with_schema({{"commuting", is_adhm(X)}, {"stable", is_stable(X)}}, "path-run"), kViolation,
            "the homotopy needs stable commuting data"};
  }
  HomotopyPlan plan = homotopy_plan(X, experimental);
  json rep = {{"t", t_text},
              {"datum", io::to_json(homotopy_path(X, plan, Scalar::parse(X.field(), t_text)))},
              {"order", plan.order()}};
  return {io::with_schema(rep, "path-run"), kOk, "path point at t = " + t_text};
}

Result run_path_verify(const std::string& file, std::size_t grid, bool experimental) {
  AdhmDatum X = load_datum(file);
  check_path_input(X, experimental);
  if (!is_adhm(X) || !is_stable(X)) {
    return {io::with_schema({{"commuting", is_adhm(X)}, {"stable", is_stable(X)}}, "path-verify"), kViolation,
            "the homotopy needs stable commuting data"};
  }
  json rows = json::array();
  bool all = true;
  std::vector<Scalar> ts;
  for (const auto& t : uniform_grid(grid)) ts.push_back(X.field().is_rational() ? t : t.reduce(X.field()));
  for (const auto& s : verify_path(X, ts, experimental)) {
    rows.push_back({{"t", s.t.to_string()}, {"stable", s.stable}, {"commuting", s.commuting}, {"nilpotent", s.nilpotent}});
    all = all && s.stable && s.commuting && s.nilpotent;
  }
  return {io::with_schema({{"samples", rows}, {"all_flags", all}, {"experimental", experimental}}, "path-verify"),
          all ? kOk : kViolation, std::to_string(rows.size()) + " samples, " + (all ? "all flags hold" : "some flag fails")};
}

// dim ------------------------------------------------------------------------

Result run_dim(std::size_t n, std::size_t c, std::size_t r, bool punctual, std::size_t trials, std::uint64_t seed) {
  const Sampler sampler = punctual ? Sampler::punctual : Sampler::generic;
  const EquationSystem sys = sampler_equations(sampler);
  DimensionExperiment e = dimension_experiment(n, c, r, sys, sampler, trials, seed);
  json tangent = json::object();
  for (const auto& [d, k] : e.tangent_histogram) tangent[std::to_string(d)] = k;
  json moduli = json::object();
  for (const auto& [d, k] : e.moduli_histogram) moduli[std::to_string(d)] = k;
  json rep = {{"n", n},
              {"c", c},
              {"r", r},
              {"equations", punctual ? "commutators+nilpotency" : "commutators"},
              {"trials", trials},
              {"seed", seed},
              {"tangent_histogram", tangent},
              {"moduli_histogram", moduli}};
  rep["min_tangent"] = e.min_tangent ? json(*e.min_tangent) : json(nullptr);
  rep["max_tangent"] = e.max_tangent ? json(*e.max_tangent) : json(nullptr);
  std::string summary = std::to_string(trials) + " trials";
  if (e.min_tangent) summary += ", tangent dimension " + std::to_string(*e.min_tangent) + ".." + std::to_string(*e.max_tangent);
  return {io::with_schema(rep, "dim-experiment"), kOk, summary};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ADHM data for Quot schemes of points", "adhmquot"};
  app.require_subcommand(1);
  std::function<Result()> action;

  auto* gen = app.add_subcommand("gen", "Random commuting datum");
  GenOptions g;
  gen->add_option("--n", g.n, "number of matrices")->required()->check(CLI::PositiveNumber);
  gen->add_option("--c", g.c, "dimension of V")->required();
  gen->add_option("--r", g.r, "number of vectors")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", g.seed, "random seed")->required();
  gen->add_flag("--nilpotent", g.nilpotent, "nilpotent matrices");
  gen->add_option("--stability", g.stability, "stable, unstable or any")
      ->check(CLI::IsMember({"stable", "unstable", "any"}));
  gen->add_option("--field", g.field, "Q or GF(p)");
  gen->add_option("--bound", g.bound, "entry bound")->check(CLI::PositiveNumber);
  gen->callback([&] { action = [&] { return run_gen(g); }; });

  auto* check = app.add_subcommand("check", "Commutation, stability and nilpotency of a datum");
  std::string check_file, manifest;
  CheckFlags flags;
  check->add_option("file", check_file, "datum JSON");
  check->add_option("--manifest", manifest, "file listing datum paths, one per line");
  check->add_flag("--stable", flags.stable, "fail unless stable");
  check->add_flag("--commuting", flags.commuting, "fail unless commuting");
  check->add_flag("--nilpotent", flags.nilpotent, "fail unless nilpotent");
  check->callback([&] { action = [&] { return run_check(check_file, manifest, flags); }; });

  auto* sup = app.add_subcommand("support", "Joint spectrum with multiplicities");
  std::string sup_file;
  sup->add_option("file", sup_file, "datum JSON")->required();
  sup->callback([&] { action = [&] { return run_support(sup_file); }; });

  auto* eq = app.add_subcommand("equiv", "Search for g with g.X = Y");
  std::string eq_a, eq_b;
  eq->add_option("x", eq_a, "datum JSON")->required();
  eq->add_option("y", eq_b, "datum JSON")->required();
  eq->callback([&] { action = [&] { return run_equiv(eq_a, eq_b); }; });

  auto* quot = app.add_subcommand("quot", "Kernel submodules and quotient modules");
  quot->require_subcommand(1);
  auto* present = quot->add_subcommand("present", "Kernel generators of a datum up to a degree");
  std::string quot_file;
  std::optional<std::size_t> degree;
  present->add_option("file", quot_file, "datum JSON")->required();
  present->add_option("--degree", degree, "degree bound (default c)");
  present->callback([&] { action = [&] { return run_quot_present(quot_file, degree); }; });
  auto* build = quot->add_subcommand("build", "Datum of the quotient by generators");
  std::string gens_file;
  std::optional<std::size_t> cap;
  build->add_option("file", gens_file, "generators JSON")->required();
  build->add_option("--cap", cap, "degree cap");
  build->callback([&] { action = [&] { return run_quot_build(gens_file, cap); }; });

  auto* monad = app.add_subcommand("monad", "Monad maps of a datum");
  monad->require_subcommand(1);
  std::string monad_file, map = "all", point;
  std::size_t samples = 0;
  std::optional<std::uint64_t> monad_seed;
  auto* mbuild = monad->add_subcommand("build", "Emit the maps as matrices of linear forms");
  mbuild->add_option("file", monad_file, "datum JSON")->required();
  mbuild->add_option("--map", map, "alpha0, alpha-1, alpha-2 or all")
      ->check(CLI::IsMember({"alpha0", "alpha-1", "alpha-2", "all"}));
  mbuild->callback([&] { action = [&] { return run_monad_build(monad_file, map); }; });
  auto* mcheck = monad->add_subcommand("check", "Check that consecutive maps compose to zero");
  mcheck->add_option("file", monad_file, "datum JSON")->required();
  mcheck->callback([&] { action = [&] { return run_monad_check(monad_file); }; });
  auto* mrank = monad->add_subcommand("rank", "Fiber ranks and the surjectivity certificate");
  mrank->add_option("file", monad_file, "datum JSON")->required();
  mrank->add_option("--point", point, "comma-separated z_0,...,z_n");
  mrank->add_option("--samples", samples, "number of random points");
  mrank->add_option("--seed", monad_seed, "seed for random points");
  mrank->callback([&] { action = [&] { return run_monad_rank(monad_file, point, samples, monad_seed); }; });

  auto* quiver = app.add_subcommand("quiver", "Theta-stability of the quiver representation");
  quiver->require_subcommand(1);
  auto* qcheck = quiver->add_subcommand("check", "Stable and semistable verdicts");
  std::string quiver_file, theta;
  qcheck->add_option("file", quiver_file, "datum JSON")->required();
  qcheck->add_option("--theta", theta, "theta as p/q; theta_inf = -c*theta")->required();
  qcheck->callback([&] { action = [&] { return run_quiver_check(quiver_file, theta); }; });

  auto* path = app.add_subcommand("path", "Homotopy to the basepoint");
  path->require_subcommand(1);
  std::string path_file, t_text;
  std::size_t grid = 10;
  bool experimental = false;
  auto* prun = path->add_subcommand("run", "Datum at one parameter value");
  prun->add_option("file", path_file, "datum JSON")->required();
  prun->add_option("--t", t_text, "parameter p/q")->required();
  prun->add_flag("--experimental", experimental, "allow r != c");
  prun->callback([&] { action = [&] { return run_path_run(path_file, t_text, experimental); }; });
  auto* pverify = path->add_subcommand("verify", "Flags on the grid t = k/grid");
  pverify->add_option("file", path_file, "datum JSON")->required();
  pverify->add_option("--grid", grid, "number of steps")->check(CLI::PositiveNumber);
  pverify->add_flag("--experimental", experimental, "allow r != c");
  pverify->callback([&] { action = [&] { return run_path_verify(path_file, grid, experimental); }; });

  auto* dim = app.add_subcommand("dim", "Tangent dimension experiments");
  dim->require_subcommand(1);
  auto* experiment = dim->add_subcommand("experiment", "Sample points and record tangent dimensions");
  std::size_t dn = 2, dc = 1, dr = 1, trials = 20;
  std::uint64_t dseed = 0;
  bool punctual = false;
  experiment->add_option("--n", dn, "number of matrices")->required()->check(CLI::PositiveNumber);
  experiment->add_option("--c", dc, "dimension of V")->required();
  experiment->add_option("--r", dr, "number of vectors")->required()->check(CLI::PositiveNumber);
  experiment->add_flag("--punctual", punctual, "nilpotent samples with nilpotency equations");
  experiment->add_option("--trials", trials, "number of samples");
  experiment->add_option("--seed", dseed, "random seed")->required();
  experiment->callback([&] { action = [&] { return run_dim(dn, dc, dr, punctual, trials, dseed); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    out << io::with_schema({{"error", e.what()}}, "error").dump(2) << "\n";
    err << "usage error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    Result res = action();
    out << res.report.dump(2) << "\n";
    err << res.summary << "\n";
    return res.code;
  } catch (const SamplingError& e) {
    out << io::with_schema({{"error", e.what()}}, "error").dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    out << io::with_schema({{"error", e.what()}}, "error").dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace adhmquot::cli
