// Copyright 2026 The tropnev Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "svg_plot.hpp"
#include "tropnev/diff_poly.hpp"
#include "tropnev/inequalities.hpp"
#include "tropnev/json_io.hpp"
#include "tropnev/nevanlinna.hpp"
#include "tropnev/random_instances.hpp"
#include "tropnev/special_functions.hpp"

namespace tropnev {
namespace {

struct RunConfig {
  std::string command;
  std::string target;  // theorem id for verify, plot kind for plot
  std::string input;
  double r_min = 0.5;
  double r_max = 20.0;
  int points = 20;
  bool geometric = false;
  double tol = Context{}.verify_tol;
  std::uint64_t seed = 1;
  int random = 0;
  std::string out_dir;
  std::string form = "printed";
  std::string theorem;  // plot inequality
  bool log_y = false;
};

std::vector<double> grid_of(const RunConfig& cfg) {
  return radius_grid(cfg.r_min, cfg.r_max, cfg.points, cfg.geometric);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return parse_json_text(read_file(path));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

// Writes to out_dir/name, or to `out` when no directory was given.
void emit(const RunConfig& cfg, const std::string& name, const std::string& text,
          std::ostream& out) {
  if (cfg.out_dir.empty()) {
    out << text;
    return;
  }
  std::filesystem::create_directories(cfg.out_dir);
  std::ofstream f(std::filesystem::path(cfg.out_dir) / name, std::ios::binary);
  f << text;
}

BoundForm form_of(const RunConfig& cfg, const Json& inst) {
  const std::string form =
      inst.contains("form") ? inst["form"].get<std::string>() : cfg.form;
  if (form == "printed") return BoundForm::kPrinted;
  if (form == "repaired") return BoundForm::kRepaired;
  throw Error(ErrorCode::kInvalidSpec, "form must be \"printed\" or \"repaired\"");
}

double num(const Json& inst, const char* key) {
  if (!inst.contains(key) || !inst[key].is_number()) {
    throw Error(ErrorCode::kInvalidSpec, std::string("instance needs number \"") +
                                             key + "\"");
  }
  return inst[key].get<double>();
}

std::vector<double> numbers(const Json& inst, const char* key) {
  if (!inst.contains(key) || !inst[key].is_array()) {
    throw Error(ErrorCode::kInvalidSpec, std::string("instance needs array \"") +
                                             key + "\"");
  }
  std::vector<double> v;
  for (const Json& x : inst[key]) {
    if (!x.is_number()) {
      throw Error(ErrorCode::kInvalidSpec, std::string("\"") + key +
                                               "\" must hold numbers");
    }
    v.push_back(x.get<double>());
  }
  return v;
}

TropicalPL fn(const Json& inst, const char* key = "f") {
  if (!inst.contains(key)) {
    throw Error(ErrorCode::kInvalidSpec, std::string("instance needs \"") + key + "\"");
  }
  return function_from_json(inst[key]);
}

DifferenceLaurentPolynomial poly(const Json& inst, const char* key) {
  if (!inst.contains(key)) {
    throw Error(ErrorCode::kInvalidSpec, std::string("instance needs \"") + key + "\"");
  }
  return poly_from_json(inst[key]);
}

VerificationReport run_poisson_jensen(const TropicalPL& f, double x,
                                      const std::vector<double>& radii,
                                      const Context& ctx) {
  VerificationReport rep = make_report("poisson-jensen", "", Relation::kEqual);
  int skipped = 0;
  for (double r : radii) {
    if (!(std::abs(x) < r)) {
      ++skipped;
      continue;
    }
    const VerificationReport one = verify_poisson_jensen(f, r, x, ctx);
    rep.add_row(r, one.lhs[0], one.rhs[0], one.tol[0]);
  }
  if (rep.radii.empty()) {
    throw Error(ErrorCode::kPreconditionViolated, "no radius with |x| < r");
  }
  if (skipped > 0) rep.append_note(std::to_string(skipped) + " radii with |x| >= r skipped");
  return rep;
}

VerificationReport run_theorem(const std::string& id, const Json& inst,
                               const RunConfig& cfg, const Context& ctx) {
  const std::vector<double> radii =
      inst.contains("radii") ? numbers(inst, "radii") : grid_of(cfg);
  if (id == "jensen") return verify_jensen(fn(inst), radii, ctx);
  if (id == "poisson-jensen") return run_poisson_jensen(fn(inst), num(inst, "x"), radii, ctx);
  if (id == "first-main") return verify_first_main(fn(inst), num(inst, "a"), radii, ctx);
  if (id == "shift-quotient") {
    return verify_shift_quotient_bound(fn(inst), num(inst, "c"), num(inst, "alpha"),
                                       radii, form_of(cfg, inst), ctx);
  }
  if (id == "second-main" || id == "second-main-proximity" ||
      id == "lemma-chain") {
    const double R = inst.contains("R") ? num(inst, "R")
                                        : *std::max_element(radii.begin(), radii.end());
    const SmtInstance smt =
        make_smt_instance(fn(inst), num(inst, "c"), numbers(inst, "targets"), R, {}, ctx);
    if (id == "second-main") return verify_second_main(smt, radii, form_of(cfg, inst), ctx);
    if (id == "lemma-chain") {
      return verify_lemma_chain(smt.f, smt.c, smt.targets, radii, form_of(cfg, inst), ctx);
    }
    return verify_second_main_proximity_form(smt, radii, form_of(cfg, inst), ctx);
  }
  if (id == "sandwich") {
    const std::vector<double> a = numbers(inst, "targets");
    return verify_characteristic_sandwich(fn(inst), a, radii, ctx);
  }
  if (id == "ptof") {
    const double term = inst.contains("term") ? num(inst, "term") : 0.0;
    if (term < 0.0 || term != std::floor(term)) {
      throw Error(ErrorCode::kInvalidSpec, "\"term\" must be a nonnegative integer");
    }
    return verify_ptof(poly(inst, "P"), fn(inst), static_cast<std::size_t>(term), radii, ctx);
  }
  if (id == "valiron-mohonko") {
    return verify_valiron_mohonko(poly(inst, "P"), fn(inst), radii, form_of(cfg, inst), ctx);
  }
  if (id == "mohonko") return verify_mohonko(poly(inst, "P"), fn(inst), num(inst, "a"), radii, ctx);
  if (id == "clunie") {
    return verify_clunie(poly(inst, "H"), poly(inst, "P"), poly(inst, "Q"), fn(inst),
                         radii, form_of(cfg, inst), ctx);
  }
  throw Error(ErrorCode::kInvalidSpec, "unknown theorem id " + id);
}

Json random_instance(const std::string& id, Rng& rng, const RunConfig& cfg,
                     const Context& ctx) {
  Json inst;
  if (id == "second-main" || id == "second-main-proximity" || id == "lemma-chain") {
    const SmtInstance smt = random_smt_instance(rng, cfg.r_max, ctx);
    inst["f"] = function_to_json(smt.f);
    inst["c"] = smt.c;
    inst["targets"] = smt.targets;
    inst["R"] = smt.R;
    return inst;
  }
  if (id == "ptof" || id == "valiron-mohonko") {
    const PolyInstance pi = random_poly_instance(rng);
    inst["P"] = poly_to_json(pi.P);
    inst["f"] = function_to_json(pi.f);
    if (id == "ptof") {
      std::size_t term = 0;
      while (term < pi.P.size() && !(norm(pi.P.terms()[term].lambda) > 0.0)) ++term;
      inst["term"] = term;
    }
    return inst;
  }
  if (id == "mohonko") {
    const MohonkoInstance mi = random_mohonko_instance(rng);
    inst["P"] = poly_to_json(mi.P);
    inst["f"] = function_to_json(mi.f);
    inst["a"] = mi.a;
    return inst;
  }
  if (id == "clunie") {
    const ClunieInstance ci = random_clunie_instance(rng);
    inst["H"] = poly_to_json(ci.H);
    inst["P"] = poly_to_json(ci.P);
    inst["Q"] = poly_to_json(ci.Q);
    inst["f"] = function_to_json(ci.f);
    return inst;
  }
  const TropicalPL f = random_finite_pl(rng);
  inst["f"] = function_to_json(f);
  if (id == "poisson-jensen") inst["x"] = rng.uniform(-0.9, 0.9) * cfg.r_min;
  if (id == "first-main") inst["a"] = rng.uniform(-5.0, 5.0);
  if (id == "shift-quotient") {
    inst["c"] = rng.uniform(0.1, 3.0) * (rng.coin(0.5) ? 1.0 : -1.0);
    inst["alpha"] = rng.uniform(1.1, 3.0);
  }
  if (id == "sandwich") {
    const double floor = pole_floor(f, -cfg.r_max, cfg.r_max, ctx);
    const double top = floor < kNoEvents ? floor - 0.1 : rng.uniform(-5.0, 5.0);
    std::vector<double> a;
    const int p = rng.uniform_int(1, 4);
    for (int k = 0; k < p; ++k) a.push_back(top - rng.uniform(0.0, 6.0));
    inst["targets"] = a;
  }
  return inst;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Context ctx{Context{}.eps, Context{}.breakpoint_budget, cfg.tol};
  std::string id = cfg.target == "smt" ? "second-main" : cfg.target;
  const auto& ids = theorem_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    err << "error: unknown theorem id \"" << cfg.target << "\"\n";
    return kExitUsage;
  }
  std::vector<std::pair<std::string, Json>> instances;
  if (cfg.random > 0) {
    Rng rng(cfg.seed);
    for (int i = 0; i < cfg.random; ++i) {
      instances.emplace_back("random:" + std::to_string(cfg.seed) + ":" + std::to_string(i),
                             random_instance(id, rng, cfg, ctx));
    }
  } else if (!cfg.input.empty()) {
    const Json doc = read_json(cfg.input);
    if (doc.is_array()) {
      for (std::size_t i = 0; i < doc.size(); ++i) {
        instances.emplace_back(cfg.input + "#" + std::to_string(i), doc[i]);
      }
    } else {
      instances.emplace_back(cfg.input, doc);
    }
  } else {
    err << "error: verify needs an instance file or --random N\n";
    return kExitUsage;
  }

  Json reports = Json::array();
  Json skipped = Json::array();
  Json errors = Json::array();
  int passed = 0, failed = 0;
  for (const auto& [name, inst] : instances) {
    try {
      VerificationReport rep = run_theorem(id, inst, cfg, ctx);
      rep.instance = name;
      (rep.pass ? passed : failed) += 1;
      reports.push_back(report_to_json(rep));
    } catch (const Error& e) {
      Json rec;
      rec["instance"] = name;
      rec["reason"] = e.what();
      const bool skip = e.code() == ErrorCode::kPreconditionViolated ||
                        e.code() == ErrorCode::kNotASolution;
      (skip ? skipped : errors).push_back(std::move(rec));
    }
  }
  Json doc;
  doc["theorem_id"] = id;
  doc["reports"] = std::move(reports);
  doc["skipped"] = skipped;
  doc["errors"] = errors;
  doc["summary"] = {{"total", instances.size()},
                    {"pass", passed},
                    {"fail", failed},
                    {"skip", skipped.size()},
                    {"error", errors.size()}};
  emit(cfg, "verify-" + id + ".json", doc.dump(2) + "\n", out);
  std::ostream& summary = cfg.out_dir.empty() ? err : out;
  summary << "verify " << id << ": " << passed << "/" << instances.size()
          << " pass, " << failed << " fail, " << skipped.size() << " skipped, "
          << errors.size() << " errors\n";
  for (const Json& s : skipped) {
    summary << "  skip " << s["instance"].get<std::string>() << ": "
            << s["reason"].get<std::string>() << "\n";
  }
  return failed == 0 && errors.empty() ? kExitOk : kExitFailure;
}

std::string sweep_svg(const std::vector<NevanlinnaSample>& rows, const RunConfig& cfg) {
  std::vector<Point> t;
  for (const NevanlinnaSample& s : rows) t.push_back({s.r, s.T});
  PlotOptions opts;
  opts.title = "T(r, f)";
  opts.x_label = "r";
  opts.y_label = "T(r, f)";
  opts.log_y = cfg.log_y;
  return render_svg({{"T(r,f)", "#1f4e9c", std::move(t)}}, opts);
}

std::string function_svg(const TropicalPL& f, double lo, double hi,
                         const std::string& title) {
  PlotOptions opts;
  opts.title = title;
  opts.y_label = "f(x)";
  return render_svg({{"", "#b03020", sample_function(f, lo, hi)}}, opts);
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  const Context ctx{Context{}.eps, Context{}.breakpoint_budget, cfg.tol};
  const TropicalPL f = function_from_json(read_json(cfg.input));
  const std::vector<NevanlinnaSample> rows = sweep(f, grid_of(cfg), ctx);
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  emit(cfg, "sweep.csv", csv.str(), out);
  if (!cfg.out_dir.empty()) {
    emit(cfg, "function.svg", function_svg(f, -cfg.r_max, cfg.r_max, "f(x)"), out);
    emit(cfg, "characteristic.svg", sweep_svg(rows, cfg), out);
  }
  return kExitOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Context ctx{Context{}.eps, Context{}.breakpoint_budget, cfg.tol};
  const EquationSpec eq = equation_from_json(read_json(cfg.input));
  const UltraDiscreteSolution sol = solve_equation(eq);
  const SolutionResidual res = solution_residual(sol, -20.0, 20.0, 1000, ctx);
  const double tol = cfg.tol * std::max(1.0, res.sup_abs_y);
  Json doc = solution_to_json(sol);
  doc["residual"] = {{"window", {-20.0, 20.0}},
                     {"points", res.points},
                     {"max_abs", res.max_abs},
                     {"sup_abs_y", res.sup_abs_y},
                     {"tol", tol},
                     {"pass", res.max_abs <= tol}};
  emit(cfg, "solution.json", doc.dump(2) + "\n", out);
  if (!cfg.out_dir.empty()) {
    std::vector<Series> series;
    PlotOptions opts;
    opts.y_label = "y(x)";
    if (eq.delta_fixture) {
      const double theta = 2.0 * std::numbers::pi / 3.0;
      series.push_back({"y1", "#d62728", sample_function(make_trig_solution(theta, 1), 0, 6)});
      series.push_back({"y2", "#2ca02c", sample_function(make_trig_solution(theta, 2), 0, 6)});
      series.push_back({"special solution", "#1f4e9c", sample_function(sol.assembled, 0, 6)});
      opts.title = "y(x+1) + y(x-1) = -y(x)";
    } else {
      series.push_back({"y", "#1f4e9c", sample_function(sol.assembled, -5, 5)});
      opts.title = "solution, c = " + format_double(sol.c);
    }
    emit(cfg, "solution.svg", render_svg(series, opts), out);
  }
  std::ostream& summary = cfg.out_dir.empty() ? err : out;
  summary << "solve: max residual " << format_double(res.max_abs) << " (tol "
          << format_double(tol) << ") " << (res.max_abs <= tol ? "PASS" : "FAIL") << "\n";
  return res.max_abs <= tol ? kExitOk : kExitFailure;
}

int cmd_plot(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Context ctx{Context{}.eps, Context{}.breakpoint_budget, cfg.tol};
  if (cfg.target == "function") {
    const TropicalPL f = function_from_json(read_json(cfg.input));
    emit(cfg, "function.svg", function_svg(f, -cfg.r_max, cfg.r_max, "f(x)"), out);
    return kExitOk;
  }
  if (cfg.target == "characteristic") {
    const TropicalPL f = function_from_json(read_json(cfg.input));
    emit(cfg, "characteristic.svg", sweep_svg(sweep(f, grid_of(cfg), ctx), cfg), out);
    return kExitOk;
  }
  if (cfg.target == "smt-trend" || cfg.target == "inequality") {
    const std::string id = cfg.target == "smt-trend" ? "second-main"
                           : cfg.theorem == "smt"    ? "second-main"
                                                     : cfg.theorem;
    Json inst;
    if (cfg.random > 0) {
      Rng rng(cfg.seed);
      inst = random_instance(id, rng, cfg, ctx);
    } else if (!cfg.input.empty()) {
      inst = read_json(cfg.input);
    } else {
      err << "error: plot " << cfg.target << " needs an instance file or --random\n";
      return kExitUsage;
    }
    std::vector<Point> lhs, rhs;
    PlotOptions opts;
    opts.x_label = "r";
    if (cfg.target == "smt-trend") {
      const TropicalPL f = fn(inst);
      const SmtInstance smt = make_smt_instance(f, num(inst, "c"), numbers(inst, "targets"),
                                                cfg.r_max, {}, ctx);
      for (const SmtTrendRow& row : second_main_trend(smt, grid_of(cfg), ctx)) {
        lhs.push_back({row.r, row.lhs});
        rhs.push_back({row.r, row.rhs});
      }
      opts.title = "(q-1) T(r,f) against sum N(r, targets) - N(r, -f)";
    } else {
      const VerificationReport rep = run_theorem(id, inst, cfg, ctx);
      for (std::size_t i = 0; i < rep.radii.size(); ++i) {
        lhs.push_back({rep.radii[i], rep.lhs[i]});
        rhs.push_back({rep.radii[i], rep.rhs[i]});
      }
      opts.title = id + ": LHS and RHS";
    }
    emit(cfg, cfg.target + ".svg",
         render_svg({{"LHS", "#d62728", lhs}, {"RHS", "#1f4e9c", rhs, true}}, opts), out);
    return kExitOk;
  }
  err << "error: unknown plot kind \"" << cfg.target << "\"\n";
  return kExitUsage;
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids{
      "jensen",         "poisson-jensen",        "first-main",  "shift-quotient",
      "second-main",    "second-main-proximity", "lemma-chain", "sandwich",
      "ptof",           "valiron-mohonko",       "mohonko",     "clunie"};
  return ids;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv(kToleranceEnv)) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      err << "error: " << kToleranceEnv << " must be a positive number\n";
      return kExitUsage;
    }
    cfg.tol = v;
  }

  CLI::App app{"Tropical Nevanlinna theory toolkit", "tropnev"};
  app.require_subcommand(1);
  auto add_grid = [&cfg](CLI::App* sub) {
    sub->add_option("--r-min", cfg.r_min, "smallest radius")->check(CLI::PositiveNumber);
    sub->add_option("--r-max", cfg.r_max, "largest radius")->check(CLI::PositiveNumber);
    sub->add_option("--points", cfg.points, "number of radii")->check(CLI::Range(2, 1000000));
    sub->add_flag("--geometric", cfg.geometric, "geometric radius grid");
    sub->add_option("--tol", cfg.tol, "verification tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--out", cfg.out_dir, "output directory");
  };
  CLI::App* sw = app.add_subcommand("sweep", "tabulate m, n, N, T over radii");
  sw->add_option("function", cfg.input, "function-spec JSON")->required();
  sw->add_flag("--log-y", cfg.log_y, "logarithmic T axis");
  add_grid(sw);
  CLI::App* ve = app.add_subcommand("verify", "check a theorem on instances");
  ve->add_option("theorem", cfg.target, "theorem id")->required();
  ve->add_option("instances", cfg.input, "instance JSON (object or array)");
  ve->add_option("--random", cfg.random, "number of random instances")->check(CLI::NonNegativeNumber);
  ve->add_option("--seed", cfg.seed, "seed for random instances");
  ve->add_option("--form", cfg.form, "bound form")->check(CLI::IsMember({"printed", "repaired"}));
  add_grid(ve);
  CLI::App* so = app.add_subcommand("solve", "solve an ultra-discrete equation");
  so->add_option("equation", cfg.input, "equation JSON")->required();
  add_grid(so);
  CLI::App* pl = app.add_subcommand("plot", "render an SVG chart");
  pl->add_option("kind", cfg.target, "function | characteristic | smt-trend | inequality")
      ->required();
  pl->add_option("input", cfg.input, "input JSON");
  pl->add_option("--theorem", cfg.theorem, "theorem id for plot inequality");
  pl->add_option("--random", cfg.random, "use a random instance")->check(CLI::NonNegativeNumber);
  pl->add_option("--seed", cfg.seed, "seed for the random instance");
  pl->add_option("--form", cfg.form, "bound form")->check(CLI::IsMember({"printed", "repaired"}));
  pl->add_flag("--log-y", cfg.log_y, "logarithmic y axis");
  add_grid(pl);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!(cfg.r_max > cfg.r_min)) {
    err << "error: --r-max must exceed --r-min\n";
    return kExitUsage;
  }

  try {
    if (sw->parsed()) return cmd_sweep(cfg, out);
    if (ve->parsed()) return cmd_verify(cfg, out, err);
    if (so->parsed()) return cmd_solve(cfg, out, err);
    return cmd_plot(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::kParseError ||
                       e.code() == ErrorCode::kInvalidSpec ||
                       e.code() == ErrorCode::kInvalidParameters;
    return usage ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace tropnev
