#include "fracprob/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "fracprob/actuarial.hpp"
#include "fracprob/checks.hpp"
#include "fracprob/equilibrium.hpp"
#include "fracprob/errors.hpp"
#include "fracprob/oracle.hpp"
#include "fracprob/order_mvt.hpp"
#include "fracprob/suite.hpp"
#include "fracprob/taylor.hpp"

namespace fracprob::cli {

namespace {

// Inline JSON when the value opens with '{' or '[', otherwise a file path.
json load_json(const std::string& flag, const std::string& value) {
  std::string text = value;
  const std::size_t first = value.find_first_not_of(" \t\n");
  if (first == std::string::npos || (value[first] != '{' && value[first] != '[')) {
    std::ifstream in(value);
    if (!in) throw CliError(kExitIo, flag + ": cannot read '" + value + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw CliError(kExitUsage, flag + ": malformed JSON: " + e.what());
  }
}

DistributionSpec load_spec(const std::string& flag, const std::string& value) {
  try {
    return distribution_spec_from_json(load_json(flag, value));
  } catch (const InvalidParameter& e) {
    throw CliError(kExitUsage, flag + ": " + e.what());
  }
}

PowerSum load_g(const std::string& value) {
  try {
    return power_sum_from_json(load_json("--g", value));
  } catch (const InvalidParameter& e) {
    throw CliError(kExitUsage, std::string("--g: ") + e.what());
  }
}

const std::map<std::string, Command>& command_names() {
  static const std::map<std::string, Command> m = {
      {"eqdist", Command::eqdist}, {"characterize", Command::characterize}, {"taylor", Command::taylor},
      {"mvt", Command::mvt},       {"order", Command::order},               {"actuarial", Command::actuarial},
      {"suite", Command::suite}};
  return m;
}

const char* expect_name(Expect e) {
  switch (e) {
    case Expect::fixed: return "fixed";
    case Expect::not_fixed: return "not-fixed";
    default: return "any";
  }
}

void apply_defaults(RunConfig& c) {
  auto set = [](auto& v, auto init) {
    if (v.empty()) v = init;
  };
  switch (c.command) {
    case Command::eqdist:
      set(c.alphas, std::vector<double>{0.5, 1.0});
      set(c.ns, std::vector<int>{1, 2});
      break;
    case Command::characterize:
      set(c.alphas, std::vector<double>{0.3, 0.5, 0.9, 1.0});
      set(c.ns, std::vector<int>{1, 2, 3});
      break;
    case Command::taylor:
      set(c.alphas, std::vector<double>{0.5, 1.0});
      set(c.ns, std::vector<int>{0, 1});
      break;
    case Command::mvt:
    case Command::actuarial:
      set(c.alphas, std::vector<double>{1.0});
      break;
    case Command::order:
      set(c.alphas, std::vector<double>{0.5, 1.0, 1.5, 2.0});
      break;
    case Command::suite:
      break;
  }
  const bool uses_g = c.command == Command::taylor || c.command == Command::mvt || c.command == Command::actuarial;
  if (!c.g && uses_g) c.g = PowerSum::monomial(1.0, 1.0);
}

void validate(const RunConfig& c) {
  auto usage = [](const std::string& m) { throw CliError(kExitUsage, m); };
  try {
    c.quad.validate();
  } catch (const InvalidParameter& e) {
    usage(e.what());
  }
  if (c.tol && !(*c.tol > 0.0)) usage("--tol: must be > 0");
  if (c.grid < 8) usage("--grid: must be >= 8");
  const bool frac = c.command == Command::eqdist || c.command == Command::characterize ||
                    c.command == Command::taylor;
  for (double a : c.alphas) {
    if (!(a > 0.0) || !std::isfinite(a)) usage("--alpha: must be > 0");
    if (frac && a > 1.0) usage("--alpha: must be in (0, 1] for " + std::string(to_string(c.command)));
  }
  const int n_min = c.command == Command::taylor ? 0 : 1;
  for (int n : c.ns) {
    if (n < n_min) usage("--n: must be >= " + std::to_string(n_min));
  }
  switch (c.command) {
    case Command::eqdist:
    case Command::characterize:
    case Command::taylor:
    case Command::actuarial:
      if (!c.dist) usage("--dist is required for " + std::string(to_string(c.command)));
      break;
    case Command::mvt:
    case Command::order:
      if (!c.x || !c.y) usage("--x and --y are required for " + std::string(to_string(c.command)));
      break;
    case Command::suite:
      break;
  }
  if (c.command == Command::actuarial) {
    if (!(c.r > 0.0 && c.r < c.s)) usage("--r/--s: need 0 < r < s");
    if (c.u.has_value() != c.v.has_value()) usage("--u and --v go together");
    if (c.u && !(*c.u > 0.0 && *c.u < *c.v)) usage("--u/--v: need 0 < u < v");
  }
  if (c.format == Format::csv && c.out.empty()) usage("--format csv needs --out");
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

struct Table {
  std::string file_suffix;  // "_a{α}_n{n}" or "" for the results table
  std::vector<std::vector<double>> rows;  // t, value, oracle_value, abs_diff
};

struct Campaign {
  std::vector<CheckResult> results;
  std::vector<Table> tables;
  json extra = json::object();
  int nonconverged = 0;
};

Table grid_table(double alpha, int n, const std::vector<double>& t, const std::vector<double>& value,
                 const std::vector<double>& oracle) {
  Table tab{"_a" + label(alpha) + "_n" + std::to_string(n), {}};
  for (std::size_t i = 0; i < t.size(); ++i) {
    tab.rows.push_back({t[i], value[i], oracle[i], std::abs(value[i] - oracle[i])});
  }
  return tab;
}

double upper_for_grid(const DistributionModel& x) {
  const double b = x.support_upper();
  return std::isfinite(b) ? b : quantile(x, 0.99);
}

// F̄_n against Γ(nα+1) I_−^{nα}F̄ / E[X^{nα}] through the direct Weyl path.
void run_eqdist(const RunConfig& c, kernels::Exec exec, Campaign& out) {
  const DistributionModel x = build(*c.dist);
  const std::vector<double> grid = kernels::linspace(0.0, upper_for_grid(x), c.grid);
  const double tol = c.tol.value_or(1e-7);
  CheckRunner rec(out.results);
  for (double alpha : c.alphas) {
    for (int n : c.ns) {
      rec.run("eq_survival", {{"alpha", alpha}, {"n", n}}, tol, [&] {
        const EquilibriumView view(x, {alpha, n}, c.quad);
        const double m = view.order().total();
        const std::vector<double> value = kernels::sweep([&](double t) { return eq_survival(view, t); }, grid, exec);
        const std::vector<double> oracle = kernels::sweep(
            [&](double t) { return gamma(m + 1.0) * weyl_integral(x, m, t, c.quad) / view.norm(); }, grid, exec);
        out.tables.push_back(grid_table(alpha, n, grid, value, oracle));
        const kernels::MaxDeviation d = kernels::max_abs_deviation_serial(value, oracle);
        Outcome o{value[d.index], oracle[d.index], d.value, d.value <= tol};
        o.detail = {{"worst_t", grid[d.index]}, {"norm", view.norm()}};
        return o;
      });
    }
  }
  out.nonconverged += rec.convergence_failures();
}

void run_characterize(const RunConfig& c, kernels::Exec exec, Campaign& out) {
  const DistributionModel x = build(*c.dist);
  const double tol = c.tol.value_or(1e-6);
  CheckRunner rec(out.results);
  rec.run("characterization", {{"alphas", c.alphas}, {"ns", c.ns}}, tol, [&] {
    const std::vector<double> grid = characterization_grid(x, c.grid);
    const CharacterizationReport rep = characterization_check(x, c.alphas, c.ns, grid, tol, c.quad, exec);
    const std::vector<double> f = kernels::sweep([&](double t) { return x.density(t); }, grid, exec);
    for (double alpha : c.alphas) {
      for (int n : c.ns) {
        const EquilibriumView view(x, {alpha, n}, c.quad);
        const std::vector<double> fn = kernels::sweep([&](double t) { return eq_density(view, t); }, grid, exec);
        out.tables.push_back(grid_table(alpha, n, grid, fn, f));
      }
    }
    bool pass = true;
    if (c.expect == Expect::fixed) pass = rep.is_fixed_point;
    if (c.expect == Expect::not_fixed) pass = !rep.is_fixed_point;
    Outcome o{rep.max_deviation, 0.0, rep.max_deviation, pass};
    json pairs = json::array();
    for (const PairDeviation& p : rep.pairs) {
      pairs.push_back({{"alpha", p.alpha}, {"n", p.n}, {"max_deviation", p.max_deviation}, {"worst_t", p.worst_t}});
    }
    o.detail = {{"is_fixed_point", rep.is_fixed_point},
                {"expect", expect_name(c.expect)},
                {"witness", {{"alpha", rep.witness_alpha}, {"n", rep.witness_n}, {"t", rep.witness_t}}},
                {"pairs", pairs}};
    return o;
  });
  out.nonconverged += rec.convergence_failures();
}

void run_taylor(const RunConfig& c, Campaign& out) {
  const DistributionModel x = build(*c.dist);
  const double tol = c.tol.value_or(1e-5);
  CheckRunner rec(out.results);
  for (double alpha : c.alphas) {
    for (int n : c.ns) {
      rec.run(c.caputo ? "caputo_taylor" : "rl_taylor", {{"alpha", alpha}, {"n", n}}, tol, [&] {
        const TaylorReport rep = c.caputo ? caputo_taylor_expectation(*c.g, x, alpha, n, c.quad)
                                          : rl_taylor_expectation(*c.g, x, alpha, n, c.quad);
        Outcome o{rep.lhs, rep.lhs - rep.residual, std::abs(rep.residual), std::abs(rep.residual) <= tol};
        o.detail = to_json(rep, alpha, n, *c.g, x);
        return o;
      });
    }
  }
  out.nonconverged += rec.convergence_failures();
}

void run_mvt(const RunConfig& c, kernels::Exec exec, Campaign& out) {
  const DistributionModel x = build(*c.x);
  const DistributionModel y = build(*c.y);
  const double tol = c.tol.value_or(1e-5);
  CheckRunner rec(out.results);
  for (double alpha : c.alphas) {
    rec.run("mvt", {{"alpha", alpha}}, tol, [&] {
      const ZAlphaModel z = ZAlphaModel::verified(x, y, alpha, c.quad);
      const MvtReport rep = mvt_verify(*c.g, z);
      Outcome o{rep.lhs, rep.term_c0 + rep.term_main, std::abs(rep.residual), std::abs(rep.residual) <= tol};
      o.detail = {{"c0", rep.c0}, {"term_c0", rep.term_c0}, {"term_main", rep.term_main}, {"mix_c", z.mix_c()}};
      try {
        const MeanClassification m = classify_mean_location(z);
        o.detail["mean_location"] = {{"location", to_string(m.location)},
                                     {"mean_z", m.mean_z},
                                     {"delta_v", m.delta_v},
                                     {"lower_threshold", m.lower_threshold},
                                     {"upper_threshold", m.upper_threshold},
                                     {"identity_residual", m.identity_residual}};
      } catch (const DivergenceError& e) {
        o.detail["mean_location"] = {{"error", e.what()}};
      }
      const std::vector<double> grid = kernels::linspace(0.0, upper_for_grid(y), c.grid);
      const std::vector<double> lhs = kernels::sweep([&](double t) { return z_density(z, t); }, grid, exec);
      const std::vector<double> rhs =
          kernels::sweep([&](double t) { return z_mixture_identity(z, t).rhs; }, grid, exec);
      out.tables.push_back(grid_table(alpha, 1, grid, lhs, rhs));
      return o;
    });
  }
  out.nonconverged += rec.convergence_failures();
}

// Informational: every check passes and the verdict sits in `detail`.
void run_order(const RunConfig& c, kernels::Exec exec, Campaign& out) {
  const DistributionModel x = build(*c.x);
  const DistributionModel y = build(*c.y);
  CheckRunner rec(out.results);
  const std::vector<double> grid = order_grid(x, y, c.grid);
  for (double alpha : c.alphas) {
    rec.run("order", {{"alpha", alpha}}, kOrderSlack, [&] {
      const OrderCheckResult r = check_survival_bounded_order(x, y, alpha, grid, c.quad, exec);
      const std::vector<double> fx =
          kernels::sweep([&](double t) { return alpha_survival_transform(x, alpha, t, c.quad); }, grid, exec);
      const std::vector<double> fy =
          kernels::sweep([&](double t) { return alpha_survival_transform(y, alpha, t, c.quad); }, grid, exec);
      out.tables.push_back(grid_table(alpha, 1, grid, fx, fy));
      Outcome o{r.worst_gap, 0.0, std::max(r.worst_gap, 0.0), true};
      o.detail = {{"holds", r.holds}, {"worst_t", r.worst_t}, {"worst_gap", r.worst_gap}, {"informational", true}};
      return o;
    });
  }
  out.nonconverged += rec.convergence_failures();
}

void run_actuarial(const RunConfig& c, kernels::Exec exec, Campaign& out) {
  const DistributionModel sev = build(*c.dist);
  const double tol = c.tol.value_or(1e-5);
  CheckRunner rec(out.results);
  const DistributionModel dr = deductible_model(sev, c.r);
  const DistributionModel ds = deductible_model(sev, c.s);
  for (double alpha : c.alphas) {
    rec.run("deductible_mvt", {{"alpha", alpha}, {"r", c.r}, {"s", c.s}}, tol, [&] {
      const DeductibleMvtReport rep = deductible_mvt(*c.g, sev, c.r, c.s, alpha, c.quad);
      Outcome o{rep.lhs, rep.rhs, std::abs(rep.residual), std::abs(rep.residual) <= tol};
      o.detail = {{"lambda_r", normalized_moment(dr, alpha, c.quad)}, {"lambda_s", normalized_moment(ds, alpha, c.quad)}};
      const std::vector<double> grid = kernels::linspace(0.0, upper_for_grid(sev), c.grid);
      const std::vector<double> value = kernels::sweep([&](double t) { return z_density(rep.z, t); }, grid, exec);
      const RealFn oracle = [&](double t) {
        if (const auto* e = std::get_if<spec::Exponential>(&c.dist->kind)) return e->rate * std::exp(-e->rate * t);
        if (const auto* h = std::get_if<spec::HyperExp2>(&c.dist->kind)) {
          return oracle::hyperexp_deductible_z_density(h->p, h->rate1, h->rate2, c.r, c.s, alpha, t);
        }
        return z_mixture_identity(rep.z, t).rhs;
      };
      out.tables.push_back(grid_table(alpha, 1, grid, value, kernels::sweep(oracle, grid, exec)));
      return o;
    });
    if (c.u) {
      const auto* e = std::get_if<spec::Exponential>(&c.dist->kind);
      rec.run("ratio_independence", {{"alpha", alpha}, {"r", c.r}, {"s", c.s}, {"u", *c.u}, {"v", *c.v}}, tol, [&] {
        if (!e) throw DomainError("ratio_independence needs an exponential severity");
        std::vector<PowerSum> gs = {*c.g, PowerSum::monomial(1.0, 1.0), PowerSum::monomial(1.0, 2.0)};
        const RatioReport rep = exponential_ratio_check(e->rate, c.r, c.s, *c.u, *c.v, gs, alpha, c.quad);
        Outcome o{rep.ratios.front(), rep.reference_ratio, rep.max_spread, rep.max_spread <= tol};
        o.detail = {{"ratios", rep.ratios}};
        return o;
      });
    }
  }
  out.nonconverged += rec.convergence_failures();
}

void run_suite(const RunConfig& c, kernels::Exec exec, Campaign& out, std::ostream& log) {
  SuiteOptions opts;
  opts.cfg = c.quad;
  opts.exec = exec;
  json criteria = json::array();
  for (CriterionResult& r : run_acceptance(opts)) {
    log << "criterion " << r.id << (r.pass ? " PASS " : " FAIL ") << r.title << ": " << r.summary << "\n";
    criteria.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"summary", r.summary}});
    out.nonconverged += r.convergence_failures;
    for (CheckResult& ch : r.checks) {
      ch.params["criterion"] = r.id;
      out.results.push_back(std::move(ch));
    }
  }
  out.extra["criteria"] = criteria;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CliError(kExitIo, "cannot open '" + path + "' for writing");
  f << body;
  if (!f.flush()) throw CliError(kExitIo, "write to '" + path + "' failed");
}

std::string results_csv(const std::vector<CheckResult>& results) {
  std::string s = "check,params,lhs,rhs,residual,tolerance,pass\n";
  for (const CheckResult& r : results) {
    std::string params = r.params.dump();
    std::string quoted = "\"";
    for (char ch : params) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    quoted += "\"";
    s += r.check + "," + quoted + "," + num(r.lhs) + "," + num(r.rhs) + "," + num(r.residual) + "," +
         num(r.tolerance) + "," + (r.pass ? "true" : "false") + "\n";
  }
  return s;
}

}  // namespace

const char* to_string(Command c) {
  for (const auto& [name, cmd] : command_names()) {
    if (cmd == c) return name.c_str();
  }
  return "?";
}

json RunConfig::to_json() const {
  auto opt_spec = [](const std::optional<DistributionSpec>& s) { return s ? fracprob::to_json(*s) : json(nullptr); };
  json j = {{"command", to_string(command)},
            {"alphas", alphas},
            {"ns", ns},
            {"grid", grid},
            {"abs_tol", quad.abs_tol},
            {"rel_tol", quad.rel_tol},
            {"tol", tol ? json(*tol) : json(nullptr)},
            {"format", format == Format::json ? "json" : "csv"},
            {"serial", serial}};
  if (dist) j["dist"] = opt_spec(dist);
  if (x) j["x"] = opt_spec(x);
  if (y) j["y"] = opt_spec(y);
  if (g) j["g"] = fracprob::to_json(*g);
  if (command == Command::taylor) j["caputo"] = caputo;
  if (command == Command::characterize) j["expect"] = expect_name(expect);
  if (command == Command::actuarial) {
    j["r"] = r;
    j["s"] = s;
    if (u) {
      j["u"] = *u;
      j["v"] = *v;
    }
  }
  return j;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Fractional equilibrium distributions, probabilistic Taylor expansions and mean value checks",
               "fracprob"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  RunConfig c;
  std::string format = "json";
  double tol = 0.0;
  std::string dist, x, y, g, expect = "any";
  std::vector<double> alphas;
  std::vector<int> ns;
  double u = 0.0, v = 0.0;

  app.add_option("--out", c.out, "Report path; CSV grids go to <out>_a{alpha}_n{n}.csv");
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--abs-tol", c.quad.abs_tol, "Quadrature absolute tolerance");
  app.add_option("--rel-tol", c.quad.rel_tol, "Quadrature relative tolerance");
  CLI::Option* tol_opt = app.add_option("--tol", tol, "Override the check tolerance");
  app.add_option("--grid", c.grid, "Grid size (>= 8)");
  app.add_flag("--serial", c.serial, "Use the serial reference kernels");

  std::map<std::string, CLI::App*> subs;
  const std::map<std::string, std::string> help = {
      {"eqdist", "Equilibrium survival against the direct Weyl integral"},
      {"characterize", "Exponential fixed-point check"},
      {"taylor", "Probabilistic Taylor expansion of E[g(X)]"},
      {"mvt", "Mean value theorem for an ordered pair"},
      {"order", "Survival bounded order (informational)"},
      {"actuarial", "Deductible mean value theorem"},
      {"suite", "Full acceptance battery"}};
  for (const auto& [name, text] : help) subs[name] = app.add_subcommand(name, text);

  auto alpha_n = [&](CLI::App* s, bool with_n) {
    s->add_option("--alpha", alphas, "Orders, comma separated or repeated")->delimiter(',');
    if (with_n) s->add_option("--n", ns, "Iteration counts")->delimiter(',');
  };
  for (const char* name : {"eqdist", "characterize", "taylor", "actuarial"}) {
    subs[name]->add_option("--dist", dist, "Distribution spec: inline JSON or file")->required();
  }
  for (const char* name : {"mvt", "order"}) {
    subs[name]->add_option("--x", x, "Spec of X")->required();
    subs[name]->add_option("--y", y, "Spec of Y")->required();
  }
  for (const char* name : {"taylor", "mvt", "actuarial"}) {
    subs[name]->add_option("--g", g, "PowerSum [{\"coef\":..,\"exp\":..}] inline or file");
  }
  alpha_n(subs["eqdist"], true);
  alpha_n(subs["characterize"], true);
  alpha_n(subs["taylor"], true);
  alpha_n(subs["mvt"], false);
  alpha_n(subs["order"], false);
  alpha_n(subs["actuarial"], false);
  subs["characterize"]->add_option("--expect", expect, "fixed, not-fixed or any")
      ->check(CLI::IsMember({"fixed", "not-fixed", "any"}));
  subs["taylor"]->add_flag("--caputo", c.caputo, "Caputo form instead of Riemann-Liouville");
  subs["actuarial"]->add_option("--r", c.r, "Smaller deductible");
  subs["actuarial"]->add_option("--s", c.s, "Larger deductible");
  CLI::Option* u_opt = subs["actuarial"]->add_option("--u", u, "Ratio pair, smaller");
  CLI::Option* v_opt = subs["actuarial"]->add_option("--v", v, "Ratio pair, larger");

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' && !command_names().contains(args.front())) {
    throw CliError(kExitUsage, "unknown command '" + args.front() + "'\n" + app.help());
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw CliError(kExitPass, app.help());
  } catch (const CLI::ParseError& e) {
    throw CliError(kExitUsage, std::string(e.what()) + "\n" + app.help());
  }

  for (const auto& [name, s] : subs) {
    if (s->parsed()) c.command = command_names().at(name);
  }
  c.format = format == "csv" ? Format::csv : Format::json;
  if (tol_opt->count() > 0) c.tol = tol;
  if (u_opt->count() > 0) c.u = u;
  if (v_opt->count() > 0) c.v = v;
  c.alphas = alphas;
  c.ns = ns;
  c.expect = expect == "fixed" ? Expect::fixed : expect == "not-fixed" ? Expect::not_fixed : Expect::any;
  if (!dist.empty()) c.dist = load_spec("--dist", dist);
  if (!x.empty()) c.x = load_spec("--x", x);
  if (!y.empty()) c.y = load_spec("--y", y);
  if (!g.empty()) c.g = load_g(g);
  apply_defaults(c);
  validate(c);
  return c;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& log) {
  const kernels::Exec exec = c.serial ? kernels::Exec::serial : kernels::Exec::parallel;
  Campaign camp;
  try {
    switch (c.command) {
      case Command::eqdist: run_eqdist(c, exec, camp); break;
      case Command::characterize: run_characterize(c, exec, camp); break;
      case Command::taylor: run_taylor(c, camp); break;
      case Command::mvt: run_mvt(c, exec, camp); break;
      case Command::order: run_order(c, exec, camp); break;
      case Command::actuarial: run_actuarial(c, exec, camp); break;
      case Command::suite: run_suite(c, exec, camp, log); break;
    }
  } catch (const ConvergenceError& e) {
    log << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const Error& e) {
    // Failures while building models, before any check could run.
    log << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  json report = make_report(c.to_json(), camp.results);
  for (const auto& [k, v] : camp.extra.items()) report[k] = v;
  const std::string body = report.dump(2) + "\n";

  if (c.format == Format::csv) {
    if (camp.tables.empty()) {
      write_file(c.out + ".csv", results_csv(camp.results));
    }
    for (const Table& t : camp.tables) {
      std::string csv = "t,value,oracle_value,abs_diff\n";
      for (const auto& row : t.rows) {
        csv += num(row[0]) + "," + num(row[1]) + "," + num(row[2]) + "," + num(row[3]) + "\n";
      }
      write_file(c.out + t.file_suffix + ".csv", csv);
    }
    write_file(c.out + ".json", body);
  } else if (!c.out.empty()) {
    write_file(c.out, body);
  } else {
    out << body;
  }

  int failed = 0;
  for (const CheckResult& r : camp.results) failed += r.pass ? 0 : 1;
  log << to_string(c.command) << ": " << camp.results.size() << " checks, " << failed << " failed";
  if (camp.nonconverged > 0) log << ", " << camp.nonconverged << " did not converge";
  log << "\n";
  if (camp.nonconverged > 0) return kExitNonConvergence;
  return failed > 0 ? kExitCheckFailed : kExitPass;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& log) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    const RunConfig c = parse_args(args);
    return run(c, out, log);
  } catch (const CliError& e) {
    (e.code() == kExitPass ? out : log) << e.what() << "\n";
    return e.code();
  }
}

}  // namespace fracprob::cli
