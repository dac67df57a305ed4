#include "lsi/cli.hpp"

#include "lsi/catalog.hpp"
#include "lsi/causality.hpp"
#include "lsi/ncpoly.hpp"
#include "lsi/report.hpp"
#include "lsi/response.hpp"
#include "lsi/verify.hpp"
#include "lsi/ward.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace lsi {
namespace {

// configuration problems that must exit with code 2
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// option plumbing

struct Options {
  std::string id;      // catalog id (verify algebra/symmetry)
  std::string kase;    // ward case or constraint scenario
  std::string branch;  // ward branch
  int dim = 1;
  bool dim_set = false;
  std::string window;  // "a..b"
  std::vector<std::string> binds;
  std::string format = "text";
  std::string out_path;
  bool mutate = false;

  // causality
  int n = 0;
  double x = 1.5;
  std::string half_plane = "below";
  double t = 1.0, r = 0.0;
  std::string entry = "G";
  ContourSpec contour;
};

// exact rational bindings keep symbolic commands exact; causality commands
// take reals. Integer literals satisfy both readings.
struct Bindings {
  std::map<std::string, Rat> exact;
  std::map<std::string, double> real;
};

Bindings parse_bindings(const std::vector<std::string>& raw) {
  static const std::regex rat_re(R"(^[+-]?\d+(/\d+)?$)");
  Bindings b;
  for (const std::string& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw UsageError("malformed --bind '" + item + "' (expected name=value)");
    const std::string name = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    if (std::regex_match(val, rat_re)) {
      const auto slash = val.find('/');
      const long long num = std::stoll(val.substr(0, slash));
      const long long den = slash == std::string::npos ? 1 : std::stoll(val.substr(slash + 1));
      if (den == 0) throw UsageError("binding '" + item + "' has a zero denominator");
      b.exact.emplace(name, Rat(num, den));
      if (slash == std::string::npos) b.real.emplace(name, static_cast<double>(num));
    } else {
      try {
        std::size_t used = 0;
        const double v = std::stod(val, &used);
        if (used != val.size()) throw std::invalid_argument(val);
        b.real.emplace(name, v);
      } catch (const std::exception&) {
        throw UsageError("binding '" + item + "' is neither a rational p/q nor a real number");
      }
    }
  }
  return b;
}

std::map<std::string, ParamScalar> exact_bindings(const Bindings& b,
                                                  const std::vector<std::string>& raw) {
  for (const std::string& item : raw) {
    const std::string name = item.substr(0, item.find('='));
    if (!b.exact.count(name))
      throw UsageError("binding '" + item + "' must be an exact rational for symbolic commands");
  }
  std::map<std::string, ParamScalar> m;
  for (const auto& [name, v] : b.exact) m.emplace(name, ParamScalar(GRat(v)));
  return m;
}

std::map<std::string, double> real_bindings(const Bindings& b,
                                            const std::vector<std::string>& raw) {
  for (const std::string& item : raw) {
    const std::string name = item.substr(0, item.find('='));
    if (!b.real.count(name))
      throw UsageError("binding '" + item + "' must be a real number for numeric commands");
  }
  return b.real;
}

std::pair<int, int> parse_window(const std::string& s) {
  static const std::regex win_re(R"(^(-?\d+)\.\.(-?\d+)$)");
  std::smatch m;
  if (!std::regex_match(s, m, win_re))
    throw UsageError("malformed --window '" + s + "' (expected a..b)");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

ordered_json cnum(const std::complex<double>& v, double err) {
  ordered_json j;
  j["re"] = v.real();
  j["im"] = v.imag();
  j["err"] = err;
  return j;
}

std::string fnum(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// verify algebra

void corrupt_first_generator(Representation& rep) {
  auto it = rep.gens.begin();
  it->second = GRat(2) * it->second;
}

void add_algebra_rep_checks(const std::string& id, int d,
                            std::optional<std::pair<int, int>> window, bool mutate,
                            RunReport& rep_out) {
  Representation rep = build_representation(id, d, window);
  if (mutate) corrupt_first_generator(rep);

  const std::string tag = id + "(d=" + std::to_string(d) + ")";
  const StructureReport sr = verify_structure(rep);
  rep_out.checks.push_back(CheckRow::make(
      "structure " + tag, sr.passed(),
      {{"checked", sr.checked}, {"mismatches", sr.mismatches}, {"flagged", sr.flagged}}));

  const JacobiReport jr = jacobi_check(rep.table);
  rep_out.checks.push_back(CheckRow::make(
      "jacobi " + tag, jr.passed(),
      {{"checked", jr.checked}, {"failures", jr.failures}, {"flagged", jr.flagged}}));
}

void add_two_charge_checks(std::pair<int, int> window, bool mutate, RunReport& rep_out) {
  const JacobiReport jr = jacobi_check(two_charge_virasoro_table(window.first, window.second));
  rep_out.checks.push_back(CheckRow::make(
      "jacobi two-charge-virasoro", jr.passed(),
      {{"checked", jr.checked}, {"failures", jr.failures}, {"flagged", jr.flagged}}));

  const CentralChargeReport cr =
      verify_matrix_central_charges(window.first, window.second, mutate ? Rat(2) : Rat(1));
  ordered_json detail{{"checked", cr.checked}, {"failures", cr.failures}};
  if (!cr.details.empty()) detail["first_mismatch"] = cr.details.front();
  rep_out.checks.push_back(
      CheckRow::make("central-charges two-charge-virasoro", cr.passed(), detail));
}

void add_algebra_checks(const Options& opt, RunReport& out) {
  std::optional<std::pair<int, int>> window;
  if (!opt.window.empty()) window = parse_window(opt.window);

  if (!opt.id.empty()) {
    if (opt.id == "two-charge-virasoro") {
      add_two_charge_checks(window.value_or(std::pair{-2, 2}), opt.mutate, out);
      return;
    }
    const int d = opt.dim_set ? opt.dim : (opt.id == "ecga" ? 2 : 1);
    add_algebra_rep_checks(opt.id, d, window, opt.mutate, out);
    return;
  }

  const auto inf_window = window.value_or(std::pair{-3, 3});
  add_algebra_rep_checks("sch", 1, window, opt.mutate, out);
  add_algebra_rep_checks("sch", 2, window, opt.mutate, out);
  add_algebra_rep_checks("sv", 1, inf_window, opt.mutate, out);
  add_algebra_rep_checks("cga", 1, window, opt.mutate, out);
  add_algebra_rep_checks("cga", 2, window, opt.mutate, out);
  add_algebra_rep_checks("av", 1, inf_window, opt.mutate, out);
  add_algebra_rep_checks("ecga", 2, window, opt.mutate, out);
  add_algebra_rep_checks("dual-sch", 1, window, opt.mutate, out);
  add_algebra_rep_checks("parabolic-N", 1, window, opt.mutate, out);
  add_algebra_rep_checks("log-dual-sch", 1, window, opt.mutate, out);
  add_algebra_rep_checks("dual-cga", 1, window, opt.mutate, out);
  add_algebra_rep_checks("age", 1, window, opt.mutate, out);
  add_two_charge_checks(window.value_or(std::pair{-2, 2}), opt.mutate, out);
}

// ---------------------------------------------------------------------------
// verify symmetry

void add_symmetry_checks(const Options& opt, RunReport& out) {
  struct Row {
    const char* rep_id;
    Label gen;
    ClosedForm want;
  };
  const std::vector<Row> table = {
      {"age", Label::X(0), ClosedForm(GRat(-1))},
      {"age", Label::X(1), GRat(-2) * ClosedForm::coord("t")},
      {"age", Label::Y(Rat(1, 2)), ClosedForm()},
      {"age", Label::Y(Rat(-1, 2)), ClosedForm()},
      {"age", Label::M(0), ClosedForm()},
      {"dual-cga", Label::X(1), GRat(-2) * ClosedForm::coord("t")},
      {"dual-cga", Label::Vplus(), GRat(-2) * ClosedForm::coord("r")},
      {"dual-cga", Label::N(), ClosedForm()},
      {"dual-cga", Label::D(), ClosedForm(GRat(-2))},
      {"dual-cga", Label::M(0), ClosedForm()},
  };

  DiffOp S = schrodinger_wave_op();
  if (opt.mutate)
    S = S + DiffOp::term(DKey{{{"t", -1}}, {{"zeta", 1}}},
                         Mat2::scalar(ParamScalar(GRat(Rat(0), Rat(-1)))));

  for (const char* rep_id : {"age", "dual-cga"}) {
    if (!opt.id.empty() && opt.id != rep_id) continue;
    const Representation rep = build_representation(rep_id, 1);
    const auto checks = verify_dynamical_symmetry(rep, S);
    for (const Row& row : table) {
      if (row.rep_id != std::string(rep_id)) continue;
      bool found = false;
      for (const auto& sc : checks) {
        if (!(sc.gen == row.gen)) continue;
        found = true;
        const bool ok = sc.ok && sc.lambda == row.want;
        ordered_json detail{{"lambda", sc.lambda.str()}};
        if (!sc.ok) detail["residual"] = sc.residual;
        out.checks.push_back(
            CheckRow::make("lambda " + std::string(rep_id) + ":" + row.gen.str(), ok, detail));
      }
      if (!found)
        out.checks.push_back(CheckRow::make(
            "lambda " + std::string(rep_id) + ":" + row.gen.str(), false,
            {{"residual", "generator missing from representation"}}));
    }
  }
  if (out.checks.empty())
    throw UsageError("verify symmetry: --id must be 'age' or 'dual-cga'");
}

// ---------------------------------------------------------------------------
// verify ward

void apply_case_bindings(WardCase& wc, const std::map<std::string, ParamScalar>& m) {
  if (m.empty()) return;
  // Weight names with a nonzero Jordan corner are differentiated inside the
  // covariance check; instantiating them first would erase the source terms.
  std::set<std::string> frozen;
  if (!wc.doublet.xp1.is_zero() && !wc.wx1.empty()) frozen.insert(wc.wx1);
  if (!wc.doublet.xp2.is_zero() && !wc.wx2.empty()) frozen.insert(wc.wx2);
  if (!wc.doublet.xip1.is_zero() && !wc.wxi1.empty()) frozen.insert(wc.wxi1);
  if (!wc.doublet.xip2.is_zero() && !wc.wxi2.empty()) frozen.insert(wc.wxi2);
  for (const auto& [name, v] : m)
    if (frozen.count(name))
      throw UsageError("cannot bind '" + name + "': case '" + wc.id +
                       "' takes a weight derivative with respect to it");
  for (auto& [l, op] : wc.leg1) op = op.substitute_params(m);
  for (auto& [l, op] : wc.leg2) op = op.substitute_params(m);
  for (ParamScalar* p : {&wc.doublet.xp1, &wc.doublet.xp2, &wc.doublet.xip1, &wc.doublet.xip2})
    *p = p->substitute_all(m);
  for (const char* nm : Quartet::entry_names())
    wc.solution.entry(nm) = wc.solution.entry(nm).substitute_params(m);
}

void add_ward_checks(const Options& opt, RunReport& out) {
  const Bindings binds = parse_bindings(opt.binds);
  const auto exact = exact_bindings(binds, opt.binds);

  std::vector<std::string> cases = opt.kase.empty()
                                       ? ward_case_ids()
                                       : std::vector<std::string>{opt.kase};
  for (const std::string& id : cases) {
    const std::vector<std::string> branches = ward_branches(id);  // validates id
    for (const std::string& br : branches) {
      if (!opt.branch.empty() && br != opt.branch) continue;
      WardCase wc = build_ward_case(id, br);
      apply_case_bindings(wc, exact);
      if (opt.mutate) {
        DiffOp& op = wc.leg1.at(wc.gens.front());
        op = op + DiffOp::multiplication({{"t1", Rat(1)}});
      }
      const CovarianceReport rep = verify_covariance(wc);
      ordered_json detail{{"checked", rep.checked}, {"failures", rep.failures}};
      for (const auto& row : rep.rows)
        if (!row.zero) {
          detail["first_residual"] = row.gen.str() + " on " + row.entry;
          break;
        }
      out.checks.push_back(
          CheckRow::make("covariance " + id + " [" + br + "]", rep.passed(), detail));
    }
    if (!opt.branch.empty() && out.checks.empty())
      throw UsageError("case '" + id + "' has no branch '" + opt.branch + "'");
  }
}

// ---------------------------------------------------------------------------
// verify constraints

void add_constraint_checks(const Options& opt, RunReport& out) {
  std::vector<std::string> scenarios = opt.kase.empty()
                                           ? constraint_scenarios()
                                           : std::vector<std::string>{opt.kase};
  for (const std::string& s : scenarios) {
    const ConstraintReport rep = extract_constraints(s);  // validates scenario
    const ScenarioExpectation want = expected_conditions(s);
    ordered_json conds = ordered_json::array();
    for (const ParamScalar& e : rep.eliminants) conds.push_back(e.str());
    ordered_json detail{{"rows", rep.rows.size()}, {"eliminants", conds}};
    out.checks.push_back(
        CheckRow::make("constraints " + s, constraints_match(rep, want), detail));
  }
}

// ---------------------------------------------------------------------------
// causality

ContourSpec doubled(const ContourSpec& spec) {
  ContourSpec b = spec;
  b.L *= 2.0;
  b.tail_depth *= 2.0;
  b.nodes_per_segment *= 2;
  return b;
}

void add_integral_check(int n, double x, HalfPlane hp, const ContourSpec& contour,
                        double tolerance, RunReport& out) {
  ContourSpec spec = contour;
  spec.half_plane = hp;
  const QuadResult q = integral_I(n, x, spec);

  std::string name = std::string("integral ") + (hp == HalfPlane::below ? "below" : "above") +
                     " n=" + std::to_string(n) + " x=" + fnum(x);
  if (hp == HalfPlane::below) {
    // the deformed line integral must vanish
    const bool ok = std::abs(q.value) <= tolerance;
    CheckRow row = CheckRow::make(name, ok, cnum(q.value, q.error));
    row.detail["abs"] = std::abs(q.value);
    if (ok && q.error > tolerance) row.status = "warn";
    out.checks.push_back(std::move(row));
  } else {
    // no closed form is assumed: require cross-scheme agreement instead
    const QuadResult qb = integral_I(n, x, doubled(spec));
    const double gap = std::abs(q.value - qb.value) / std::abs(qb.value);
    const bool ok = gap <= tolerance;
    CheckRow row = CheckRow::make(name, ok, cnum(q.value, q.error));
    row.detail["cross_scheme_gap"] = gap;
    out.checks.push_back(std::move(row));
  }
}

DualizationTask task_from_bindings(const std::map<std::string, double>& b) {
  DualizationTask task;
  task.x = 0.8;
  task.xi_sum = 0.3;
  task.log_mix = 0.4;
  task.mass = 1.0;
  task.g0 = 1.0;
  task.h0 = 1.0;
  const auto get = [&b](const char* name, double& slot) {
    if (auto it = b.find(name); it != b.end()) slot = it->second;
  };
  get("x", task.x);
  get("xi_sum", task.xi_sum);
  get("log_mix", task.log_mix);
  get("mass", task.mass);
  get("g0", task.g0);
  get("h0", task.h0);
  get("tolerance", task.tolerance);
  if (auto it = b.find("asymmetric"); it != b.end()) task.asymmetric = it->second != 0.0;
  task.grid = DualizationTask::default_grid();
  return task;
}

void add_dualize_check(const Options& opt, const std::map<std::string, double>& binds,
                       RunReport& out) {
  const DualizationTask task = task_from_bindings(binds);
  const PairEntry entry = [&] {
    if (opt.entry == "G") return PairEntry::G;
    if (opt.entry == "H") return PairEntry::H;
    throw UsageError("--entry must be G or H");
  }();
  const QuadResult q = dualize_pointwise(task, opt.t, opt.r, entry, opt.contour);

  CheckRow row;
  row.name = "dualize " + opt.entry + " t=" + fnum(opt.t) + " r=" + fnum(opt.r);
  row.detail = cnum(q.value, q.error);
  row.detail["abs"] = std::abs(q.value);
  if (q.error < task.tolerance / 10.0)
    row.status = "pass";
  else if (q.error < task.tolerance)
    row.status = "warn";
  else
    row.status = "fail";
  out.checks.push_back(std::move(row));
}

ordered_json task_json(const DualizationTask& task) {
  ordered_json j;
  j["x"] = task.x;
  j["xi_sum"] = task.xi_sum;
  j["log_mix"] = task.log_mix;
  j["asymmetric"] = task.asymmetric;
  j["mass"] = task.mass;
  j["g0"] = task.g0;
  j["h0"] = task.h0;
  j["tolerance"] = task.tolerance;
  return j;
}

// thresholds of the dualization diagnostics (relative; slope absolute in
// units of |G0|)
constexpr double kSuppressionTol = 1e-6;
constexpr double kSpreadTol = 1e-6;
constexpr double kPlateauTol = 1e-8;
constexpr double kSlopeTol = 1e-4;

CausalityReport add_report_checks(const DualizationTask& task, const ContourSpec& contour,
                                  const std::string& tag, RunReport& out) {
  const CausalityReport rep = causality_report(task, contour);

  out.checks.push_back(CheckRow::make("suppression" + tag,
                                      rep.suppression_ratio <= kSuppressionTol,
                                      {{"ratio", rep.suppression_ratio}}));
  out.checks.push_back(CheckRow::make("gaussian-factorization" + tag,
                                      rep.gaussian_spread <= kSpreadTol,
                                      {{"spread", rep.gaussian_spread}}));
  ordered_json plateau{{"gap", rep.g0_relative_gap}};
  plateau["quadrature"] = cnum(rep.g0_quadrature, 0.0);
  plateau["identity"] = cnum(rep.g0_identity, 0.0);
  plateau.erase("err");
  out.checks.push_back(
      CheckRow::make("plateau-identity" + tag, rep.g0_relative_gap <= kPlateauTol, plateau));
  out.checks.push_back(CheckRow::make(
      "log-slope" + tag, rep.slope_gap <= kSlopeTol,
      {{"slope_re", rep.h_log_slope.real()},
       {"slope_im", rep.h_log_slope.imag()},
       {"gap", rep.slope_gap},
       {"expected", task.asymmetric ? "0" : "-G0"}}));
  out.checks.push_back(CheckRow::make(
      "grid-trust" + tag, rep.trusted_points > 0,
      {{"trusted", rep.trusted_points}, {"skipped", rep.skipped_points}}));
  return rep;
}

void add_causality_report(const Options& opt, const std::map<std::string, double>& binds,
                          RunReport& out, std::string* csv) {
  const DualizationTask task = task_from_bindings(binds);
  const CausalityReport rep = add_report_checks(task, opt.contour, "", out);

  ordered_json grid = ordered_json::array();
  std::ostringstream cs;
  cs << "t,r,g_re,g_im,g_err,h_re,h_im,h_err,trusted\n";
  for (const GridPoint& p : rep.points) {
    ordered_json row;
    row["t"] = p.t;
    row["r"] = p.r;
    row["g"] = cnum(p.g, p.g_error);
    row["h"] = cnum(p.h, p.h_error);
    row["trusted"] = p.trusted;
    grid.push_back(std::move(row));
    cs << p.t << "," << p.r << "," << p.g.real() << "," << p.g.imag() << "," << p.g_error << ","
       << p.h.real() << "," << p.h.imag() << "," << p.h_error << "," << (p.trusted ? 1 : 0)
       << "\n";
  }
  CheckRow payload;
  payload.name = "dualization-grid";
  payload.status = rep.skipped_points == 0 ? "pass" : "warn";
  payload.detail["task"] = task_json(task);
  payload.detail["grid"] = std::move(grid);
  payload.detail["aggregates"] = ordered_json{{"suppression_ratio", rep.suppression_ratio},
                                              {"gaussian_spread", rep.gaussian_spread},
                                              {"g0_relative_gap", rep.g0_relative_gap},
                                              {"slope_gap", rep.slope_gap},
                                              {"trusted_points", rep.trusted_points},
                                              {"skipped_points", rep.skipped_points}};
  out.checks.push_back(std::move(payload));
  if (csv) *csv = cs.str();
}

// ---------------------------------------------------------------------------
// response

void add_response_checks(const std::map<std::string, double>& binds, RunReport& out) {
  double a = 0.0, ap = 0.0, lambda_R = 1.0, z = 1.0, f0 = 1.0;
  const auto get = [&binds](const char* name, double& slot) {
    if (auto it = binds.find(name); it != binds.end()) slot = it->second;
  };
  get("a", a);
  get("a_prime", ap);
  get("lambda_R", lambda_R);
  get("z", z);
  get("f0", f0);

  bool zero_before = true;
  for (double y : {0.25, 0.5, 0.75, 0.999})
    zero_before = zero_before && response_shape(y, ap, lambda_R, z, f0) == 0.0;
  out.checks.push_back(CheckRow::make("shape-vanishes-before-crossing", zero_before,
                                      {{"sampled_y", "0.25, 0.5, 0.75, 0.999"}}));

  const double edge = -1.0 - ap;
  const double at_one = response_shape(1.0, ap, lambda_R, z, f0);
  bool signal_ok;
  const char* kind;
  if (edge < 0.0) {
    signal_ok = std::isinf(at_one);
    kind = "divergent (signaled infinity)";
  } else if (edge == 0.0) {
    signal_ok = at_one == f0;
    kind = "marginal (amplitude)";
  } else {
    signal_ok = at_one == 0.0;
    kind = "vanishing";
  }
  out.checks.push_back(CheckRow::make("crossing-signal", signal_ok, {{"edge", kind}}));

  const std::vector<std::pair<double, double>> grid = {{3.0, 1.0}, {6.0, 2.0}, {12.0, 4.0}};
  const double residual = collapse_residual(grid, a, ap, lambda_R, z, f0);
  out.checks.push_back(
      CheckRow::make("collapse-residual", residual <= 1e-12, {{"residual", residual}}));
}

// ---------------------------------------------------------------------------
// verify all: the full acceptance matrix

void add_all_checks(RunReport& out) {
  Options defaults;
  add_algebra_checks(defaults, out);
  add_symmetry_checks(defaults, out);
  add_ward_checks(defaults, out);
  add_constraint_checks(defaults, out);

  for (double x : {0.3, 0.7, 1.0, 1.5, 2.5}) {
    for (int n : {0, 1}) {
      add_integral_check(n, x, HalfPlane::below, defaults.contour, 1e-8, out);
      add_integral_check(n, x, HalfPlane::above, defaults.contour, 1e-8, out);
    }
  }

  for (auto [x, xi] : {std::pair{0.8, 0.3}, std::pair{1.5, 0.0}, std::pair{0.5, 1.0}}) {
    DualizationTask task = task_from_bindings({});
    task.x = x;
    task.xi_sum = xi;
    const std::string tag = " x=" + fnum(x) + " xi=" + fnum(xi);
    add_report_checks(task, defaults.contour, tag, out);
  }
  DualizationTask asym = task_from_bindings({});
  asym.asymmetric = true;
  asym.log_mix = 0.6;
  add_report_checks(asym, defaults.contour, " asymmetric", out);

  add_response_checks({}, out);
}

// ---------------------------------------------------------------------------
// assembly

void emit(const RunReport& rep, const Options& opt, const std::string& csv, std::ostream& out) {
  std::string rendered;
  if (opt.format == "json") {
    rendered = report_json(rep).dump(2) + "\n";
  } else if (opt.format == "csv") {
    if (csv.empty()) throw UsageError("--format csv is only available for 'causality report'");
    rendered = csv;
  } else if (opt.format == "text") {
    rendered = report_text(rep);
  } else {
    throw UsageError("unknown --format '" + opt.format + "' (text, json, csv)");
  }
  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path);
    if (!f) throw UsageError("cannot open output file '" + opt.out_path + "'");
    f << rendered;
  } else {
    out << rendered;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"symbolic and numeric verification of local scale-invariance algebras", "lsi"};
  app.require_subcommand(1);

  const auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format: text, json, csv");
    sub->add_option("--out", opt.out_path, "write the report to this file");
    sub->add_option("--bind", opt.binds, "parameter binding name=value (repeatable)");
  };
  const auto add_contour = [&opt](CLI::App* sub) {
    sub->add_option("--epsilon", opt.contour.epsilon, "line offset below the axis");
    sub->add_option("--L", opt.contour.L, "truncation half-width");
    sub->add_option("--tail-depth", opt.contour.tail_depth, "depth of the decaying rays");
    sub->add_option("--nodes", opt.contour.nodes_per_segment, "initial panels per segment");
  };

  CLI::App* verify = app.add_subcommand("verify", "exact symbolic verification suites");
  verify->require_subcommand(1);
  CLI::App* algebra = verify->add_subcommand("algebra", "bracket tables and Jacobi identities");
  algebra->add_option("--id", opt.id, "catalog id (or two-charge-virasoro); default: all");
  algebra->add_option("--dim", opt.dim, "spatial dimension")->each([&opt](const std::string&) {
    opt.dim_set = true;
  });
  algebra->add_option("--window", opt.window, "index window a..b for infinite families");
  algebra->add_flag("--mutate", opt.mutate, "corrupt one generator per table (expect failures)");
  add_common(algebra);

  CLI::App* symmetry = verify->add_subcommand("symmetry", "wave-operator multipliers");
  symmetry->add_option("--id", opt.id, "age or dual-cga; default: both");
  symmetry->add_flag("--mutate", opt.mutate, "shift the operator weight (expect failures)");
  add_common(symmetry);

  CLI::App* ward = verify->add_subcommand("ward", "two-body covariance of catalog solutions");
  ward->add_option("--case", opt.kase, "ward case id; default: all");
  ward->add_option("--branch", opt.branch, "time-ordering branch, e.g. t>0");
  ward->add_flag("--mutate", opt.mutate, "perturb one leg generator (expect failures)");
  add_common(ward);

  CLI::App* constraints = verify->add_subcommand("constraints", "re-derived covariance conditions");
  constraints->add_option("--case", opt.kase, "scenario id; default: all");
  add_common(constraints);

  CLI::App* all = verify->add_subcommand("all", "the full acceptance matrix");
  add_common(all);

  CLI::App* causality = app.add_subcommand("causality", "contour quadrature and dualization");
  causality->require_subcommand(1);
  CLI::App* integral = causality->add_subcommand("integral", "deformed oscillatory line integral");
  integral->add_option("--n", opt.n, "logarithm power: 0 or 1");
  integral->add_option("--x", opt.x, "exponent of the algebraic factor");
  integral->add_option("--half-plane", opt.half_plane, "below (staple) or above (cut wrap)");
  add_contour(integral);
  add_common(integral);

  CLI::App* dualize = causality->add_subcommand("dualize", "pointwise mass-space reconstruction");
  dualize->add_option("--t", opt.t, "time coordinate (nonzero)");
  dualize->add_option("--r", opt.r, "space coordinate");
  dualize->add_option("--entry", opt.entry, "pair entry: G or H");
  add_contour(dualize);
  add_common(dualize);

  CLI::App* creport = causality->add_subcommand("report", "grid dualization diagnostics");
  add_contour(creport);
  add_common(creport);

  CLI::App* response = app.add_subcommand("response", "autoresponse scaling form");
  CLI::App* collapse = response->add_subcommand("collapse", "causal shape and data collapse");
  response->require_subcommand(1);
  add_common(collapse);

  std::vector<const char*> argv;
  argv.push_back("lsi");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  RunReport rep;
  std::string csv;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Bindings binds = parse_bindings(opt.binds);
    if (algebra->parsed()) {
      rep.command = "verify algebra";
      (void)exact_bindings(binds, opt.binds);
      add_algebra_checks(opt, rep);
    } else if (symmetry->parsed()) {
      rep.command = "verify symmetry";
      (void)exact_bindings(binds, opt.binds);
      add_symmetry_checks(opt, rep);
    } else if (ward->parsed()) {
      rep.command = "verify ward";
      add_ward_checks(opt, rep);
    } else if (constraints->parsed()) {
      rep.command = "verify constraints";
      (void)exact_bindings(binds, opt.binds);
      add_constraint_checks(opt, rep);
    } else if (all->parsed()) {
      rep.command = "verify all";
      add_all_checks(rep);
    } else if (integral->parsed()) {
      rep.command = "causality integral";
      const auto real = real_bindings(binds, opt.binds);
      HalfPlane hp;
      if (opt.half_plane == "below")
        hp = HalfPlane::below;
      else if (opt.half_plane == "above")
        hp = HalfPlane::above;
      else
        throw UsageError("--half-plane must be 'above' or 'below'");
      double tol = hp == HalfPlane::below ? 1e-10 : 1e-8;
      if (auto it = real.find("tolerance"); it != real.end()) tol = it->second;
      add_integral_check(opt.n, opt.x, hp, opt.contour, tol, rep);
    } else if (dualize->parsed()) {
      rep.command = "causality dualize";
      add_dualize_check(opt, real_bindings(binds, opt.binds), rep);
    } else if (creport->parsed()) {
      rep.command = "causality report";
      add_causality_report(opt, real_bindings(binds, opt.binds), rep, &csv);
    } else if (collapse->parsed()) {
      rep.command = "response collapse";
      add_response_checks(real_bindings(binds, opt.binds), rep);
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
    emit(rep, opt, csv, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "configuration error: " << e.what() << "\n";
    return 2;
  }
  return rep.failed() ? 1 : 0;
}

}  // namespace lsi
