#include "lsi/ward.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace lsi {

namespace {

using EE = ExponentExpr;

EE ep(const std::string& name, const Rat& weight = Rat(1)) { return EE::param(name, weight); }
ParamScalar pp(const std::string& name) { return ParamScalar::param(name); }
ParamScalar ps(const Rat& v) { return ParamScalar(GRat(v)); }
ClosedForm cpow(const std::string& coord, const EE& e) {
  return ClosedForm::coord_power(coord, e);
}

// Chart for a pair of points. Bases are the per-leg coordinates; the
// composites name the differences the solutions are written in. `u` is the
// translation-invariant combination 2*zeta*t + i*r^2 of the differences,
// expanded in the bases. `mt` = -t names the same time difference on the
// t < 0 branch, where (-t)^e is the single-valued power.
CoordSystem two_point_chart(bool with_zeta, bool with_gamma) {
  CoordSystem cs;
  if (with_zeta) cs.base("zeta1").base("zeta2");
  cs.base("t1").base("t2").base("r1").base("r2");
  if (with_gamma) cs.base("gamma1");

  const ClosedForm t1 = ClosedForm::coord("t1"), t2 = ClosedForm::coord("t2");
  const ClosedForm r1 = ClosedForm::coord("r1"), r2 = ClosedForm::coord("r2");
  cs.composite("t", t1 - t2);
  cs.composite("mt", t2 - t1);
  cs.composite("r", r1 - r2);
  if (with_zeta) {
    const ClosedForm z1 = ClosedForm::coord("zeta1"), z2 = ClosedForm::coord("zeta2");
    cs.composite("u", GRat(2) * ((z1 - z2) * (t1 - t2)) + GRat::i() * ((r1 - r2) * (r1 - r2)));
  }
  return cs;
}

std::map<Label, DiffOp> make_leg(const Representation& rep,
                                 const std::map<std::string, std::string>& coords,
                                 const std::map<std::string, std::string>& params) {
  std::map<Label, DiffOp> out;
  for (const auto& [lab, op] : rep.gens) out[lab] = op.rename_coords(coords).rename_params(params);
  return out;
}

const std::map<std::string, std::string>& dual_coords(int leg) {
  static const std::map<std::string, std::string> c1{
      {"zeta", "zeta1"}, {"t", "t1"}, {"r", "r1"}};
  static const std::map<std::string, std::string> c2{
      {"zeta", "zeta2"}, {"t", "t2"}, {"r", "r2"}};
  return leg == 1 ? c1 : c2;
}

const std::map<std::string, std::string>& fixed_coords(int leg) {
  static const std::map<std::string, std::string> c1{{"t", "t1"}, {"r", "r1"}};
  static const std::map<std::string, std::string> c2{{"t", "t2"}, {"r", "r2"}};
  return leg == 1 ? c1 : c2;
}

// The rapidity is shared between the legs: both land on gamma1.
const std::map<std::string, std::string>& cga_coords(int leg) {
  static const std::map<std::string, std::string> c1{
      {"t", "t1"}, {"r", "r1"}, {"gamma", "gamma1"}};
  static const std::map<std::string, std::string> c2{
      {"t", "t2"}, {"r", "r2"}, {"gamma", "gamma1"}};
  return leg == 1 ? c1 : c2;
}

void take_gens(WardCase& wc) {
  wc.gens.clear();
  for (const auto& [lab, op] : wc.leg1) wc.gens.push_back(lab);
}

// exp(c * r^2 / pt) with r, pt composite names.
ClosedForm gaussian_kernel(const std::string& pt, const ParamScalar& c) {
  TermKey k;
  k.powers["r"] = EE(2);
  k.powers[pt] = EE(-1);
  return ClosedForm::exponential(ClosedForm::term(k, c));
}

// exp(c * gamma1 * r / pt).
ClosedForm rapidity_kernel(const std::string& pt, const ParamScalar& c) {
  TermKey k;
  k.powers["gamma1"] = EE(1);
  k.powers["r"] = EE(1);
  k.powers[pt] = EE(-1);
  return ClosedForm::exponential(ClosedForm::term(k, c));
}

}  // namespace

const std::array<const char*, 4>& Quartet::entry_names() {
  static const std::array<const char*, 4> names{"F", "G12", "G21", "H"};
  return names;
}

ClosedForm& Quartet::entry(const std::string& name) {
  if (name == "F") return F;
  if (name == "G12") return G12;
  if (name == "G21") return G21;
  if (name == "H") return H;
  throw std::invalid_argument("unknown quartet entry '" + name + "'");
}

const ClosedForm& Quartet::entry(const std::string& name) const {
  return const_cast<Quartet*>(this)->entry(name);
}

std::vector<std::string> ward_case_ids() {
  return {"log-sch-dual-symmetric", "log-sch-dual-H",  "asymmetric", "fixed-mass-symmetric",
          "nonlog-sch",             "log-cga",         "dual-cga-pair"};
}

std::vector<std::string> ward_branches(const std::string& case_id) {
  const auto ids = ward_case_ids();
  if (std::find(ids.begin(), ids.end(), case_id) == ids.end())
    throw std::invalid_argument("unknown ward case '" + case_id + "'");
  if (case_id == "dual-cga-pair") return {"all"};
  return {"t>0", "t<0"};
}

WardCase build_ward_case(const std::string& case_id, const std::string& branch) {
  const auto branches = ward_branches(case_id);
  if (std::find(branches.begin(), branches.end(), branch) == branches.end())
    throw std::invalid_argument("ward case '" + case_id + "' has no branch '" + branch + "'");

  WardCase wc;
  wc.id = case_id;
  wc.branch = branch;
  const bool neg = branch == "t<0";
  const std::string pt = neg ? "mt" : "t";  // positive time-difference coordinate
  auto amp = [&wc](const char* name) {
    wc.amplitudes.insert(name);
    return pp(name);
  };
  const ParamScalar one = ps(Rat(1));

  if (case_id == "log-sch-dual-symmetric" || case_id == "log-sch-dual-H" ||
      case_id == "asymmetric") {
    const bool with_n = case_id != "log-sch-dual-H";
    const Representation rep = build_representation(with_n ? "parabolic-N" : "dual-sch");
    wc.cs = two_point_chart(true, false);
    std::map<std::string, std::string> p1, p2;
    if (with_n) {
      p1 = {{"xi", "xi1"}};
      p2 = {{"xi", "xi2"}};
      wc.wxi1 = "xi1";
      wc.wxi2 = "xi2";
    }
    wc.leg1 = make_leg(rep, dual_coords(1), p1);
    wc.leg2 = make_leg(rep, dual_coords(2), p2);
    wc.wx1 = wc.wx2 = "x";
    take_gens(wc);

    const ParamScalar g0 = amp("g0"), h0 = amp("h0");
    if (case_id == "log-sch-dual-H") {
      // Without N nothing pins the exponent: alpha stays a free parameter.
      const EE a = ep("alpha");
      const ClosedForm base = cpow(pt, a - ep("x")) * cpow("u", Rat(-1) * a);
      wc.doublet = {one, one, {}, {}};
      wc.solution.G12 = g0 * base;
      wc.solution.G21 = g0 * base;
      wc.solution.H = h0 * base - g0 * (base * ClosedForm::log_coord(pt));
    } else {
      const EE xis = ep("xi1") + ep("xi2");
      const EE nu = ep("x") + xis;
      const ClosedForm base = cpow(pt, xis) * cpow("u", Rat(-1) * nu);
      const ClosedForm lnu = base * ClosedForm::log_coord("u");
      const ClosedForm lnt = base * ClosedForm::log_coord(pt);
      if (case_id == "log-sch-dual-symmetric") {
        const ParamScalar xips = pp("xip1") + pp("xip2");
        wc.doublet = {one, one, pp("xip1"), pp("xip2")};
        wc.solution.G12 = g0 * base;
        wc.solution.G21 = g0 * base;
        wc.solution.H = h0 * base - ((one + xips) * g0) * lnu + (xips * g0) * lnt;
      } else {  // asymmetric: only leg 2 is logarithmic
        wc.doublet = {{}, one, pp("xip1"), pp("xip2")};
        wc.solution.G12 = g0 * base;
        wc.solution.H = h0 * base - (pp("xip1") * g0) * lnu + (pp("xip1") * g0) * lnt;
      }
    }
    return wc;
  }

  if (case_id == "fixed-mass-symmetric" || case_id == "nonlog-sch") {
    const Representation rep = build_representation("sch", 1);
    wc.cs = two_point_chart(false, false);
    wc.leg1 = make_leg(rep, fixed_coords(1), {{"M", "M1"}});
    wc.leg2 = make_leg(rep, fixed_coords(2), {{"M", "M2"}});
    // The pair couples only at opposite masses.
    for (auto& [lab, op] : wc.leg2)
      op = op.substitute_params({{"M2", ParamScalar() - pp("M1")}});
    wc.wx1 = wc.wx2 = "x";
    take_gens(wc);

    if (case_id == "fixed-mass-symmetric") {
      wc.doublet = {one, one, {}, {}};
      if (neg) return wc;  // response vanishes at negative time difference
      const ClosedForm base =
          cpow(pt, Rat(-1) * ep("x")) * gaussian_kernel(pt, ps(Rat(-1, 2)) * pp("M1"));
      const ParamScalar g0 = amp("g0"), h0 = amp("h0");
      wc.solution.G12 = g0 * base;
      wc.solution.G21 = g0 * base;
      wc.solution.H = h0 * base - g0 * (base * ClosedForm::log_coord(pt));
      return wc;
    }
    // nonlog-sch: ordinary pair, all four functions independent.
    const ClosedForm base =
        cpow(pt, Rat(-1) * ep("x")) * gaussian_kernel(pt, ps(Rat(neg ? 1 : -1, 2)) * pp("M1"));
    wc.solution.F = amp("f0") * base;
    wc.solution.G12 = amp("g0") * base;
    wc.solution.G21 = amp("gp0") * base;
    wc.solution.H = amp("h0") * base;
    return wc;
  }

  if (case_id == "log-cga") {
    const Representation rep = build_representation("cga", 1);
    wc.cs = two_point_chart(false, true);
    wc.leg1 = make_leg(rep, cga_coords(1), {});
    wc.leg2 = make_leg(rep, cga_coords(2), {});
    wc.wx1 = wc.wx2 = "x";
    take_gens(wc);
    wc.doublet = {one, one, {}, {}};
    const ClosedForm base =
        cpow(pt, Rat(-2) * ep("x")) * rapidity_kernel(pt, ps(Rat(neg ? 2 : -2)));
    const ParamScalar g0 = amp("g0"), h0 = amp("h0");
    wc.solution.G12 = g0 * base;
    wc.solution.G21 = g0 * base;
    wc.solution.H = h0 * base - (ps(Rat(2)) * g0) * (base * ClosedForm::log_coord(pt));
    return wc;
  }

  // dual-cga-pair: ordinary pair of (x, xi) fields under the parabolic set.
  const Representation rep = build_representation("dual-cga");
  wc.cs = two_point_chart(true, false);
  wc.leg1 = make_leg(rep, dual_coords(1), {{"x", "x1"}, {"xi", "xi1"}});
  wc.leg2 = make_leg(rep, dual_coords(2), {{"x", "x2"}, {"xi", "xi2"}});
  wc.wx1 = "x1";
  wc.wx2 = "x2";
  wc.wxi1 = "xi1";
  wc.wxi2 = "xi2";
  take_gens(wc);
  const EE a1 = ep("x2", Rat(1, 2)) + ep("x1", Rat(-1, 2)) + ep("xi2");
  const EE a2 = ep("x1", Rat(1, 2)) + ep("x2", Rat(-1, 2)) + ep("xi1");
  const EE mu = ep("x1", Rat(1, 2)) + ep("x2", Rat(1, 2)) + ep("xi1") + ep("xi2");
  wc.solution.F =
      amp("f0") * (cpow("t1", a1) * cpow("t2", a2) * cpow("u", Rat(-1) * mu));
  return wc;
}

namespace {

// xp * d(op)/d(wx) + xip * d(op)/d(wxi): the operator the Jordan structure
// inserts in front of the partner entry.
DiffOp corner_op(const DiffOp& op, const ParamScalar& xp, const std::string& wx,
                 const ParamScalar& xip, const std::string& wxi) {
  DiffOp s;
  if (!xp.is_zero() && !wx.empty()) s = s + xp * op.derivative_param(wx);
  if (!xip.is_zero() && !wxi.empty()) s = s + xip * op.derivative_param(wxi);
  return s;
}

}  // namespace

std::vector<WardResidual> apply_two_body(const WardCase& wc, const Label& gen, const Quartet& q) {
  const auto it1 = wc.leg1.find(gen);
  const auto it2 = wc.leg2.find(gen);
  if (it1 == wc.leg1.end() || it2 == wc.leg2.end())
    throw std::invalid_argument("ward case '" + wc.id + "' has no generator " + gen.str());
  const DiffOp& a1 = it1->second;
  const DiffOp& a2 = it2->second;
  const DiffOp s1 = corner_op(a1, wc.doublet.xp1, wc.wx1, wc.doublet.xip1, wc.wxi1);
  const DiffOp s2 = corner_op(a2, wc.doublet.xp2, wc.wx2, wc.doublet.xip2, wc.wxi2);

  std::vector<WardResidual> out;
  for (const char* name : Quartet::entry_names()) {
    ClosedForm res = a1.apply_scalar(q.entry(name), wc.cs) + a2.apply_scalar(q.entry(name), wc.cs);
    // Lowering one leg from psi to phi turns H into G12/G21 and G into F;
    // F has nothing below it and is never sourced.
    const std::string n(name);
    if (n == "G12") res = res + s2.apply_scalar(q.F, wc.cs);
    if (n == "G21") res = res + s1.apply_scalar(q.F, wc.cs);
    if (n == "H") res = res + s1.apply_scalar(q.G12, wc.cs) + s2.apply_scalar(q.G21, wc.cs);
    res = res.canonicalize();
    WardResidual row{gen, n, res, res.is_zero(wc.cs)};
    out.push_back(std::move(row));
  }
  return out;
}

CovarianceReport verify_covariance(const WardCase& wc, const Quartet& q) {
  CovarianceReport rep;
  rep.id = wc.id;
  rep.branch = wc.branch;
  for (const Label& g : wc.gens) {
    for (WardResidual& row : apply_two_body(wc, g, q)) {
      ++rep.checked;
      if (!row.zero) ++rep.failures;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

CovarianceReport verify_covariance(const WardCase& wc) { return verify_covariance(wc, wc.solution); }

ParamScalar normalize_condition(const ParamScalar& p) {
  if (p.is_zero()) return p;
  return ParamScalar(p.terms().begin()->second.inv()) * p;
}

bool proportional(const ParamScalar& a, const ParamScalar& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return (normalize_condition(a) - normalize_condition(b)).is_zero();
}

namespace {

std::string monomial_str(const Monomial& m) {
  if (m.empty()) return "1";
  std::string s;
  for (const auto& [name, k] : m) {
    if (!s.empty()) s += "*";
    s += name;
    if (k != 1) s += "^" + std::to_string(k);
  }
  return s;
}

// Collects the coefficient conditions of every residual and, per quartet
// entry, the pairwise row differences in which all free ansatz exponents
// cancel. Rows and eliminants are deduplicated up to scale.
void harvest(const WardCase& wc, const Quartet& q, const std::set<std::string>& free_exponents,
             ConstraintReport& out) {
  std::map<std::string, std::vector<ParamScalar>> per_entry;
  for (const Label& g : wc.gens) {
    for (const WardResidual& row : apply_two_body(wc, g, q)) {
      if (row.zero) continue;
      for (const ConstraintGroup& grp : row.residual.decompose(wc.cs)) {
        for (const auto& [mono, coeff] : grp.poly) {
          if (coeff.is_zero()) continue;
          const ParamScalar c = normalize_condition(coeff);
          per_entry[row.entry].push_back(c);
          bool dup = false;
          for (const Constraint& have : out.rows)
            if (proportional(have.condition, c)) {
              dup = true;
              break;
            }
          if (!dup)
            out.rows.push_back({c, row.gen.str() + " on " + row.entry + " at " +
                                       monomial_str(mono)});
        }
      }
    }
  }
  for (const auto& [entry, rows] : per_entry) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        ParamScalar d = rows[i] - rows[j];
        if (d.is_zero()) continue;
        bool clean = true;
        for (const std::string& f : free_exponents)
          if (d.uses(f)) {
            clean = false;
            break;
          }
        if (!clean) continue;
        d = normalize_condition(d);
        bool dup = false;
        for (const ParamScalar& have : out.eliminants)
          if (proportional(have, d)) {
            dup = true;
            break;
          }
        if (!dup) out.eliminants.push_back(d);
      }
  }
}

// Minimal two-leg scaffold in the mass-Fourier chart: dual legs with either
// independent scaling weights x1/x2, a shared weight x, or the N-extended
// algebra with parabolic weights xi1/xi2.
WardCase scenario_dual_case(bool with_n, bool split_x) {
  WardCase wc;
  wc.id = "scenario";
  wc.branch = "t>0";
  const Representation rep = build_representation(with_n ? "parabolic-N" : "dual-sch");
  wc.cs = two_point_chart(true, false);
  std::map<std::string, std::string> p1, p2;
  if (split_x) {
    p1["x"] = "x1";
    p2["x"] = "x2";
    wc.wx1 = "x1";
    wc.wx2 = "x2";
  } else {
    wc.wx1 = wc.wx2 = "x";
  }
  if (with_n) {
    p1["xi"] = "xi1";
    p2["xi"] = "xi2";
    wc.wxi1 = "xi1";
    wc.wxi2 = "xi2";
  }
  wc.leg1 = make_leg(rep, dual_coords(1), p1);
  wc.leg2 = make_leg(rep, dual_coords(2), p2);
  take_gens(wc);
  return wc;
}

// f * t^alpha * u^beta, the generic power-law ansatz.
ClosedForm power_ansatz(const ParamScalar& amplitude) {
  return amplitude * (cpow("t", ep("alpha")) * cpow("u", ep("beta")));
}

ConstraintReport jordan_corner_scenario() {
  ConstraintReport out;
  out.scenario = "jordan-corner-commutator";

  const ParamScalar half = ps(Rat(1, 2));
  Mat2 wx;  // -(1/2) * rank-2 scaling weight
  wx.a = ParamScalar() - half * pp("x");
  wx.b = ParamScalar() - half * pp("xp");
  wx.d = wx.a;
  Mat2 wxi;  // rank-2 parabolic weight with both corners
  wxi.a = pp("xi");
  wxi.b = pp("xip");
  wxi.c = pp("xipp");
  wxi.d = wxi.a;

  const DiffOp x0 = DiffOp::term(DKey{{{"t", Rat(1)}}, {{"t", 1}}}, Mat2::scalar(ps(Rat(-1)))) +
                    DiffOp::term(DKey{{{"r", Rat(1)}}, {{"r", 1}}}, Mat2::scalar(ps(Rat(-1, 2)))) +
                    DiffOp::term(DKey{}, wx);
  const DiffOp n = DiffOp::term(DKey{{{"zeta", Rat(1)}}, {{"zeta", 1}}}, Mat2::scalar(ps(Rat(1)))) +
                   DiffOp::term(DKey{{{"t", Rat(1)}}, {{"t", 1}}}, Mat2::scalar(ps(Rat(-1)))) +
                   DiffOp::term(DKey{}, wxi);

  const DiffOp res = commutator(x0, n);
  for (const auto& [key, m] : res.terms()) {
    const std::array<std::pair<const char*, const ParamScalar*>, 4> entries{
        {{"(1,1)", &m.a}, {"(1,2)", &m.b}, {"(2,1)", &m.c}, {"(2,2)", &m.d}}};
    for (const auto& [pos, val] : entries) {
      if (val->is_zero()) continue;
      const ParamScalar c = normalize_condition(*val);
      bool dup = false;
      for (const Constraint& have : out.rows)
        if (proportional(have.condition, c)) {
          dup = true;
          break;
        }
      if (!dup) out.rows.push_back({c, std::string("[X_0, N] entry ") + pos});
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> constraint_scenarios() {
  return {"f-weight-match",     "g12-source-chain", "g21-source-chain",
          "h-mixing-balance",   "n-scaling-exponent", "jordan-corner-commutator",
          "dual-cga-exponent"};
}

ConstraintReport extract_constraints(const std::string& scenario) {
  if (scenario == "jordan-corner-commutator") return jordan_corner_scenario();

  ConstraintReport out;
  out.scenario = scenario;
  std::set<std::string> frees{"alpha", "beta"};

  if (scenario == "f-weight-match") {
    WardCase wc = scenario_dual_case(false, true);
    wc.gens = {Label::X(0), Label::X(1)};
    Quartet q;
    q.F = power_ansatz(pp("f0"));
    harvest(wc, q, frees, out);
    return out;
  }
  if (scenario == "g12-source-chain" || scenario == "g21-source-chain") {
    WardCase wc = scenario_dual_case(false, true);
    wc.gens = {Label::X(0), Label::X(1)};
    Quartet q;
    q.F = power_ansatz(pp("f0"));
    if (scenario == "g12-source-chain") {
      wc.doublet.xp2 = pp("xp2");
      q.G12 = power_ansatz(pp("g0"));
    } else {
      wc.doublet.xp1 = pp("xp1");
      q.G21 = power_ansatz(pp("g0"));
    }
    harvest(wc, q, frees, out);
    return out;
  }
  if (scenario == "h-mixing-balance") {
    WardCase wc = scenario_dual_case(false, false);  // shared scaling weight
    wc.gens = {Label::X(0), Label::X(1)};
    wc.doublet.xp1 = pp("xp1");
    wc.doublet.xp2 = pp("xp2");
    Quartet q;
    q.G12 = power_ansatz(pp("ga"));
    q.G21 = power_ansatz(pp("gb"));
    q.H = power_ansatz(pp("h0"));
    harvest(wc, q, frees, out);
    return out;
  }
  if (scenario == "n-scaling-exponent") {
    WardCase wc = scenario_dual_case(true, false);
    wc.gens = {Label::N()};
    Quartet q;
    q.G12 = power_ansatz(pp("g0"));
    harvest(wc, q, frees, out);
    return out;
  }
  if (scenario == "dual-cga-exponent") {
    WardCase wc;
    wc.id = "scenario";
    wc.branch = "all";
    const Representation rep = build_representation("dual-cga");
    wc.cs = two_point_chart(true, false);
    wc.leg1 = make_leg(rep, dual_coords(1), {{"x", "x1"}, {"xi", "xi1"}});
    wc.leg2 = make_leg(rep, dual_coords(2), {{"x", "x2"}, {"xi", "xi2"}});
    wc.wx1 = "x1";
    wc.wx2 = "x2";
    wc.wxi1 = "xi1";
    wc.wxi2 = "xi2";
    wc.gens = {Label::X(1), Label::N()};
    // One-parameter family that the special conformal row accepts for every
    // mu; only N pins mu.
    const EE mu = ep("mu");
    const EE half_sum = ep("x1", Rat(1, 2)) + ep("xi1", Rat(1, 2)) + ep("x2", Rat(1, 2)) +
                        ep("xi2", Rat(1, 2));
    const EE delta = ep("x2", Rat(1, 2)) + ep("xi2", Rat(1, 2)) + ep("x1", Rat(-1, 2)) +
                     ep("xi1", Rat(-1, 2));
    Quartet q;
    q.F = pp("f0") * (cpow("t", mu - half_sum) * cpow("t1", delta) *
                      cpow("t2", Rat(-1) * delta) * cpow("u", Rat(-1) * mu));
    harvest(wc, q, {"mu"}, out);
    return out;
  }
  throw std::invalid_argument("unknown constraint scenario '" + scenario + "'");
}

ScenarioExpectation expected_conditions(const std::string& scenario) {
  const ParamScalar f0 = pp("f0"), g0 = pp("g0");
  const ParamScalar x1 = pp("x1"), x2 = pp("x2");

  if (scenario == "f-weight-match") {
    const ParamScalar c = f0 * x1 - f0 * x2;
    return {{c}, {c}};
  }
  // The quartet carries F alongside the sourced entry, so the weight-match
  // condition is extracted together with the chain relation.
  if (scenario == "g12-source-chain")
    return {{}, {f0 * x1 - f0 * x2, g0 * x1 - g0 * x2 - pp("xp2") * f0}};
  if (scenario == "g21-source-chain")
    return {{}, {f0 * x1 - f0 * x2, g0 * x1 - g0 * x2 + pp("xp1") * f0}};
  if (scenario == "h-mixing-balance") return {{}, {pp("xp1") * pp("ga") - pp("xp2") * pp("gb")}};
  if (scenario == "n-scaling-exponent")
    return {{g0 * pp("alpha") - g0 * pp("xi1") - g0 * pp("xi2")}, {}};
  if (scenario == "jordan-corner-commutator") return {{pp("xp") * pp("xipp")}, {}};
  if (scenario == "dual-cga-exponent") {
    const ParamScalar half = ParamScalar(GRat(Rat(1, 2)));
    const ParamScalar three_half = ParamScalar(GRat(Rat(3, 2)));
    return {{f0 * pp("mu") - half * f0 * x1 - three_half * f0 * pp("xi1") - half * f0 * x2 -
             three_half * f0 * pp("xi2")},
            {}};
  }
  throw std::invalid_argument("unknown constraint scenario '" + scenario + "'");
}

bool constraints_match(const ConstraintReport& rep, const ScenarioExpectation& want) {
  for (const ParamScalar& w : want.rows) {
    bool found = false;
    for (const Constraint& row : rep.rows)
      if (proportional(row.condition, w)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  if (rep.eliminants.size() != want.eliminants.size()) return false;
  for (const ParamScalar& w : want.eliminants) {
    bool found = false;
    for (const ParamScalar& e : rep.eliminants)
      if (proportional(e, w)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace lsi
