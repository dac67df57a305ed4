#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lsi/ward.hpp"

using namespace lsi;

namespace {

using EE = ExponentExpr;

EE ep(const std::string& n, const Rat& w = Rat(1)) { return EE::param(n, w); }
ParamScalar pp(const std::string& n) { return ParamScalar::param(n); }
ParamScalar ps(const Rat& v) { return ParamScalar(GRat(v)); }
ClosedForm cpow(const std::string& c, const EE& e) { return ClosedForm::coord_power(c, e); }

ClosedForm power_ansatz(const ParamScalar& amplitude) {
  return amplitude * (cpow("t", ep("alpha")) * cpow("u", ep("beta")));
}

const WardResidual& row_of(const std::vector<WardResidual>& rows, const std::string& entry) {
  for (const auto& r : rows)
    if (r.entry == entry) return r;
  throw std::runtime_error("missing row " + entry);
}

bool has_eliminant(const ConstraintReport& rep, const ParamScalar& expected) {
  return std::any_of(rep.eliminants.begin(), rep.eliminants.end(),
                     [&](const ParamScalar& e) { return proportional(e, expected); });
}

}  // namespace

TEST_CASE("every catalog case is annihilated on every branch") {
  for (const std::string& id : ward_case_ids()) {
    for (const std::string& branch : ward_branches(id)) {
      CAPTURE(id);
      CAPTURE(branch);
      const WardCase wc = build_ward_case(id, branch);
      const CovarianceReport rep = verify_covariance(wc);
      CHECK(rep.checked == static_cast<int>(4 * wc.gens.size()));
      for (const WardResidual& row : rep.rows) {
        CAPTURE(row.gen.str());
        CAPTURE(row.entry);
        CHECK(row.zero);
      }
      CHECK(rep.passed());
    }
  }
}

TEST_CASE("perturbing one leg generator is detected in every family") {
  for (const std::string& id : ward_case_ids()) {
    CAPTURE(id);
    WardCase wc = build_ward_case(id, ward_branches(id).front());
    // Add a stray multiplication term to one leg's copy of X_1.
    wc.leg1.at(Label::X(1)) =
        wc.leg1.at(Label::X(1)) + DiffOp::multiplication({{"t1", Rat(1)}});
    const CovarianceReport rep = verify_covariance(wc);
    CHECK(rep.failures > 0);
  }
}

TEST_CASE("corrupting a single coefficient is detected") {
  WardCase wc = build_ward_case("log-sch-dual-symmetric", "t>0");
  // Double the zeta-derivative term of X_1 on leg 1: (i/2) r^2 dzeta added
  // once more.
  wc.leg1.at(Label::X(1)) =
      wc.leg1.at(Label::X(1)) + DiffOp::term(DKey{{{"r1", Rat(2)}}, {{"zeta1", 1}}},
                                             Mat2::scalar(ParamScalar(GRat(Rat(0), Rat(1, 2)))));
  const CovarianceReport rep = verify_covariance(wc);
  CHECK(rep.failures > 0);

  // The scaled-weight mutation: replace -x/2 by -x inside X_0 of leg 2.
  WardCase wc2 = build_ward_case("log-sch-dual-symmetric", "t>0");
  wc2.leg2.at(Label::X(0)) =
      wc2.leg2.at(Label::X(0)) + DiffOp::constant(ps(Rat(-1, 2)) * pp("x"));
  CHECK(verify_covariance(wc2).failures > 0);
}

TEST_CASE("sources follow the lowering pattern exactly") {
  const WardCase wc = build_ward_case("log-sch-dual-symmetric", "t>0");
  Quartet q;  // marker: only the phi1-psi2 function is populated
  q.G12 = power_ansatz(pp("mg"));
  const auto rows = apply_two_body(wc, Label::X(0), q);

  // F sits at the bottom of the lowering chain and is never sourced; G21 is
  // sourced by F alone, which vanishes here.
  CHECK(row_of(rows, "F").zero);
  CHECK(row_of(rows, "G21").zero);

  // The H residual is exactly xp1 * d(X_0)/dx applied to the marker:
  // -(1/2) mg t^alpha u^beta. No other contribution exists.
  const ClosedForm expected_h = (ps(Rat(-1, 2)) * pp("mg")) * power_ansatz(ps(Rat(1)));
  CHECK((row_of(rows, "H").residual - expected_h).is_zero(wc.cs));

  // The G12 residual is the plain two-leg action, free of any corner terms:
  // (-alpha - beta - x) mg t^alpha u^beta.
  const ClosedForm expected_g12 =
      ((-pp("alpha") - pp("beta") - pp("x")) * pp("mg")) * power_ansatz(ps(Rat(1)));
  CHECK((row_of(rows, "G12").residual - expected_g12).is_zero(wc.cs));
}

TEST_CASE("negative-time forms are the relabeled positive-time forms") {
  // For the kernel-free charts the t < 0 solution is the t > 0 solution with
  // the time difference renamed to its positive counterpart.
  for (const std::string& id : {"log-sch-dual-symmetric", "log-sch-dual-H", "asymmetric"}) {
    CAPTURE(id);
    const WardCase pos = build_ward_case(id, "t>0");
    const WardCase neg = build_ward_case(id, "t<0");
    const std::map<std::string, std::string> flip{{"t", "mt"}};
    for (const char* entry : Quartet::entry_names()) {
      CAPTURE(entry);
      const ClosedForm mapped = pos.solution.entry(entry).rename_coords(flip);
      CHECK((neg.solution.entry(entry) - mapped).is_zero(neg.cs));
    }
  }
}

TEST_CASE("fixed-mass response vanishes identically at negative times") {
  const WardCase wc = build_ward_case("fixed-mass-symmetric", "t<0");
  for (const char* entry : Quartet::entry_names())
    CHECK(wc.solution.entry(entry).is_zero(wc.cs));
  CHECK(verify_covariance(wc).passed());
}

TEST_CASE("power-law pair must share its scaling weight") {
  const ConstraintReport rep = extract_constraints("f-weight-match");
  // The residual spreads over several base monomials; every coefficient is a
  // combination of the two per-leg conditions (alpha+beta+x_i) f0, and the
  // only exponent-free consequence is the weight match.
  CHECK(rep.rows.size() >= 3);
  const ParamScalar weight_match = pp("f0") * pp("x1") - pp("f0") * pp("x2");
  CHECK(std::any_of(rep.rows.begin(), rep.rows.end(), [&](const Constraint& c) {
    return proportional(c.condition, weight_match);
  }));
  CHECK(rep.eliminants.size() == 1);
  CHECK(has_eliminant(rep, weight_match));
}

TEST_CASE("source chains tie the mixed amplitudes to the weights") {
  const ConstraintReport g12 = extract_constraints("g12-source-chain");
  CHECK(has_eliminant(g12, pp("g0") * pp("x1") - pp("g0") * pp("x2") - pp("xp2") * pp("f0")));

  const ConstraintReport g21 = extract_constraints("g21-source-chain");
  CHECK(has_eliminant(g21, pp("g0") * pp("x1") - pp("g0") * pp("x2") + pp("xp1") * pp("f0")));

  const ConstraintReport h = extract_constraints("h-mixing-balance");
  CHECK(h.eliminants.size() == 1);
  CHECK(has_eliminant(h, pp("xp1") * pp("ga") - pp("xp2") * pp("gb")));
}

TEST_CASE("the parabolic generator leaves exactly one exponent condition") {
  const ConstraintReport rep = extract_constraints("n-scaling-exponent");
  REQUIRE(rep.rows.size() == 1);
  const ParamScalar expected =
      pp("g0") * pp("alpha") - pp("g0") * pp("xi1") - pp("g0") * pp("xi2");
  CHECK(proportional(rep.rows.front().condition, expected));
  CHECK(rep.eliminants.empty());
}

TEST_CASE("jordan corners of the two weights must not overlap") {
  const ConstraintReport rep = extract_constraints("jordan-corner-commutator");
  REQUIRE(rep.rows.size() == 1);
  CHECK(proportional(rep.rows.front().condition, pp("xp") * pp("xipp")));
}

TEST_CASE("the parabolic set pins the ordinary pair exponent") {
  const ConstraintReport rep = extract_constraints("dual-cga-exponent");
  REQUIRE(rep.rows.size() == 1);
  const ParamScalar f0 = pp("f0");
  const ParamScalar expected = f0 * pp("mu") - ps(Rat(1, 2)) * f0 * pp("x1") -
                               ps(Rat(3, 2)) * f0 * pp("xi1") - ps(Rat(1, 2)) * f0 * pp("x2") -
                               ps(Rat(3, 2)) * f0 * pp("xi2");
  CHECK(proportional(rep.rows.front().condition, expected));
  CHECK(rep.eliminants.empty());
}

TEST_CASE("the pure-difference prefactor variant fails exactly the conformal rows") {
  // A variant of the ordinary pair written with a pure time-difference
  // prefactor, t^(xi1+xi2) (t1/t2)^delta u^(-mu). The translation, phase and
  // parabolic rows accept it; the special conformal rows V+ and D reject it
  // unless xi1 + xi2 = 0, where it merges with the catalog solution.
  const WardCase wc = build_ward_case("dual-cga-pair", "all");
  const EE delta = ep("x2", Rat(1, 2)) + ep("xi2", Rat(1, 2)) + ep("x1", Rat(-1, 2)) +
                   ep("xi1", Rat(-1, 2));
  const EE mu = ep("x1", Rat(1, 2)) + ep("x2", Rat(1, 2)) + ep("xi1", Rat(3, 2)) +
                ep("xi2", Rat(3, 2));
  Quartet q;
  q.F = pp("f0") * (cpow("t", ep("xi1") + ep("xi2")) * cpow("t1", delta) *
                    cpow("t2", Rat(-1) * delta) * cpow("u", Rat(-1) * mu));

  const std::map<std::string, ParamScalar> traceless{{"xi2", -pp("xi1")}};
  for (const Label& g : wc.gens) {
    CAPTURE(g.str());
    const auto rows = apply_two_body(wc, g, q);
    const WardResidual& f_row = row_of(rows, "F");
    if (g == Label::Vplus() || g == Label::D()) {
      CHECK(!f_row.zero);
      // The obstruction is proportional to xi1 + xi2.
      CHECK(f_row.residual.substitute_params(traceless).is_zero(wc.cs));
    } else {
      CHECK(f_row.zero);
    }
  }

  // At xi1 + xi2 = 0 the variant coincides with the stored solution.
  const ClosedForm diff =
      q.F.substitute_params(traceless) - wc.solution.F.substitute_params(traceless);
  CHECK(diff.is_zero(wc.cs));
}

TEST_CASE("unknown identifiers are rejected") {
  CHECK_THROWS_AS(build_ward_case("no-such-case", "t>0"), std::invalid_argument);
  CHECK_THROWS_AS(build_ward_case("log-cga", "all"), std::invalid_argument);
  CHECK_THROWS_AS(build_ward_case("dual-cga-pair", "t>0"), std::invalid_argument);
  CHECK_THROWS_AS(extract_constraints("no-such-scenario"), std::invalid_argument);
  Quartet q;
  CHECK_THROWS_AS(q.entry("Q"), std::invalid_argument);
}
