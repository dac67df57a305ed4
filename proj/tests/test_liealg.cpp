#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "lsi/catalog.hpp"
#include "lsi/ncpoly.hpp"
#include "lsi/verify.hpp"

using namespace lsi;

namespace {

ParamScalar rp(const Rat& v) { return ParamScalar(GRat(v)); }

DiffOp dterm(CoordMono pows, Monomial parts, ParamScalar c) {
  return DiffOp::term(DKey{std::move(pows), std::move(parts)}, Mat2::scalar(std::move(c)));
}

}  // namespace

TEST_CASE("label rendering is stable") {
  CHECK(Label::X(-1).str() == "X_-1");
  CHECK(Label::Y(Rat(-1, 2)).str() == "Y_-1/2");
  CHECK(Label::Y(0, 2).str() == "Y_0^2");
  CHECK(Label::R(1, 2).str() == "R_0^12");
  CHECK(Label::Vplus().str() == "V+");
  CHECK(Label::h(2).str() == "h_2");
  CHECK(Label::Theta().str() == "Theta");
}

TEST_CASE("massive realization pins the known generator forms") {
  auto rep = build_representation("sch", 1);
  // X_1 = -t^2 dt - t r dr - (M/2) r^2 - x t
  DiffOp x1 = dterm({{"t", 2}}, {{"t", 1}}, rp(-1)) +
              dterm({{"t", 1}, {"r", 1}}, {{"r", 1}}, rp(-1)) +
              dterm({{"r", 2}}, {}, rp(Rat(-1, 2)) * ParamScalar::param("M")) +
              dterm({{"t", 1}}, {}, -ParamScalar::param("x"));
  CHECK(rep.gens.at(Label::X(1)) == x1);
  // Y_1/2 = -t dr - M r
  DiffOp yp = dterm({{"t", 1}}, {{"r", 1}}, rp(-1)) +
              dterm({{"r", 1}}, {}, -ParamScalar::param("M"));
  CHECK(rep.gens.at(Label::Y(Rat(1, 2))) == yp);
  CHECK(rep.gens.at(Label::M(0)) == dterm({}, {}, -ParamScalar::param("M")));
}

TEST_CASE("finite algebras close exactly on their bracket tables") {
  for (const auto& [id, d, pairs] :
       {std::tuple<std::string, int, int>{"sch", 1, 15}, {"sch", 2, 36}, {"cga", 1, 15},
        {"cga", 2, 45}, {"dual-sch", 1, 15}, {"parabolic-N", 1, 21}, {"log-dual-sch", 1, 21},
        {"dual-cga", 1, 21}, {"age", 1, 10}}) {
    CAPTURE(id);
    CAPTURE(d);
    auto rep = build_representation(id, d);
    auto report = verify_structure(rep);
    CHECK(report.passed());
    CHECK(report.mismatches == 0);
    CHECK(report.checked == pairs);
    CHECK(report.flagged == 0);
  }
}

TEST_CASE("infinite families close inside the window and flag the boundary") {
  for (const std::string id : {"sv", "av"}) {
    CAPTURE(id);
    auto rep = build_representation(id, 1);
    CHECK(rep.window == std::pair<int, int>{-3, 3});
    auto report = verify_structure(rep);
    CHECK(report.passed());
    CHECK(report.flagged > 0);

    auto narrow = build_representation(id, 1, std::pair<int, int>{-2, 2});
    auto nr = verify_structure(narrow);
    CHECK(nr.passed());
  }
}

TEST_CASE("exotic central extension carries the mass-like central charge") {
  auto rep = build_representation("ecga", 2);
  auto report = verify_structure(rep);
  CHECK(report.passed());
  CHECK(report.flagged == 4);

  std::set<std::pair<std::string, std::string>> flagged;
  for (const auto& rc : report.relations)
    if (!rc.checked) flagged.insert({rc.left.str(), rc.right.str()});
  std::set<std::pair<std::string, std::string>> expected = {
      {"X_1", "h_1"}, {"X_1", "h_2"}, {"Y_1^1", "h_2"}, {"Y_1^2", "h_1"}};
  CHECK(flagged == expected);

  // [Y^1_n, Y^2_-n] = (3 delta_{n,0} - 2) Theta
  const DiffOp& theta = rep.gens.at(Label::Theta());
  CHECK(commutator(rep.gens.at(Label::Y(0, 1)), rep.gens.at(Label::Y(0, 2))) == theta);
  CHECK(commutator(rep.gens.at(Label::Y(1, 1)), rep.gens.at(Label::Y(-1, 2))) ==
        GRat(-2) * theta);
  CHECK(commutator(rep.gens.at(Label::Y(-1, 1)), rep.gens.at(Label::Y(1, 2))) ==
        GRat(-2) * theta);
  CHECK(commutator(rep.gens.at(Label::Y(1, 1)), rep.gens.at(Label::Y(0, 2))).is_zero());

  // the auxiliary Heisenberg pair
  CHECK(commutator(rep.gens.at(Label::h(1)), rep.gens.at(Label::h(2))) == theta);
  CHECK(commutator(rep.gens.at(Label::R(1, 2)), rep.gens.at(Label::h(1))) ==
        rep.gens.at(Label::h(2)));
}

TEST_CASE("parabolic generator grades the dual algebra") {
  auto rep = build_representation("parabolic-N", 1);
  const DiffOp& N = rep.gens.at(Label::N());
  CHECK(commutator(N, rep.gens.at(Label::M(0))) == -rep.gens.at(Label::M(0)));
  CHECK(commutator(N, rep.gens.at(Label::X(1))) == -rep.gens.at(Label::X(1)));
  CHECK(commutator(N, rep.gens.at(Label::Y(Rat(-1, 2)))).is_zero());
}

TEST_CASE("mutated generators are caught by the structure check") {
  auto rep = build_representation("sch", 1);
  rep.gens[Label::Y(Rat(1, 2))] = GRat(2) * rep.gens[Label::Y(Rat(1, 2))];
  auto report = verify_structure(rep);
  CHECK(report.mismatches > 0);

  // Jordan corner of the dilatation block matters: damage it and the
  // [X_1, X_-1] = 2 X_0 relation must break.
  auto logrep = build_representation("log-dual-sch", 1);
  Mat2 corner;  // zero matrix apart from the upper-right entry
  corner.b = ParamScalar::param("xp");
  logrep.gens[Label::X(0)] =
      logrep.gens[Label::X(0)] + DiffOp::multiplication({}, corner);
  auto logreport = verify_structure(logrep);
  CHECK(logreport.mismatches > 0);
  bool xx_broken = false;
  for (const auto& rc : logreport.relations)
    if (rc.checked && !rc.ok && rc.left == Label::X(-1) && rc.right == Label::X(1))
      xx_broken = true;
  CHECK(xx_broken);
}

TEST_CASE("structure-constant Jacobi identity holds for every catalog table") {
  for (const std::string id : catalog_ids()) {
    CAPTURE(id);
    const int d = id == "ecga" ? 2 : 1;
    auto rep = build_representation(id, d);
    auto report = jacobi_check(rep.table);
    CHECK(report.passed());
  }
  // and for the two-charge pair of Virasoro actions
  auto report = jacobi_check(two_charge_virasoro_table(-2, 2));
  CHECK(report.passed());
  CHECK(report.flagged > 0);
}

TEST_CASE("a wrong structure constant breaks the table-level Jacobi identity") {
  StructureTable T;
  const auto X = [](int n) { return Label::X(n); };
  T.set(X(-1), X(0), {{X(-1), rp(-1)}});
  T.set(X(-1), X(1), {{X(0), rp(-2)}});
  T.set(X(0), X(1), {{X(1), rp(-1)}});
  CHECK(jacobi_check(T).passed());
  T.set(X(0), X(1), {{X(1), rp(-2)}});
  CHECK(jacobi_check(T).failures > 0);
}

TEST_CASE("wave operator is normalized by the ageing and parabolic sets") {
  const DiffOp S = schrodinger_wave_op();

  auto expect_lambda = [&](const Representation& rep, const Label& l, const ClosedForm& want) {
    for (const auto& sc : verify_dynamical_symmetry(rep, S))
      if (sc.gen == l) {
        CAPTURE(l.str());
        CAPTURE(sc.residual);
        CHECK(sc.ok);
        CHECK(sc.lambda == want);
        return;
      }
    FAIL("generator not found: " << l.str());
  };

  auto age = build_representation("age", 1);
  expect_lambda(age, Label::X(0), ClosedForm(GRat(-1)));
  expect_lambda(age, Label::X(1), GRat(-2) * ClosedForm::coord("t"));
  expect_lambda(age, Label::Y(Rat(1, 2)), ClosedForm());
  expect_lambda(age, Label::Y(Rat(-1, 2)), ClosedForm());
  expect_lambda(age, Label::M(0), ClosedForm());

  auto pc = build_representation("dual-cga", 1);
  expect_lambda(pc, Label::X(1), GRat(-2) * ClosedForm::coord("t"));
  expect_lambda(pc, Label::Vplus(), GRat(-2) * ClosedForm::coord("r"));
  expect_lambda(pc, Label::N(), ClosedForm());
  expect_lambda(pc, Label::D(), ClosedForm(GRat(-2)));
  expect_lambda(pc, Label::M(0), ClosedForm());

  // shifting the weight in the wave operator must break the factorization
  DiffOp bad = S + DiffOp::term(DKey{{{"t", -1}}, {{"zeta", 1}}},
                                Mat2::scalar(ParamScalar(GRat(Rat(0), Rat(-1)))));
  int broken = 0;
  for (const auto& sc : verify_dynamical_symmetry(age, bad))
    if (!sc.ok) ++broken;
  CHECK(broken > 0);
}

TEST_CASE("block-matrix realization reproduces both central charges") {
  auto report = verify_matrix_central_charges(-2, 2);
  CHECK(report.passed());
  CHECK(report.checked == 45);

  // (n^3 - n) kills the central term at n = +-1, so scaling the expected
  // charges can only break the n = +-2 rows: [X_-2, X_2] and both X/Y pairs.
  auto bad = verify_matrix_central_charges(-2, 2, Rat(2));
  CHECK(bad.failures == 3);
}

TEST_CASE("catalog rejects unsupported requests") {
  CHECK_THROWS_AS((void)build_representation("nope", 1), std::invalid_argument);
  CHECK_THROWS_AS((void)build_representation("ecga", 1), std::invalid_argument);
  CHECK_THROWS_AS((void)build_representation("sch", 3), std::invalid_argument);
  CHECK_THROWS_AS((void)build_representation("dual-cga", 2), std::invalid_argument);
  CHECK_THROWS_AS((void)build_representation("sv", 1, std::pair<int, int>{2, -2}),
                  std::invalid_argument);
}
