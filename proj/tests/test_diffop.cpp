#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "lsi/diffop.hpp"

using namespace lsi;

namespace {

DiffOp mono_op(const std::string& name, const Rat& e) {
  return DiffOp::multiplication(CoordMono{{name, e}});
}

}  // namespace

TEST_CASE("basic composition identities") {
  DiffOp dt = DiffOp::partial("t");
  DiffOp t = mono_op("t", 1);

  CHECK(commutator(dt, t) == DiffOp::constant(ParamScalar(1)));
  // d_t ∘ t^2 = 2 t + t^2 d_t
  DiffOp lhs = dt * mono_op("t", 2);
  DiffOp rhs = GRat(2) * mono_op("t", 1) + mono_op("t", 2) * dt;
  CHECK(lhs == rhs);
  // d_t^2 ∘ t = t d_t^2 + 2 d_t
  CHECK(DiffOp::partial("t", 2) * t == t * DiffOp::partial("t", 2) + GRat(2) * dt);
  // Fractional powers: d_t ∘ t^(1/2) = (1/2) t^(-1/2) + t^(1/2) d_t
  CHECK(dt * mono_op("t", Rat(1, 2)) ==
        GRat(Rat(1, 2)) * mono_op("t", Rat(-1, 2)) + mono_op("t", Rat(1, 2)) * dt);
  // [d_r, r d_t] = d_t
  DiffOp rdt = DiffOp::partial("t").scaled_by_monomial({{"r", 1}});
  CHECK(commutator(DiffOp::partial("r"), rdt) == dt);
}

TEST_CASE("matrix coefficients compose in order") {
  Mat2 J{ParamScalar(0), ParamScalar(1), ParamScalar(0), ParamScalar(0)};
  DiffOp jdt = DiffOp::partial("t").scaled(J);
  CHECK((jdt * jdt).is_zero());  // J is nilpotent
  CHECK_FALSE(jdt.is_scalar_op());

  Mat2 K{ParamScalar(0), ParamScalar(0), ParamScalar(1), ParamScalar(0)};
  DiffOp kdt = DiffOp::partial("t").scaled(K);
  // [J d_t, K d_t] = (JK - KJ) d_t^2 = diag(1,-1) d_t^2
  Mat2 diag{ParamScalar(1), ParamScalar(0), ParamScalar(0), ParamScalar(-1)};
  CHECK(commutator(jdt, kdt) == DiffOp::partial("t", 2).scaled(diag));
}

TEST_CASE("application to closed forms") {
  CoordSystem cs;
  cs.base("t").base("r");
  ParamScalar x = ParamScalar::param("x");

  // X = -t d_t - (1/2) r d_r - x/2  acting on t^a r^2
  DiffOp X = -(DiffOp::partial("t").scaled_by_monomial({{"t", 1}})) -
             GRat(Rat(1, 2)) * DiffOp::partial("r").scaled_by_monomial({{"r", 1}}) -
             DiffOp::constant(GRat(Rat(1, 2)) * x);
  ExponentExpr a = ExponentExpr::param("a");
  ClosedForm f = ClosedForm::coord_power("t", a) * ClosedForm::coord_power("r", 2);
  ClosedForm expect = (-(ParamScalar::param("a")) - ParamScalar(1) - GRat(Rat(1, 2)) * x) * f;
  CHECK(X.apply_scalar(f, cs) == expect);

  // Multiplier extraction round-trip.
  DiffOp mult = GRat(-2) * mono_op("t", 1);
  CHECK(mult.is_multiplication());
  CHECK(mult.multiplier_form() == GRat(-2) * ClosedForm::coord("t"));
  CHECK_THROWS_AS(X.multiplier_form(), std::domain_error);
}

TEST_CASE("parameter derivative and substitution") {
  ParamScalar x = ParamScalar::param("x");
  DiffOp X = DiffOp::constant(GRat(Rat(-1, 2)) * x).scaled_by_monomial({{"t", 2}});
  CHECK(X.derivative_param("x") ==
        DiffOp::constant(ParamScalar(GRat(Rat(-1, 2)))).scaled_by_monomial({{"t", 2}}));
  CHECK(X.derivative_param("M").is_zero());
  DiffOp bound = X.substitute_params({{"x", ParamScalar(GRat(3))}});
  CHECK(bound == DiffOp::constant(ParamScalar(GRat(Rat(-3, 2)))).scaled_by_monomial({{"t", 2}}));
  DiffOp renamed = X.rename_params({{"x", "x1"}}).rename_coords({{"t", "t1"}});
  std::set<std::string> ps, cs2;
  renamed.collect_params(ps);
  renamed.collect_coords(cs2);
  CHECK(ps == std::set<std::string>{"x1"});
  CHECK(cs2 == std::set<std::string>{"t1"});
}

namespace {

DiffOp random_op(std::mt19937& rng, bool scalar_only) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> ord(0, 2);
  std::uniform_int_distribution<int> nterms(1, 2);
  auto rand_scalar = [&]() {
    ParamScalar s(GRat(Rat(small(rng))));
    if (coin(rng)) s += GRat(Rat(small(rng))) * ParamScalar::param("x");
    if (coin(rng)) s += GRat(Rat(0), Rat(small(rng))) * ParamScalar::param("M");
    return s;
  };
  DiffOp op;
  int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    DKey key;
    if (int e = small(rng); e != 0) key.powers["t"] = e;
    if (coin(rng)) key.powers["r"] = Rat(1, 2) * small(rng);
    if (int o = ord(rng); o > 0) key.partials["t"] = o;
    if (int o = ord(rng); o > 0) key.partials["r"] = o;
    Mat2 m = scalar_only ? Mat2::scalar(rand_scalar())
                         : Mat2{rand_scalar(), rand_scalar(), rand_scalar(), rand_scalar()};
    if (m.is_zero()) continue;
    // normalize away zero exponents introduced above
    for (auto it = key.powers.begin(); it != key.powers.end();)
      it = (it->second == 0) ? key.powers.erase(it) : std::next(it);
    op += DiffOp::term(key, m);
  }
  return op;
}

ClosedForm random_target(std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> small(-2, 2);
  ClosedForm f;
  for (int t = 0; t < 2; ++t) {
    ClosedForm term(GRat(Rat(small(rng)), Rat(coin(rng))));
    ExponentExpr et = ExponentExpr(small(rng));
    if (coin(rng)) et += ExponentExpr::param("a");
    term *= ClosedForm::coord_power("t", et);
    term *= ClosedForm::coord_power("r", ExponentExpr(small(rng)));
    if (coin(rng)) term *= ClosedForm::log_coord("t");
    if (coin(rng))
      term *= ClosedForm::exponential(ParamScalar::param("M") *
                                      (ClosedForm::coord_power("r", 2) *
                                       ClosedForm::coord_power("t", -1)));
    f += term;
  }
  return f;
}

}  // namespace

TEST_CASE("composition is associative on random operators") {
  std::mt19937 rng(42);
  for (int iter = 0; iter < 25; ++iter) {
    DiffOp A = random_op(rng, false);
    DiffOp B = random_op(rng, false);
    DiffOp C = random_op(rng, false);
    CHECK((A * B) * C == A * (B * C));
  }
}

TEST_CASE("operator commutators satisfy the Jacobi identity") {
  std::mt19937 rng(43);
  for (int iter = 0; iter < 15; ++iter) {
    DiffOp A = random_op(rng, false);
    DiffOp B = random_op(rng, false);
    DiffOp C = random_op(rng, false);
    DiffOp j = commutator(commutator(A, B), C) + commutator(commutator(B, C), A) +
               commutator(commutator(C, A), B);
    CHECK(j.is_zero());
  }
}

TEST_CASE("application factors through composition") {
  CoordSystem cs;
  cs.base("t").base("r");
  std::mt19937 rng(44);
  for (int iter = 0; iter < 20; ++iter) {
    DiffOp A = random_op(rng, true);
    DiffOp B = random_op(rng, true);
    ClosedForm f = random_target(rng);
    ClosedForm lhs = (A * B).apply_scalar(f, cs);
    ClosedForm rhs = A.apply_scalar(B.apply_scalar(f, cs), cs);
    CHECK((lhs - rhs).is_zero(cs));
  }
}
