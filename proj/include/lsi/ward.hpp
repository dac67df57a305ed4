#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lsi/catalog.hpp"
#include "lsi/closed_form.hpp"
#include "lsi/diffop.hpp"
#include "lsi/representation.hpp"

namespace lsi {

// Jordan-block corners of the two field weights, one per leg. For an
// ordinary (non-logarithmic) field all four entries are zero; for a rank-2
// block the corner of the scaling weight is xp and the corner of the
// parabolic weight is xip. Entries may be symbolic.
struct DoubletSpec {
  ParamScalar xp1, xp2;
  ParamScalar xip1, xip2;
};

// The four two-point functions of a pair of rank-<=2 multiplets:
// F = <phi1 phi2>, G12 = <phi1 psi2>, G21 = <psi1 phi2>, H = <psi1 psi2>,
// where psi is the logarithmic partner of phi.
struct Quartet {
  ClosedForm F, G12, G21, H;

  static const std::array<const char*, 4>& entry_names();
  ClosedForm& entry(const std::string& name);
  const ClosedForm& entry(const std::string& name) const;
};

// A fully instantiated two-body covariance problem: a coordinate chart for
// both legs, the generator set acting on each leg, the weight doublet, and
// the candidate solution quartet for one sign of the time difference.
struct WardCase {
  std::string id;
  std::string branch;  // "t>0", "t<0", or "all"
  CoordSystem cs;
  std::vector<Label> gens;
  std::map<Label, DiffOp> leg1, leg2;
  // Names of the weight parameters inside the leg operators (empty when the
  // representation has no such weight).
  std::string wx1, wx2;
  std::string wxi1, wxi2;
  DoubletSpec doublet;
  Quartet solution;
  std::set<std::string> amplitudes;
};

// Case identifiers accepted by build_ward_case:
//   log-sch-dual-symmetric  rank-2 pair, shared scaling weight, parabolic
//                           weights xi1/xi2, mass-Fourier chart with N
//   log-sch-dual-H          rank-2 pair without N; exponent alpha stays free
//   asymmetric              only leg 2 logarithmic; G21 = 0
//   fixed-mass-symmetric    rank-2 pair at fixed masses M and -M; the t<0
//                           branch carries the identically zero quartet
//   nonlog-sch              ordinary pair at fixed masses, four amplitudes
//   log-cga                 rank-2 pair for the conformal Galilean algebra
//   dual-cga-pair           ordinary pair under the parabolic V+/N/D set
std::vector<std::string> ward_case_ids();
std::vector<std::string> ward_branches(const std::string& case_id);
WardCase build_ward_case(const std::string& case_id, const std::string& branch);

// One generator applied to one quartet entry, including the lower-triangular
// sources from the Jordan structure.
struct WardResidual {
  Label gen;
  std::string entry;
  ClosedForm residual;
  bool zero = false;
};

// Acts with one generator on all four entries. The doublet couples the
// entries: the residual of G12 picks up xp2/xip2 times the weight-derivative
// of the leg-2 operator applied to F, the residual of G21 the leg-1 mirror,
// and H is sourced by both G12 and G21. F is never sourced.
std::vector<WardResidual> apply_two_body(const WardCase& wc, const Label& gen,
                                         const Quartet& q);

struct CovarianceReport {
  std::string id;
  std::string branch;
  std::vector<WardResidual> rows;
  int checked = 0;
  int failures = 0;
  bool passed() const { return checked > 0 && failures == 0; }
};

// Verifies that the case's stored solution (or a caller-supplied quartet)
// is annihilated by every generator of the case.
CovarianceReport verify_covariance(const WardCase& wc);
CovarianceReport verify_covariance(const WardCase& wc, const Quartet& q);

// A single scalar condition produced by constraint extraction, normalized so
// that its leading coefficient is 1. `basis` records which residual class and
// monomial the condition came from.
struct Constraint {
  ParamScalar condition;
  std::string basis;
};

struct ConstraintReport {
  std::string scenario;
  std::vector<Constraint> rows;
  // Differences of same-entry rows in which every free ansatz exponent
  // cancels: the relations the symmetry imposes on weights and amplitudes.
  std::vector<ParamScalar> eliminants;
};

// Scenario identifiers accepted by extract_constraints:
//   f-weight-match           power-law F under X_0, X_1: legs must share x
//   g12-source-chain         sourced G12: (x1 - x2) g0 = xp2 f0
//   g21-source-chain         sourced G21: (x1 - x2) g0 = -xp1 f0
//   h-mixing-balance         sourced H at x1 = x2: xp1 ga = xp2 gb
//   n-scaling-exponent       N alone fixes one exponent combination
//   jordan-corner-commutator [X_0, N] = 0 forces xp * xipp = 0
//   dual-cga-exponent        V+/N/D-covariant F pins mu = (x1+3 xi1+x2+3 xi2)/2
std::vector<std::string> constraint_scenarios();
ConstraintReport extract_constraints(const std::string& scenario);

// True when a and b are nonzero scalar multiples of one another (or both
// zero); used to compare extracted conditions against expected forms.
bool proportional(const ParamScalar& a, const ParamScalar& b);
ParamScalar normalize_condition(const ParamScalar& p);

// The closed-form conditions a scenario must reproduce. Every entry of
// `rows` must appear (up to proportionality) among the report's rows, and
// the report's eliminant list must match `eliminants` one-to-one.
struct ScenarioExpectation {
  std::vector<ParamScalar> rows;
  std::vector<ParamScalar> eliminants;
};
ScenarioExpectation expected_conditions(const std::string& scenario);

// Checks an extraction result against its expectation.
bool constraints_match(const ConstraintReport& rep, const ScenarioExpectation& want);

}  // namespace lsi
