#pragma once

#include <string>
#include <vector>

#include "lsi/representation.hpp"

namespace lsi {

// One bracket relation compared against the realization.
struct RelationCheck {
  Label left, right;
  bool checked = true;  // false when the true result lies outside the window
  bool ok = false;
  std::string expected;  // rendered right-hand side
  std::string residual;  // rendered difference when the check fails
};

struct StructureReport {
  std::string id;
  int dim = 1;
  std::pair<int, int> window{0, 0};
  std::vector<RelationCheck> relations;
  int checked = 0, mismatches = 0, flagged = 0;
  bool passed() const { return mismatches == 0 && checked > 0; }
};

// Computes every claimed commutator of the realization exactly and compares
// it with the bracket table. Flagged (out-of-window) entries are counted but
// never failed.
StructureReport verify_structure(const Representation& rep);

// Jacobi identity at the level of structure constants. Triples that route
// through a flagged bracket are reported as skipped.
struct JacobiTriple {
  Label a, b, c;
  bool checked = true;
  bool ok = false;
  std::string residual;
};

struct JacobiReport {
  std::vector<JacobiTriple> triples;
  int checked = 0, failures = 0, flagged = 0;
  bool passed() const { return failures == 0 && checked > 0; }
};

JacobiReport jacobi_check(const StructureTable& table);

// For each generator X computes [S, X] and tries to write it as lambda * S
// with a polynomial multiplier lambda; ok means the factorization is exact.
struct SymmetryCheck {
  Label gen;
  bool ok = false;
  ClosedForm lambda;
  std::string residual;
};

std::vector<SymmetryCheck> verify_dynamical_symmetry(const Representation& rep,
                                                     const DiffOp& wave_op);

}  // namespace lsi
