#pragma once

#include <string>
#include <vector>

#include "lsi/rational.hpp"

namespace lsi {

// Result of checking the block-matrix realization of the two commuting
// Virasoro actions: X_n = diag(L_n + L'_n, L_n + L'_n), Y_n strictly upper
// triangular with entry L_n. Brackets are computed in the free algebra on
// the letters L, L' and reduced to normal order with the Virasoro relation,
// so the central terms appear exactly: cX = c + cp on the identity, cY = c
// on the upper-right matrix unit.
struct CentralChargeReport {
  int lo = 0, hi = 0;
  int checked = 0;
  int failures = 0;
  std::vector<std::string> details;
  bool passed() const { return failures == 0 && checked > 0; }
};

// `central_scale` multiplies the expected central coefficients; anything but
// 1 must make the comparison fail (used by mutation tests).
CentralChargeReport verify_matrix_central_charges(int lo = -2, int hi = 2,
                                                  const Rat& central_scale = Rat(1));

}  // namespace lsi
