#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsi/representation.hpp"

namespace lsi {

// Identifiers accepted by build_representation:
//   sch           Schroedinger algebra, massive realization (d = 1 or 2)
//   sv            its infinite-dimensional extension (d = 1, window selectable)
//   cga           conformal Galilean algebra, rapidity realization (d = 1 or 2)
//   av            its infinite-dimensional extension (d = 1, window selectable)
//   ecga          exotic (centrally extended) CGA, d = 2 only, window -1..1
//   dual-sch      Schroedinger algebra after Fourier transform in the mass
//   parabolic-N   dual-sch extended by the parabolic generator N
//   log-dual-sch  parabolic-N with rank-2 Jordan blocks for both weights
//   dual-cga      parabolic subalgebra with V+, N, D (d = 1)
//   age           ageing subalgebra (no time translation), dual form (d = 1)
std::vector<std::string> catalog_ids();

// Builds generators and the bracket table they are claimed to satisfy.
// `window` selects the index range for the infinite families (sv, av); the
// finite algebras use their natural range and ignore it. Throws
// std::invalid_argument for unknown ids or unsupported dimensions.
Representation build_representation(const std::string& id, int d = 1,
                                    std::optional<std::pair<int, int>> window = std::nullopt);

// Schroedinger operator in the mass-Fourier chart (zeta, t, r), acting on a
// field of scaling weight x + xi. Generators of age/dual-cga normalize it:
// [S, X] = lambda_X * S with polynomial lambda_X.
DiffOp schrodinger_wave_op();

// Bracket table of the pair of commuting Virasoro actions with two central
// charges cX = c + cp and cY = c; labels X_n, Y_n for n in [lo, hi] plus the
// central elements KX, KY. Used by the matrix central-charge check.
StructureTable two_charge_virasoro_table(int lo, int hi);

}  // namespace lsi
