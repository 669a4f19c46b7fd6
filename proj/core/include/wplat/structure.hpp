#pragma once

#include <vector>

#include "wplat/lattice.hpp"
#include "wplat/report.hpp"

namespace wplat {

/// Over all pairs of P_n^(k):
///   semimodular   rho(x) + rho(y) >= rho(x v y) + rho(x ^ y) with the layerwise join/meet
///   atomistic     the join of atom_decomposition(x) is x
///   atom-count    rank-1 elements number k n(n-1)/2 and equal atoms(n, k)
///   join-meet     whether least upper / greatest lower bounds exist under the
///                 cover-closure order and agree with the layerwise join/meet;
///                 disagreements are warnings
std::vector<CheckReport> structural_checks(const Poset& poset);

}  // namespace wplat
