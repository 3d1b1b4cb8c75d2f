#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arithcs/cs_theory.hpp"
#include "arithcs/document.hpp"

namespace arithcs::fixtures {

/// n = 2, A = D3, c a generator of H^3(A, Z/2) moved by a fixed coboundary.
/// Global group Q8 with one totally ramified place, the centre Z/2. Global
/// H^2 restricts to zero there, so reciprocity holds and the invariant plays
/// the role of a closed-manifold invariant. rho: Q8 -> Z/2 -> A sends j and
/// k to the reflection s.
GlobalDatum quaternion_toy();
GroupHom quaternion_toy_rho();

/// n = 3, A = D3 (= S3), c a generator of H^3(A, Z/3). Global group D9 with
/// rho the reduction D9 -> D3; two places Z/3 -> D9 (1 -> r^3 and 1 -> r^6),
/// totally ramified.
GlobalDatum dihedral_toy();
GroupHom dihedral_toy_rho();

/// n = 2, A = D3, c = sgn^*(alpha u delta alpha) + d w for a fixed 2-cochain w.
/// Global group Z/3 x| Z/4 (order 12) mapping onto D3 with kernel the centre;
/// two places Z/6 whose inertia is the centre, so G_v / I_v = Z/3.
GlobalDatum dicyclic_toy();
GroupHom dicyclic_toy_rho();

/// Global Z/3 sitting diagonally in two copies of the local Z/3, n = 3, with
/// normalizations (+1, -1) when balanced and (+1, +1) otherwise.
GlobalDatum reciprocity_datum(bool balanced);

/// Reduction Z/4 -> Z/2 and its tautological lift Z/4 -> Z/4.
GroupHom kummer_reduction();
GroupHom kummer_identity_lift();

/// The documents shipped under data/, keyed by file name.
std::vector<std::pair<std::string, Document>> documents();

}  // namespace arithcs::fixtures
