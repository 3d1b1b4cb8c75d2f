#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "arithcs/cochain.hpp"

namespace arithcs {

/// (x u y)(g1..g_{p+q}) = x(g1..gp) * (g1...gp . y(g_{p+1}..g_{p+q})).
/// Coefficients must be cyclic of the same order and modulus; they pair by
/// ring multiplication and the result carries the product action. Anything
/// else throws IncompatiblePairing.
Cochain cup(const Cochain& x, const Cochain& y);

/// Connecting map of 0 -> Z/n -> Z/n^2 -> Z/n -> 0: (1/n) d(s o f) with s
/// the lift to [0, n). Trivial cyclic coefficients only. Throws NotDivisible
/// (with the offending tuple) when d(s o f) is not divisible by n, which
/// happens exactly when f is not a cocycle.
Cochain bockstein(const Cochain& f);

/// f^a(g1..gi) = a^-1 . f(a g1 a^-1, ..., a gi a^-1). A right action: (f^a)^b = f^{ab}.
Cochain conjugate(const Cochain& f, Element a);

/// A monotone lattice path from (0,0) to (n,k); `horizontal[l]` says whether
/// step l moves right.
struct ShufflePath {
  std::size_t n = 0, k = 0;
  std::vector<bool> horizontal;

  /// Height of the start point of every step.
  std::vector<std::size_t> heights() const;
  /// Number of grid squares lying above the path.
  std::size_t squares_above() const;
  /// Parity of the (k, n)-shuffle read off the step sequence.
  bool shuffle_parity() const;
  int sign() const { return squares_above() % 2 == 0 ? 1 : -1; }
};

/// All binomial(n + k, k) paths in lexicographic order (horizontal first).
std::vector<ShufflePath> shuffle_paths(std::size_t n, std::size_t k);

/// The argument tuple of f contributed by `path` for a = (a1..ak) and x = (x0..x_{n-1}):
/// a vertical step at height t gives a_{k-t}^-1, a horizontal step at
/// height t gives c x_s c^-1 with c = a_{k-t+1}...a_k.
std::vector<Element> path_arguments(const FiniteGroup& g, const ShufflePath& path, std::span<const Element> a,
                                    std::span<const Element> x);

/// h_{a1..ak, f}(x) = sum over paths P of (-1)^{|P|} f(x^P), an n-cochain when
/// deg f = n + k. With k = 0 this is f itself.
Cochain homotopy(std::span<const Element> a, const Cochain& f);

/// The identity character Z/n -> Z/n as a 1-cochain on cyclic_group(n).
Cochain identity_character(std::uint32_t n);
/// A hom into cyclic_group(n) read as a 1-cochain with trivial Z/n coefficients.
Cochain character(const GroupHom& f);
/// alpha u delta(alpha) on Z/n.
Cochain alpha_cup_bockstein(std::uint32_t n);

}  // namespace arithcs
