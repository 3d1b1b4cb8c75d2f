#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace arithcs {

using Residue = std::uint32_t;
using VectorZn = std::vector<Residue>;

/// Largest supported modulus. Products of two residues fit in 32 bits and
/// n^2 (needed by the Bockstein lift) still fits comfortably in 64 bits.
inline constexpr std::uint32_t kMaxModulus = 1u << 16;

/// Extended gcd on integers: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
struct IntGcd {
  std::int64_t g, s, t;
};
IntGcd extended_gcd(std::int64_t a, std::int64_t b);

std::int64_t floor_mod(std::int64_t a, std::int64_t m);

/// The ring Z/n with 2 <= n <= kMaxModulus. Representatives live in [0, n).
class ModRing {
 public:
  explicit ModRing(std::uint32_t modulus);

  std::uint32_t modulus() const { return n_; }

  Residue reduce(std::int64_t x) const { return static_cast<Residue>(floor_mod(x, n_)); }
  Residue add(Residue a, Residue b) const {
    const std::uint32_t s = a + b;
    return s >= n_ ? s - n_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + n_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : n_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % n_);
  }

  bool is_unit(Residue a) const;
  std::optional<Residue> inverse(Residue a) const;

  /// gcd(a, n), the canonical generator of the ideal (a); 0 maps to 0.
  Residue canonical_associate(Residue a) const;
  /// A unit u with u * a == canonical_associate(a).
  Residue unit_normalizer(Residue a) const;
  /// True when b lies in the ideal generated by a.
  bool divides(Residue a, Residue b) const;

  /// Unimodular 2x2 step: s*a + t*b = g generates (a, b), u*a + v*b = 0 and
  /// s*v - t*u = 1 (as integers).
  struct Gcdex {
    Residue g, s, t, u, v;
  };
  Gcdex gcdex(Residue a, Residue b) const;

 private:
  std::uint32_t n_;
};

/// A finitely generated module Z/n1 + ... + Z/nr over Z/n, every ni | n.
class ModuleOverZn {
 public:
  ModuleOverZn(std::uint32_t modulus, std::vector<std::uint32_t> orders);
  static ModuleOverZn cyclic(std::uint32_t modulus) { return ModuleOverZn(modulus, {modulus}); }

  std::uint32_t modulus() const { return modulus_; }
  std::size_t rank() const { return orders_.size(); }
  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::uint32_t order(std::size_t j) const { return orders_[j]; }

  bool contains(std::span<const Residue> x) const;
  VectorZn zero() const { return VectorZn(rank(), 0); }
  VectorZn add(std::span<const Residue> x, std::span<const Residue> y) const;

  /// Scaling that embeds component j into Z/n, i.e. n / nj.
  std::uint32_t embedding_scale(std::size_t j) const { return modulus_ / orders_[j]; }

  bool operator==(const ModuleOverZn&) const = default;

 private:
  std::uint32_t modulus_;
  std::vector<std::uint32_t> orders_;
};

}  // namespace arithcs
