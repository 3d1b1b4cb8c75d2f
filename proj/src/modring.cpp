#include "arithcs/modring.hpp"

#include <numeric>
#include <string>

#include "arithcs/error.hpp"

namespace arithcs {

IntGcd extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
    old_t -= q * t;
    std::swap(old_t, t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

ModRing::ModRing(std::uint32_t modulus) : n_(modulus) {
  if (modulus < 2 || modulus > kMaxModulus) {
    throw validation_error("InvalidModulus",
                           "modulus must lie in [2, 65536], got " + std::to_string(modulus));
  }
}

bool ModRing::is_unit(Residue a) const { return std::gcd(a, n_) == 1; }

std::optional<Residue> ModRing::inverse(Residue a) const {
  const IntGcd e = extended_gcd(a, n_);
  if (e.g != 1) return std::nullopt;
  return reduce(e.s);
}

Residue ModRing::canonical_associate(Residue a) const { return std::gcd(a, n_) % n_; }

Residue ModRing::unit_normalizer(Residue a) const {
  if (a == 0) return 1;
  const std::uint32_t g = std::gcd(a, n_);
  const std::uint32_t cofactor = n_ / g;
  if (cofactor == 1) return 1;
  const std::int64_t u0 = floor_mod(extended_gcd(a / g, cofactor).s, cofactor);
  // Lift u0 from Z/cofactor to a unit of Z/n.
  for (std::int64_t u = u0; u < static_cast<std::int64_t>(n_); u += cofactor) {
    if (std::gcd(static_cast<std::uint32_t>(u), n_) == 1) return static_cast<Residue>(u);
  }
  return 1;  // unreachable: a unit lift always exists
}

bool ModRing::divides(Residue a, Residue b) const { return b % std::gcd(a, n_) == 0; }

ModRing::Gcdex ModRing::gcdex(Residue a, Residue b) const {
  if (a == 0 && b == 0) return {0, 1, 0, 0, 1};
  const IntGcd e = extended_gcd(a, b);
  return {reduce(e.g), reduce(e.s), reduce(e.t), reduce(-static_cast<std::int64_t>(b) / e.g),
          reduce(static_cast<std::int64_t>(a) / e.g)};
}

ModuleOverZn::ModuleOverZn(std::uint32_t modulus, std::vector<std::uint32_t> orders)
    : modulus_(modulus), orders_(std::move(orders)) {
  ModRing check(modulus);
  for (std::uint32_t o : orders_) {
    if (o < 2 || modulus % o != 0) {
      throw validation_error("NotAModule", "cyclic order " + std::to_string(o) +
                                               " does not divide modulus " + std::to_string(modulus));
    }
  }
}

bool ModuleOverZn::contains(std::span<const Residue> x) const {
  if (x.size() != rank()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] >= orders_[j]) return false;
  }
  return true;
}

VectorZn ModuleOverZn::add(std::span<const Residue> x, std::span<const Residue> y) const {
  VectorZn out(rank());
  for (std::size_t j = 0; j < rank(); ++j) out[j] = (x[j] + y[j]) % orders_[j];
  return out;
}

}  // namespace arithcs
