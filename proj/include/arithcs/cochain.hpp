#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "arithcs/group.hpp"
#include "arithcs/matrix.hpp"

namespace arithcs {

/// Highest cochain degree the differential produces unless raised.
inline constexpr std::size_t kDefaultMaxDegree = 4;

/// An inhomogeneous i-cochain G^i -> M stored densely. Tuples are ordered
/// lexicographically with g1 the most significant digit; the module
/// coordinates of one value are contiguous.
class Cochain {
 public:
  /// The zero cochain.
  Cochain(ModulePtr coeffs, std::size_t degree);
  /// Values are reduced into the module; length must be |G|^degree * rank.
  Cochain(ModulePtr coeffs, std::size_t degree, std::vector<Residue> values);

  const ModulePtr& coeffs() const { return coeffs_; }
  const GroupPtr& group() const { return coeffs_->group(); }
  std::size_t degree() const { return degree_; }
  std::size_t rank() const { return coeffs_->rank(); }
  std::uint32_t modulus() const { return coeffs_->modulus(); }
  /// Number of argument tuples, |G|^degree.
  std::size_t tuples() const { return tuples_; }

  const std::vector<Residue>& values() const { return values_; }
  std::span<const Residue> at(std::size_t index) const { return {values_.data() + index * rank(), rank()}; }
  std::span<Residue> at(std::size_t index) { return {values_.data() + index * rank(), rank()}; }
  std::span<const Residue> operator()(std::span<const Element> args) const { return at(index_of(args)); }
  /// First coordinate; convenient for cyclic coefficients.
  Residue scalar(std::size_t index) const { return values_[index * rank()]; }

  std::size_t index_of(std::span<const Element> args) const;
  std::vector<Element> tuple_of(std::size_t index) const;

  bool is_zero() const;
  bool operator==(const Cochain& other) const;

  Cochain operator+(const Cochain& other) const;
  Cochain operator-(const Cochain& other) const;
  Cochain operator-() const;
  Cochain scaled(std::int64_t k) const;

 private:
  void require_compatible(const Cochain& other) const;

  ModulePtr coeffs_;
  std::size_t degree_;
  std::size_t tuples_;
  std::vector<Residue> values_;
};

/// Cochain with trivial Z/n coefficients.
Cochain trivial_cochain(const GroupPtr& g, std::uint32_t modulus, std::size_t degree, std::vector<Residue> values);

/// Uniformly random cochain.
Cochain random_cochain(const ModulePtr& coeffs, std::size_t degree, std::mt19937_64& rng);

/// df(g1..g_{i+1}) = g1.f(g2..) + sum_k (-1)^k f(..g_k g_{k+1}..) + (-1)^{i+1} f(g1..g_i).
/// Throws DegreeBound when the output degree exceeds max_degree; a cap
/// above the default prints a one-time cost warning.
Cochain differential(const Cochain& f, std::size_t max_degree = kDefaultMaxDegree);

/// Matrix of d: C^i -> C^{i+1} in ambient coordinates, where component j of
/// the module is embedded in Z/n by multiplication with n/n_j.
MatrixZn differential_matrix(const GModule& coeffs, std::size_t degree, std::size_t max_degree = kDefaultMaxDegree);

/// Ambient coordinates of a cochain (see differential_matrix).
VectorZn ambient_vector(const Cochain& f);

/// (rho^* f)(g1..gi) = f(rho g1..rho gi), with the coefficient action pulled back.
Cochain pullback(const GroupHom& rho, const Cochain& f);

/// Same values over an equal module object; throws if the modules differ.
Cochain with_coeffs(const Cochain& f, const ModulePtr& coeffs);

/// True when f vanishes on every tuple containing the identity.
bool is_normalized(const Cochain& f);

}  // namespace arithcs
