#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "arithcs/modring.hpp"

namespace arithcs {

using Element = std::uint32_t;

/// A finite group given by its full multiplication table. Element 0 is the
/// identity; every other index is just a label.
class FiniteGroup {
 public:
  /// Validates the table. Throws NotAGroup carrying a witness: a triple
  /// (a, b, c) for associativity, a single element for inverse or identity
  /// failures.
  static FiniteGroup from_table(const std::vector<std::vector<Element>>& table);

  std::size_t order() const { return order_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  static constexpr Element identity() { return 0; }
  /// a x a^-1.
  Element conjugate(Element a, Element x) const { return mul(mul(a, x), inverse(a)); }
  std::size_t element_order(Element a) const;
  bool is_abelian() const;
  std::vector<std::vector<Element>> table() const;

  bool operator==(const FiniteGroup& other) const { return table_ == other.table_; }

 private:
  FiniteGroup() = default;
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(const std::vector<std::vector<Element>>& table);
bool same_group(const GroupPtr& a, const GroupPtr& b);

/// Z/n with element k standing for k mod n.
GroupPtr cyclic_group(std::uint32_t n);
/// Pairs (g, h) indexed g * |H| + h.
GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h);
/// Permutations of {0..k-1} in lexicographic order, composed as (st)(i) = s(t(i)).
GroupPtr symmetric_group(std::uint32_t k);
/// Dihedral group of order 2m; index i + m*j stands for r^i s^j.
GroupPtr dihedral_group(std::uint32_t m);
/// Quaternion group in the order 1, -1, i, -i, j, -j, k, -k.
GroupPtr quaternion_group();
/// Z/m semidirect Z/4, the generator a acting by inversion; x^i a^j sits at index
/// i + m*j. For m = 3 this is the dicyclic group of order 12.
GroupPtr inversion_semidirect_z4(std::uint32_t m);

/// A homomorphism given by the image of every element of the domain.
class GroupHom {
 public:
  /// Throws NotAHom with a witness pair (g, h) where map(gh) != map(g)map(h).
  GroupHom(GroupPtr dom, GroupPtr cod, std::vector<Element> map);

  const GroupPtr& dom() const { return dom_; }
  const GroupPtr& cod() const { return cod_; }
  Element operator()(Element g) const { return map_[g]; }
  const std::vector<Element>& map() const { return map_; }

  bool is_injective() const;
  /// (*this) o inner.
  GroupHom after(const GroupHom& inner) const;

  bool operator==(const GroupHom& other) const {
    return same_group(dom_, other.dom_) && same_group(cod_, other.cod_) && map_ == other.map_;
  }

 private:
  GroupPtr dom_;
  GroupPtr cod_;
  std::vector<Element> map_;
};

inline GroupHom make_hom(GroupPtr dom, GroupPtr cod, std::vector<Element> map) {
  return GroupHom(std::move(dom), std::move(cod), std::move(map));
}
GroupHom identity_hom(const GroupPtr& g);
GroupHom trivial_hom(const GroupPtr& dom, const GroupPtr& cod);
/// x -> a x a^-1.
GroupHom conjugation_hom(const GroupPtr& g, Element a);

/// Every hom dom -> cod, by extending images of a generating set; ordered
/// lexicographically by the generator images.
std::vector<GroupHom> all_homs(const GroupPtr& dom, const GroupPtr& cod);
/// Greedy generating set: repeatedly add the smallest element not yet generated.
std::vector<Element> generating_set(const FiniteGroup& g);
/// Subgroup generated by the given elements, sorted.
std::vector<Element> generated_subgroup(const FiniteGroup& g, std::span<const Element> gens);

bool is_subgroup(const FiniteGroup& g, std::span<const Element> elements);
bool is_normal_subgroup(const FiniteGroup& g, std::span<const Element> elements);

struct Quotient {
  GroupPtr group;
  GroupHom projection;
};
/// G/N with cosets ordered by their smallest element; throws unless N is normal.
Quotient quotient_group(const GroupPtr& g, std::span<const Element> normal_subgroup);

/// A module over Z/n with a left action of a finite group. Each action(g)
/// is an r x r matrix acting on coordinate tuples: y_j = sum_k A_jk x_k mod n_j.
class GModule {
 public:
  GModule(GroupPtr group, ModuleOverZn module, std::vector<std::vector<Residue>> action);

  static std::shared_ptr<const GModule> trivial(GroupPtr group, ModuleOverZn module);
  static std::shared_ptr<const GModule> trivial(GroupPtr group, std::uint32_t modulus) {
    return trivial(std::move(group), ModuleOverZn::cyclic(modulus));
  }
  /// Rank-one Z/n on which g acts as multiplication by scalars[g].
  static std::shared_ptr<const GModule> scalar(GroupPtr group, std::uint32_t modulus, std::vector<Residue> scalars);

  const GroupPtr& group() const { return group_; }
  const ModuleOverZn& module() const { return module_; }
  std::uint32_t modulus() const { return module_.modulus(); }
  std::size_t rank() const { return module_.rank(); }
  bool is_trivial() const { return trivial_; }
  /// Action coefficient A_jk of element g.
  Residue coefficient(Element g, std::size_t j, std::size_t k) const { return action_[g][j * rank() + k]; }
  const std::vector<std::vector<Residue>>& action() const { return action_; }

  /// out = g . x (spans of length rank()).
  void act(Element g, std::span<const Residue> x, std::span<Residue> out) const;

  /// Coefficients for the domain of `rho`, acting through rho.
  std::shared_ptr<const GModule> pullback(const GroupHom& rho) const;

  bool operator==(const GModule& other) const {
    return same_group(group_, other.group_) && module_ == other.module_ && action_ == other.action_;
  }

 private:
  GroupPtr group_;
  ModuleOverZn module_;
  std::vector<std::vector<Residue>> action_;
  bool trivial_ = true;
};

using ModulePtr = std::shared_ptr<const GModule>;
bool same_module(const ModulePtr& a, const ModulePtr& b);

}  // namespace arithcs
