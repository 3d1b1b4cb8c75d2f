#include "arithcs/group.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "arithcs/error.hpp"

namespace arithcs {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Element>>& table) {
  const std::size_t m = table.size();
  if (m == 0) throw validation_error("NotAGroup", "empty multiplication table");
  FiniteGroup g;
  g.order_ = m;
  g.table_.reserve(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    if (table[a].size() != m) {
      throw validation_error("NotAGroup", "table row " + std::to_string(a) + " has wrong length", {a});
    }
    for (std::size_t b = 0; b < m; ++b) {
      if (table[a][b] >= m) {
        throw validation_error("NotAGroup", "table entry out of range", {a, b});
      }
      g.table_.push_back(table[a][b]);
    }
  }
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < m; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          throw validation_error("NotAGroup", "multiplication is not associative", {a, b, c});
        }
      }
    }
  }
  g.inverse_.assign(m, 0);
  for (Element a = 0; a < m; ++a) {
    bool found = false;
    for (Element b = 0; b < m && !found; ++b) {
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inverse_[a] = b;
        found = true;
      }
    }
    if (!found) {
      throw validation_error("NotAGroup", "element " + std::to_string(a) + " has no inverse", {a});
    }
  }
  for (Element a = 0; a < m; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) {
      throw validation_error("NotAGroup", "element 0 is not a two-sided identity", {a});
    }
  }
  return g;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> out(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    out[a].assign(table_.begin() + a * order_, table_.begin() + (a + 1) * order_);
  }
  return out;
}

GroupPtr make_group(const std::vector<std::vector<Element>>& table) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(table));
}

bool same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

GroupPtr cyclic_group(std::uint32_t n) {
  if (n == 0) throw validation_error("NotAGroup", "cyclic group of order 0");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return make_group(t);
}

GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h) {
  const std::size_t m = g->order(), k = h->order();
  std::vector<std::vector<Element>> t(m * k, std::vector<Element>(m * k));
  for (Element x = 0; x < m * k; ++x) {
    for (Element y = 0; y < m * k; ++y) {
      t[x][y] = static_cast<Element>(g->mul(x / k, y / k) * k + h->mul(x % k, y % k));
    }
  }
  return make_group(t);
}

GroupPtr symmetric_group(std::uint32_t k) {
  if (k == 0 || k > 6) throw validation_error("NotAGroup", "symmetric group degree must be in 1..6");
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(k);
  std::iota(p.begin(), p.end(), 0u);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const std::size_t m = perms.size();
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  std::vector<std::uint32_t> c(k);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::uint32_t i = 0; i < k; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return make_group(t);
}

GroupPtr dihedral_group(std::uint32_t m) {
  if (m == 0) throw validation_error("NotAGroup", "dihedral group needs m >= 1");
  const std::uint32_t size = 2 * m;
  std::vector<std::vector<Element>> t(size, std::vector<Element>(size));
  for (Element x = 0; x < size; ++x) {
    const std::uint32_t i = x % m, j = x / m;
    for (Element y = 0; y < size; ++y) {
      const std::uint32_t k = y % m, l = y / m;
      // r^i s^j r^k s^l = r^(i +- k) s^(j+l)
      const std::uint32_t rot = j == 0 ? (i + k) % m : (i + m - k) % m;
      t[x][y] = rot + m * ((j + l) % 2);
    }
  }
  return make_group(t);
}

GroupPtr inversion_semidirect_z4(std::uint32_t m) {
  if (m == 0) throw validation_error("NotAGroup", "semidirect product needs m >= 1");
  const std::uint32_t size = 4 * m;
  std::vector<std::vector<Element>> t(size, std::vector<Element>(size));
  for (Element x = 0; x < size; ++x) {
    const std::uint32_t i = x % m, j = x / m;
    for (Element y = 0; y < size; ++y) {
      const std::uint32_t k = y % m, l = y / m;
      // x^i a^j x^k a^l = x^(i +- k) a^(j+l)
      const std::uint32_t rot = j % 2 == 0 ? (i + k) % m : (i + m - k) % m;
      t[x][y] = rot + m * ((j + l) % 4);
    }
  }
  return make_group(t);
}

GroupPtr quaternion_group() {
  // Unit quaternions +-1, +-i, +-j, +-k; basis products with signs.
  static constexpr std::array<std::array<int, 4>, 4> basis = {{
      {{0, 1, 2, 3}}, {{1, 0, 3, 2}}, {{2, 3, 0, 1}}, {{3, 2, 1, 0}}}};
  static constexpr std::array<std::array<int, 4>, 4> sign = {{
      {{1, 1, 1, 1}}, {{1, -1, 1, -1}}, {{1, -1, -1, 1}}, {{1, 1, -1, -1}}}};
  std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
  for (Element x = 0; x < 8; ++x) {
    for (Element y = 0; y < 8; ++y) {
      const int bx = x / 2, by = y / 2;
      int s = (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1) * sign[bx][by];
      t[x][y] = static_cast<Element>(2 * basis[bx][by] + (s < 0 ? 1 : 0));
    }
  }
  return make_group(t);
}

GroupHom::GroupHom(GroupPtr dom, GroupPtr cod, std::vector<Element> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
  const std::size_t m = dom_->order();
  if (map_.size() != m) throw validation_error("NotAHom", "map has wrong length");
  for (Element g = 0; g < m; ++g) {
    if (map_[g] >= cod_->order()) throw validation_error("NotAHom", "image out of range", {g});
  }
  for (Element g = 0; g < m; ++g) {
    for (Element h = 0; h < m; ++h) {
      if (map_[dom_->mul(g, h)] != cod_->mul(map_[g], map_[h])) {
        throw validation_error("NotAHom", "map does not respect multiplication", {g, h});
      }
    }
  }
}

bool GroupHom::is_injective() const {
  std::vector<bool> seen(cod_->order(), false);
  for (Element x : map_) {
    if (seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

GroupHom GroupHom::after(const GroupHom& inner) const {
  if (!same_group(inner.cod(), dom_)) throw validation_error("NotAHom", "composition of mismatched homs");
  std::vector<Element> m(inner.dom()->order());
  for (Element g = 0; g < m.size(); ++g) m[g] = map_[inner(g)];
  return GroupHom(inner.dom(), cod_, std::move(m));
}

GroupHom identity_hom(const GroupPtr& g) {
  std::vector<Element> m(g->order());
  std::iota(m.begin(), m.end(), 0u);
  return GroupHom(g, g, std::move(m));
}

GroupHom trivial_hom(const GroupPtr& dom, const GroupPtr& cod) {
  return GroupHom(dom, cod, std::vector<Element>(dom->order(), 0));
}

GroupHom conjugation_hom(const GroupPtr& g, Element a) {
  std::vector<Element> m(g->order());
  for (Element x = 0; x < m.size(); ++x) m[x] = g->conjugate(a, x);
  return GroupHom(g, g, std::move(m));
}

std::vector<Element> generated_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> queue = {FiniteGroup::identity()};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element x : gens) {
      const Element y = g.mul(queue[i], x);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<Element> generating_set(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<Element> current = {FiniteGroup::identity()};
  while (current.size() < g.order()) {
    Element x = 0;
    while (std::binary_search(current.begin(), current.end(), x)) ++x;
    gens.push_back(x);
    current = generated_subgroup(g, gens);
  }
  return gens;
}

std::vector<GroupHom> all_homs(const GroupPtr& dom, const GroupPtr& cod) {
  const std::vector<Element> gens = generating_set(*dom);
  std::vector<Element> images(gens.size(), 0);
  std::vector<GroupHom> out;
  constexpr Element kUnset = ~Element{0};
  while (true) {
    // Extend along right multiplication by generators; any clash means no hom.
    std::vector<Element> map(dom->order(), kUnset);
    map[0] = FiniteGroup::identity();
    std::vector<Element> queue = {0};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const Element y = dom->mul(queue[i], gens[k]);
        const Element v = cod->mul(map[queue[i]], images[k]);
        if (map[y] == kUnset) {
          map[y] = v;
          queue.push_back(y);
        } else if (map[y] != v) {
          ok = false;
          break;
        }
      }
    }
    // Consistency on every edge g -> g*s already forces multiplicativity.
    if (ok) out.emplace_back(dom, cod, std::move(map));
    std::size_t k = images.size();
    while (k > 0 && ++images[k - 1] == cod->order()) images[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

bool is_subgroup(const FiniteGroup& g, std::span<const Element> elements) {
  std::vector<bool> in(g.order(), false);
  for (Element x : elements) {
    if (x >= g.order()) return false;
    in[x] = true;
  }
  if (!in[0]) return false;
  for (Element x : elements)
    for (Element y : elements)
      if (!in[g.mul(x, g.inverse(y))]) return false;
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, std::span<const Element> elements) {
  if (!is_subgroup(g, elements)) return false;
  std::vector<bool> in(g.order(), false);
  for (Element x : elements) in[x] = true;
  for (Element a = 0; a < g.order(); ++a)
    for (Element x : elements)
      if (!in[g.conjugate(a, x)]) return false;
  return true;
}

Quotient quotient_group(const GroupPtr& g, std::span<const Element> normal_subgroup) {
  if (!is_normal_subgroup(*g, normal_subgroup)) {
    throw validation_error("NotNormal", "subgroup is not normal");
  }
  const std::size_t m = g->order();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> coset(m, kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < m; ++x) {
    if (coset[x] != kUnset) continue;
    const auto c = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element h : normal_subgroup) coset[g->mul(x, h)] = c;
  }
  const std::size_t q = reps.size();
  std::vector<std::vector<Element>> t(q, std::vector<Element>(q));
  for (Element a = 0; a < q; ++a)
    for (Element b = 0; b < q; ++b) t[a][b] = coset[g->mul(reps[a], reps[b])];
  GroupPtr qg = make_group(t);
  return Quotient{qg, GroupHom(g, qg, coset)};
}

GModule::GModule(GroupPtr group, ModuleOverZn module, std::vector<std::vector<Residue>> action)
    : group_(std::move(group)), module_(std::move(module)), action_(std::move(action)) {
  const std::size_t m = group_->order(), r = module_.rank();
  if (action_.size() != m) throw validation_error("NotAModule", "need one action matrix per group element");
  for (Element g = 0; g < m; ++g) {
    if (action_[g].size() != r * r) throw validation_error("NotAModule", "action matrix has wrong size", {g});
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        Residue& a = action_[g][j * r + k];
        a %= module_.order(j);
        if ((static_cast<std::uint64_t>(a) * module_.order(k)) % module_.order(j) != 0) {
          throw validation_error("NotAModule", "action coefficient is not well defined", {g, j, k});
        }
        if (a != (j == k ? 1 % module_.order(j) : 0)) trivial_ = false;
      }
    }
  }
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t k = 0; k < r; ++k)
      if (action_[0][j * r + k] != (j == k ? 1 % module_.order(j) : 0))
        throw validation_error("NotAModule", "identity does not act trivially", {0});
  for (Element g = 0; g < m; ++g) {
    for (Element h = 0; h < m; ++h) {
      const auto& a = action_[g];
      const auto& b = action_[h];
      const auto& c = action_[group_->mul(g, h)];
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < r; ++k) {
          std::uint64_t s = 0;
          for (std::size_t l = 0; l < r; ++l) s += static_cast<std::uint64_t>(a[j * r + l]) * b[l * r + k];
          if (s % module_.order(j) != c[j * r + k]) {
            throw validation_error("NotAModule", "action is not multiplicative", {g, h});
          }
        }
      }
    }
  }
}

ModulePtr GModule::trivial(GroupPtr group, ModuleOverZn module) {
  const std::size_t r = module.rank();
  std::vector<Residue> id(r * r, 0);
  for (std::size_t j = 0; j < r; ++j) id[j * r + j] = 1;
  std::vector<std::vector<Residue>> act(group->order(), id);
  return std::make_shared<const GModule>(std::move(group), std::move(module), std::move(act));
}

ModulePtr GModule::scalar(GroupPtr group, std::uint32_t modulus, std::vector<Residue> scalars) {
  std::vector<std::vector<Residue>> act;
  act.reserve(scalars.size());
  for (Residue s : scalars) act.push_back({s});
  return std::make_shared<const GModule>(std::move(group), ModuleOverZn::cyclic(modulus), std::move(act));
}

void GModule::act(Element g, std::span<const Residue> x, std::span<Residue> out) const {
  const std::size_t r = rank();
  if (trivial_) {
    std::copy(x.begin(), x.end(), out.begin());
    return;
  }
  const auto& a = action_[g];
  for (std::size_t j = 0; j < r; ++j) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < r; ++k) s += static_cast<std::uint64_t>(a[j * r + k]) * x[k];
    out[j] = static_cast<Residue>(s % module_.order(j));
  }
}

ModulePtr GModule::pullback(const GroupHom& rho) const {
  if (!same_group(rho.cod(), group_)) throw validation_error("NotAHom", "pullback along a hom with wrong codomain");
  std::vector<std::vector<Residue>> act(rho.dom()->order());
  for (Element g = 0; g < act.size(); ++g) act[g] = action_[rho(g)];
  return std::make_shared<const GModule>(rho.dom(), module_, std::move(act));
}

bool same_module(const ModulePtr& a, const ModulePtr& b) {
  if (a == b) return true;
  return a && b && *a == *b;
}

}  // namespace arithcs
