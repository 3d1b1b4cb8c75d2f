#include "arithcs/structured.hpp"

#include <string>

#include "arithcs/error.hpp"

namespace arithcs {
namespace {

bool is_cyclic_module(const GModule& m) { return m.rank() == 1 && m.module().order(0) == m.modulus(); }

}  // namespace

Cochain cup(const Cochain& x, const Cochain& y) {
  if (!same_group(x.group(), y.group())) throw validation_error("IncompatiblePairing", "cochains live on different groups");
  const GModule& mx = *x.coeffs();
  const GModule& my = *y.coeffs();
  if (mx.rank() != 1 || my.rank() != 1 || mx.modulus() != my.modulus() ||
      mx.module().order(0) != my.module().order(0)) {
    throw validation_error("IncompatiblePairing", "cup product needs cyclic coefficients of one common order");
  }
  const GroupPtr& g = x.group();
  const std::uint32_t order = mx.module().order(0);
  ModulePtr coeffs;
  if (mx.is_trivial() && my.is_trivial()) {
    coeffs = x.coeffs();
  } else {
    std::vector<std::vector<Residue>> act(g->order());
    for (Element e = 0; e < g->order(); ++e) {
      act[e] = {static_cast<Residue>(std::uint64_t{mx.coefficient(e, 0, 0)} * my.coefficient(e, 0, 0) % order)};
    }
    coeffs = std::make_shared<const GModule>(g, mx.module(), std::move(act));
  }
  const std::size_t p = x.degree(), q = y.degree();
  Cochain out(coeffs, p + q);
  const std::size_t m = g->order();
  for (std::size_t ix = 0; ix < x.tuples(); ++ix) {
    // Product g1...gp of the front face.
    Element prod = 0;
    std::size_t rest = ix, place = x.tuples();
    for (std::size_t i = 0; i < p; ++i) {
      place /= m;
      prod = g->mul(prod, static_cast<Element>(rest / place));
      rest %= place;
    }
    const std::uint64_t xv = x.scalar(ix);
    const std::uint64_t s = my.coefficient(prod, 0, 0);
    for (std::size_t iy = 0; iy < y.tuples(); ++iy) {
      out.at(ix * y.tuples() + iy)[0] = static_cast<Residue>(xv * (s * y.scalar(iy) % order) % order);
    }
  }
  return out;
}

Cochain bockstein(const Cochain& f) {
  const GModule& mod = *f.coeffs();
  if (!is_cyclic_module(mod) || !mod.is_trivial()) {
    throw validation_error("UnsupportedCoefficients", "the Bockstein map needs trivial cyclic coefficients");
  }
  const std::int64_t n = mod.modulus(), n2 = n * n;
  const FiniteGroup& g = *f.group();
  const std::size_t deg = f.degree(), m = g.order();
  if (deg + 1 > kDefaultMaxDegree) throw validation_error("DegreeBound", "Bockstein output degree too large");
  Cochain out(f.coeffs(), deg + 1);
  const std::size_t inner = f.tuples();
  std::vector<std::size_t> pow(deg + 2, 1);
  for (std::size_t i = 1; i < pow.size(); ++i) pow[i] = pow[i - 1] * m;
  for (std::size_t t = 0; t < out.tuples(); ++t) {
    // Integer differential of the lift, trivial action.
    std::int64_t acc = f.scalar(t % inner);
    for (std::size_t i = 1; i <= deg; ++i) {
      const std::size_t prefix = t / pow[deg + 2 - i];
      const std::size_t suffix = t % pow[deg - i];
      const Element a = static_cast<Element>((t / pow[deg + 1 - i]) % m);
      const Element b = static_cast<Element>((t / pow[deg - i]) % m);
      const std::size_t idx = (prefix * m + g.mul(a, b)) * pow[deg - i] + suffix;
      acc += (i % 2 == 1 ? -1 : 1) * static_cast<std::int64_t>(f.scalar(idx));
    }
    acc += ((deg + 1) % 2 == 1 ? -1 : 1) * static_cast<std::int64_t>(f.scalar(t / m));
    const std::int64_t v = floor_mod(acc, n2);
    if (v % n != 0) {
      const auto w = out.tuple_of(t);
      throw computation_error("NotDivisible", "d(s o f) is not divisible by n; input is not a cocycle",
                              std::vector<std::uint64_t>(w.begin(), w.end()));
    }
    out.at(t)[0] = static_cast<Residue>(v / n);
  }
  return out;
}

Cochain conjugate(const Cochain& f, Element a) {
  const FiniteGroup& g = *f.group();
  if (a >= g.order()) throw validation_error("InvalidElement", "element out of range", {a});
  const GModule& mod = *f.coeffs();
  const Element ainv = g.inverse(a);
  const std::size_t m = g.order(), deg = f.degree();
  Cochain out(f.coeffs(), deg);
  for (std::size_t t = 0; t < out.tuples(); ++t) {
    std::size_t rest = t, idx = 0, place = 1;
    for (std::size_t i = 0; i < deg; ++i) {
      idx += g.conjugate(a, static_cast<Element>(rest % m)) * place;
      rest /= m;
      place *= m;
    }
    mod.act(ainv, f.at(idx), out.at(t));
  }
  return out;
}

std::vector<std::size_t> ShufflePath::heights() const {
  std::vector<std::size_t> h;
  std::size_t t = 0;
  for (bool step : horizontal) {
    h.push_back(t);
    if (!step) ++t;
  }
  return h;
}

std::size_t ShufflePath::squares_above() const {
  std::size_t s = 0;
  const auto h = heights();
  for (std::size_t l = 0; l < horizontal.size(); ++l)
    if (horizontal[l]) s += k - h[l];
  return s;
}

bool ShufflePath::shuffle_parity() const {
  // The permutation listing vertical step positions first, then horizontal ones.
  std::vector<std::size_t> perm;
  for (std::size_t l = 0; l < horizontal.size(); ++l)
    if (!horizontal[l]) perm.push_back(l);
  for (std::size_t l = 0; l < horizontal.size(); ++l)
    if (horizontal[l]) perm.push_back(l);
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
  return inversions % 2 == 1;
}

std::vector<ShufflePath> shuffle_paths(std::size_t n, std::size_t k) {
  std::vector<ShufflePath> out;
  ShufflePath cur{n, k, {}};
  auto rec = [&](auto&& self, std::size_t h, std::size_t v) -> void {
    if (h == n && v == k) {
      out.push_back(cur);
      return;
    }
    if (h < n) {
      cur.horizontal.push_back(true);
      self(self, h + 1, v);
      cur.horizontal.pop_back();
    }
    if (v < k) {
      cur.horizontal.push_back(false);
      self(self, h, v + 1);
      cur.horizontal.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Element> path_arguments(const FiniteGroup& g, const ShufflePath& path, std::span<const Element> a,
                                    std::span<const Element> x) {
  const std::size_t k = path.k;
  if (a.size() != k || x.size() != path.n) throw validation_error("ShapeMismatch", "path does not match a and x");
  // conj[t] = a_{k-t+1} ... a_k in 1-based numbering; conj[0] = 1.
  std::vector<Element> conj(k + 1, 0);
  for (std::size_t t = 1; t <= k; ++t) conj[t] = g.mul(a[k - t], conj[t - 1]);
  std::vector<Element> out;
  std::size_t s = 0, t = 0;
  for (bool step : path.horizontal) {
    if (step) {
      out.push_back(g.conjugate(conj[t], x[s++]));
    } else {
      out.push_back(g.inverse(a[k - t - 1]));
      ++t;
    }
  }
  return out;
}

Cochain homotopy(std::span<const Element> a, const Cochain& f) {
  const FiniteGroup& g = *f.group();
  const std::size_t k = a.size();
  for (Element e : a)
    if (e >= g.order()) throw validation_error("InvalidElement", "element out of range", {e});
  if (f.degree() < k) {
    throw validation_error("DegreeBound", "homotopy needs deg f >= number of elements (" + std::to_string(k) + ")");
  }
  const std::size_t n = f.degree() - k, m = g.order(), r = f.rank();
  const auto paths = shuffle_paths(n, k);
  Cochain out(f.coeffs(), n);
  std::vector<std::int64_t> acc(r);
  for (std::size_t t = 0; t < out.tuples(); ++t) {
    const auto x = out.tuple_of(t);
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& path : paths) {
      const auto args = path_arguments(g, path, a, x);
      std::size_t idx = 0;
      for (Element e : args) idx = idx * m + e;
      const std::int64_t sgn = path.sign();
      const auto v = f.at(idx);
      for (std::size_t j = 0; j < r; ++j) acc[j] += sgn * v[j];
    }
    auto o = out.at(t);
    for (std::size_t j = 0; j < r; ++j) o[j] = static_cast<Residue>(floor_mod(acc[j], f.coeffs()->module().order(j)));
  }
  return out;
}

Cochain identity_character(std::uint32_t n) {
  std::vector<Residue> v(n);
  for (std::uint32_t i = 0; i < n; ++i) v[i] = i;
  return trivial_cochain(cyclic_group(n), n, 1, std::move(v));
}

Cochain character(const GroupHom& f) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.cod()->order());
  if (!same_group(f.cod(), cyclic_group(n))) {
    throw validation_error("NotCyclic", "character target must be the standard cyclic group");
  }
  return trivial_cochain(f.dom(), n, 1, std::vector<Residue>(f.map().begin(), f.map().end()));
}

Cochain alpha_cup_bockstein(std::uint32_t n) {
  const Cochain alpha = identity_character(n);
  return cup(alpha, bockstein(alpha));
}

}  // namespace arithcs
