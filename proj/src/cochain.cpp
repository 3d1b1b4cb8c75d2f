#include "arithcs/cochain.hpp"

#include <atomic>
#include <iostream>
#include <string>

#include "arithcs/error.hpp"

namespace arithcs {
namespace {

constexpr std::size_t kMaxTableEntries = std::size_t{1} << 26;

std::size_t table_size(std::size_t order, std::size_t degree) {
  std::size_t t = 1;
  for (std::size_t i = 0; i < degree; ++i) {
    t *= order;
    if (t > kMaxTableEntries) throw validation_error("DegreeBound", "cochain table too large");
  }
  return t;
}

void check_degree(std::size_t out_degree, std::size_t max_degree) {
  if (out_degree > max_degree) {
    throw validation_error("DegreeBound", "output degree " + std::to_string(out_degree) +
                                              " exceeds the configured cap " + std::to_string(max_degree));
  }
  if (max_degree > kDefaultMaxDegree) {
    static std::atomic<bool> warned{false};
    if (!warned.exchange(true)) {
      std::cerr << "warning: differential degree cap raised to " << max_degree
                << "; table sizes grow as |G|^degree\n";
    }
  }
}

}  // namespace

Cochain::Cochain(ModulePtr coeffs, std::size_t degree)
    : coeffs_(std::move(coeffs)), degree_(degree) {
  tuples_ = table_size(group()->order(), degree_);
  values_.assign(tuples_ * rank(), 0);
}

Cochain::Cochain(ModulePtr coeffs, std::size_t degree, std::vector<Residue> values)
    : coeffs_(std::move(coeffs)), degree_(degree), values_(std::move(values)) {
  tuples_ = table_size(group()->order(), degree_);
  if (values_.size() != tuples_ * rank()) {
    throw validation_error("BadCochain", "expected " + std::to_string(tuples_ * rank()) + " values, got " +
                                             std::to_string(values_.size()));
  }
  const std::size_t r = rank();
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] %= coeffs_->module().order(i % r);
}

std::size_t Cochain::index_of(std::span<const Element> args) const {
  std::size_t idx = 0;
  const std::size_t m = group()->order();
  for (Element g : args) idx = idx * m + g;
  return idx;
}

std::vector<Element> Cochain::tuple_of(std::size_t index) const {
  std::vector<Element> out(degree_);
  const std::size_t m = group()->order();
  for (std::size_t i = degree_; i-- > 0;) {
    out[i] = static_cast<Element>(index % m);
    index /= m;
  }
  return out;
}

bool Cochain::is_zero() const {
  for (Residue v : values_)
    if (v != 0) return false;
  return true;
}

bool Cochain::operator==(const Cochain& other) const {
  return degree_ == other.degree_ && same_module(coeffs_, other.coeffs_) && values_ == other.values_;
}

void Cochain::require_compatible(const Cochain& other) const {
  if (degree_ != other.degree_ || !same_module(coeffs_, other.coeffs_)) {
    throw validation_error("IncompatibleCochains", "cochains differ in degree or coefficients");
  }
}

Cochain Cochain::operator+(const Cochain& other) const {
  require_compatible(other);
  Cochain out(*this);
  const std::size_t r = rank();
  for (std::size_t i = 0; i < values_.size(); ++i)
    out.values_[i] = (values_[i] + other.values_[i]) % coeffs_->module().order(i % r);
  return out;
}

Cochain Cochain::operator-(const Cochain& other) const { return *this + (-other); }

Cochain Cochain::operator-() const { return scaled(-1); }

Cochain Cochain::scaled(std::int64_t k) const {
  Cochain out(*this);
  const std::size_t r = rank();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const std::int64_t o = coeffs_->module().order(i % r);
    out.values_[i] = static_cast<Residue>(floor_mod(floor_mod(k, o) * values_[i], o));
  }
  return out;
}

Cochain trivial_cochain(const GroupPtr& g, std::uint32_t modulus, std::size_t degree, std::vector<Residue> values) {
  return Cochain(GModule::trivial(g, modulus), degree, std::move(values));
}

Cochain random_cochain(const ModulePtr& coeffs, std::size_t degree, std::mt19937_64& rng) {
  Cochain f(coeffs, degree);
  const std::size_t r = coeffs->rank();
  std::vector<Residue> v(f.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    std::uniform_int_distribution<Residue> dist(0, coeffs->module().order(i % r) - 1);
    v[i] = dist(rng);
  }
  return Cochain(coeffs, degree, std::move(v));
}

Cochain differential(const Cochain& f, std::size_t max_degree) {
  const std::size_t n = f.degree();
  check_degree(n + 1, max_degree);
  const GModule& mod = *f.coeffs();
  const FiniteGroup& g = *f.group();
  const std::size_t m = g.order(), r = mod.rank();
  Cochain out(f.coeffs(), n + 1);
  const std::size_t inner = f.tuples();  // |G|^n
  std::vector<Element> digits(n + 1);
  std::vector<std::int64_t> acc(r);
  std::vector<Residue> tmp(r);
  std::vector<std::size_t> pow(n + 2, 1);
  for (std::size_t i = 1; i < pow.size(); ++i) pow[i] = pow[i - 1] * m;

  for (std::size_t t = 0; t < out.tuples(); ++t) {
    std::size_t rest = t;
    for (std::size_t i = n + 1; i-- > 0;) {
      digits[i] = static_cast<Element>(rest % m);
      rest /= m;
    }
    // g1 . f(g2..g_{n+1})
    mod.act(digits[0], f.at(t % inner), tmp);
    for (std::size_t j = 0; j < r; ++j) acc[j] = tmp[j];
    // (-1)^i f(g1..g_i g_{i+1}..g_{n+1}), i = 1..n (digits are 0-based)
    for (std::size_t i = 1; i <= n; ++i) {
      // Index of the merged tuple: prefix digits[0..i-2], product, suffix digits[i+1..n].
      const std::size_t prefix = t / pow[n + 2 - i];
      const std::size_t suffix = t % pow[n - i];
      const Element prod = g.mul(digits[i - 1], digits[i]);
      const std::size_t idx = (prefix * m + prod) * pow[n - i] + suffix;
      const auto v = f.at(idx);
      for (std::size_t j = 0; j < r; ++j) acc[j] += (i % 2 == 1) ? -std::int64_t(v[j]) : std::int64_t(v[j]);
    }
    const auto last = f.at(t / m);
    for (std::size_t j = 0; j < r; ++j) acc[j] += ((n + 1) % 2 == 1) ? -std::int64_t(last[j]) : std::int64_t(last[j]);
    auto o = out.at(t);
    for (std::size_t j = 0; j < r; ++j) o[j] = static_cast<Residue>(floor_mod(acc[j], mod.module().order(j)));
  }
  return out;
}

MatrixZn differential_matrix(const GModule& coeffs, std::size_t degree, std::size_t max_degree) {
  check_degree(degree + 1, max_degree);
  const FiniteGroup& g = *coeffs.group();
  const ModuleOverZn& mod = coeffs.module();
  const std::uint32_t n = mod.modulus();
  const std::size_t m = g.order(), r = mod.rank();
  const std::size_t in_tuples = table_size(m, degree), out_tuples = table_size(m, degree + 1);
  MatrixZn d(n, out_tuples * r, in_tuples * r);
  const ModRing& ring = d.ring();
  std::vector<std::size_t> pow(degree + 2, 1);
  for (std::size_t i = 1; i < pow.size(); ++i) pow[i] = pow[i - 1] * m;
  const Residue minus_one = n - 1;

  for (std::size_t t = 0; t < out_tuples; ++t) {
    const Element g1 = static_cast<Element>(t / in_tuples);
    // Action term: ambient coefficient A_jk * n_k / n_j.
    const std::size_t src0 = t % in_tuples;
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        const std::uint64_t a = coeffs.coefficient(g1, j, k);
        if (a == 0) continue;
        const Residue c = ring.reduce(static_cast<std::int64_t>(a * mod.order(k) / mod.order(j)));
        d(t * r + j, src0 * r + k) = ring.add(d(t * r + j, src0 * r + k), c);
      }
    }
    for (std::size_t i = 1; i <= degree; ++i) {
      const std::size_t prefix = t / pow[degree + 2 - i];
      const std::size_t suffix = t % pow[degree - i];
      const Element a = static_cast<Element>((t / pow[degree + 1 - i]) % m);
      const Element b = static_cast<Element>((t / pow[degree - i]) % m);
      const std::size_t idx = (prefix * m + g.mul(a, b)) * pow[degree - i] + suffix;
      const Residue s = (i % 2 == 1) ? minus_one : 1;
      for (std::size_t j = 0; j < r; ++j) d(t * r + j, idx * r + j) = ring.add(d(t * r + j, idx * r + j), s);
    }
    const Residue s = ((degree + 1) % 2 == 1) ? minus_one : 1;
    const std::size_t idx = t / m;
    for (std::size_t j = 0; j < r; ++j) d(t * r + j, idx * r + j) = ring.add(d(t * r + j, idx * r + j), s);
  }
  return d;
}

VectorZn ambient_vector(const Cochain& f) {
  const ModuleOverZn& mod = f.coeffs()->module();
  const std::size_t r = mod.rank();
  VectorZn v(f.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.values()[i] * mod.embedding_scale(i % r);
  return v;
}

Cochain pullback(const GroupHom& rho, const Cochain& f) {
  if (!same_group(rho.cod(), f.group())) {
    throw validation_error("NotAHom", "pullback along a hom whose codomain is not the cochain's group");
  }
  ModulePtr coeffs = f.coeffs()->pullback(rho);
  Cochain out(coeffs, f.degree());
  const std::size_t m = rho.dom()->order(), mc = rho.cod()->order(), r = f.rank();
  for (std::size_t t = 0; t < out.tuples(); ++t) {
    std::size_t rest = t, idx = 0, place = 1;
    for (std::size_t i = 0; i < f.degree(); ++i) {
      idx += rho(static_cast<Element>(rest % m)) * place;
      rest /= m;
      place *= mc;
    }
    auto src = f.at(idx);
    auto dst = out.at(t);
    for (std::size_t j = 0; j < r; ++j) dst[j] = src[j];
  }
  return out;
}

Cochain with_coeffs(const Cochain& f, const ModulePtr& coeffs) {
  if (!same_module(f.coeffs(), coeffs)) {
    throw validation_error("IncompatibleCochains", "coefficient modules differ");
  }
  return Cochain(coeffs, f.degree(), f.values());
}

bool is_normalized(const Cochain& f) {
  for (std::size_t t = 0; t < f.tuples(); ++t) {
    bool has_identity = false;
    for (Element g : f.tuple_of(t)) has_identity |= (g == 0);
    if (!has_identity) continue;
    for (Residue v : f.at(t))
      if (v != 0) return false;
  }
  return true;
}

}  // namespace arithcs
