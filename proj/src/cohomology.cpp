#include "arithcs/cohomology.hpp"

#include <mutex>
#include <string>

#include "arithcs/error.hpp"
#include "arithcs/smith.hpp"

namespace arithcs {
namespace {

// d_{degree} restricted to genuine cochains: columns scaled by n / n_j so the
// unknowns range over Z/n while the cochain values stay inside the module.
MatrixZn scaled_differential(const GModule& coeffs, std::size_t degree) {
  MatrixZn d = differential_matrix(coeffs, degree);
  const std::size_t r = coeffs.rank();
  const ModRing& ring = d.ring();
  for (std::size_t c = 0; c < d.cols(); ++c) {
    const Residue s = coeffs.module().embedding_scale(c % r);
    if (s == 1) continue;
    for (std::size_t row = 0; row < d.rows(); ++row) d(row, c) = ring.mul(d(row, c), s);
  }
  return d;
}

// Matrix whose column space is B^degree in ambient coordinates.
MatrixZn coboundary_matrix(const GModule& coeffs, std::size_t degree) {
  if (degree == 0) {
    std::size_t rows = coeffs.rank();
    return MatrixZn(coeffs.modulus(), rows, 0);
  }
  return scaled_differential(coeffs, degree - 1);
}

Cochain from_ambient(const ModulePtr& coeffs, std::size_t degree, std::span<const Residue> v) {
  const std::size_t r = coeffs->rank();
  std::vector<Residue> values(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) values[i] = v[i] / coeffs->module().embedding_scale(i % r);
  return Cochain(coeffs, degree, std::move(values));
}

void require_module(const Cochain& f, const ModulePtr& coeffs, std::size_t degree) {
  if (f.degree() != degree || !same_module(f.coeffs(), coeffs)) {
    throw validation_error("IncompatibleCochains", "cochain does not match the degree or coefficients");
  }
}

}  // namespace

CohomologyGroup::CohomologyGroup(ModulePtr coeffs, std::size_t degree)
    : coeffs_(std::move(coeffs)), degree_(degree), change_(coeffs_->modulus(), 0, 0) {
  const std::uint32_t n = coeffs_->modulus();
  const ModRing ring(n);
  const std::size_t r = coeffs_->rank();

  const LinearSystem cycles(scaled_differential(*coeffs_, degree_));
  std::vector<VectorZn> z;
  for (const VectorZn& u : cycles.kernel_basis()) {
    VectorZn amb(u.size());
    bool zero = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
      amb[i] = ring.mul(u[i], coeffs_->module().embedding_scale(i % r));
      zero &= amb[i] == 0;
    }
    if (!zero) z.push_back(std::move(amb));
  }
  cycle_count_ = z.size();
  const MatrixZn b = coboundary_matrix(*coeffs_, degree_);
  const std::size_t len = b.rows();
  MatrixZn pres(n, len, cycle_count_ + b.cols());
  for (std::size_t a = 0; a < cycle_count_; ++a)
    for (std::size_t i = 0; i < len; ++i) pres(i, a) = z[a][i];
  for (std::size_t c = 0; c < b.cols(); ++c)
    for (std::size_t i = 0; i < len; ++i) pres(i, cycle_count_ + c) = b(i, c);
  presentation_ = std::make_shared<const LinearSystem>(pres);
  if (cycle_count_ == 0) return;

  std::vector<VectorZn> rels;
  for (const VectorZn& k : presentation_->kernel_basis()) {
    VectorZn lam(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(cycle_count_));
    bool zero = true;
    for (Residue x : lam) zero &= x == 0;
    if (!zero) rels.push_back(std::move(lam));
  }
  if (rels.empty()) rels.emplace_back(cycle_count_, 0);
  MatrixZn rel(n, rels.size(), cycle_count_);
  for (std::size_t i = 0; i < rels.size(); ++i)
    for (std::size_t a = 0; a < cycle_count_; ++a) rel(i, a) = rels[i][a];
  const SmithFormZn smith = smith_normal_form(rel);
  change_ = smith.v;

  for (std::size_t k = 0; k < cycle_count_; ++k) {
    const Residue d = k < smith.d.rows() ? smith.d(k, k) : 0;
    const std::uint32_t factor = d == 0 ? n : d;
    if (factor == 1) continue;
    factors_.push_back(factor);
    factor_index_.push_back(k);
    VectorZn amb(len, 0);
    for (std::size_t a = 0; a < cycle_count_; ++a) {
      const Residue c = smith.v_inverse(k, a);
      if (c == 0) continue;
      for (std::size_t i = 0; i < len; ++i) amb[i] = ring.add(amb[i], ring.mul(c, z[a][i]));
    }
    generators_.push_back(from_ambient(coeffs_, degree_, amb));
  }
}

std::uint64_t CohomologyGroup::order() const {
  std::uint64_t o = 1;
  for (std::uint32_t d : factors_) o *= d;
  return o;
}

VectorZn CohomologyGroup::coordinates(const Cochain& f) const {
  require_module(f, coeffs_, degree_);
  if (auto w = cocycle_witness(f)) {
    throw validation_error("NotACocycle", "cochain is not a cocycle",
                           std::vector<std::uint64_t>(w->begin(), w->end()));
  }
  VectorZn coords(factors_.size(), 0);
  if (factors_.empty()) return coords;
  const auto x = presentation_->solve(ambient_vector(f));
  if (!x) throw computation_error("Internal", "cocycle outside the span of the cycle basis");
  const ModRing ring(coeffs_->modulus());
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    Residue y = 0;
    for (std::size_t a = 0; a < cycle_count_; ++a) y = ring.add(y, ring.mul((*x)[a], change_(a, factor_index_[j])));
    coords[j] = y % factors_[j];
  }
  return coords;
}

Cochain CohomologyGroup::element(std::span<const Residue> coords) const {
  if (coords.size() != generators_.size()) throw validation_error("ShapeMismatch", "wrong number of coordinates");
  Cochain out(coeffs_, degree_);
  for (std::size_t j = 0; j < coords.size(); ++j) out = out + generators_[j].scaled(coords[j]);
  return out;
}

CohomologyGroup cohomology(const ModulePtr& coeffs, std::size_t degree, std::size_t max_degree) {
  if (degree > max_degree) {
    throw validation_error("DegreeBound", "cohomology degree " + std::to_string(degree) + " exceeds the cap " +
                                              std::to_string(max_degree));
  }
  return CohomologyGroup(coeffs, degree);
}

std::optional<std::vector<Element>> cocycle_witness(const Cochain& f) {
  const Cochain df = differential(f);
  for (std::size_t t = 0; t < df.tuples(); ++t) {
    for (Residue v : df.at(t))
      if (v != 0) return df.tuple_of(t);
  }
  return std::nullopt;
}

struct Classifier::Lazy {
  std::once_flag once;
  std::unique_ptr<CohomologyGroup> group;
};

Classifier::Classifier(ModulePtr coeffs, std::size_t degree, std::span<const std::size_t> variable_order)
    : coeffs_(std::move(coeffs)), degree_(degree), lazy_(std::make_shared<Lazy>()) {
  system_ = std::make_shared<const LinearSystem>(coboundary_matrix(*coeffs_, degree_), variable_order);
}

std::size_t Classifier::unknowns() const { return system_->unknowns(); }

std::optional<Cochain> Classifier::preimage(const Cochain& f) const {
  require_module(f, coeffs_, degree_);
  if (degree_ == 0) return std::nullopt;
  auto u = system_->solve(ambient_vector(f));
  if (!u) return std::nullopt;
  return Cochain(f.coeffs(), degree_ - 1, std::move(*u));
}

Classification Classifier::classify(const Cochain& f) const {
  require_module(f, coeffs_, degree_);
  if (auto w = cocycle_witness(f)) return NonCocycle{std::move(*w)};
  if (degree_ == 0) {
    if (f.is_zero()) return Coboundary{std::nullopt};
  } else if (auto beta = preimage(f)) {
    return Coboundary{std::move(*beta)};
  }
  return NontrivialClass{cohomology().coordinates(f)};
}

const CohomologyGroup& Classifier::cohomology() const {
  std::call_once(lazy_->once, [this] { lazy_->group = std::make_unique<CohomologyGroup>(coeffs_, degree_); });
  return *lazy_->group;
}

Classification classify(const Cochain& f) { return Classifier(f.coeffs(), f.degree()).classify(f); }

std::optional<Cochain> solve_coboundary(const Cochain& f) {
  if (f.degree() == 0) return std::nullopt;
  return Classifier(f.coeffs(), f.degree()).preimage(f);
}

bool is_cocycle(const Cochain& f) { return !cocycle_witness(f).has_value(); }

bool is_coboundary(const Cochain& f) {
  if (f.degree() == 0) return f.is_zero();
  return solve_coboundary(f).has_value();
}

}  // namespace arithcs
