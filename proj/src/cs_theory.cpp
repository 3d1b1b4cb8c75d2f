#include "arithcs/cs_theory.hpp"

#include <mutex>
#include <numeric>
#include <random>
#include <sstream>

#include "arithcs/error.hpp"

namespace arithcs {

namespace {

bool is_trivial_cyclic(const GModule& m, std::uint32_t n) {
  return m.is_trivial() && m.rank() == 1 && m.module().order(0) == n && m.modulus() == n;
}

// Order of a class with coordinates y in Z/d1 + ... + Z/dk.
std::uint64_t class_order(const std::vector<std::uint32_t>& factors, const VectorZn& y) {
  std::uint64_t order = 1;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const std::uint64_t d = factors[j];
    order = std::lcm(order, d / std::gcd<std::uint64_t>(d, y[j] % d));
  }
  return order;
}

// k with y = k * gen coordinatewise, if any.
std::optional<std::uint32_t> multiple_of(const std::vector<std::uint32_t>& factors, const VectorZn& gen,
                                         const VectorZn& y, std::uint32_t n) {
  for (std::uint32_t k = 0; k < n; ++k) {
    bool ok = true;
    for (std::size_t j = 0; j < factors.size() && ok; ++j) {
      ok = (static_cast<std::uint64_t>(k) * gen[j]) % factors[j] == y[j] % factors[j];
    }
    if (ok) return k;
  }
  return std::nullopt;
}

InvariantValue scaled_invariant(std::uint32_t k, Residue normalization, std::uint32_t n) {
  return {n, static_cast<Residue>((static_cast<std::uint64_t>(k) * normalization) % n)};
}

InvariantValue invariant_of_coords(const CohomologyGroup& h2, const PlaceDatum& place, const VectorZn& y,
                                   std::uint32_t n) {
  const VectorZn gen = h2.coordinates(place.h2_generator);
  auto k = multiple_of(h2.invariant_factors(), gen, y, n);
  if (!k) {
    throw computation_error("NotInGeneratedSummand",
                            "class at place '" + place.name + "' is not a multiple of the declared generator");
  }
  return scaled_invariant(*k, place.inv_normalization, n);
}

void require_hom(const GroupHom& rho, const GroupPtr& dom, const GroupPtr& cod, const char* what) {
  if (!same_group(rho.dom(), dom) || !same_group(rho.cod(), cod)) {
    throw validation_error("IncompatibleHom", std::string(what) + " has the wrong domain or codomain");
  }
}

std::optional<Element> inertia_witness(const GroupHom& rho_v, const std::vector<Element>& inertia) {
  for (Element x : inertia) {
    if (rho_v(x) != FiniteGroup::identity()) return x;
  }
  return std::nullopt;
}

// rho_v read on G_v / I_v.
GroupHom descend(const Quotient& q, const GroupHom& rho_v) {
  std::vector<Element> map(q.group->order(), FiniteGroup::identity());
  for (Element g = 0; g < rho_v.dom()->order(); ++g) map[q.projection(g)] = rho_v(g);
  return GroupHom(q.group, rho_v.cod(), std::move(map));
}

InvariantValue add(InvariantValue a, InvariantValue b) {
  return {a.modulus, static_cast<Residue>((a.numerator + b.numerator) % a.modulus)};
}

}  // namespace

bool ValidationReport::passed() const { return first_failure() == nullptr; }

const ValidationCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::vector<std::size_t> seeded_permutation(std::size_t size, std::uint64_t seed) {
  std::vector<std::size_t> perm(size);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = size; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng() % i]);
  }
  return perm;
}

struct CsContext::Lazy {
  std::once_flag once;
  std::unique_ptr<Classifier> global;
};

CsContext::CsContext(GlobalDatum datum) : datum_(std::move(datum)), lazy_(std::make_shared<Lazy>()) {
  const std::uint32_t n = datum_.modulus;
  if (n < 2 || n > kMaxModulus) throw validation_error("BadModulus", "modulus out of range");
  if (!datum_.global_group || !datum_.gauge_group) throw validation_error("MissingGroup", "datum lacks a group");
  if (!same_group(datum_.cocycle.group(), datum_.gauge_group) || datum_.cocycle.degree() != 3 ||
      !is_trivial_cyclic(*datum_.cocycle.coeffs(), n)) {
    throw validation_error("BadCocycle", "c must be a 3-cochain on the gauge group with trivial Z/n coefficients");
  }
  global_coeffs_ = GModule::trivial(datum_.global_group, n);
  for (std::size_t v = 0; v < datum_.places.size(); ++v) {
    const PlaceDatum& p = datum_.places[v];
    if (!same_group(p.embedding.cod(), datum_.global_group)) {
      throw validation_error("BadEmbedding", "place '" + p.name + "' does not map into the global group", {v});
    }
    const GroupPtr& gv = p.local_group();
    if (!is_normal_subgroup(*gv, p.inertia)) {
      throw validation_error("BadInertia", "inertia at '" + p.name + "' is not a normal subgroup", {v});
    }
    if (!same_group(p.h2_generator.group(), gv) || p.h2_generator.degree() != 2 ||
        !is_trivial_cyclic(*p.h2_generator.coeffs(), n)) {
      throw validation_error("BadGenerator", "generator at '" + p.name + "' has the wrong shape", {v});
    }
    Place place{GModule::trivial(gv, n), nullptr, quotient_group(gv, p.inertia), false, nullptr, nullptr};
    place.h2 = std::make_shared<const CohomologyGroup>(place.coeffs, 2);
    const ModulePtr qcoeffs = GModule::trivial(place.quotient.group, n);
    place.quotient_acyclic = cohomology(qcoeffs, 2).is_trivial() && cohomology(qcoeffs, 3).is_trivial();
    place.degree3 = std::make_shared<const Classifier>(place.coeffs, 3);
    place.quotient_degree3 = std::make_shared<const Classifier>(qcoeffs, 3);
    places_.push_back(std::move(place));
  }
}

const Classifier& CsContext::global_classifier() const {
  std::call_once(lazy_->once, [this] { lazy_->global = std::make_unique<Classifier>(global_coeffs_, 3); });
  return *lazy_->global;
}

Classifier CsContext::global_classifier(std::uint64_t seed) const {
  const std::size_t m = datum_.global_group->order();
  return Classifier(global_coeffs_, 3, seeded_permutation(m * m, seed));
}

std::vector<GroupHom> CsContext::restrict_to_places(const GroupHom& rho) const {
  require_hom(rho, datum_.global_group, datum_.gauge_group, "rho");
  std::vector<GroupHom> out;
  out.reserve(datum_.places.size());
  for (const auto& p : datum_.places) out.push_back(rho.after(p.embedding));
  return out;
}

InvariantValue local_invariant(const CsContext& ctx, std::size_t place, const Cochain& x) {
  const PlaceDatum& p = ctx.place(place);
  if (!same_group(x.group(), p.local_group()) || x.degree() != 2 || !is_trivial_cyclic(*x.coeffs(), ctx.modulus())) {
    throw validation_error("IncompatibleCochains", "expected a 2-cocycle on the local group at '" + p.name + "'");
  }
  const CohomologyGroup& h2 = ctx.local_h2(place);
  return invariant_of_coords(h2, p, h2.coordinates(x), ctx.modulus());
}

InvariantValue local_invariant(const Cochain& x, const PlaceDatum& place, std::uint32_t modulus) {
  if (!same_group(x.group(), place.local_group()) || x.degree() != 2 || !is_trivial_cyclic(*x.coeffs(), modulus)) {
    throw validation_error("IncompatibleCochains", "expected a 2-cocycle on the local group at '" + place.name + "'");
  }
  const CohomologyGroup h2(GModule::trivial(place.local_group(), modulus), 2);
  return invariant_of_coords(h2, place, h2.coordinates(x), modulus);
}

InvariantValue pushout(const CsContext& ctx, const LocalClasses& classes) {
  if (classes.coords.size() != ctx.place_count()) {
    throw validation_error("IncompatibleTorsor", "one class per place expected");
  }
  InvariantValue total{ctx.modulus(), 0};
  for (std::size_t v = 0; v < ctx.place_count(); ++v) {
    total = add(total, invariant_of_coords(ctx.local_h2(v), ctx.place(v), classes.coords[v], ctx.modulus()));
  }
  return total;
}

Cochain unramified_trivialization(const CsContext& ctx, std::size_t place, const GroupHom& rho_v) {
  const PlaceDatum& p = ctx.place(place);
  require_hom(rho_v, p.local_group(), ctx.datum().gauge_group, "rho_v");
  if (auto x = inertia_witness(rho_v, p.inertia)) {
    throw computation_error("NotUnramifiedTrivializable", "rho is ramified at '" + p.name + "'", {place, *x});
  }
  if (!ctx.quotient_is_acyclic(place)) {
    throw computation_error("NotUnramifiedTrivializable",
                            "H^2 or H^3 of the unramified quotient at '" + p.name + "' is nonzero", {place});
  }
  const Quotient& q = ctx.unramified_quotient(place);
  const Cochain cbar = pullback(descend(q, rho_v), ctx.datum().cocycle);
  auto bbar = ctx.quotient_classifier(place).preimage(cbar);
  if (!bbar) {
    throw computation_error("NotUnramifiedTrivializable", "c o rho is not a coboundary at '" + p.name + "'", {place});
  }
  return pullback(q.projection, *bbar);
}

std::pair<Cochain, std::vector<Cochain>> fiber_differential(const CsContext& ctx, const Cochain& a,
                                                            const std::vector<Cochain>& b) {
  if (b.size() != ctx.place_count()) throw validation_error("IncompatibleTorsor", "one cochain per place expected");
  std::vector<Cochain> locals;
  locals.reserve(b.size());
  for (std::size_t v = 0; v < b.size(); ++v) {
    locals.push_back(pullback(ctx.place(v).embedding, a) - differential(b[v]));
  }
  return {differential(a), std::move(locals)};
}

InvariantValue cs_invariant(const CsContext& ctx, const GroupHom& rho, const CsOptions& options) {
  const auto rho_s = ctx.restrict_to_places(rho);
  const Cochain c_rho = pullback(rho, ctx.datum().cocycle);
  std::vector<Cochain> b;
  b.reserve(rho_s.size());
  for (std::size_t v = 0; v < rho_s.size(); ++v) b.push_back(unramified_trivialization(ctx, v, rho_s[v]));

  // (c o rho, (b_v)) must be a cocycle of the mapping fiber.
  const auto [dc, mismatch] = fiber_differential(ctx, c_rho, b);
  for (std::size_t v = 0; v < mismatch.size(); ++v) {
    if (!mismatch[v].is_zero() || !dc.is_zero()) {
      throw computation_error("Internal", "local trivialization does not bound c o rho", {v});
    }
  }

  std::optional<Cochain> a = options.permutation_seed ? ctx.global_classifier(*options.permutation_seed).preimage(c_rho)
                                                      : ctx.global_classifier().preimage(c_rho);
  if (!a) throw computation_error("NoGlobalTrivialization", "c o rho is not a coboundary on the global group");

  InvariantValue total{ctx.modulus(), 0};
  for (std::size_t v = 0; v < rho_s.size(); ++v) {
    total = add(total, local_invariant(ctx, v, b[v] - pullback(ctx.place(v).embedding, *a)));
  }
  return total;
}

TorsorElement torsor_build(const CsContext& ctx, const std::vector<GroupHom>& rho_s) {
  if (rho_s.size() != ctx.place_count()) throw validation_error("IncompatibleTorsor", "one hom per place expected");
  TorsorElement out;
  for (std::size_t v = 0; v < rho_s.size(); ++v) {
    require_hom(rho_s[v], ctx.place(v).local_group(), ctx.datum().gauge_group, "rho_v");
    auto x = ctx.local_classifier(v).preimage(pullback(rho_s[v], ctx.datum().cocycle));
    if (!x) {
      throw computation_error("LocallyNontrivial", "c o rho_v is not a coboundary at '" + ctx.place(v).name + "'",
                              {v});
    }
    out.components.push_back(std::move(*x));
  }
  return out;
}

LocalClasses torsor_difference(const CsContext& ctx, const TorsorElement& x, const TorsorElement& y) {
  if (x.components.size() != ctx.place_count() || y.components.size() != ctx.place_count()) {
    throw validation_error("IncompatibleTorsor", "one cochain per place expected");
  }
  LocalClasses out;
  for (std::size_t v = 0; v < ctx.place_count(); ++v) {
    out.coords.push_back(ctx.local_h2(v).coordinates(x.components[v] - y.components[v]));
  }
  return out;
}

TorsorElement torsor_map(const CsContext& ctx, const std::vector<Element>& a, const std::vector<GroupHom>& rho_s,
                         const TorsorElement& x) {
  if (a.size() != ctx.place_count() || rho_s.size() != ctx.place_count() ||
      x.components.size() != ctx.place_count()) {
    throw validation_error("IncompatibleTorsor", "one entry per place expected");
  }
  TorsorElement out;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] >= ctx.datum().gauge_group->order()) {
      throw validation_error("BadElement", "gauge element out of range", {v, a[v]});
    }
    const Element av[1] = {a[v]};
    out.components.push_back(x.components[v] + pullback(rho_s[v], homotopy(av, ctx.datum().cocycle)));
  }
  return out;
}

TorsorElement cs_section(const CsContext& ctx, const GroupHom& rho, const CsOptions& options) {
  require_hom(rho, ctx.datum().global_group, ctx.datum().gauge_group, "rho");
  const Cochain c_rho = pullback(rho, ctx.datum().cocycle);
  std::optional<Cochain> beta = options.permutation_seed
                                    ? ctx.global_classifier(*options.permutation_seed).preimage(c_rho)
                                    : ctx.global_classifier().preimage(c_rho);
  if (!beta) throw computation_error("NoGlobalTrivialization", "c o rho is not a coboundary on the global group");
  TorsorElement out;
  for (const auto& p : ctx.datum().places) out.components.push_back(pullback(p.embedding, *beta));
  return out;
}

Cochain averaging_preimage(const Cochain& c) {
  const GModule& mod = *c.coeffs();
  if (!mod.is_trivial() || c.degree() == 0) {
    throw validation_error("UnsupportedCoefficients", "averaging needs trivial coefficients and positive degree");
  }
  const std::uint32_t n = mod.modulus();
  const std::size_t m = c.group()->order();
  const ModRing ring(n);
  if (!ring.is_unit(static_cast<Residue>(m % n))) {
    throw computation_error("NotCoprime", "group order is not invertible in the coefficients");
  }
  if (auto w = cocycle_witness(c)) {
    throw validation_error("NotACocycle", "averaging needs a cocycle", std::vector<std::uint64_t>(w->begin(), w->end()));
  }
  Residue scale = *ring.inverse(static_cast<Residue>(m % n));
  if (c.degree() % 2 == 1) scale = ring.neg(scale);
  const std::size_t r = c.rank();
  Cochain out(c.coeffs(), c.degree() - 1);
  std::vector<Residue> values(out.tuples() * r, 0);
  for (std::size_t t = 0; t < out.tuples(); ++t) {
    for (std::size_t j = 0; j < r; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t x = 0; x < m; ++x) acc += c.at(t * m + x)[j];
      values[t * r + j] = ring.mul(ring.reduce(static_cast<std::int64_t>(acc % n)), scale);
    }
  }
  return Cochain(c.coeffs(), c.degree() - 1, std::move(values));
}

TorsorElement unramified_reference(const CsContext& ctx, const std::vector<GroupHom>& rho_s) {
  if (rho_s.size() != ctx.place_count()) throw validation_error("IncompatibleTorsor", "one hom per place expected");
  TorsorElement out;
  for (std::size_t v = 0; v < rho_s.size(); ++v) {
    const PlaceDatum& p = ctx.place(v);
    require_hom(rho_s[v], p.local_group(), ctx.datum().gauge_group, "rho_v");
    if (auto x = inertia_witness(rho_s[v], p.inertia)) {
      throw computation_error("NotUnramifiedTrivializable", "rho is ramified at '" + p.name + "'", {v, *x});
    }
    const Quotient& q = ctx.unramified_quotient(v);
    if (std::gcd<std::uint64_t>(q.group->order(), ctx.modulus()) != 1) {
      throw computation_error("NotUnramifiedTrivializable",
                              "unramified quotient at '" + p.name + "' has order not prime to n", {v});
    }
    const Cochain cbar = pullback(descend(q, rho_s[v]), ctx.datum().cocycle);
    out.components.push_back(pullback(q.projection, averaging_preimage(cbar)));
  }
  return out;
}

InvariantValue section_l_value(const CsContext& ctx, const GroupHom& rho, const CsOptions& options) {
  const TorsorElement reference = unramified_reference(ctx, ctx.restrict_to_places(rho));
  const TorsorElement section = cs_section(ctx, rho, options);
  return pushout(ctx, torsor_difference(ctx, reference, section));
}

ValidationReport validate_global_datum(const GlobalDatum& datum) {
  ValidationReport report;
  auto check = [&](std::string name) -> ValidationCheck& {
    ValidationCheck c;
    c.name = std::move(name);
    report.checks.push_back(std::move(c));
    return report.checks.back();
  };
  auto fail = [](ValidationCheck& c, std::string detail, std::vector<std::uint64_t> witness = {}) {
    c.passed = false;
    c.detail = std::move(detail);
    c.witness = std::move(witness);
  };
  const std::uint32_t n = datum.modulus;

  auto& modulus = check("modulus");
  if (n < 2 || n > kMaxModulus) {
    fail(modulus, "modulus out of range");
    return report;
  }
  auto& groups = check("groups");
  if (!datum.global_group || !datum.gauge_group) {
    fail(groups, "missing global or gauge group");
    return report;
  }

  auto& cocycle = check("cocycle");
  if (!same_group(datum.cocycle.group(), datum.gauge_group) || datum.cocycle.degree() != 3 ||
      !is_trivial_cyclic(*datum.cocycle.coeffs(), n)) {
    fail(cocycle, "c must be a 3-cochain on the gauge group with trivial Z/n coefficients");
  } else if (auto w = cocycle_witness(datum.cocycle)) {
    fail(cocycle, "c is not a cocycle", std::vector<std::uint64_t>(w->begin(), w->end()));
  }

  const ModRing ring(n);
  for (std::size_t v = 0; v < datum.places.size(); ++v) {
    const PlaceDatum& p = datum.places[v];
    auto& emb = check("place:" + p.name + ":embedding");
    if (!same_group(p.embedding.cod(), datum.global_group)) {
      fail(emb, "codomain is not the global group", {v});
      continue;
    }
    if (!p.embedding.is_injective()) {
      for (Element a = 0; a < p.local_group()->order() && emb.passed; ++a) {
        for (Element b = a + 1; b < p.local_group()->order(); ++b) {
          if (p.embedding(a) == p.embedding(b)) {
            fail(emb, "embedding is not injective", {a, b});
            break;
          }
        }
      }
    }
    auto& inertia = check("place:" + p.name + ":inertia");
    for (Element x : p.inertia) {
      if (x >= p.local_group()->order()) {
        fail(inertia, "inertia element out of range", {x});
        break;
      }
    }
    if (inertia.passed && !is_normal_subgroup(*p.local_group(), p.inertia)) {
      fail(inertia, "inertia is not a normal subgroup", {v});
    }
    auto& gen = check("place:" + p.name + ":generator");
    if (!same_group(p.h2_generator.group(), p.local_group()) || p.h2_generator.degree() != 2 ||
        !is_trivial_cyclic(*p.h2_generator.coeffs(), n)) {
      fail(gen, "generator must be a 2-cochain on the local group with trivial Z/n coefficients");
    } else if (auto w = cocycle_witness(p.h2_generator)) {
      fail(gen, "generator is not a cocycle", std::vector<std::uint64_t>(w->begin(), w->end()));
    } else {
      const CohomologyGroup h2(GModule::trivial(p.local_group(), n), 2);
      const std::uint64_t order = class_order(h2.invariant_factors(), h2.coordinates(p.h2_generator));
      if (order != n) fail(gen, "generator class has order " + std::to_string(order) + ", not n", {order});
    }
    auto& norm = check("place:" + p.name + ":normalization");
    if (p.inv_normalization >= n || !ring.is_unit(p.inv_normalization)) {
      fail(norm, "normalization is not a unit mod n", {p.inv_normalization});
    }
  }
  if (!report.passed()) return report;

  auto& rec = check("reciprocity");
  try {
    const CohomologyGroup h2(GModule::trivial(datum.global_group, n), 2);
    for (std::size_t j = 0; j < h2.generators().size() && rec.passed; ++j) {
      const Cochain& z = h2.generators()[j];
      std::uint64_t total = 0;
      for (const auto& p : datum.places) {
        total += local_invariant(pullback(p.embedding, z), p, n).numerator;
      }
      if (total % n != 0) {
        std::ostringstream msg;
        msg << "ReciprocityFailure: sum of local invariants of H^2 generator " << j << " is " << total % n << "/"
            << n;
        fail(rec, msg.str(), {j, total % n});
        rec.witness_cocycle = z;
      }
    }
  } catch (const Error& e) {
    fail(rec, e.kind() + ": " + e.what(), e.witness());
  }
  return report;
}

KummerTrivialization kummer_trivialization(const GroupHom& f, const std::optional<GroupHom>& lift) {
  const std::uint32_t p = static_cast<std::uint32_t>(f.cod()->order());
  if (p < 2 || static_cast<std::uint64_t>(p) * p > kMaxModulus) {
    throw validation_error("BadModulus", "Kummer target order out of range");
  }
  const Cochain alpha = character(f);  // validates the target
  const std::uint32_t p2 = p * p;
  const GroupPtr& dom = f.dom();
  std::vector<Residue> y(dom->order());
  std::optional<GroupHom> lifted;
  if (lift) {
    require_hom(*lift, dom, cyclic_group(p2), "lift");
    for (Element g = 0; g < dom->order(); ++g) {
      if ((*lift)(g) % p != f(g)) throw validation_error("NotALift", "lift does not reduce to f", {g});
      y[g] = ((*lift)(g) + p2 - f(g)) / p % p;
    }
    lifted = *lift;
  } else {
    const Cochain target = -bockstein(alpha);
    auto sol = solve_coboundary(target);
    if (!sol) throw computation_error("NoLift", "f does not lift to Z/p^2");
    std::vector<Element> map(dom->order());
    for (Element g = 0; g < dom->order(); ++g) {
      y[g] = sol->scalar(g);
      map[g] = f(g) + p * y[g];
    }
    lifted = GroupHom(dom, cyclic_group(p2), std::move(map));
  }
  // b = s o f - lift = -p y, read in the kernel.
  for (auto& v : y) v = (p - v) % p;
  Cochain b = trivial_cochain(dom, p, 1, std::move(y));
  Cochain t = -cup(alpha, b);
  return {std::move(*lifted), std::move(b), std::move(t)};
}

}  // namespace arithcs
