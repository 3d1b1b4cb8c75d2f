#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arithcs/cohomology.hpp"
#include "arithcs/structured.hpp"

namespace arithcs {

/// A simulated place: a finite local group mapped into the global group, its
/// inertia subgroup, and the declared invariant map on H^2 given by a
/// generator and the numerator of its invariant.
struct PlaceDatum {
  std::string name;
  GroupHom embedding;  // local group -> global group
  std::vector<Element> inertia;
  Cochain h2_generator;  // 2-cocycle on the local group, trivial Z/n coefficients
  Residue inv_normalization = 1;

  const GroupPtr& local_group() const { return embedding.dom(); }
};

/// Global group with places, a gauge group A and a 3-cocycle c on A with
/// trivial Z/n coefficients.
struct GlobalDatum {
  std::uint32_t modulus = 2;
  GroupPtr global_group;
  std::vector<PlaceDatum> places;
  GroupPtr gauge_group;
  Cochain cocycle;
};

/// Element of (1/n)Z/Z stored as its numerator.
struct InvariantValue {
  std::uint32_t modulus = 1;
  Residue numerator = 0;
  bool operator==(const InvariantValue&) const = default;
};

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<std::uint64_t> witness;
  std::optional<Cochain> witness_cocycle;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool passed() const;
  const ValidationCheck* first_failure() const;
};

/// Total: every failure is recorded in the report rather than thrown.
ValidationReport validate_global_datum(const GlobalDatum& datum);

/// One 2-cochain per place.
struct TorsorElement {
  std::vector<Cochain> components;
};

/// Element of the product of the local H^2 groups, as coordinates per place.
struct LocalClasses {
  std::vector<VectorZn> coords;
  bool operator==(const LocalClasses&) const = default;
};

struct CsOptions {
  /// When set, the global trivialization is solved with the unknowns
  /// permuted by a shuffle seeded with this value.
  std::optional<std::uint64_t> permutation_seed;
};

/// Per-datum caches: local H^2 groups, unramified quotients and the global
/// coboundary solver. Construction checks only what the computations need
/// (shapes, embeddings, normal inertia); use validate_global_datum for the
/// full set of checks including reciprocity.
class CsContext {
 public:
  explicit CsContext(GlobalDatum datum);

  const GlobalDatum& datum() const { return datum_; }
  std::uint32_t modulus() const { return datum_.modulus; }
  std::size_t place_count() const { return datum_.places.size(); }
  const PlaceDatum& place(std::size_t v) const { return datum_.places[v]; }

  ModulePtr global_coeffs() const { return global_coeffs_; }
  ModulePtr local_coeffs(std::size_t v) const { return places_[v].coeffs; }
  const CohomologyGroup& local_h2(std::size_t v) const { return *places_[v].h2; }
  const Quotient& unramified_quotient(std::size_t v) const { return places_[v].quotient; }
  /// True when H^2 and H^3 of G_v / I_v vanish.
  bool quotient_is_acyclic(std::size_t v) const { return places_[v].quotient_acyclic; }
  const Classifier& local_classifier(std::size_t v) const { return *places_[v].degree3; }
  const Classifier& quotient_classifier(std::size_t v) const { return *places_[v].quotient_degree3; }

  /// Solver for d a = f on the global group in degree 3.
  const Classifier& global_classifier() const;
  Classifier global_classifier(std::uint64_t seed) const;

  /// rho o i_v for every place.
  std::vector<GroupHom> restrict_to_places(const GroupHom& rho) const;

 private:
  struct Place {
    ModulePtr coeffs;
    std::shared_ptr<const CohomologyGroup> h2;
    Quotient quotient;
    bool quotient_acyclic = false;
    std::shared_ptr<const Classifier> degree3;
    std::shared_ptr<const Classifier> quotient_degree3;
  };
  struct Lazy;
  GlobalDatum datum_;
  ModulePtr global_coeffs_;
  std::vector<Place> places_;
  std::shared_ptr<Lazy> lazy_;
};

/// Writes [x] = k [generator] in H^2 of the place and returns k times the
/// normalization. Throws NotInGeneratedSummand when no such k exists.
InvariantValue local_invariant(const CsContext& ctx, std::size_t place, const Cochain& x);
/// Standalone version that computes H^2 of the local group on the fly.
InvariantValue local_invariant(const Cochain& x, const PlaceDatum& place, std::uint32_t modulus);

/// Sum over places of the invariants of the given local classes.
InvariantValue pushout(const CsContext& ctx, const LocalClasses& classes);

/// Gluing computation: canonical unramified local trivializations compared
/// with a global trivialization of rho^* c.
InvariantValue cs_invariant(const CsContext& ctx, const GroupHom& rho, const CsOptions& options = {});

/// The canonical unramified trivialization of c o rho_v, solved on G_v / I_v
/// and inflated to G_v. Throws NotUnramifiedTrivializable.
Cochain unramified_trivialization(const CsContext& ctx, std::size_t place, const GroupHom& rho_v);

/// d of an element (a, (b_v)) of the mapping fiber: (da, (r_v(a) - d b_v)).
std::pair<Cochain, std::vector<Cochain>> fiber_differential(const CsContext& ctx, const Cochain& a,
                                                            const std::vector<Cochain>& b);

/// A member of d^-1(c o rho_S) / B^2_S, solved place by place. Throws
/// LocallyNontrivial when some c o rho_v is not a coboundary.
TorsorElement torsor_build(const CsContext& ctx, const std::vector<GroupHom>& rho_s);
/// [x_v - y_v] in each local H^2.
LocalClasses torsor_difference(const CsContext& ctx, const TorsorElement& x, const TorsorElement& y);
/// x + (h_{a_v} o rho_v): lands in the torsor of Ad_a o rho_S.
TorsorElement torsor_map(const CsContext& ctx, const std::vector<Element>& a, const std::vector<GroupHom>& rho_s,
                         const TorsorElement& x);

/// Restrictions of a global beta with d beta = c o rho. Throws NoGlobalTrivialization.
TorsorElement cs_section(const CsContext& ctx, const GroupHom& rho, const CsOptions& options = {});

/// Unramified reference point of the torsor, built by averaging over
/// G_v / I_v (needs |G_v / I_v| prime to n) instead of by solving.
TorsorElement unramified_reference(const CsContext& ctx, const std::vector<GroupHom>& rho_s);

/// L-class of the section measured against the unramified reference.
InvariantValue section_l_value(const CsContext& ctx, const GroupHom& rho, const CsOptions& options = {});

/// For a cocycle c of degree k >= 1 with trivial coefficients on a group of
/// order m prime to n: the (k-1)-cochain (-1)^k m^-1 sum_x c(.., x), whose
/// differential is c.
Cochain averaging_preimage(const Cochain& c);

struct KummerTrivialization {
  GroupHom lift;  // into cyclic_group(p^2)
  Cochain b;      // s o f - lift, read in the kernel Z/p
  Cochain t;      // -f^*(alpha) u b, with dt = f^*(alpha u delta alpha)
};

/// f: N -> cyclic_group(p). With no lift given, searches for one by solving
/// d y = -f^*(delta alpha); throws NoLift if none exists.
KummerTrivialization kummer_trivialization(const GroupHom& f, const std::optional<GroupHom>& lift = std::nullopt);

/// Permutation of 0..size-1 from a seeded Fisher-Yates shuffle.
std::vector<std::size_t> seeded_permutation(std::size_t size, std::uint64_t seed);

}  // namespace arithcs
