#include <gtest/gtest.h>

#include <random>
#include <set>

#include "arithcs/error.hpp"
#include "arithcs/fixtures.hpp"
#include "printers.hpp"

using namespace arithcs;

namespace {

Cochain h2_gen(const GroupPtr& g, std::uint32_t n) { return cohomology(GModule::trivial(g, n), 2).generators().front(); }

template <class F>
std::string error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

// One place: the whole group, with the given inertia.
GlobalDatum single_place(GroupPtr g, std::uint32_t n, std::vector<Element> inertia, GroupPtr a, Cochain c) {
  GlobalDatum d{n, g, {}, std::move(a), std::move(c)};
  d.places.push_back({"v", identity_hom(g), std::move(inertia), h2_gen(g, n), 1});
  return d;
}

InvariantValue half(Residue k) { return {2, k}; }

}  // namespace

TEST(Validate, EmptyPlacesWithVanishingH2) {
  GlobalDatum d{3, cyclic_group(2), {}, cyclic_group(3), alpha_cup_bockstein(3)};
  EXPECT_TRUE(validate_global_datum(d).passed());
}

TEST(Validate, ReciprocityBalancedAndBroken) {
  EXPECT_TRUE(validate_global_datum(fixtures::reciprocity_datum(true)).passed());
  const auto report = validate_global_datum(fixtures::reciprocity_datum(false));
  ASSERT_FALSE(report.passed());
  const ValidationCheck* f = report.first_failure();
  EXPECT_EQ(f->name, "reciprocity");
  ASSERT_TRUE(f->witness_cocycle.has_value());
  // The witness restricts nontrivially to both places.
  const GlobalDatum d = fixtures::reciprocity_datum(false);
  for (const auto& p : d.places) {
    EXPECT_NE(local_invariant(pullback(p.embedding, *f->witness_cocycle), p, 3).numerator, 0u);
  }
}

TEST(Validate, ShippedToysPass) {
  for (const auto& d : {fixtures::quaternion_toy(), fixtures::dicyclic_toy(), fixtures::dihedral_toy()}) {
    const auto report = validate_global_datum(d);
    EXPECT_TRUE(report.passed()) << report.first_failure()->name;
  }
}

TEST(Validate, ReportsBadPieces) {
  GlobalDatum d = fixtures::reciprocity_datum(true);
  d.places[0].inv_normalization = 0;
  d.places[1].h2_generator = d.places[1].h2_generator.scaled(0);
  const auto report = validate_global_datum(d);
  std::set<std::string> failed;
  for (const auto& c : report.checks) {
    if (!c.passed) failed.insert(c.name);
  }
  EXPECT_EQ(failed, (std::set<std::string>{"place:p:normalization", "place:q:generator"}));
}

TEST(LocalInvariant, Examples) {
  const GlobalDatum d = fixtures::reciprocity_datum(true);
  const PlaceDatum& q = d.places[1];  // normalization 2
  EXPECT_EQ(local_invariant(q.h2_generator, q, 3), (InvariantValue{3, 2}));
  std::mt19937_64 rng(3);
  const ModulePtr coeffs = q.h2_generator.coeffs();
  const Cochain beta = random_cochain(coeffs, 1, rng);
  EXPECT_EQ(local_invariant(differential(beta), q, 3), (InvariantValue{3, 0}));
  EXPECT_EQ(local_invariant(q.h2_generator.scaled(2) + differential(beta), q, 3), (InvariantValue{3, 1}));
  const CsContext ctx(d);
  EXPECT_EQ(local_invariant(ctx, 1, q.h2_generator.scaled(2)), (InvariantValue{3, 1}));
}

TEST(LocalInvariant, OutsideSummand) {
  const GroupPtr v4 = direct_product(cyclic_group(2), cyclic_group(2));
  const CohomologyGroup h2 = cohomology(GModule::trivial(v4, 2), 2);
  ASSERT_EQ(h2.invariant_factors().size(), 3u);
  const PlaceDatum p{"v", identity_hom(v4), {0}, h2.generators()[0], 1};
  EXPECT_EQ(error_kind([&] { local_invariant(h2.generators()[1], p, 2); }), "NotInGeneratedSummand");
}

TEST(CsInvariant, QuaternionToy) {
  const CsContext ctx(fixtures::quaternion_toy());
  const GroupHom rho = fixtures::quaternion_toy_rho();
  EXPECT_EQ(cs_invariant(ctx, rho), half(1));
  EXPECT_EQ(cs_invariant(ctx, trivial_hom(ctx.datum().global_group, ctx.datum().gauge_group)), half(0));
  for (Element a = 0; a < 6; ++a) {
    EXPECT_EQ(cs_invariant(ctx, conjugation_hom(ctx.datum().gauge_group, a).after(rho)), half(1)) << a;
  }
  for (std::uint64_t seed = 1; seed <= 5; ++seed) EXPECT_EQ(cs_invariant(ctx, rho, {seed}), half(1));
}

TEST(CsInvariant, GluingMatchesTorsorPipeline) {
  const std::vector<std::pair<GlobalDatum, GroupHom>> cases = {
      {fixtures::quaternion_toy(), fixtures::quaternion_toy_rho()},
      {fixtures::dicyclic_toy(), fixtures::dicyclic_toy_rho()},
      {fixtures::dihedral_toy(), fixtures::dihedral_toy_rho()}};
  for (const auto& [d, rho] : cases) {
    const CsContext ctx(d);
    EXPECT_EQ(cs_invariant(ctx, rho), section_l_value(ctx, rho));
    EXPECT_EQ(cs_invariant(ctx, rho, {9}), section_l_value(ctx, rho, {4}));
  }
}

TEST(CsInvariant, NontrivialUnramifiedQuotient) {
  const CsContext ctx(fixtures::dicyclic_toy());
  EXPECT_EQ(ctx.unramified_quotient(0).group->order(), 3u);
  const auto rho_s = ctx.restrict_to_places(fixtures::dicyclic_toy_rho());
  const Cochain solved = unramified_trivialization(ctx, 0, rho_s[0]);
  const Cochain averaged = unramified_reference(ctx, rho_s).components[0];
  EXPECT_FALSE(solved.is_zero());
  EXPECT_EQ(differential(solved), pullback(rho_s[0], ctx.datum().cocycle));
  EXPECT_EQ(differential(averaged), differential(solved));
}

TEST(CsInvariant, Errors) {
  const GroupPtr z2 = cyclic_group(2), z4 = cyclic_group(4);
  // Unramified quotient Z/4 has nonzero H^2.
  const CsContext unramified(single_place(z4, 2, {0}, z2, alpha_cup_bockstein(2)));
  const GroupHom reduce(z4, z2, {0, 1, 0, 1});
  EXPECT_EQ(error_kind([&] { cs_invariant(unramified, reduce); }), "NotUnramifiedTrivializable");
  // rho nontrivial on inertia.
  const CsContext ramified(single_place(z2, 2, {0, 1}, z2, alpha_cup_bockstein(2)));
  EXPECT_EQ(error_kind([&] { cs_invariant(ramified, identity_hom(z2)); }), "NotUnramifiedTrivializable");
  // c o rho nontrivial in H^3 of the global group.
  GlobalDatum closed{2, z2, {}, z2, alpha_cup_bockstein(2)};
  const CsContext no_places(closed);
  EXPECT_EQ(error_kind([&] { cs_invariant(no_places, identity_hom(z2)); }), "NoGlobalTrivialization");
  EXPECT_EQ(error_kind([&] { cs_section(no_places, identity_hom(z2)); }), "NoGlobalTrivialization");
}

TEST(CsInvariant, FiberDifferential) {
  const CsContext ctx(fixtures::quaternion_toy());
  const GroupHom rho = fixtures::quaternion_toy_rho();
  const Cochain c_rho = pullback(rho, ctx.datum().cocycle);
  const auto rho_s = ctx.restrict_to_places(rho);
  const std::vector<Cochain> b = {unramified_trivialization(ctx, 0, rho_s[0])};
  const auto [dc, locals] = fiber_differential(ctx, c_rho, b);
  EXPECT_TRUE(dc.is_zero());
  EXPECT_TRUE(locals[0].is_zero());
  // (c o rho, b) - d(a, 0) = (0, b - r(a)).
  const Cochain a = *ctx.global_classifier().preimage(c_rho);
  const auto [da, ra] = fiber_differential(ctx, a, {Cochain(ctx.local_coeffs(0), 1)});
  EXPECT_EQ(da, c_rho);
  EXPECT_EQ(ra[0], pullback(ctx.place(0).embedding, a));
}

TEST(Torsor, ZeroCocycleGivesZeroMember) {
  GlobalDatum d = fixtures::quaternion_toy();
  d.cocycle = d.cocycle.scaled(0);
  const CsContext ctx(d);
  const auto x = torsor_build(ctx, ctx.restrict_to_places(fixtures::quaternion_toy_rho()));
  EXPECT_TRUE(x.components[0].is_zero());
}

TEST(Torsor, Axioms) {
  const CsContext ctx(fixtures::dicyclic_toy());
  const GroupHom rho = fixtures::dicyclic_toy_rho();
  const auto rho_s = ctx.restrict_to_places(rho);
  const TorsorElement x = torsor_build(ctx, rho_s), y = cs_section(ctx, rho, {1}), z = cs_section(ctx, rho, {2});
  const LocalClasses zero{{VectorZn(1, 0), VectorZn(1, 0)}};
  EXPECT_EQ(torsor_difference(ctx, x, x), zero);
  const auto xy = torsor_difference(ctx, x, y), yz = torsor_difference(ctx, y, z), xz = torsor_difference(ctx, x, z);
  for (std::size_t v = 0; v < 2; ++v) {
    const auto& factors = ctx.local_h2(v).invariant_factors();
    for (std::size_t j = 0; j < factors.size(); ++j) {
      EXPECT_EQ((xy.coords[v][j] + yz.coords[v][j]) % factors[j], xz.coords[v][j]) << v;
    }
  }
  // Two sections differ by restrictions of a global cocycle: invisible in L.
  EXPECT_EQ(pushout(ctx, torsor_difference(ctx, y, z)), (InvariantValue{2, 0}));
}

TEST(Torsor, FibreHasOneClassPerH2Element) {
  // Z/2, one place, c o rho = 0: the members of d^-1(0) mod B^2 are H^2(Z/2, Z/2).
  const GroupPtr z2 = cyclic_group(2);
  const GlobalDatum d = single_place(z2, 2, {0, 1}, z2, alpha_cup_bockstein(2).scaled(0));
  const CsContext ctx(d);
  const std::vector<GroupHom> rho_s = {trivial_hom(z2, z2)};
  const TorsorElement base = torsor_build(ctx, rho_s);
  std::set<VectorZn> classes;
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    std::vector<Residue> v(4);
    for (int i = 0; i < 4; ++i) v[i] = (bits >> i) & 1;
    const Cochain x(ctx.local_coeffs(0), 2, v);
    if (!differential(x).is_zero()) continue;
    classes.insert(torsor_difference(ctx, {{x}}, base).coords[0]);
  }
  EXPECT_EQ(classes.size(), 2u);
}

TEST(Torsor, MapLandsInConjugateTorsor) {
  const CsContext ctx(fixtures::dicyclic_toy());
  const auto rho_s = ctx.restrict_to_places(fixtures::dicyclic_toy_rho());
  const TorsorElement x = torsor_build(ctx, rho_s);
  const GroupPtr& a_group = ctx.datum().gauge_group;
  for (Element a = 0; a < 6; ++a) {
    for (Element b = 0; b < 6; ++b) {
      const TorsorElement y = torsor_map(ctx, {a, b}, rho_s, x);
      const std::vector<Element> ab = {a, b};
      for (std::size_t v = 0; v < 2; ++v) {
        const GroupHom moved = conjugation_hom(a_group, ab[v]).after(rho_s[v]);
        EXPECT_EQ(differential(y.components[v]), pullback(moved, ctx.datum().cocycle));
      }
    }
  }
  // Identity acts trivially on classes.
  const auto same = torsor_difference(ctx, torsor_map(ctx, {0, 0}, rho_s, x), x);
  EXPECT_EQ(same, (LocalClasses{{VectorZn(1, 0), VectorZn(1, 0)}}));
}

TEST(Torsor, MapIsFunctorial) {
  const CsContext ctx(fixtures::dicyclic_toy());
  const auto rho_s = ctx.restrict_to_places(fixtures::dicyclic_toy_rho());
  const TorsorElement x = torsor_build(ctx, rho_s);
  const GroupPtr& g = ctx.datum().gauge_group;
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Element> a(2), b(2), ab(2);
    std::vector<GroupHom> moved;
    for (std::size_t v = 0; v < 2; ++v) {
      a[v] = static_cast<Element>(rng() % 6);
      b[v] = static_cast<Element>(rng() % 6);
      ab[v] = g->mul(a[v], b[v]);
      moved.push_back(conjugation_hom(g, b[v]).after(rho_s[v]));
    }
    const TorsorElement lhs = torsor_map(ctx, ab, rho_s, x);
    const TorsorElement rhs = torsor_map(ctx, a, moved, torsor_map(ctx, b, rho_s, x));
    EXPECT_EQ(torsor_difference(ctx, lhs, rhs), (LocalClasses{{VectorZn(1, 0), VectorZn(1, 0)}}));
  }
}

TEST(Torsor, AutomorphismsFixTheLClass) {
  const CsContext ctx(fixtures::quaternion_toy());
  const GroupHom rho = fixtures::quaternion_toy_rho();
  const auto rho_s = ctx.restrict_to_places(rho);
  const TorsorElement section = cs_section(ctx, rho);
  int automorphisms = 0;
  for (Element a = 0; a < 6; ++a) {
    if (!(conjugation_hom(ctx.datum().gauge_group, a).after(rho) == rho)) continue;
    ++automorphisms;
    const TorsorElement moved = torsor_map(ctx, {a}, rho_s, section);
    EXPECT_EQ(pushout(ctx, torsor_difference(ctx, moved, section)), half(0)) << a;
  }
  EXPECT_EQ(automorphisms, 2);
}

TEST(Averaging, InvertsTheDifferential) {
  std::mt19937_64 rng(8);
  const ModulePtr coeffs = GModule::trivial(dihedral_group(3), 5);
  for (std::size_t k = 1; k <= 3; ++k) {
    const Cochain c = differential(random_cochain(coeffs, k - 1, rng));
    EXPECT_EQ(differential(averaging_preimage(c)), c) << k;
  }
  EXPECT_EQ(error_kind([] { averaging_preimage(alpha_cup_bockstein(2)); }), "NotCoprime");
}

TEST(Kummer, ReductionWithIdentityLift) {
  const auto k = kummer_trivialization(fixtures::kummer_reduction(), fixtures::kummer_identity_lift());
  EXPECT_EQ(k.b.values(), (std::vector<Residue>{0, 0, 1, 1}));
  const Cochain f_alpha = character(fixtures::kummer_reduction());
  EXPECT_EQ(differential(k.b), bockstein(f_alpha));
  EXPECT_EQ(differential(k.t), pullback(fixtures::kummer_reduction(), alpha_cup_bockstein(2)));
}

TEST(Kummer, AutoLift) {
  const auto k = kummer_trivialization(fixtures::kummer_reduction());
  for (Element g = 0; g < 4; ++g) EXPECT_EQ(k.lift(g) % 2, g % 2);
  EXPECT_EQ(differential(k.t), pullback(fixtures::kummer_reduction(), alpha_cup_bockstein(2)));
  // Z/9 -> Z/3 through the Z/9 lift, and a character of S3 x Z/3.
  const GroupHom f(cyclic_group(9), cyclic_group(3), {0, 1, 2, 0, 1, 2, 0, 1, 2});
  const auto k3 = kummer_trivialization(f);
  EXPECT_EQ(differential(k3.t), pullback(f, alpha_cup_bockstein(3)));
}

TEST(Kummer, TrivialAndMissingLifts) {
  const GroupPtr z4 = cyclic_group(4), z2 = cyclic_group(2);
  const auto k = kummer_trivialization(trivial_hom(z4, z2));
  EXPECT_TRUE(k.b.is_zero());
  EXPECT_TRUE(k.t.is_zero());
  EXPECT_EQ(error_kind([&] { kummer_trivialization(identity_hom(z2)); }), "NoLift");
  EXPECT_EQ(error_kind([&] { kummer_trivialization(fixtures::kummer_reduction(), trivial_hom(z4, z4)); }),
            "NotALift");
}

TEST(Permutation, SeededShuffleIsAPermutation) {
  auto p = seeded_permutation(50, 3);
  EXPECT_EQ(p, seeded_permutation(50, 3));
  EXPECT_NE(p, seeded_permutation(50, 4));
  std::sort(p.begin(), p.end());
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_EQ(p[i], i);
}
