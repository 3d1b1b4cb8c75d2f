#include <gtest/gtest.h>

#include <set>

#include "arithcs/cohomology.hpp"
#include "arithcs/error.hpp"
#include "printers.hpp"

using namespace arithcs;

namespace {

// The carry 2-cocycle [i + j >= n] on Z/n, written out directly.
Cochain carry(std::uint32_t n) {
  auto g = cyclic_group(n);
  std::vector<Residue> v;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) v.push_back(i + j >= n ? 1 : 0);
  return trivial_cochain(g, n, 2, v);
}

Cochain identity_character(std::uint32_t n) {
  std::vector<Residue> v(n);
  for (std::uint32_t i = 0; i < n; ++i) v[i] = i;
  return trivial_cochain(cyclic_group(n), n, 1, v);
}

std::vector<ModulePtr> sample_modules() {
  auto s3 = symmetric_group(3);
  std::vector<Residue> sign(6);
  for (Element x = 0; x < 6; ++x) sign[x] = s3->element_order(x) == 2 ? 2 : 1;
  auto z4 = cyclic_group(4);
  return {GModule::trivial(cyclic_group(3), 3), GModule::scalar(s3, 3, sign), GModule::scalar(z4, 5, {1, 2, 4, 3}),
          std::make_shared<const GModule>(cyclic_group(2), ModuleOverZn(4, {2, 4}),
                                          std::vector<std::vector<Residue>>{{1, 0, 0, 1}, {1, 0, 2, 1}})};
}

}  // namespace

TEST(Cochains, DifferentialExamples) {
  auto z3 = cyclic_group(3);
  EXPECT_TRUE(differential(trivial_cochain(z3, 3, 0, {2})).is_zero());
  EXPECT_TRUE(differential(identity_character(2)).is_zero());
  // d of the set-theoretic lift of the identity character to Z/9 is 3 * carry.
  Cochain lift = trivial_cochain(z3, 9, 1, {0, 1, 2});
  std::vector<Residue> expect;
  const Cochain c3 = carry(3);
  for (Residue v : c3.values()) expect.push_back(3 * v);
  EXPECT_EQ(differential(lift), trivial_cochain(z3, 9, 2, expect));
}

TEST(Cochains, DegreeBound) {
  auto g = cyclic_group(2);
  Cochain f(GModule::trivial(g, 2), 4);
  try {
    differential(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "DegreeBound");
  }
  EXPECT_NO_THROW(differential(f, 5));
}

TEST(Cochains, DifferentialMatrixMatchesDifferential) {
  std::mt19937_64 rng(1);
  for (const auto& m : sample_modules()) {
    for (std::size_t deg = 0; deg <= 2; ++deg) {
      const MatrixZn d = differential_matrix(*m, deg);
      for (int t = 0; t < 5; ++t) {
        Cochain f = random_cochain(m, deg, rng);
        EXPECT_EQ(d.apply(ambient_vector(f)), ambient_vector(differential(f)));
      }
    }
  }
}

TEST(Cochains, DSquaredAndPullback) {
  std::mt19937_64 rng(2);
  for (const auto& m : sample_modules()) {
    for (std::size_t deg = 0; deg <= 2; ++deg) {
      for (int t = 0; t < 10; ++t) {
        Cochain f = random_cochain(m, deg, rng);
        EXPECT_TRUE(differential(differential(f)).is_zero());
      }
    }
  }
  auto z4 = cyclic_group(4), z2 = cyclic_group(2);
  GroupHom red = make_hom(z4, z2, {0, 1, 0, 1});
  EXPECT_EQ(pullback(red, identity_character(2)).values(), (std::vector<Residue>{0, 1, 0, 1}));
  EXPECT_EQ(pullback(identity_hom(z2), identity_character(2)), identity_character(2));
  for (int t = 0; t < 10; ++t) {
    Cochain f = random_cochain(GModule::trivial(z2, 2), 2, rng);
    EXPECT_EQ(pullback(red, differential(f)), differential(pullback(red, f)));
  }
  // Anything pulled back through the trivial group is a coboundary in positive degree.
  auto s3 = symmetric_group(3);
  Cochain c = carry(2);
  Cochain pulled = pullback(trivial_hom(s3, z2), c);
  EXPECT_TRUE(std::holds_alternative<Coboundary>(classify(pulled)));
}

TEST(Cochains, Classify) {
  std::mt19937_64 rng(4);
  for (const auto& m : sample_modules()) {
    for (std::size_t deg = 1; deg <= 2; ++deg) {
      Cochain beta = random_cochain(m, deg - 1, rng);
      Cochain f = differential(beta);
      auto c = classify(f);
      ASSERT_TRUE(std::holds_alternative<Coboundary>(c));
      EXPECT_EQ(differential(*std::get<Coboundary>(c).preimage), f);
    }
  }
  auto c3 = classify(carry(3));
  ASSERT_TRUE(std::holds_alternative<NontrivialClass>(c3));
  EXPECT_NE(std::get<NontrivialClass>(c3).coords, VectorZn{0});
  // No degree-1 table on Z/3 has the carry cocycle as its differential.
  auto z3 = cyclic_group(3);
  for (Residue a = 0; a < 27; ++a) {
    Cochain b = trivial_cochain(z3, 3, 1, {a % 3, a / 3 % 3, a / 9});
    EXPECT_NE(differential(b), carry(3));
  }
  Cochain bad = trivial_cochain(z3, 3, 1, {0, 1, 1});
  EXPECT_TRUE(std::holds_alternative<NonCocycle>(classify(bad)));
  EXPECT_TRUE(std::holds_alternative<Coboundary>(classify(Cochain(GModule::trivial(z3, 3), 0))));
}

TEST(Cohomology, SmallGroups) {
  auto triv = cyclic_group(1);
  for (std::size_t i = 1; i <= 3; ++i) EXPECT_TRUE(cohomology(GModule::trivial(triv, 4), i).is_trivial());
  for (std::uint32_t p : {2u, 3u}) {
    auto h1 = cohomology(GModule::trivial(cyclic_group(p), p), 1);
    EXPECT_EQ(h1.invariant_factors(), std::vector<std::uint32_t>{p});
  }
  for (std::uint32_t n : {2u, 3u, 4u}) {
    auto h3 = cohomology(GModule::trivial(cyclic_group(n), n), 3);
    EXPECT_EQ(h3.invariant_factors(), std::vector<std::uint32_t>{n});
  }
  // Z/2 x Z/2 with Z/2 coefficients: dimensions 1, 2, 3, 4.
  auto v4 = direct_product(cyclic_group(2), cyclic_group(2));
  for (std::size_t i = 0; i <= 3; ++i)
    EXPECT_EQ(cohomology(GModule::trivial(v4, 2), i).invariant_factors().size(), i + 1);
  // H^2(Z/4, Z/2) = Z/2, H^2(S3, Z/3) = 0, H^3(S3, Z/3) = Z/3, H^4 via Q8 periodicity not needed.
  EXPECT_EQ(cohomology(GModule::trivial(cyclic_group(4), 2), 2).invariant_factors(), std::vector<std::uint32_t>{2});
  EXPECT_TRUE(cohomology(GModule::trivial(symmetric_group(3), 3), 2).is_trivial());
  EXPECT_EQ(cohomology(GModule::trivial(symmetric_group(3), 3), 3).invariant_factors(),
            std::vector<std::uint32_t>{3});
  // H^1(Z/4, Z/4) = Z/4 and H^2(Z/6, Z/4) = Z/2.
  EXPECT_EQ(cohomology(GModule::trivial(cyclic_group(4), 4), 1).invariant_factors(), std::vector<std::uint32_t>{4});
  EXPECT_EQ(cohomology(GModule::trivial(cyclic_group(6), 4), 2).invariant_factors(), std::vector<std::uint32_t>{2});
  // Sign action of Z/2 on Z/3: all cohomology vanishes (orders coprime).
  EXPECT_TRUE(cohomology(GModule::scalar(cyclic_group(2), 3, {1, 2}), 1).is_trivial());
  // Sign action of Z/2 on Z/4: H^1 = Z/2 (kernel of the norm 1 + sigma over its image 1 - sigma).
  EXPECT_EQ(cohomology(GModule::scalar(cyclic_group(2), 4, {1, 3}), 1).invariant_factors(),
            std::vector<std::uint32_t>{2});
  EXPECT_THROW(cohomology(GModule::trivial(cyclic_group(2), 2), 4), Error);
}

TEST(Cohomology, CoordinatesAndGenerators) {
  std::mt19937_64 rng(6);
  for (const auto& m : sample_modules()) {
    for (std::size_t deg = 0; deg <= 2; ++deg) {
      auto h = cohomology(m, deg);
      for (std::size_t j = 0; j < h.generators().size(); ++j) {
        VectorZn e(h.generators().size(), 0);
        e[j] = 1;
        EXPECT_EQ(h.coordinates(h.generators()[j]), e);
      }
      if (deg == 0) continue;
      Cochain b = differential(random_cochain(m, deg - 1, rng));
      EXPECT_EQ(h.coordinates(b), VectorZn(h.generators().size(), 0));
      if (h.is_trivial()) continue;
      // Coordinates are additive and invariant under coboundaries.
      VectorZn c(h.generators().size());
      for (std::size_t j = 0; j < c.size(); ++j) c[j] = static_cast<Residue>(rng() % h.invariant_factors()[j]);
      EXPECT_EQ(h.coordinates(h.element(c) + b), c);
    }
  }
}

TEST(Cohomology, ExhaustiveZ2Degree3) {
  // Brute force H^3(Z/2, Z/2): count cocycles among all 2^8 tables and
  // coboundaries among the images of all 2^4 degree-2 tables.
  auto z2 = cyclic_group(2);
  std::set<std::vector<Residue>> cocycles, coboundaries;
  for (std::uint32_t bits = 0; bits < 256; ++bits) {
    std::vector<Residue> v(8);
    for (int i = 0; i < 8; ++i) v[i] = (bits >> i) & 1;
    Cochain f = trivial_cochain(z2, 2, 3, v);
    if (is_cocycle(f)) cocycles.insert(v);
  }
  for (std::uint32_t bits = 0; bits < 16; ++bits) {
    std::vector<Residue> v(4);
    for (int i = 0; i < 4; ++i) v[i] = (bits >> i) & 1;
    coboundaries.insert(differential(trivial_cochain(z2, 2, 2, v)).values());
  }
  EXPECT_EQ(cocycles.size() / coboundaries.size(), 2u);
  EXPECT_EQ(cohomology(GModule::trivial(z2, 2), 3).order(), 2u);
}
