#include <gtest/gtest.h>

#include "arithcs/error.hpp"
#include "arithcs/group.hpp"

using namespace arithcs;

namespace {

std::vector<GroupPtr> corpus() {
  return {cyclic_group(2), cyclic_group(3), cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2)),
          cyclic_group(6), symmetric_group(3), dihedral_group(4), quaternion_group()};
}

std::size_t count_order(const FiniteGroup& g, std::size_t k) {
  std::size_t c = 0;
  for (Element x = 0; x < g.order(); ++x) c += g.element_order(x) == k;
  return c;
}

}  // namespace

TEST(Groups, MakeGroup) {
  auto z2 = make_group({{0, 1}, {1, 0}});
  EXPECT_EQ(z2->order(), 2u);
  try {
    make_group({{0, 1}, {0, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "NotAGroup");
    EXPECT_EQ(e.witness(), std::vector<std::uint64_t>{1});
  }
  // Non-associative loop of order 5 style table: a Latin square with identity 0.
  try {
    make_group({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "NotAGroup");
    EXPECT_EQ(e.witness().size(), 3u);
  }
}

TEST(Groups, Corpus) {
  auto s3 = symmetric_group(3);
  EXPECT_EQ(s3->order(), 6u);
  EXPECT_EQ(count_order(*s3, 2), 3u);
  EXPECT_FALSE(s3->is_abelian());
  auto q8 = quaternion_group();
  EXPECT_EQ(count_order(*q8, 4), 6u);
  EXPECT_EQ(count_order(*q8, 2), 1u);
  auto d4 = dihedral_group(4);
  EXPECT_EQ(count_order(*d4, 2), 5u);
  EXPECT_FALSE(d4->is_abelian());
  EXPECT_TRUE(direct_product(cyclic_group(2), cyclic_group(2))->is_abelian());
  EXPECT_EQ(count_order(*cyclic_group(6), 6), 2u);
  // Tables round-trip through validation.
  for (const auto& g : corpus()) EXPECT_EQ(*make_group(g->table()), *g);
}

TEST(Groups, Homs) {
  auto z4 = cyclic_group(4), z2 = cyclic_group(2);
  EXPECT_NO_THROW(trivial_hom(z4, z2));
  EXPECT_NO_THROW(identity_hom(z4));
  GroupHom red = make_hom(z4, z2, {0, 1, 0, 1});
  EXPECT_FALSE(red.is_injective());
  try {
    make_hom(z2, z4, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "NotAHom");
    EXPECT_EQ(e.witness(), (std::vector<std::uint64_t>{1, 1}));
  }
  GroupHom dbl = make_hom(z2, z4, {0, 2});
  EXPECT_EQ(red.after(dbl), trivial_hom(z2, z2));
}

TEST(Groups, Conjugation) {
  for (const auto& g : corpus()) {
    for (Element a = 0; a < g->order(); ++a) {
      if (g->is_abelian()) {
        EXPECT_EQ(conjugation_hom(g, a), identity_hom(g));
      }
      for (Element b = 0; b < g->order(); ++b) {
        EXPECT_EQ(conjugation_hom(g, a).after(conjugation_hom(g, b)), conjugation_hom(g, g->mul(a, b)));
      }
    }
    EXPECT_EQ(conjugation_hom(g, 0), identity_hom(g));
  }
  auto s3 = symmetric_group(3);
  // Index 1 is the transposition swapping the last two points.
  GroupHom c = conjugation_hom(s3, 1);
  EXPECT_NE(c, identity_hom(s3));
  EXPECT_EQ(c.after(c), identity_hom(s3));
}

TEST(Groups, Quotients) {
  auto d4 = dihedral_group(4);
  const std::vector<Element> center{0, 2};
  EXPECT_TRUE(is_normal_subgroup(*d4, center));
  auto q = quotient_group(d4, center);
  EXPECT_EQ(q.group->order(), 4u);
  EXPECT_TRUE(q.group->is_abelian());
  const std::vector<Element> reflection{0, 4};
  EXPECT_TRUE(is_subgroup(*d4, reflection));
  EXPECT_FALSE(is_normal_subgroup(*d4, reflection));
  EXPECT_THROW(quotient_group(d4, reflection), Error);
}

TEST(Groups, Modules) {
  auto z2 = cyclic_group(2);
  EXPECT_NO_THROW(GModule::scalar(z2, 3, {1, 2}));
  EXPECT_THROW(GModule::scalar(z2, 3, {1, 0}), Error);
  // Z/2 + Z/4 with the swap-like action x -> (x0, x1 + 2 x0): coefficient 2 maps Z/2 into Z/4.
  ModuleOverZn m(4, {2, 4});
  EXPECT_NO_THROW(GModule(z2, m, {{1, 0, 0, 1}, {1, 0, 2, 1}}));
  // Coefficient 1 from Z/4 into Z/2 is fine, from Z/2 into Z/4 is not.
  EXPECT_THROW(GModule(z2, m, {{1, 0, 0, 1}, {1, 0, 1, 1}}), Error);
}
