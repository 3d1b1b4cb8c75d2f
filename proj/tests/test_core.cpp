#include <gtest/gtest.h>

#include <random>
#include <set>

#include "arithcs/error.hpp"
#include "arithcs/howell.hpp"
#include "arithcs/smith.hpp"

using namespace arithcs;

namespace {

// All vectors of length `dim` over Z/n.
std::vector<VectorZn> all_vectors(std::uint32_t n, std::size_t dim) {
  std::vector<VectorZn> out;
  VectorZn v(dim, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < dim && ++v[i] == n) v[i++] = 0;
    if (i == dim) break;
  }
  return out;
}

std::set<VectorZn> row_space(const MatrixZn& m) {
  const ModRing& ring = m.ring();
  std::set<VectorZn> span;
  for (const VectorZn& c : all_vectors(m.modulus(), m.rows())) {
    VectorZn v(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t j = 0; j < m.cols(); ++j) v[j] = ring.add(v[j], ring.mul(c[r], m(r, j)));
    span.insert(v);
  }
  return span;
}

MatrixZn random_matrix(std::uint32_t n, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  MatrixZn m(n, rows, cols);
  std::uniform_int_distribution<Residue> dist(0, n - 1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST(ModRing, RejectsBadModulus) {
  EXPECT_THROW(ModRing(1), Error);
  EXPECT_THROW(ModRing(kMaxModulus + 1), Error);
  EXPECT_NO_THROW(ModRing{kMaxModulus});
}

TEST(ModRing, GcdexIsUnimodular) {
  for (std::uint32_t n = 2; n <= 12; ++n) {
    ModRing ring(n);
    for (Residue a = 0; a < n; ++a) {
      for (Residue b = 0; b < n; ++b) {
        auto g = ring.gcdex(a, b);
        EXPECT_EQ(ring.add(ring.mul(g.s, a), ring.mul(g.t, b)), g.g);
        EXPECT_EQ(ring.add(ring.mul(g.u, a), ring.mul(g.v, b)), 0u);
        EXPECT_EQ(ring.sub(ring.mul(g.s, g.v), ring.mul(g.t, g.u)), 1u % n);
        EXPECT_TRUE(ring.divides(g.g, a));
        EXPECT_TRUE(ring.divides(g.g, b));
      }
    }
  }
}

TEST(Howell, SmallExamples) {
  EXPECT_EQ(howell_basis(MatrixZn(6, 1, 1, {0})).rows(), 0u);
  EXPECT_EQ(howell_basis(MatrixZn::identity(4, 2)), MatrixZn::identity(4, 2));
  const MatrixZn h = howell_basis(MatrixZn(4, 1, 1, {2}));
  EXPECT_EQ(h, MatrixZn(4, 1, 1, {2}));
  EXPECT_EQ(row_space(h), (std::set<VectorZn>{{0}, {2}}));
}

TEST(Howell, RowSpaceAndUniquenessExhaustive) {
  std::mt19937_64 rng(7);
  for (std::uint32_t n = 2; n <= 6; ++n) {
    for (std::size_t rows = 1; rows <= 3; ++rows) {
      for (std::size_t cols = 1; cols <= 3; ++cols) {
        for (int trial = 0; trial < 25; ++trial) {
          const MatrixZn m = random_matrix(n, rows, cols, rng);
          const HowellForm hf = howell_form(m);
          EXPECT_EQ(hf.transform * m, hf.canonical);
          const auto span = row_space(m);
          EXPECT_EQ(row_space(hf.canonical), span);
          // Same row space from a scrambled generating set gives the same form.
          MatrixZn other = random_matrix(n, rows, rows, rng) * m;
          MatrixZn stacked(n, 2 * rows, cols);
          for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
              stacked(i, j) = other(i, j);
              stacked(rows + i, j) = m(rows - 1 - i, j);
            }
          EXPECT_EQ(howell_basis(stacked), hf.canonical);
          for (const VectorZn& v : all_vectors(n, cols)) {
            EXPECT_EQ(in_row_space(hf.canonical, v), span.count(v) == 1);
          }
        }
      }
    }
  }
}

TEST(Solve, Examples) {
  auto id = solve_linear(MatrixZn::identity(5, 3), VectorZn{1, 2, 3});
  ASSERT_TRUE(id);
  EXPECT_EQ(id->particular, (VectorZn{1, 2, 3}));
  EXPECT_TRUE(id->kernel_basis.empty());

  EXPECT_FALSE(solve_linear(MatrixZn(4, 1, 1, {2}), VectorZn{1}));
  auto s = solve_linear(MatrixZn(4, 1, 1, {2}), VectorZn{2});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, VectorZn{1});
  ASSERT_EQ(s->kernel_basis.size(), 1u);
  EXPECT_EQ(s->kernel_basis[0], VectorZn{2});
}

TEST(Solve, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(11);
  for (std::uint32_t n = 2; n <= 4; ++n) {
    for (std::size_t unknowns = 1; unknowns <= 6; unknowns += (n == 4 ? 2 : 1)) {
      for (int trial = 0; trial < 6; ++trial) {
        const std::size_t eqs = 1 + trial % 3;
        const MatrixZn a = random_matrix(n, eqs, unknowns, rng);
        const auto xs = all_vectors(n, unknowns);
        std::set<VectorZn> kernel;
        for (const auto& x : xs)
          if (a.apply(x) == VectorZn(eqs, 0)) kernel.insert(x);
        for (const VectorZn& b : all_vectors(n, eqs)) {
          std::set<VectorZn> sols;
          for (const auto& x : xs)
            if (a.apply(x) == b) sols.insert(x);
          auto got = solve_linear(a, b);
          ASSERT_EQ(got.has_value(), !sols.empty());
          if (!got) continue;
          EXPECT_EQ(a.apply(got->particular), b);
          // particular + span(kernel basis) is exactly the solution set.
          MatrixZn kb(n, got->kernel_basis.size(), unknowns);
          for (std::size_t i = 0; i < got->kernel_basis.size(); ++i)
            for (std::size_t j = 0; j < unknowns; ++j) kb(i, j) = got->kernel_basis[i][j];
          EXPECT_EQ(row_space(kb), kernel);
        }
      }
    }
  }
}

TEST(Solve, PermutedOrderStillSolves) {
  std::mt19937_64 rng(3);
  const MatrixZn a = random_matrix(6, 4, 5, rng);
  const VectorZn b = a.apply(VectorZn{1, 2, 3, 4, 5});
  std::vector<std::size_t> order{4, 2, 0, 3, 1};
  LinearSystem sys(a, order);
  auto x = sys.solve(b);
  ASSERT_TRUE(x);
  EXPECT_EQ(a.apply(*x), b);
  for (const auto& k : sys.kernel_basis()) EXPECT_EQ(a.apply(k), VectorZn(4, 0));
}

TEST(Smith, IntegerExamples) {
  auto z = smith_normal_form(IntMatrix(2, 3));
  EXPECT_EQ(z.d, IntMatrix(2, 3));
  auto id = smith_normal_form(IntMatrix::identity(3));
  EXPECT_EQ(id.d, IntMatrix::identity(3));
  const IntMatrix m(2, 2, {2, 0, 0, 3});
  auto s = smith_normal_form(m);
  EXPECT_EQ(s.d, IntMatrix(2, 2, {1, 0, 0, 6}));
  EXPECT_EQ(s.u * m * s.v, s.d);
  EXPECT_EQ(std::abs(determinant(s.u)), 1);
  EXPECT_EQ(std::abs(determinant(s.v)), 1);
}

TEST(Smith, IntegerRandom) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    std::vector<std::int64_t> e(rows * cols);
    for (auto& x : e) x = dist(rng);
    const IntMatrix m(rows, cols, e);
    auto s = smith_normal_form(m);
    EXPECT_EQ(s.u * m * s.v, s.d);
    EXPECT_EQ(std::abs(determinant(s.u)), 1);
    EXPECT_EQ(std::abs(determinant(s.v)), 1);
    const std::size_t k = std::min(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) {
          EXPECT_EQ(s.d(i, j), 0);
        }
    for (std::size_t i = 0; i + 1 < k; ++i) {
      EXPECT_GE(s.d(i, i), 0);
      if (s.d(i, i) == 0) {
        EXPECT_EQ(s.d(i + 1, i + 1), 0);
      } else {
        EXPECT_EQ(s.d(i + 1, i + 1) % s.d(i, i), 0);
      }
    }
  }
}

TEST(Smith, ResidueRandom) {
  std::mt19937_64 rng(9);
  for (std::uint32_t n : {2u, 4u, 6u, 12u, 9u}) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
      const MatrixZn m = random_matrix(n, rows, cols, rng);
      auto s = smith_normal_form(m);
      EXPECT_EQ(s.u * m * s.v, s.d);
      EXPECT_EQ(s.v * s.v_inverse, MatrixZn::identity(n, cols));
      EXPECT_EQ(s.v_inverse * s.v, MatrixZn::identity(n, cols));
      const std::size_t k = std::min(rows, cols);
      for (std::size_t i = 0; i < k; ++i) {
        const Residue d = s.d(i, i);
        EXPECT_TRUE(d == 0 || n % d == 0);
        if (i + 1 < k) {
          EXPECT_TRUE(m.ring().divides(d, s.d(i + 1, i + 1)));
        }
      }
      // Same row space as u * m: the invariant factors describe the module.
      EXPECT_EQ(howell_basis(s.d * s.v_inverse), howell_basis(m));
    }
  }
}
