#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arithcs/matrix.hpp"

namespace arithcs {

/// Howell normal form of the row space of `m` together with a transform
/// satisfying transform * m == canonical.
///
/// Pivots are divisors of n, entries above a pivot are reduced into
/// [0, pivot), and every element of the row space whose first k entries
/// vanish lies in the span of the rows with pivot column >= k. The form is
/// unique for a given row space. Zero rows are dropped, so `canonical` may
/// have fewer (or, because of annihilator rows, more) rows than `m`.
struct HowellForm {
  MatrixZn canonical;
  MatrixZn transform;
};

HowellForm howell_form(const MatrixZn& m);

/// Howell form without the transform bookkeeping.
MatrixZn howell_basis(const MatrixZn& m);

/// Membership test against a matrix already in Howell form.
bool in_row_space(const MatrixZn& howell, std::span<const Residue> v);

struct LinearSolution {
  VectorZn particular;
  std::vector<VectorZn> kernel_basis;
};

/// Reusable solver for a * x = b over Z/n.
///
/// Internally keeps the Howell form of [a^T | I]; each solve is a greedy
/// reduction against it, so the returned particular solution is the
/// canonical representative of its coset modulo the kernel. An optional
/// `variable_order` permutes the unknowns before elimination, which selects a
/// different (still deterministic) representative.
class LinearSystem {
 public:
  explicit LinearSystem(const MatrixZn& a, std::span<const std::size_t> variable_order = {});

  std::size_t equations() const { return equations_; }
  std::size_t unknowns() const { return unknowns_; }

  std::optional<VectorZn> solve(std::span<const Residue> b) const;
  const std::vector<VectorZn>& kernel_basis() const { return kernel_; }

 private:
  std::size_t equations_;
  std::size_t unknowns_;
  std::vector<std::size_t> order_;
  MatrixZn howell_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<VectorZn> kernel_;
};

/// One-shot wrapper; nullopt means b is not in the column space of a.
std::optional<LinearSolution> solve_linear(const MatrixZn& a, std::span<const Residue> b);

}  // namespace arithcs
