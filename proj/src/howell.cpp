#include "arithcs/howell.hpp"

#include <algorithm>
#include <numeric>

#include "arithcs/error.hpp"

namespace arithcs {

namespace {

using Row = std::vector<Residue>;

// rows[a], rows[b] <- (s*ra + t*rb, u*ra + v*rb) on columns [from, end).
void combine(Row& ra, Row& rb, const ModRing::Gcdex& x, std::uint64_t n, std::size_t from) {
  for (std::size_t j = from; j < ra.size(); ++j) {
    const std::uint64_t a = ra[j], b = rb[j];
    if (a == 0 && b == 0) continue;
    ra[j] = static_cast<Residue>((x.s * a + x.t * b) % n);
    rb[j] = static_cast<Residue>((x.u * a + x.v * b) % n);
  }
}

void scale(Row& r, std::uint64_t k, std::uint64_t n, std::size_t from) {
  for (std::size_t j = from; j < r.size(); ++j) {
    if (r[j] != 0) r[j] = static_cast<Residue>((r[j] * k) % n);
  }
}

// r -= q * p on columns [from, end).
void subtract_multiple(Row& r, const Row& p, std::uint64_t q, std::uint64_t n, std::size_t from) {
  const std::uint64_t negq = (n - q % n) % n;
  for (std::size_t j = from; j < r.size(); ++j) {
    if (p[j] != 0) r[j] = static_cast<Residue>((r[j] + negq * p[j]) % n);
  }
}

bool is_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](Residue x) { return x == 0; });
}

// In-place Howell reduction. `transform`, when non-null, holds one row per
// entry of `rows` and receives the same row operations. Returns the pivot
// column of each surviving row.
std::vector<std::size_t> howell_inplace(std::vector<Row>& rows, std::size_t ncols, const ModRing& ring,
                                        std::vector<Row>* transform) {
  const std::uint64_t n = ring.modulus();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      if (rows[r][col] == 0) {
        std::swap(rows[r], rows[i]);
        if (transform) std::swap((*transform)[r], (*transform)[i]);
        continue;
      }
      const auto x = ring.gcdex(rows[r][col], rows[i][col]);
      combine(rows[r], rows[i], x, n, col);
      if (transform) combine((*transform)[r], (*transform)[i], x, n, 0);
    }
    if (rows[r][col] == 0) continue;

    const Residue unit = ring.unit_normalizer(rows[r][col]);
    if (unit != 1) {
      scale(rows[r], unit, n, col);
      if (transform) scale((*transform)[r], unit, n, 0);
    }
    const Residue pivot = rows[r][col];
    for (std::size_t k = 0; k < r; ++k) {
      const Residue q = rows[k][col] / pivot;
      if (q == 0) continue;
      subtract_multiple(rows[k], rows[r], q, n, col);
      if (transform) subtract_multiple((*transform)[k], (*transform)[r], q, n, 0);
    }
    // The annihilator multiple keeps the Howell property: it vanishes in this
    // column and must be eliminated against later columns.
    const std::uint64_t ann = n / pivot;
    if (ann != n) {
      Row extra = rows[r];
      scale(extra, ann, n, col);
      if (!is_zero(extra)) {
        rows.push_back(std::move(extra));
        if (transform) {
          Row t = (*transform)[r];
          scale(t, ann, n, 0);
          transform->push_back(std::move(t));
        }
      }
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  if (transform) transform->resize(r);
  return pivots;
}

MatrixZn to_matrix(const std::vector<Row>& rows, std::uint32_t modulus, std::size_t ncols) {
  MatrixZn m(modulus, rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  return m;
}

std::vector<Row> to_rows(const MatrixZn& m) {
  std::vector<Row> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows[i].assign(m.row(i).begin(), m.row(i).end());
  return rows;
}

std::size_t leading_column(std::span<const Residue> row) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] != 0) return j;
  }
  return row.size();
}

}  // namespace

HowellForm howell_form(const MatrixZn& m) {
  std::vector<Row> rows = to_rows(m);
  std::vector<Row> transform = to_rows(MatrixZn::identity(m.modulus(), m.rows()));
  howell_inplace(rows, m.cols(), m.ring(), &transform);
  return {to_matrix(rows, m.modulus(), m.cols()), to_matrix(transform, m.modulus(), m.rows())};
}

MatrixZn howell_basis(const MatrixZn& m) {
  std::vector<Row> rows = to_rows(m);
  howell_inplace(rows, m.cols(), m.ring(), nullptr);
  return to_matrix(rows, m.modulus(), m.cols());
}

bool in_row_space(const MatrixZn& howell, std::span<const Residue> v) {
  if (v.size() != howell.cols()) throw validation_error("ShapeMismatch", "vector length does not match columns");
  const ModRing& ring = howell.ring();
  Row w(v.begin(), v.end());
  std::size_t r = 0;
  for (std::size_t col = 0; col < w.size(); ++col) {
    if (w[col] == 0) continue;
    while (r < howell.rows() && leading_column(howell.row(r)) < col) ++r;
    if (r == howell.rows() || leading_column(howell.row(r)) != col) return false;
    const Residue pivot = howell(r, col);
    if (w[col] % pivot != 0) return false;
    const Residue q = w[col] / pivot;
    for (std::size_t j = col; j < w.size(); ++j) w[j] = ring.sub(w[j], ring.mul(q, howell(r, j)));
  }
  return true;
}

LinearSystem::LinearSystem(const MatrixZn& a, std::span<const std::size_t> variable_order)
    : equations_(a.rows()), unknowns_(a.cols()), howell_(a.modulus(), 0, 0) {
  if (variable_order.empty()) {
    order_.resize(unknowns_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
  } else {
    order_.assign(variable_order.begin(), variable_order.end());
    std::vector<std::size_t> sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != i || sorted.size() != unknowns_) {
        throw validation_error("InvalidArgument", "variable order is not a permutation of the unknowns");
      }
    }
  }
  // Row i of [a^T | I] records (a e_i, e_i) for the i-th unknown in order_.
  const std::size_t width = equations_ + unknowns_;
  std::vector<Row> rows(unknowns_, Row(width, 0));
  for (std::size_t i = 0; i < unknowns_; ++i) {
    const std::size_t var = order_[i];
    for (std::size_t e = 0; e < equations_; ++e) rows[i][e] = a(e, var);
    rows[i][equations_ + i] = 1;
  }
  pivot_cols_ = howell_inplace(rows, width, a.ring(), nullptr);
  howell_ = to_matrix(rows, a.modulus(), width);

  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (pivot_cols_[r] < equations_) continue;
    VectorZn x(unknowns_, 0);
    for (std::size_t i = 0; i < unknowns_; ++i) x[order_[i]] = rows[r][equations_ + i];
    kernel_.push_back(std::move(x));
  }
}

std::optional<VectorZn> LinearSystem::solve(std::span<const Residue> b) const {
  if (b.size() != equations_) throw validation_error("ShapeMismatch", "right-hand side has the wrong length");
  const ModRing& ring = howell_.ring();
  // Reduce (-b, 0); a remainder (0, y) means a * y = b.
  Row w(equations_ + unknowns_, 0);
  for (std::size_t e = 0; e < equations_; ++e) w[e] = ring.neg(b[e]);
  std::size_t r = 0;
  for (std::size_t col = 0; col < w.size(); ++col) {
    while (r < pivot_cols_.size() && pivot_cols_[r] < col) ++r;
    const bool has_pivot = r < pivot_cols_.size() && pivot_cols_[r] == col;
    if (w[col] == 0) continue;
    if (!has_pivot) {
      if (col < equations_) return std::nullopt;
      continue;
    }
    const Residue pivot = howell_(r, col);
    if (col < equations_ && w[col] % pivot != 0) return std::nullopt;
    const Residue q = w[col] / pivot;
    if (q == 0) continue;
    const auto prow = howell_.row(r);
    for (std::size_t j = col; j < w.size(); ++j) {
      if (prow[j] != 0) w[j] = ring.sub(w[j], ring.mul(q, prow[j]));
    }
  }
  VectorZn x(unknowns_, 0);
  for (std::size_t i = 0; i < unknowns_; ++i) x[order_[i]] = w[equations_ + i];
  return x;
}

std::optional<LinearSolution> solve_linear(const MatrixZn& a, std::span<const Residue> b) {
  LinearSystem system(a);
  auto x = system.solve(b);
  if (!x) return std::nullopt;
  return LinearSolution{std::move(*x), system.kernel_basis()};
}

}  // namespace arithcs
