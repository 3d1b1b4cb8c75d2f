#include "arithcs/matrix.hpp"

#include <limits>
#include <string>

#include "arithcs/error.hpp"

namespace arithcs {

namespace {

std::int64_t checked(__int128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw computation_error("Overflow", "integer matrix arithmetic exceeded 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

}  // namespace

MatrixZn::MatrixZn(std::uint32_t modulus, std::size_t rows, std::size_t cols)
    : ring_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

MatrixZn::MatrixZn(std::uint32_t modulus, std::size_t rows, std::size_t cols,
                   std::vector<std::int64_t> entries)
    : MatrixZn(modulus, rows, cols) {
  if (entries.size() != rows * cols) {
    throw validation_error("ShapeMismatch", "matrix needs " + std::to_string(rows * cols) +
                                                " entries, got " + std::to_string(entries.size()));
  }
  for (std::size_t i = 0; i < entries.size(); ++i) data_[i] = ring_.reduce(entries[i]);
}

MatrixZn MatrixZn::identity(std::uint32_t modulus, std::size_t n) {
  MatrixZn m(modulus, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

VectorZn MatrixZn::apply(std::span<const Residue> x) const {
  if (x.size() != cols_) throw validation_error("ShapeMismatch", "vector length does not match columns");
  VectorZn out(rows_, 0);
  const std::uint64_t n = modulus();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    const Residue* a = data_.data() + r * cols_;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (a[c] != 0 && x[c] != 0) acc = (acc + static_cast<std::uint64_t>(a[c]) * x[c]) % n;
    }
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

MatrixZn MatrixZn::operator*(const MatrixZn& rhs) const {
  if (cols_ != rhs.rows_ || modulus() != rhs.modulus()) {
    throw validation_error("ShapeMismatch", "incompatible matrix product");
  }
  MatrixZn out(modulus(), rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Residue a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out(i, j) = ring_.add(out(i, j), ring_.mul(a, rhs(k, j)));
      }
    }
  }
  return out;
}

MatrixZn MatrixZn::transpose() const {
  MatrixZn out(modulus(), cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw validation_error("ShapeMismatch", "wrong entry count");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw validation_error("ShapeMismatch", "incompatible matrix product");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      __int128 acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc += static_cast<__int128>((*this)(i, k)) * rhs(k, j);
      out(i, j) = checked(acc);
    }
  }
  return out;
}

std::int64_t determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw validation_error("ShapeMismatch", "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(a(i, j)) * a(k, k) - static_cast<__int128>(a(i, k)) * a(k, j);
        a(i, j) = checked(num / prev);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace arithcs
