#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "arithcs/modring.hpp"

namespace arithcs {

/// Dense row-major matrix over Z/n.
class MatrixZn {
 public:
  MatrixZn(std::uint32_t modulus, std::size_t rows, std::size_t cols);
  MatrixZn(std::uint32_t modulus, std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries);
  static MatrixZn identity(std::uint32_t modulus, std::size_t n);

  std::uint32_t modulus() const { return ring_.modulus(); }
  const ModRing& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Residue& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Residue> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Residue> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Residue>& entries() const { return data_; }

  VectorZn apply(std::span<const Residue> x) const;
  MatrixZn operator*(const MatrixZn& rhs) const;
  MatrixZn transpose() const;

  bool operator==(const MatrixZn& other) const {
    return ring_.modulus() == other.modulus() && rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
  }

 private:
  ModRing ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Residue> data_;
};

/// Dense row-major integer matrix (used by the Smith normal form over Z).
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  /// Exact product; throws on 64-bit overflow.
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination; throws on overflow.
std::int64_t determinant(const IntMatrix& m);

}  // namespace arithcs
