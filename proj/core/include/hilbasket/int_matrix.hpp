#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hilbasket/numbers.hpp"

namespace hilbasket {

using IntVector = std::vector<Integer>;

/// Row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data);

  // Matrix whose columns are the given vectors, all of length rows.
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  IntVector apply(const IntVector& x) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Column echelon form M * U = H with U unimodular.
///
/// H is lower echelon: its first `rank` columns carry strictly increasing
/// pivot rows with positive pivots, the remaining columns are zero, and each
/// entry left of a pivot is reduced into [0, pivot).
struct ColumnEchelon {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::size_t> pivot_rows;  // one per nonzero column of h
  std::size_t rank() const noexcept { return pivot_rows.size(); }
};

ColumnEchelon column_echelon(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Basis of the lattice {x in Z^cols : M x = 0}; empty when the kernel is trivial.
std::vector<IntVector> int_kernel(const IntMatrix& m);

/// Some integer x with M x = b, or nullopt when no integer solution exists.
std::optional<IntVector> int_solve(const IntMatrix& m, const IntVector& b);

/// Basis (row vectors) of the lattice spanned by the given integer vectors,
/// in Hermite normal form so equal lattices give equal bases.
std::vector<IntVector> lattice_basis(const std::vector<IntVector>& generators, std::size_t dim);

}  // namespace hilbasket
