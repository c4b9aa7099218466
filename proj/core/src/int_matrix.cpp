#include "hilbasket/int_matrix.hpp"

#include <utility>

#include "hilbasket/error.hpp"

namespace hilbasket {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw Error(ErrorCode::LengthMismatch, "matrix data has wrong size");
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::LengthMismatch, "column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_) throw Error(ErrorCode::LengthMismatch, "vector length does not match matrix columns");
  IntVector out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * x[c];
  }
  return out;
}

namespace {

struct Bezout {
  Integer g, x, y;  // x*a + y*b = g >= 0
};

Bezout ext_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer t = old_r - q * r;
    old_r = std::move(r);
    r = std::move(t);
    t = old_x - q * x;
    old_x = std::move(x);
    x = std::move(t);
    t = old_y - q * y;
    old_y = std::move(y);
    y = std::move(t);
  }
  if (old_r < 0) return {-old_r, -old_x, -old_y};
  return {old_r, old_x, old_y};
}

// Replace columns (i, j) of m by (x*ci + y*cj, p*ci + q*cj).
void combine_columns(IntMatrix& m, std::size_t i, std::size_t j, const Integer& x, const Integer& y, const Integer& p,
                     const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer ci = m(r, i), cj = m(r, j);
    m(r, i) = x * ci + y * cj;
    m(r, j) = p * ci + q * cj;
  }
}

// Floor division for the HNF reduction step.
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& m) {
  const std::size_t n = m.cols();
  IntMatrix h = m;
  IntMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) u(i, i) = 1;
  std::vector<std::size_t> pivots;
  std::size_t col = 0;
  for (std::size_t row = 0; row < m.rows() && col < n; ++row) {
    for (std::size_t j = col + 1; j < n; ++j) {
      if (h(row, j) == 0) continue;
      const Integer a = h(row, col), b = h(row, j);
      Bezout bz = ext_gcd(a, b);
      const Integer p = -b / bz.g, q = a / bz.g;
      combine_columns(h, col, j, bz.x, bz.y, p, q);
      combine_columns(u, col, j, bz.x, bz.y, p, q);
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      for (std::size_t r = 0; r < h.rows(); ++r) h(r, col) = -h(r, col);
      for (std::size_t r = 0; r < n; ++r) u(r, col) = -u(r, col);
    }
    const Integer pivot = h(row, col);
    for (std::size_t k = 0; k < col; ++k) {
      Integer f = floor_div(h(row, k), pivot);
      if (f == 0) continue;
      for (std::size_t r = 0; r < h.rows(); ++r) h(r, k) -= f * h(r, col);
      for (std::size_t r = 0; r < n; ++r) u(r, k) -= f * u(r, col);
    }
    pivots.push_back(row);
    ++col;
  }
  return {std::move(h), std::move(u), std::move(pivots)};
}

std::size_t rank(const IntMatrix& m) { return column_echelon(m).rank(); }

std::vector<IntVector> int_kernel(const IntMatrix& m) {
  ColumnEchelon e = column_echelon(m);
  std::vector<IntVector> basis;
  for (std::size_t c = e.rank(); c < m.cols(); ++c) basis.push_back(e.u.column(c));
  return basis;
}

std::optional<IntVector> int_solve(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::LengthMismatch, "right-hand side has wrong length");
  ColumnEchelon e = column_echelon(m);
  IntVector residual = b;
  IntVector y(m.cols(), Integer(0));
  for (std::size_t j = 0; j < e.rank(); ++j) {
    const std::size_t p = e.pivot_rows[j];
    const Integer& piv = e.h(p, j);
    if (residual[p] % piv != 0) return std::nullopt;
    y[j] = residual[p] / piv;
    for (std::size_t r = 0; r < m.rows(); ++r) residual[r] -= y[j] * e.h(r, j);
  }
  for (const auto& v : residual) {
    if (v != 0) return std::nullopt;
  }
  return e.u.apply(y);
}

std::vector<IntVector> lattice_basis(const std::vector<IntVector>& generators, std::size_t dim) {
  ColumnEchelon e = column_echelon(IntMatrix::from_columns(dim, generators));
  std::vector<IntVector> basis;
  for (std::size_t c = 0; c < e.rank(); ++c) basis.push_back(e.h.column(c));
  return basis;
}

}  // namespace hilbasket
