#ifndef QALG_LINALG_HPP
#define QALG_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qalg {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Sparse row: (column, value) pairs with strictly increasing columns and no
/// zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Canonical text of a rational: "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);
  static Matrix from_columns(std::size_t rows, std::span<const Vector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Rational& s) const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  Rational trace() const;

  bool is_zero() const;
  bool operator==(const Matrix& other) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Subspace of Q^n held as a reduced row echelon basis.
///
/// Pivot columns are the leftmost nonzero entry of each basis row, so callers
/// that order coordinates by some priority get pivots on the smallest
/// coordinates. The basis is unique for a given subspace, which makes
/// equality a plain comparison.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  static Subspace spanned_by(std::size_t ambient, std::span<const Vector> vectors);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v to the span; returns true when the dimension grew.
  bool insert(const Vector& v);

  /// Remainder of v modulo the subspace; zero on every pivot column.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Columns that are not pivots, ascending. Coordinates on these columns
  /// identify Q^n / (this subspace).
  std::vector<std::size_t> free_columns() const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {x : A x = 0}, one vector per free column, in ascending order of
/// the free column.
std::vector<Vector> nullspace(const Matrix& a);

/// Same as nullspace() for a sparse system with `cols` unknowns. Basis
/// vector k is 1 on free column k and 0 on the other free columns, so the
/// coordinates of any solution are its values on `free_columns`.
std::vector<Vector> nullspace(std::size_t cols, std::vector<SparseRow> rows,
                              std::vector<std::size_t>* free_columns = nullptr);

std::size_t rank(const Matrix& a);

/// Sparse row arithmetic used by the eliminators.
SparseRow to_sparse(const Vector& v);
/// a + s * b
SparseRow axpy(const SparseRow& a, const Rational& s, const SparseRow& b);

}  // namespace qalg

#endif  // QALG_LINALG_HPP
