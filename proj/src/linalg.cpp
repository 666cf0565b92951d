#include "qalg/linalg.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace qalg {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') i = 1;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t k = i; k < text.size(); ++k) {
    const char c = text[k];
    if (c == '/') {
      if (seen_slash) throw std::invalid_argument("malformed rational: " + text);
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("malformed rational: " + text);
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) {
    throw std::invalid_argument("malformed rational: " + text);
  }
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  if (q.set_str(body, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (seen_slash && q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Rational& b = other(k, j);
        if (sgn(b) != 0) out(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix sum shape mismatch");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("matrix difference shape mismatch");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= s;
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vector out(rows_, Rational(0));
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0) out[r] += a * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Rational Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of a non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::spanned_by(std::size_t ambient, std::span<const Vector> vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vector(ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length does not match subspace");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    const Rational factor = v[p];
    const Vector& row = basis_[k];
    for (std::size_t c = p; c < ambient_; ++c) {
      if (sgn(row[c]) != 0) v[c] -= factor * row[c];
    }
  }
  return v;
}

bool Subspace::insert(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < ambient_ && sgn(r[p]) == 0) ++p;
  if (p == ambient_) return false;
  const Rational inv = 1 / r[p];
  for (std::size_t c = p; c < ambient_; ++c) {
    if (sgn(r[c]) != 0) r[c] *= inv;
  }
  for (auto& row : basis_) {
    if (sgn(row[p]) == 0) continue;
    const Rational factor = row[p];
    for (std::size_t c = p; c < ambient_; ++c) {
      if (sgn(r[c]) != 0) row[c] -= factor * r[c];
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  basis_.insert(basis_.begin() + pos, std::move(r));
  return true;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vector& v) { return contains(v); });
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("subspace ambient mismatch");
  Subspace s = *this;
  for (const auto& v : other.basis_) s.insert(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("subspace ambient mismatch");
  // Zassenhaus: rows (u | u) and (w | 0); rows whose left half vanishes span
  // the intersection in their right half.
  const std::size_t n = ambient_;
  Subspace big(2 * n);
  for (const auto& u : basis_) {
    Vector row(2 * n);
    for (std::size_t i = 0; i < n; ++i) row[i] = row[n + i] = u[i];
    big.insert(row);
  }
  for (const auto& w : other.basis_) {
    Vector row(2 * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) row[i] = w[i];
    big.insert(row);
  }
  Subspace out(n);
  for (std::size_t k = 0; k < big.dim(); ++k) {
    if (big.pivots_[k] < n) continue;
    out.insert(Vector(big.basis_[k].begin() + static_cast<std::ptrdiff_t>(n),
                      big.basis_[k].end()));
  }
  return out;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sparse elimination

SparseRow to_sparse(const Vector& v) {
  SparseRow out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  }
  return out;
}

SparseRow axpy(const SparseRow& a, const Rational& s, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Rational x = a[i].second + s * b[j].second;
      if (sgn(x) != 0) out.emplace_back(a[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

namespace {

// Echelon form keyed by leading column; every stored row has leading entry 1.
std::vector<std::optional<SparseRow>> echelonize(std::size_t cols, std::vector<SparseRow> rows) {
  std::vector<std::optional<SparseRow>> pivot_rows(cols);
  for (auto& r : rows) {
    std::erase_if(r, [](const auto& e) { return sgn(e.second) == 0; });
    std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!r.empty()) {
      const std::size_t c = r.front().first;
      if (c >= cols) throw std::invalid_argument("sparse row column out of range");
      if (!pivot_rows[c]) {
        const Rational inv = 1 / r.front().second;
        for (auto& e : r) e.second *= inv;
        pivot_rows[c] = std::move(r);
        break;
      }
      const Rational factor = -r.front().second;
      r = axpy(r, factor, *pivot_rows[c]);
    }
  }
  return pivot_rows;
}

}  // namespace

std::vector<Vector> nullspace(std::size_t cols, std::vector<SparseRow> rows,
                              std::vector<std::size_t>* free_columns) {
  auto pivot_rows = echelonize(cols, std::move(rows));
  // Back substitution to reduced form, highest pivot first.
  for (std::size_t c = cols; c-- > 0;) {
    if (!pivot_rows[c]) continue;
    SparseRow& r = *pivot_rows[c];
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 1; k < r.size(); ++k) {
        const std::size_t col = r[k].first;
        if (pivot_rows[col]) {
          const Rational factor = -r[k].second;
          r = axpy(r, factor, *pivot_rows[col]);
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_rows[f]) continue;
    if (free_columns) free_columns->push_back(f);
    Vector x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t c = 0; c < f; ++c) {
      if (!pivot_rows[c]) continue;
      for (const auto& [col, val] : *pivot_rows[c]) {
        if (col == f) {
          x[c] = -val;
          break;
        }
      }
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Vector> nullspace(const Matrix& a) {
  std::vector<SparseRow> rows;
  rows.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(to_sparse(a.row(r)));
  return nullspace(a.cols(), std::move(rows));
}

std::size_t rank(const Matrix& a) { return a.cols() - nullspace(a).size(); }

}  // namespace qalg
