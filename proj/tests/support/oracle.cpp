#include "oracle.hpp"

#include <random>

namespace qalg::oracle {

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

// Faddeev-LeVerrier; exact in characteristic zero.
Poly char_poly(const Matrix& m) {
  const std::size_t n = m.rows();
  Poly c(n + 1, Rational(0));
  c[n] = 1;
  Matrix mk = Matrix(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix shifted = mk;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
    mk = m * shifted;
    c[n - k] = -mk.trace() / Rational(static_cast<long>(k));
  }
  return c;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(d);
  return d;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = a;
    while (r.size() >= b.size() && !r.empty()) {
      const Rational q = r.back() / b.back();
      const std::size_t shift = r.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= q * b[i];
      trim(r);
    }
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::size_t distinct_roots(const Poly& p) {
  Poly q = p;
  trim(q);
  if (q.size() <= 1) return 0;
  const Poly g = poly_gcd(q, derivative(q));
  return (q.size() - 1) - (g.size() - 1);
}

std::vector<Vector> kernel(std::vector<Vector> rows, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<Vector> out;
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    Vector x(cols, Rational(0));
    x[c] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = -rows[i][c];
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t rank_of(std::vector<Vector> rows, std::size_t cols) {
  return cols - kernel(std::move(rows), cols).size();
}

std::vector<Matrix> endomorphisms(const Representation& m) {
  const auto& arrows = m.algebra().presentation().arrows;
  const std::size_t nv = m.dims().size();
  std::vector<std::size_t> start(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) start[v + 1] = start[v] + m.dim(v) * m.dim(v);
  const std::size_t unknowns = start[nv];
  auto var = [&](std::size_t v, std::size_t i, std::size_t j) { return start[v] + i * m.dim(v) + j; };

  // phi_t A - A phi_s = 0 for every arrow A: s -> t.
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const std::size_t s = arrows[k].source;
    const std::size_t t = arrows[k].target;
    const Matrix& a = m.map(k);
    for (std::size_t i = 0; i < m.dim(t); ++i) {
      for (std::size_t j = 0; j < m.dim(s); ++j) {
        Vector row(unknowns, Rational(0));
        for (std::size_t l = 0; l < m.dim(t); ++l) row[var(t, i, l)] += a(l, j);
        for (std::size_t l = 0; l < m.dim(s); ++l) row[var(s, l, j)] -= a(i, l);
        rows.push_back(std::move(row));
      }
    }
  }
  std::vector<Matrix> out;
  for (const auto& x : kernel(std::move(rows), unknowns)) {
    Matrix g(m.total_dim(), m.total_dim());
    std::size_t off = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      for (std::size_t i = 0; i < m.dim(v); ++i) {
        for (std::size_t j = 0; j < m.dim(v); ++j) g(off + i, off + j) = x[var(v, i, j)];
      }
      off += m.dim(v);
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

constexpr std::size_t kExhaustiveLimit = 8;
constexpr int kSamples = 400;

Matrix combination(const std::vector<Matrix>& basis, const std::vector<int>& coeffs, std::size_t n) {
  Matrix g(n, n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] != 0) g = g + basis[k].scaled(coeffs[k]);
  }
  return g;
}

template <typename Visit>
void for_each_candidate(const std::vector<Matrix>& basis, std::size_t n, std::uint64_t seed,
                        bool& exhaustive, Visit visit) {
  const std::size_t d = basis.size();
  exhaustive = d <= kExhaustiveLimit;
  std::vector<int> coeffs(d, 0);
  if (exhaustive) {
    std::fill(coeffs.begin(), coeffs.end(), -1);
    for (;;) {
      if (!visit(combination(basis, coeffs, n))) return;
      std::size_t i = 0;
      while (i < d && coeffs[i] == 1) coeffs[i++] = -1;
      if (i == d) return;
      ++coeffs[i];
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (std::size_t k = 0; k < d; ++k) {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    coeffs[k] = 1;
    if (!visit(combination(basis, coeffs, n))) return;
  }
  for (int s = 0; s < kSamples; ++s) {
    for (auto& c : coeffs) c = entry(rng);
    if (!visit(combination(basis, coeffs, n))) return;
  }
}

}  // namespace

SplitSearch search_split_endomorphism(const Representation& m, std::uint64_t seed) {
  SplitSearch out;
  const auto basis = endomorphisms(m);
  out.end_dim = basis.size();
  for_each_candidate(basis, m.total_dim(), seed, out.exhaustive, [&](const Matrix& g) {
    ++out.candidates;
    if (distinct_roots(char_poly(g)) >= 2) {
      out.split = true;
      return false;
    }
    return true;
  });
  return out;
}

bool has_rational_idempotent(const Representation& m) {
  const auto basis = endomorphisms(m);
  const std::size_t n = m.total_dim();
  bool found = false;
  bool exhaustive = false;
  for_each_candidate(basis, n, 7, exhaustive, [&](const Matrix& g) {
    if (g * g == g && !g.is_zero() && !(g == Matrix::identity(n))) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool absolutely_indecomposable(const Representation& m, std::uint64_t seed) {
  if (m.total_dim() == 0) return false;
  return !search_split_endomorphism(m, seed).split;
}

}  // namespace qalg::oracle
