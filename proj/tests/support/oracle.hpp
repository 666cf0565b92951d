#ifndef QALG_TESTS_ORACLE_HPP
#define QALG_TESTS_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qalg/representation.hpp"

// Reference computations that share no code with the library beyond the
// Matrix container. Slow and simple on purpose.
namespace qalg::oracle {

/// Coefficients from the constant term upwards.
using Poly = std::vector<Rational>;

Poly char_poly(const Matrix& m);
Poly derivative(const Poly& p);
Poly poly_gcd(Poly a, Poly b);
/// Number of distinct roots over the algebraic closure.
std::size_t distinct_roots(const Poly& p);

/// Solutions of A x = 0 by plain Gauss-Jordan elimination.
std::vector<Vector> kernel(std::vector<Vector> rows, std::size_t cols);
std::size_t rank_of(std::vector<Vector> rows, std::size_t cols);

/// End(M) as block-diagonal global matrices.
std::vector<Matrix> endomorphisms(const Representation& m);

struct SplitSearch {
  bool split = false;          // some endomorphism has two distinct eigenvalues
  std::size_t end_dim = 0;
  std::size_t candidates = 0;  // endomorphisms examined
  bool exhaustive = false;     // the whole coefficient box was covered
};

/// Looks for an endomorphism with two distinct eigenvalues, which yields a
/// non-trivial idempotent of End(M) over the algebraic closure. Covers the
/// box {-1,0,1}^dim End when it has at most 3^8 points, else samples.
SplitSearch search_split_endomorphism(const Representation& m, std::uint64_t seed);

/// Non-trivial idempotent of End(M) found by brute force over the
/// coefficient box, restricted to those defined over the rationals.
bool has_rational_idempotent(const Representation& m);

bool absolutely_indecomposable(const Representation& m, std::uint64_t seed = 1);

}  // namespace qalg::oracle

#endif  // QALG_TESTS_ORACLE_HPP
