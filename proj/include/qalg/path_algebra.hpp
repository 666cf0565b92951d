#ifndef QALG_PATH_ALGEBRA_HPP
#define QALG_PATH_ALGEBRA_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qalg/linalg.hpp"
#include "qalg/quiver.hpp"

namespace qalg {

struct BasisElement {
  Path path;
  std::size_t source = 0;
  std::size_t target = 0;
  std::size_t degree = 0;  // radical degree = path length
};

/// Finite-dimensional quotient kQ/I over the rationals.
///
/// The basis consists of the paths that are not leading terms of the ideal,
/// where the leading term of an ideal element is its smallest path in the
/// order (length, arrow indices in application order). Reducing a path
/// therefore never lowers its length, so the basis elements of degree >= i
/// span J^i.
class PathAlgebra {
 public:
  static constexpr std::size_t kDefaultMaxDim = 10000;

  const QuiverPresentation& presentation() const { return presentation_; }
  std::size_t vertex_count() const { return presentation_.vertices.size(); }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& element(std::size_t i) const { return basis_.at(i); }
  std::size_t nilpotency_index() const { return nilpotency_index_; }

  std::size_t vertex_element(std::size_t vertex) const { return vertex_elements_.at(vertex); }
  std::size_t arrow_element(std::size_t arrow) const { return arrow_elements_.at(arrow); }

  /// b_i * b_j, i.e. b_j followed by b_i, in basis coordinates.
  const SparseRow& product(std::size_t i, std::size_t j) const { return products_[i][j]; }
  Vector multiply(const Vector& x, const Vector& y) const;
  /// Normal form of an arbitrary path of the quiver.
  Vector path_value(const Path& p) const;

  std::string label(std::size_t i) const { return presentation_.path_text(basis_.at(i).path); }
  /// Text of an element, e.g. "g*a - 2/3 g*b*a"; "0" for zero.
  std::string format(const Vector& x) const;

 private:
  friend PathAlgebra build_path_algebra(QuiverPresentation p, std::size_t max_dim);

  QuiverPresentation presentation_;
  std::vector<BasisElement> basis_;
  std::vector<std::vector<SparseRow>> products_;
  std::vector<std::size_t> vertex_elements_;
  std::vector<std::size_t> arrow_elements_;
  std::size_t nilpotency_index_ = 0;
};

/// Throws qalg::Error("infinite-dimensional or exceeds max_dim ...") when the
/// running basis passes max_dim before the truncation stabilizes.
PathAlgebra build_path_algebra(QuiverPresentation p,
                               std::size_t max_dim = PathAlgebra::kDefaultMaxDim);

/// Basis indices of fAe (paths from e to f), in basis order.
std::vector<std::size_t> hom_space(const PathAlgebra& a, std::size_t e, std::size_t f);

/// Basis indices of J^i.
std::vector<std::size_t> radical_power_basis(const PathAlgebra& a, std::size_t i);

/// Radical filtration of fAe as an fAf-eAe-bimodule:
/// R^0 = fAe, R^{i+1} = rad(fAf) R^i + R^i rad(eAe).
struct BimoduleFiltration {
  std::size_t e = 0;
  std::size_t f = 0;
  std::vector<Subspace> layers;  // non-zero terms R^0, R^1, ...; ambient dim A
  std::vector<std::size_t> layer_dims;  // dim R^i / R^{i+1}
};

BimoduleFiltration bimodule_radical_filtration(const PathAlgebra& a, std::size_t e, std::size_t f);

}  // namespace qalg

#endif  // QALG_PATH_ALGEBRA_HPP
