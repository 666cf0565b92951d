#ifndef QALG_REPRESENTATION_HPP
#define QALG_REPRESENTATION_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "qalg/linalg.hpp"
#include "qalg/path_algebra.hpp"

namespace qalg {

using AlgebraPtr = std::shared_ptr<const PathAlgebra>;

/// Representation of a bound quiver: a space per vertex and a matrix per
/// arrow of shape dim(target) x dim(source).
///
/// Global coordinates concatenate the vertex spaces in vertex order.
class Representation {
 public:
  Representation() = default;
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> maps);

  const PathAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(std::size_t vertex) const { return dims_.at(vertex); }
  std::size_t total_dim() const { return total_; }
  std::size_t offset(std::size_t vertex) const { return offsets_.at(vertex); }
  const Matrix& map(std::size_t arrow) const { return maps_.at(arrow); }
  const std::vector<Matrix>& maps() const { return maps_; }

  Matrix path_matrix(const Path& p) const;
  /// Arrow acting on a global vector.
  Vector act_arrow(std::size_t arrow, const Vector& x) const;
  /// Element of the algebra (basis coordinates) acting on a global vector.
  Vector act(const Vector& element, const Vector& x) const;

  Vector component(const Vector& x, std::size_t vertex) const;

  /// Same spaces and matrices over another algebra with the same quiver.
  Representation rebind(AlgebraPtr other) const;

 private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  std::vector<Matrix> maps_;
};

struct RelationViolation {
  std::size_t relation = 0;
  std::string message;  // e.g. "x*x*x != 0"
};

/// Empty when every relation evaluates to zero.
std::vector<RelationViolation> check_representation(const Representation& m);

/// Projective Ae. Coordinate k of the result is basis element basis[k] of A.
struct Projective {
  Representation module;
  std::vector<std::size_t> basis;
};

Projective projective_module(const AlgebraPtr& a, std::size_t e);

/// Simple module at a vertex.
Representation simple_module(const AlgebraPtr& a, std::size_t vertex);

/// Arrow-closed family of subspaces, one per vertex.
struct Submodule {
  std::vector<Subspace> parts;

  std::size_t dim() const;
  std::vector<std::size_t> dim_vector() const;
  /// Same subspace in global coordinates of the ambient module.
  Subspace global() const;
  bool contains(const Submodule& other) const;
  bool contains(const Vector& global_vector) const;
  Submodule sum(const Submodule& other) const;
  Submodule intersect(const Submodule& other) const;
  bool operator==(const Submodule&) const = default;
};

Submodule zero_submodule(const Representation& m);
Submodule whole_module(const Representation& m);
bool is_submodule(const Representation& m, const Submodule& u);

Submodule submodule_generated(const Representation& m, std::span<const Vector> vectors);
Submodule submodule_generated(const Representation& m, const Submodule& start,
                              std::span<const Vector> vectors);

Submodule radical(const Representation& m);
Submodule socle(const Representation& m);

/// M/U. Quotient coordinates at a vertex are the free columns of U there.
struct Quotient {
  Representation module;
  std::vector<std::vector<std::size_t>> coordinates;
  std::vector<Subspace> kernel;

  Vector project(const Representation& ambient, const Vector& x) const;
  Vector lift(const Representation& ambient, const Vector& y) const;
  Submodule image(const Representation& ambient, const Submodule& u) const;
  Submodule preimage(const Representation& ambient, const Submodule& w) const;
};

Quotient quotient(const Representation& m, const Submodule& u);
Representation top(const Representation& m);

/// The submodule as a representation in its echelon basis.
Representation restrict_to(const Representation& m, const Submodule& u);
Representation direct_sum(const Representation& m, const Representation& n);

/// Per-vertex blocks of shape dim N_v x dim M_v.
struct Homomorphism {
  std::vector<Matrix> blocks;

  Homomorphism compose_after(const Homomorphism& first) const;  // this o first
  Matrix global(const Representation& source, const Representation& target) const;
  bool operator==(const Homomorphism&) const = default;
};

std::vector<Homomorphism> hom(const Representation& m, const Representation& n);

struct EndAlgebra {
  std::vector<Homomorphism> basis;
  /// mult[i][j] = basis[i] o basis[j] in basis coordinates.
  std::vector<std::vector<Vector>> mult;
  /// Spanning set of the Jacobson radical, in basis coordinates.
  std::vector<Vector> radical_basis;

  std::size_t dim() const { return basis.size(); }
  Vector coordinates(const Homomorphism& phi) const;
  Homomorphism element(const Vector& coords) const;

  std::vector<std::size_t> free_entries;  // unknown positions read off by coordinates()
};

EndAlgebra end_algebra(const Representation& m);

struct IndecomposabilityCertificate {
  bool verdict = false;
  std::size_t end_dim = 0;
  std::size_t radical_dim = 0;
};

IndecomposabilityCertificate is_absolutely_indecomposable(const Representation& m);

/// U = W_0 < W_1 < ... < W_k = V with one-dimensional steps.
std::vector<Submodule> complete_flag(const Representation& m, const Submodule& u,
                                     const Submodule& v);

}  // namespace qalg

#endif  // QALG_REPRESENTATION_HPP
