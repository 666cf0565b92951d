#ifndef QALG_QDSL_HPP
#define QALG_QDSL_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qalg/quiver.hpp"
#include "qalg/ray_spec.hpp"

// Text formats.
//
// .qalg (quiver with relations)
//   vertices 1 2 3;
//   arrows a:1->2, b:2->2, c:2->3;
//   relations b*b = 0, c*b*a - 2/3 c*a = 0;
//
// .raycat (finite ray category)
//   objects x y;
//   morphisms id:x, s:x->x, s2:x->x, m:x->y;
//   compose s*s = s2, s*s2 = ZERO, s2*s = ZERO, m*s = ZERO, m*s2 = ZERO;
//
// Composition is written right-to-left everywhere: "b*a" (or "b.a") is a
// followed by b. '#' starts a comment that runs to the end of the line and
// every statement ends with ';'. Coefficients are exact literals "p" or "p/q".
// A morphism declared as "label:obj" is the identity of obj; objects without a
// declared identity get "id_<obj>". Compositions with identities are implied
// and need not be listed; every other composable pair must be.
//
// .rayfun (functor from a quiver with relations into a ray category)
//   source { vertices x y z; arrows s:x->y, r:x->z; }
//   objects x->1, y->3, z->2;
//   arrows s->sigma, r->rho;
// Arrow images may be composites written right-to-left, e.g. "b*a".

namespace qalg {

QuiverPresentation parse_algebra(std::string_view text);
RayCategorySpec parse_ray_category(std::string_view text);

/// Unresolved functor description; resolved against a target category by
/// make_functor() in ray_category.hpp.
struct FunctorSpec {
  QuiverPresentation source;
  std::vector<std::pair<std::string, std::string>> object_map;
  /// Arrow label -> image as labels in written (right-to-left) order.
  std::vector<std::pair<std::string, std::vector<std::string>>> arrow_map;
};

FunctorSpec parse_functor(std::string_view text);

/// Canonical DSL text; parsing it gives back an equal value.
std::string to_text(const QuiverPresentation& p);
std::string to_text(const RayCategorySpec& spec);

}  // namespace qalg

#endif  // QALG_QDSL_HPP
