#ifndef QALG_RAY_CATEGORY_HPP
#define QALG_RAY_CATEGORY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qalg/path_algebra.hpp"
#include "qalg/qdsl.hpp"
#include "qalg/ray_spec.hpp"

namespace qalg {

struct AxiomViolation {
  std::string axiom;  // "a".."f", or "category" for a broken composition law
  std::string message;
};

std::vector<AxiomViolation> check_axioms(const RayCategorySpec& spec);

/// Path in the quiver of a ray category: irreducible morphisms in
/// application order, starting at `start`.
struct RayPath {
  std::size_t start = 0;
  std::vector<MorphismId> arrows;

  std::size_t length() const { return arrows.size(); }
  bool operator==(const RayPath&) const = default;
  auto operator<=>(const RayPath&) const = default;
};

struct QuiverDepthOrder {
  std::vector<MorphismId> irreducibles;
  std::vector<int> depth;              // per morphism, 0 for identities
  std::vector<std::vector<bool>> leq;  // leq[mu][nu]: nu = alpha mu beta
  std::vector<MorphismId> long_morphisms;
};

/// A validated finite ray category.
class RayCategory {
 public:
  RayCategory() = default;
  /// Throws Error listing the violated axioms.
  explicit RayCategory(RayCategorySpec spec);

  const RayCategorySpec& spec() const { return spec_; }
  std::size_t size() const { return spec_.size(); }
  std::size_t object_count() const { return spec_.objects.size(); }

  MorphismId compose(MorphismId g, MorphismId f) const;  // g o f
  std::size_t domain(MorphismId f) const { return spec_.morphisms.at(f).domain; }
  std::size_t codomain(MorphismId f) const { return spec_.morphisms.at(f).codomain; }
  const std::string& label(MorphismId f) const { return spec_.morphisms.at(f).label; }
  bool is_identity(MorphismId f) const { return spec_.is_identity(f); }
  MorphismId identity(std::size_t object) const {
    return static_cast<MorphismId>(spec_.identities.at(object));
  }
  MorphismId find(const std::string& label) const;  // throws on unknown label

  const QuiverDepthOrder& structure() const { return structure_; }
  bool is_irreducible(MorphismId f) const;
  std::string path_text(const RayPath& p) const;

  bool operator==(const RayCategory& other) const { return spec_ == other.spec_; }

 private:
  RayCategorySpec spec_;
  QuiverDepthOrder structure_;
};

QuiverDepthOrder quiver_depth_order(const RayCategory& p);

/// Rays are the layers of the bimodule filtration of each yAx.
/// Throws Error("algebra not distributive").
RayCategory ray_category_of(const PathAlgebra& a);

QuiverPresentation linearize(const RayCategory& p);

enum class SliceSide { From, To };

struct SlicePoset {
  std::vector<MorphismId> elements;
  /// (phi, psi) with phi below psi.
  std::vector<std::pair<MorphismId, MorphismId>> relation;
};

SlicePoset slice_poset(const RayCategory& p, std::size_t x, SliceSide side);

/// kZero when the composite vanishes; throws on a non-composable sequence.
MorphismId evaluate_path(const RayCategory& p, const RayPath& path);

/// Every non-zero path of the quiver, ordered by (start, length, arrows).
std::vector<RayPath> nonzero_paths(const RayCategory& p);

bool interlaced(const RayCategory& p, const RayPath& v, const RayPath& w);

struct Contour {
  MorphismId mu = kZero;
  RayPath v;
  RayPath w;
  bool operator==(const Contour&) const = default;
};

std::vector<Contour> contours(const RayCategory& p);

/// Kills every nu with tau <= nu. Throws Error when the result is not a ray
/// category.
RayCategory quotient(const RayCategory& p, MorphismId tau);

struct Crown {
  std::vector<MorphismId> sigma;
  std::vector<MorphismId> rho;

  std::size_t n() const { return sigma.size(); }
  std::size_t length() const { return 2 * sigma.size(); }
  bool operator==(const Crown&) const = default;
};

/// Re-checks the crown conditions from scratch.
bool verify_crown(const RayCategory& p, const Crown& c);

/// Crowns of half-length 2..max_n, one per cycle up to rotation. A crown
/// read backwards is a different cycle and is listed separately.
std::vector<Crown> find_crowns(const RayCategory& p, std::size_t max_n = 6);

/// Sum of depths of all members.
int crown_weight(const RayCategory& p, const Crown& c);

std::optional<Crown> minimal_crown(const RayCategory& p, std::size_t max_n = 6);

struct RayFunctor {
  RayCategory source;
  RayCategory target;
  std::vector<std::size_t> object_map;
  std::vector<MorphismId> morphism_map;  // kZero allowed
};

/// Throws Error("not a functor: ...") unless identities, zero and composition
/// are preserved.
RayFunctor make_functor(RayCategory source, RayCategory target, std::vector<std::size_t> object_map,
                        std::vector<MorphismId> morphism_map);

/// The source is the ray category of the described quiver with relations.
RayFunctor make_functor(const FunctorSpec& spec, const RayCategory& target);

struct CleavingVerdict {
  bool cleaving = true;
  std::string condition;  // "a", "b" or "b-dual" on failure
  MorphismId alpha = kZero;
  MorphismId mu = kZero;
  std::string message;
};

CleavingVerdict is_cleaving(const RayFunctor& f);

struct LongScan {
  std::optional<MorphismId> morphism;
  bool has_long = false;
};

LongScan find_long_not_in_contour(const RayCategory& p);

}  // namespace qalg

#endif  // QALG_RAY_CATEGORY_HPP
