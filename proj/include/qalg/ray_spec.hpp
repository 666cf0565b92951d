#ifndef QALG_RAY_SPEC_HPP
#define QALG_RAY_SPEC_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qalg {

/// Morphism handle inside a finite ray category. Non-negative values index
/// the morphism list; the sentinels below stand for the zero morphism and for
/// a non-composable pair.
using MorphismId = int;
inline constexpr MorphismId kZero = -1;
inline constexpr MorphismId kUndefined = -2;

struct MorphismDecl {
  std::string label;
  std::size_t domain = 0;
  std::size_t codomain = 0;

  bool operator==(const MorphismDecl&) const = default;
};

/// Abstract finite ray category as written in a .raycat file: objects, the
/// non-zero morphisms (zero morphisms are implicit), one identity per object
/// and a total composition table.
struct RayCategorySpec {
  std::vector<std::string> objects;
  std::vector<MorphismDecl> morphisms;
  std::vector<std::size_t> identities;
  /// compose[g][f] is g*f (f applied first): a morphism index, kZero, or
  /// kUndefined when codomain(f) != domain(g).
  std::vector<std::vector<MorphismId>> compose;

  std::size_t size() const { return morphisms.size(); }
  std::optional<std::size_t> object_index(std::string_view label) const;
  std::optional<MorphismId> morphism_index(std::string_view label) const;
  bool is_identity(MorphismId m) const;

  bool operator==(const RayCategorySpec&) const = default;
};

}  // namespace qalg

#endif  // QALG_RAY_SPEC_HPP
