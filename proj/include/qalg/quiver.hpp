#ifndef QALG_QUIVER_HPP
#define QALG_QUIVER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qalg/linalg.hpp"

namespace qalg {

struct Arrow {
  std::string label;
  std::size_t source = 0;
  std::size_t target = 0;

  bool operator==(const Arrow&) const = default;
};

/// A path in a quiver. `arrows` is stored in application order (first arrow
/// first); the text form writes it right-to-left, so the path a then b is
/// printed "b*a". A trivial path has no arrows and sits at `start`.
struct Path {
  std::size_t start = 0;
  std::vector<std::size_t> arrows;

  std::size_t length() const { return arrows.size(); }
  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

struct Term {
  Rational coefficient;
  Path path;

  bool operator==(const Term&) const = default;
};

/// Formal linear combination of parallel paths, read as "= 0".
struct Relation {
  std::vector<Term> terms;

  bool operator==(const Relation&) const = default;
};

/// Quiver with relations. Labels keep declaration order.
struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  std::optional<std::size_t> vertex_index(std::string_view label) const;
  std::optional<std::size_t> arrow_index(std::string_view label) const;

  std::size_t source(const Path& p) const;
  std::size_t target(const Path& p) const;
  /// True when consecutive arrows are composable and the first starts at
  /// p.start.
  bool is_path(const Path& p) const;

  /// Right-to-left text, "e_<vertex>" for trivial paths.
  std::string path_text(const Path& p) const;
  std::string relation_text(const Relation& r) const;

  bool operator==(const QuiverPresentation&) const = default;
};

/// Throws qalg::Error if an invariant fails: endpoints declared, labels
/// distinct, relation terms parallel, every path of length >= 2, no zero
/// coefficients and no repeated path within a relation.
void validate(const QuiverPresentation& p);

}  // namespace qalg

#endif  // QALG_QUIVER_HPP
