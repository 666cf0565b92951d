#ifndef QALG_TESTS_FIXTURES_HPP
#define QALG_TESTS_FIXTURES_HPP

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qalg/qdsl.hpp"
#include "qalg/ray_category.hpp"
#include "qalg/representation.hpp"

namespace qalg::testing {

std::string fixture_path(std::string_view name);
std::string read_fixture(std::string_view name);

AlgebraPtr load_algebra(std::string_view name);
AlgebraPtr algebra_from_text(std::string_view text);
RayCategorySpec load_spec(std::string_view name);
/// .raycat files are read as they are, .qalg files through ray_category_of.
RayCategory load_category(std::string_view name);

/// Representation from integer matrices given row by row.
Representation make_rep(const AlgebraPtr& a, std::vector<std::size_t> dims,
                        const std::vector<std::vector<std::vector<int>>>& maps);

struct NamedModule {
  std::string name;
  Representation module;
};

/// Small modules over the fixture algebras: simples, projectives, local
/// quotients, constructed indecomposables, direct sums and random
/// representations, all of total dimension 1..max_total.
std::vector<NamedModule> small_module_corpus(std::size_t max_total, std::uint64_t seed);

/// Random bound quiver whose hom-spaces are at most one-dimensional, built
/// from a random acyclic quiver with commutativity and zero relations.
QuiverPresentation random_thin_presentation(std::mt19937_64& rng);

}  // namespace qalg::testing

#endif  // QALG_TESTS_FIXTURES_HPP
