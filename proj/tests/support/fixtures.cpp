#include "fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "qalg/error.hpp"
#include "qalg/nondis.hpp"

namespace qalg::testing {

std::string fixture_path(std::string_view name) {
  return std::string(QALG_FIXTURE_DIR) + "/" + std::string(name);
}

std::string read_fixture(std::string_view name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw Error("cannot open fixture " + std::string(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

AlgebraPtr algebra_from_text(std::string_view text) {
  return std::make_shared<const PathAlgebra>(build_path_algebra(parse_algebra(text)));
}

AlgebraPtr load_algebra(std::string_view name) { return algebra_from_text(read_fixture(name)); }

RayCategorySpec load_spec(std::string_view name) { return parse_ray_category(read_fixture(name)); }

RayCategory load_category(std::string_view name) {
  if (name.ends_with(".raycat")) return RayCategory(load_spec(name));
  return ray_category_of(*load_algebra(name));
}

Representation make_rep(const AlgebraPtr& a, std::vector<std::size_t> dims,
                        const std::vector<std::vector<std::vector<int>>>& maps) {
  const auto& arrows = a->presentation().arrows;
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    Matrix m(dims[arrows[k].target], dims[arrows[k].source]);
    if (k < maps.size()) {
      for (std::size_t r = 0; r < maps[k].size(); ++r) {
        for (std::size_t c = 0; c < maps[k][r].size(); ++c) m(r, c) = maps[k][r][c];
      }
    }
    out.push_back(std::move(m));
  }
  return Representation(a, std::move(dims), std::move(out));
}

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-1, 1);
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(rng);
  }
  return m;
}

// Unit lower times unit upper triangular: invertible over the integers.
std::pair<Matrix, Matrix> random_unimodular(std::mt19937_64& rng, std::size_t n) {
  Matrix lower = Matrix::identity(n);
  Matrix upper = Matrix::identity(n);
  std::uniform_int_distribution<int> entry(-1, 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < r; ++c) lower(r, c) = entry(rng);
    for (std::size_t c = r + 1; c < n; ++c) upper(r, c) = entry(rng);
  }
  Matrix inv_lower = Matrix::identity(n);
  Matrix inv_upper = Matrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      Rational s = 0;
      for (std::size_t k = c; k < r; ++k) s += lower(r, k) * inv_lower(k, c);
      inv_lower(r, c) = -s;
    }
  }
  for (std::size_t r = n; r-- > 0;) {
    for (std::size_t c = r + 1; c < n; ++c) {
      Rational s = 0;
      for (std::size_t k = r + 1; k <= c; ++k) s += upper(r, k) * inv_upper(k, c);
      inv_upper(r, c) = -s;
    }
  }
  return {lower * upper, inv_upper * inv_lower};
}

// Nilpotent matrix with x^3 = 0 in a random basis.
Matrix random_cube_nilpotent(std::mt19937_64& rng, std::size_t n) {
  Matrix jordan(n, n);
  std::uniform_int_distribution<int> coin(0, 1);
  std::size_t run = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (run < 2 && coin(rng)) {
      jordan(i, i - 1) = 1;
      ++run;
    } else {
      run = 0;
    }
  }
  auto [p, p_inv] = random_unimodular(rng, n);
  return p * jordan * p_inv;
}

void add_sums(std::vector<NamedModule>& out, const std::vector<NamedModule>& parts,
              std::size_t max_total) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i; j < parts.size(); ++j) {
      if (parts[i].module.total_dim() + parts[j].module.total_dim() > max_total) continue;
      out.push_back({parts[i].name + " + " + parts[j].name,
                     direct_sum(parts[i].module, parts[j].module)});
    }
  }
}

}  // namespace

std::vector<NamedModule> small_module_corpus(std::size_t max_total, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<NamedModule> out;
  const std::vector<std::string> names = {"kronecker.qalg", "e1.qalg",  "e2.qalg",
                                          "a3.qalg",        "loop3.qalg", "cs_square.qalg",
                                          "fat_layer.qalg", "dtilde4.qalg"};
  for (const auto& name : names) {
    const AlgebraPtr a = load_algebra(name);
    const std::string tag = name.substr(0, name.find('.'));
    std::vector<NamedModule> pieces;
    for (std::size_t v = 0; v < a->vertex_count(); ++v) {
      pieces.push_back({tag + " S" + std::to_string(v), simple_module(a, v)});
      const Projective p = projective_module(a, v);
      if (p.module.total_dim() <= max_total) pieces.push_back({tag + " P" + std::to_string(v), p.module});
      // Quotients of the projective by members of a flag through its radical.
      const Submodule rad = radical(p.module);
      const auto flag = complete_flag(p.module, zero_submodule(p.module), rad);
      for (std::size_t k = 1; k + 1 < flag.size(); ++k) {
        Representation q = quotient(p.module, flag[k]).module;
        if (q.total_dim() <= max_total) {
          out.push_back({tag + " P" + std::to_string(v) + "/W" + std::to_string(k), std::move(q)});
        }
      }
    }
    if (!is_distributive(*a).distributive) {
      for (std::size_t m = 1; m <= max_total; ++m) {
        out.push_back({tag + " indec " + std::to_string(m), indecomposable_of_dimension(a, m).module});
      }
    }
    out.insert(out.end(), pieces.begin(), pieces.end());
    add_sums(out, pieces, max_total);
  }

  // Free representations: random integer matrices on random dimension vectors.
  for (const std::string name : {"kronecker.qalg", "a3.qalg", "dtilde4.qalg"}) {
    const AlgebraPtr a = load_algebra(name);
    const std::string tag = name.substr(0, name.find('.'));
    std::uniform_int_distribution<std::size_t> pick(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::size_t> dims(a->vertex_count());
      std::size_t total = 0;
      for (auto& d : dims) total += (d = pick(rng));
      if (total == 0 || total > max_total) continue;
      std::vector<Matrix> maps;
      for (const auto& arrow : a->presentation().arrows) {
        maps.push_back(random_matrix(rng, dims[arrow.target], dims[arrow.source]));
      }
      out.push_back({tag + " random " + std::to_string(trial), Representation(a, dims, maps)});
    }
  }

  // Nilpotent loops with x^3 = 0 in a scrambled basis.
  const AlgebraPtr loop = load_algebra("loop3.qalg");
  for (std::size_t n = 1; n <= max_total; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      out.push_back({"loop3 conjugated " + std::to_string(n) + "." + std::to_string(trial),
                     Representation(loop, {n}, {random_cube_nilpotent(rng, n)})});
    }
  }

  // Kronecker modules with End/rad a proper field extension or a matrix ring.
  const AlgebraPtr kr = load_algebra("kronecker.qalg");
  out.push_back({"kronecker rotation", make_rep(kr, {2, 2}, {{{1, 0}, {0, 1}}, {{0, -1}, {1, 0}}})});
  out.push_back({"kronecker x^2-2", make_rep(kr, {2, 2}, {{{1, 0}, {0, 1}}, {{0, 2}, {1, 0}}})});
  out.push_back({"kronecker jordan", make_rep(kr, {2, 2}, {{{1, 0}, {0, 1}}, {{3, 1}, {0, 3}}})});
  out.push_back({"kronecker split", make_rep(kr, {2, 2}, {{{1, 0}, {0, 1}}, {{1, 0}, {0, 2}}})});
  out.push_back({"kronecker scalar", make_rep(kr, {2, 2}, {{{1, 0}, {0, 1}}, {{5, 0}, {0, 5}}})});
  out.push_back({"kronecker preprojective", make_rep(kr, {1, 2}, {{{1}, {0}}, {{0}, {1}}})});
  out.push_back({"kronecker (2,3)", make_rep(kr, {2, 3}, {{{1, 0}, {0, 1}, {0, 0}}, {{0, 0}, {1, 0}, {0, 1}}})});
  return out;
}

QuiverPresentation random_thin_presentation(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(4, 7);
  const std::size_t n = size(rng);
  std::bernoulli_distribution edge(0.45);
  std::bernoulli_distribution zero(0.2);

  QuiverPresentation p;
  for (std::size_t v = 0; v < n; ++v) p.vertices.push_back("v" + std::to_string(v));
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n && t <= s + 2; ++t) {
      if (!edge(rng)) continue;
      p.arrows.push_back(Arrow{"a" + std::to_string(p.arrows.size()), s, t});
    }
  }

  // All paths, grouped by endpoints.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Path>> paths;
  std::vector<Path> frontier;
  for (std::size_t a = 0; a < p.arrows.size(); ++a) frontier.push_back(Path{p.arrows[a].source, {a}});
  while (!frontier.empty()) {
    std::vector<Path> next;
    for (const auto& path : frontier) {
      paths[{p.source(path), p.target(path)}].push_back(path);
      for (std::size_t a = 0; a < p.arrows.size(); ++a) {
        if (p.arrows[a].source != p.target(path)) continue;
        Path longer = path;
        longer.arrows.push_back(a);
        next.push_back(std::move(longer));
      }
    }
    frontier = std::move(next);
  }

  // Some length-two paths vanish.
  for (const auto& [ends, list] : paths) {
    for (const auto& path : list) {
      if (path.length() == 2 && zero(rng)) p.relations.push_back(Relation{{Term{1, path}}});
    }
  }
  // Parallel paths of length >= 2 become equal, or vanish next to an arrow.
  for (const auto& [ends, list] : paths) {
    std::vector<Path> longs;
    bool arrow = false;
    for (const auto& path : list) {
      if (path.length() >= 2) longs.push_back(path);
      arrow = arrow || path.length() == 1;
    }
    if (arrow) {
      for (const auto& path : longs) p.relations.push_back(Relation{{Term{1, path}}});
      continue;
    }
    for (std::size_t k = 1; k < longs.size(); ++k) {
      p.relations.push_back(Relation{{Term{1, longs[0]}, Term{-1, longs[k]}}});
    }
  }
  return p;
}

}  // namespace qalg::testing
