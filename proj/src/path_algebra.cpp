#include "qalg/path_algebra.hpp"

#include <algorithm>
#include <map>

#include "qalg/error.hpp"

namespace qalg {

namespace {

bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.arrows.empty()) return a.start < b.start;
  return a.arrows < b.arrows;
}

Path concat(const Path& first, const Path& then) {
  Path out = first;
  out.arrows.insert(out.arrows.end(), then.arrows.begin(), then.arrows.end());
  return out;
}

}  // namespace

PathAlgebra build_path_algebra(QuiverPresentation p, std::size_t max_dim) {
  validate(p);
  const std::size_t nv = p.vertices.size();

  // Paths grouped by length, each level sorted.
  std::vector<std::vector<Path>> levels(1);
  for (std::size_t v = 0; v < nv; ++v) levels[0].push_back(Path{v, {}});

  std::map<Path, std::size_t> column;
  std::vector<Path> columns;
  Subspace ideal;
  std::size_t cutoff = 1;  // paths of length < cutoff are tracked

  for (;; ++cutoff) {
    while (levels.size() < cutoff) {
      std::vector<Path> next;
      for (const auto& path : levels.back()) {
        const std::size_t at = p.target(path);
        for (std::size_t a = 0; a < p.arrows.size(); ++a) {
          if (p.arrows[a].source != at) continue;
          Path longer = path;
          longer.arrows.push_back(a);
          next.push_back(std::move(longer));
        }
      }
      std::sort(next.begin(), next.end(), path_less);
      levels.push_back(std::move(next));
    }

    for (const auto& path : levels[cutoff - 1]) {
      column.emplace(path, columns.size());
      columns.push_back(path);
    }
    if (columns.size() > max_dim * 64) {
      throw Error("infinite-dimensional or exceeds max_dim (" + std::to_string(max_dim) +
                  "): path count exploded");
    }

    ideal = Subspace(columns.size());
    for (const auto& rel : p.relations) {
      std::size_t shortest = rel.terms.front().path.length();
      for (const auto& t : rel.terms) shortest = std::min(shortest, t.path.length());
      if (shortest >= cutoff) continue;
      const std::size_t s = p.source(rel.terms.front().path);
      const std::size_t t = p.target(rel.terms.front().path);
      const std::size_t budget = cutoff - 1 - shortest;
      for (std::size_t lq = 0; lq <= budget; ++lq) {
        for (const auto& q : levels[lq]) {
          if (p.target(q) != s) continue;
          for (std::size_t lp = 0; lp + lq <= budget; ++lp) {
            for (const auto& post : levels[lp]) {
              if (p.source(post) != t) continue;
              Vector v(columns.size(), Rational(0));
              bool any = false;
              for (const auto& term : rel.terms) {
                Path full = concat(concat(q, term.path), post);
                if (!q.arrows.empty()) full.start = q.start;
                if (full.length() >= cutoff) continue;
                v[column.at(full)] += term.coefficient;
                any = true;
              }
              if (any) ideal.insert(v);
            }
          }
        }
      }
    }

    const std::size_t running = columns.size() - ideal.dim();
    if (running > max_dim) {
      throw Error("infinite-dimensional or exceeds max_dim (" + std::to_string(max_dim) +
                  "): basis reached " + std::to_string(running) + " elements");
    }
    // Stop once every path of the longest tracked length lies in the ideal.
    const auto& top = levels[cutoff - 1];
    const bool saturated = std::all_of(top.begin(), top.end(), [&](const Path& path) {
      return std::binary_search(ideal.pivots().begin(), ideal.pivots().end(), column.at(path));
    });
    if (saturated) break;
  }

  PathAlgebra a;
  a.presentation_ = std::move(p);
  const auto& pres = a.presentation_;

  // Non-pivot columns are the basis; pivot rows give normal forms.
  std::vector<std::ptrdiff_t> basis_of_column(columns.size(), -1);
  for (std::size_t c : ideal.free_columns()) {
    basis_of_column[c] = static_cast<std::ptrdiff_t>(a.basis_.size());
    const Path& path = columns[c];
    a.basis_.push_back(BasisElement{path, pres.source(path), pres.target(path), path.length()});
  }
  std::map<std::size_t, std::size_t> row_of_pivot;
  for (std::size_t k = 0; k < ideal.dim(); ++k) row_of_pivot[ideal.pivots()[k]] = k;

  auto normal_form = [&](const Path& path) -> SparseRow {
    if (path.length() + 1 >= cutoff) return {};
    const std::size_t c = column.at(path);
    if (basis_of_column[c] >= 0) return {{static_cast<std::size_t>(basis_of_column[c]), Rational(1)}};
    const Vector& row = ideal.basis()[row_of_pivot.at(c)];
    SparseRow out;
    for (std::size_t j = c + 1; j < row.size(); ++j) {
      if (sgn(row[j]) == 0) continue;
      out.emplace_back(static_cast<std::size_t>(basis_of_column[j]), -row[j]);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  };

  const std::size_t n = a.basis_.size();
  a.products_.assign(n, std::vector<SparseRow>(n));
  std::size_t max_degree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    max_degree = std::max(max_degree, a.basis_[i].degree);
    for (std::size_t j = 0; j < n; ++j) {
      if (a.basis_[j].target != a.basis_[i].source) continue;
      Path full = concat(a.basis_[j].path, a.basis_[i].path);
      a.products_[i][j] = normal_form(full);
    }
  }
  a.nilpotency_index_ = n == 0 ? 0 : max_degree + 1;

  a.vertex_elements_.resize(pres.vertices.size());
  for (std::size_t v = 0; v < pres.vertices.size(); ++v) {
    a.vertex_elements_[v] = static_cast<std::size_t>(basis_of_column[column.at(Path{v, {}})]);
  }
  a.arrow_elements_.resize(pres.arrows.size());
  for (std::size_t ar = 0; ar < pres.arrows.size(); ++ar) {
    const Path path{pres.arrows[ar].source, {ar}};
    const auto it = column.find(path);
    if (it == column.end() || basis_of_column[it->second] < 0) {
      throw Error("arrow '" + pres.arrows[ar].label + "' vanishes in the quotient");
    }
    a.arrow_elements_[ar] = static_cast<std::size_t>(basis_of_column[it->second]);
  }
  return a;
}

Vector PathAlgebra::multiply(const Vector& x, const Vector& y) const {
  Vector out(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational c = x[i] * y[j];
      for (const auto& [k, val] : products_[i][j]) out[k] += c * val;
    }
  }
  return out;
}

Vector PathAlgebra::path_value(const Path& p) const {
  if (!presentation_.is_path(p)) throw Error("not a path of the quiver");
  Vector v = unit_vector(dim(), vertex_elements_.at(p.start));
  for (std::size_t a : p.arrows) v = multiply(unit_vector(dim(), arrow_elements_.at(a)), v);
  return v;
}

std::string PathAlgebra::format(const Vector& x) const {
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Rational c = x[i];
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (sgn(c) < 0) c = -c;
    if (c != 1) out += to_string(c) + " ";
    out += label(i);
  }
  return out.empty() ? "0" : out;
}

std::vector<std::size_t> hom_space(const PathAlgebra& a, std::size_t e, std::size_t f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a.element(i).source == e && a.element(i).target == f) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> radical_power_basis(const PathAlgebra& a, std::size_t i) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    if (a.element(k).degree >= i) out.push_back(k);
  }
  return out;
}

BimoduleFiltration bimodule_radical_filtration(const PathAlgebra& a, std::size_t e, std::size_t f) {
  const auto hom = hom_space(a, e, f);
  if (hom.empty()) {
    throw Error("empty hom-space: no paths from '" + a.presentation().vertices.at(e) + "' to '" +
                a.presentation().vertices.at(f) + "'");
  }
  std::vector<std::size_t> left;   // rad(fAf)
  std::vector<std::size_t> right;  // rad(eAe)
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& b = a.element(i);
    if (b.degree == 0) continue;
    if (b.source == f && b.target == f) left.push_back(i);
    if (b.source == e && b.target == e) right.push_back(i);
  }
  BimoduleFiltration out;
  out.e = e;
  out.f = f;
  Subspace current(a.dim());
  for (std::size_t i : hom) current.insert(unit_vector(a.dim(), i));
  while (!current.empty()) {
    Subspace deeper(a.dim());
    for (const auto& r : current.basis()) {
      for (std::size_t j : left) deeper.insert(a.multiply(unit_vector(a.dim(), j), r));
      for (std::size_t j : right) deeper.insert(a.multiply(r, unit_vector(a.dim(), j)));
    }
    out.layer_dims.push_back(current.dim() - deeper.dim());
    out.layers.push_back(std::move(current));
    current = std::move(deeper);
  }
  return out;
}

}  // namespace qalg
