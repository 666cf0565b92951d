#include "qalg/representation.hpp"

#include <deque>

#include "qalg/error.hpp"

namespace qalg {

namespace {

std::vector<Subspace> empty_parts(const std::vector<std::size_t>& dims) {
  std::vector<Subspace> parts;
  parts.reserve(dims.size());
  for (std::size_t d : dims) parts.emplace_back(d);
  return parts;
}

}  // namespace

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims,
                               std::vector<Matrix> maps)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!algebra_) throw Error("representation without an algebra");
  const auto& pres = algebra_->presentation();
  if (dims_.size() != pres.vertices.size()) {
    throw Error("shape mismatch: expected " + std::to_string(pres.vertices.size()) +
                " vertex dimensions, got " + std::to_string(dims_.size()));
  }
  if (maps_.size() != pres.arrows.size()) {
    throw Error("shape mismatch: expected " + std::to_string(pres.arrows.size()) +
                " arrow matrices, got " + std::to_string(maps_.size()));
  }
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const auto& arrow = pres.arrows[a];
    if (maps_[a].rows() != dims_[arrow.target] || maps_[a].cols() != dims_[arrow.source]) {
      throw Error("shape mismatch: arrow '" + arrow.label + "' needs a " +
                  std::to_string(dims_[arrow.target]) + "x" + std::to_string(dims_[arrow.source]) +
                  " matrix, got " + std::to_string(maps_[a].rows()) + "x" +
                  std::to_string(maps_[a].cols()));
    }
  }
  offsets_.resize(dims_.size());
  for (std::size_t v = 0; v < dims_.size(); ++v) {
    offsets_[v] = total_;
    total_ += dims_[v];
  }
}

Matrix Representation::path_matrix(const Path& p) const {
  const auto& pres = algebra_->presentation();
  if (!pres.is_path(p)) throw Error("not a path of the quiver");
  Matrix out = Matrix::identity(dims_[p.start]);
  for (std::size_t a : p.arrows) out = maps_[a] * out;
  return out;
}

Vector Representation::component(const Vector& x, std::size_t vertex) const {
  return Vector(x.begin() + static_cast<std::ptrdiff_t>(offsets_[vertex]),
                x.begin() + static_cast<std::ptrdiff_t>(offsets_[vertex] + dims_[vertex]));
}

Vector Representation::act_arrow(std::size_t arrow, const Vector& x) const {
  const auto& ar = algebra_->presentation().arrows.at(arrow);
  Vector out(total_, Rational(0));
  const Vector image = maps_[arrow].apply(component(x, ar.source));
  std::copy(image.begin(), image.end(), out.begin() + static_cast<std::ptrdiff_t>(offsets_[ar.target]));
  return out;
}

Vector Representation::act(const Vector& element, const Vector& x) const {
  Vector out(total_, Rational(0));
  for (std::size_t i = 0; i < element.size(); ++i) {
    if (sgn(element[i]) == 0) continue;
    const auto& b = algebra_->element(i);
    Vector y = component(x, b.source);
    for (std::size_t a : b.path.arrows) y = maps_[a].apply(y);
    for (std::size_t k = 0; k < y.size(); ++k) out[offsets_[b.target] + k] += element[i] * y[k];
  }
  return out;
}

Representation Representation::rebind(AlgebraPtr other) const {
  if (!other || other->presentation().vertices != algebra_->presentation().vertices ||
      other->presentation().arrows != algebra_->presentation().arrows) {
    throw Error("cannot rebind a representation to a different quiver");
  }
  return Representation(std::move(other), dims_, maps_);
}

std::vector<RelationViolation> check_representation(const Representation& m) {
  const auto& pres = m.algebra().presentation();
  std::vector<RelationViolation> out;
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    const auto& rel = pres.relations[r];
    const std::size_t s = pres.source(rel.terms.front().path);
    const std::size_t t = pres.target(rel.terms.front().path);
    Matrix sum(m.dim(t), m.dim(s));
    for (const auto& term : rel.terms) sum = sum + m.path_matrix(term.path).scaled(term.coefficient);
    if (!sum.is_zero()) {
      std::string text = pres.relation_text(rel);
      text.replace(text.size() - 4, 4, " != 0");
      out.push_back({r, text});
    }
  }
  return out;
}

Projective projective_module(const AlgebraPtr& a, std::size_t e) {
  const auto& pres = a->presentation();
  const std::size_t nv = pres.vertices.size();
  if (e >= nv) throw Error("vertex index out of range");
  Projective out;
  std::vector<std::size_t> dims(nv);
  std::vector<std::size_t> local(a->dim(), 0);
  for (std::size_t f = 0; f < nv; ++f) {
    const auto h = hom_space(*a, e, f);
    dims[f] = h.size();
    for (std::size_t k = 0; k < h.size(); ++k) local[h[k]] = k;
    out.basis.insert(out.basis.end(), h.begin(), h.end());
  }
  std::vector<Matrix> maps;
  for (std::size_t ar = 0; ar < pres.arrows.size(); ++ar) {
    const auto& arrow = pres.arrows[ar];
    Matrix mat(dims[arrow.target], dims[arrow.source]);
    const auto src = hom_space(*a, e, arrow.source);
    for (std::size_t j = 0; j < src.size(); ++j) {
      for (const auto& [k, c] : a->product(a->arrow_element(ar), src[j])) mat(local[k], j) = c;
    }
    maps.push_back(std::move(mat));
  }
  out.module = Representation(a, std::move(dims), std::move(maps));
  return out;
}

Representation simple_module(const AlgebraPtr& a, std::size_t vertex) {
  const auto& pres = a->presentation();
  std::vector<std::size_t> dims(pres.vertices.size(), 0);
  dims.at(vertex) = 1;
  std::vector<Matrix> maps;
  for (const auto& arrow : pres.arrows) maps.emplace_back(dims[arrow.target], dims[arrow.source]);
  return Representation(a, std::move(dims), std::move(maps));
}

std::size_t Submodule::dim() const {
  std::size_t d = 0;
  for (const auto& p : parts) d += p.dim();
  return d;
}

std::vector<std::size_t> Submodule::dim_vector() const {
  std::vector<std::size_t> out;
  for (const auto& p : parts) out.push_back(p.dim());
  return out;
}

Subspace Submodule::global() const {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.ambient();
  Subspace out(total);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (const auto& row : p.basis()) {
      Vector g(total, Rational(0));
      std::copy(row.begin(), row.end(), g.begin() + static_cast<std::ptrdiff_t>(off));
      out.insert(g);
    }
    off += p.ambient();
  }
  return out;
}

bool Submodule::contains(const Submodule& other) const {
  for (std::size_t v = 0; v < parts.size(); ++v) {
    if (!parts[v].contains(other.parts.at(v))) return false;
  }
  return true;
}

bool Submodule::contains(const Vector& x) const {
  std::size_t off = 0;
  for (const auto& p : parts) {
    Vector c(x.begin() + static_cast<std::ptrdiff_t>(off),
             x.begin() + static_cast<std::ptrdiff_t>(off + p.ambient()));
    if (!p.contains(c)) return false;
    off += p.ambient();
  }
  return true;
}

Submodule Submodule::sum(const Submodule& other) const {
  Submodule out = *this;
  for (std::size_t v = 0; v < parts.size(); ++v) out.parts[v] = parts[v].sum(other.parts.at(v));
  return out;
}

Submodule Submodule::intersect(const Submodule& other) const {
  Submodule out = *this;
  for (std::size_t v = 0; v < parts.size(); ++v) out.parts[v] = parts[v].intersect(other.parts.at(v));
  return out;
}

Submodule zero_submodule(const Representation& m) { return Submodule{empty_parts(m.dims())}; }

Submodule whole_module(const Representation& m) {
  Submodule out;
  for (std::size_t d : m.dims()) out.parts.push_back(Subspace::whole(d));
  return out;
}

bool is_submodule(const Representation& m, const Submodule& u) {
  const auto& pres = m.algebra().presentation();
  if (u.parts.size() != m.dims().size()) return false;
  for (std::size_t v = 0; v < u.parts.size(); ++v) {
    if (u.parts[v].ambient() != m.dim(v)) return false;
  }
  for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
    const auto& arrow = pres.arrows[a];
    for (const auto& row : u.parts[arrow.source].basis()) {
      if (!u.parts[arrow.target].contains(m.map(a).apply(row))) return false;
    }
  }
  return true;
}

Submodule submodule_generated(const Representation& m, const Submodule& start,
                              std::span<const Vector> vectors) {
  const auto& pres = m.algebra().presentation();
  Submodule out = start;
  std::deque<std::pair<std::size_t, Vector>> work;
  auto push = [&](std::size_t v, Vector x) {
    if (out.parts[v].insert(x)) work.emplace_back(v, std::move(x));
  };
  for (const auto& x : vectors) {
    if (x.size() != m.total_dim()) throw Error("vector does not lie in the module");
    for (std::size_t v = 0; v < m.dims().size(); ++v) {
      Vector c = m.component(x, v);
      if (!is_zero(c)) push(v, std::move(c));
    }
  }
  while (!work.empty()) {
    auto [v, x] = std::move(work.front());
    work.pop_front();
    for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
      if (pres.arrows[a].source != v) continue;
      Vector y = m.map(a).apply(x);
      if (!is_zero(y)) push(pres.arrows[a].target, std::move(y));
    }
  }
  return out;
}

Submodule submodule_generated(const Representation& m, std::span<const Vector> vectors) {
  return submodule_generated(m, zero_submodule(m), vectors);
}

Submodule radical(const Representation& m) {
  const auto& pres = m.algebra().presentation();
  Submodule out = zero_submodule(m);
  for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
    const Matrix& mat = m.map(a);
    for (std::size_t j = 0; j < mat.cols(); ++j) out.parts[pres.arrows[a].target].insert(mat.column(j));
  }
  return out;
}

Submodule socle(const Representation& m) {
  const auto& pres = m.algebra().presentation();
  Submodule out;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    std::vector<SparseRow> rows;
    for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
      if (pres.arrows[a].source != v) continue;
      for (std::size_t r = 0; r < m.map(a).rows(); ++r) rows.push_back(to_sparse(m.map(a).row(r)));
    }
    const auto kernel = nullspace(m.dim(v), std::move(rows));
    out.parts.push_back(Subspace::spanned_by(m.dim(v), kernel));
  }
  return out;
}

Vector Quotient::project(const Representation& ambient, const Vector& x) const {
  Vector out(module.total_dim(), Rational(0));
  for (std::size_t v = 0; v < kernel.size(); ++v) {
    const Vector r = kernel[v].reduce(ambient.component(x, v));
    for (std::size_t k = 0; k < coordinates[v].size(); ++k) {
      out[module.offset(v) + k] = r[coordinates[v][k]];
    }
  }
  return out;
}

Vector Quotient::lift(const Representation& ambient, const Vector& y) const {
  Vector out(ambient.total_dim(), Rational(0));
  for (std::size_t v = 0; v < kernel.size(); ++v) {
    for (std::size_t k = 0; k < coordinates[v].size(); ++k) {
      out[ambient.offset(v) + coordinates[v][k]] = y[module.offset(v) + k];
    }
  }
  return out;
}

Submodule Quotient::image(const Representation& ambient, const Submodule& u) const {
  Submodule out = zero_submodule(module);
  for (std::size_t v = 0; v < kernel.size(); ++v) {
    for (const auto& row : u.parts.at(v).basis()) {
      const Vector r = kernel[v].reduce(row);
      Vector c(coordinates[v].size(), Rational(0));
      for (std::size_t k = 0; k < c.size(); ++k) c[k] = r[coordinates[v][k]];
      out.parts[v].insert(c);
    }
  }
  (void)ambient;
  return out;
}

Submodule Quotient::preimage(const Representation& ambient, const Submodule& w) const {
  Submodule out{kernel};
  for (std::size_t v = 0; v < kernel.size(); ++v) {
    for (const auto& row : w.parts.at(v).basis()) {
      Vector x(ambient.dim(v), Rational(0));
      for (std::size_t k = 0; k < row.size(); ++k) x[coordinates[v][k]] = row[k];
      out.parts[v].insert(x);
    }
  }
  return out;
}

Quotient quotient(const Representation& m, const Submodule& u) {
  if (!is_submodule(m, u)) throw Error("subspace family is not closed under the arrows");
  const auto& pres = m.algebra().presentation();
  Quotient q;
  q.kernel = u.parts;
  std::vector<std::size_t> dims;
  for (const auto& p : u.parts) {
    q.coordinates.push_back(p.free_columns());
    dims.push_back(q.coordinates.back().size());
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
    const std::size_t s = pres.arrows[a].source;
    const std::size_t t = pres.arrows[a].target;
    Matrix mat(dims[t], dims[s]);
    for (std::size_t j = 0; j < dims[s]; ++j) {
      const Vector image = u.parts[t].reduce(m.map(a).column(q.coordinates[s][j]));
      for (std::size_t i = 0; i < dims[t]; ++i) mat(i, j) = image[q.coordinates[t][i]];
    }
    maps.push_back(std::move(mat));
  }
  q.module = Representation(m.algebra_ptr(), std::move(dims), std::move(maps));
  return q;
}

Representation top(const Representation& m) { return quotient(m, radical(m)).module; }

Representation restrict_to(const Representation& m, const Submodule& u) {
  if (!is_submodule(m, u)) throw Error("subspace family is not closed under the arrows");
  const auto& pres = m.algebra().presentation();
  std::vector<std::size_t> dims = u.dim_vector();
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
    const std::size_t s = pres.arrows[a].source;
    const std::size_t t = pres.arrows[a].target;
    Matrix mat(dims[t], dims[s]);
    for (std::size_t j = 0; j < dims[s]; ++j) {
      const Vector image = m.map(a).apply(u.parts[s].basis()[j]);
      for (std::size_t i = 0; i < dims[t]; ++i) mat(i, j) = image[u.parts[t].pivots()[i]];
    }
    maps.push_back(std::move(mat));
  }
  return Representation(m.algebra_ptr(), std::move(dims), std::move(maps));
}

Representation direct_sum(const Representation& m, const Representation& n) {
  if (m.algebra_ptr() != n.algebra_ptr() &&
      !(m.algebra().presentation() == n.algebra().presentation())) {
    throw Error("direct sum of representations over different algebras");
  }
  const auto& pres = m.algebra().presentation();
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < m.dims().size(); ++v) dims.push_back(m.dim(v) + n.dim(v));
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
    const Matrix& x = m.map(a);
    const Matrix& y = n.map(a);
    Matrix mat(x.rows() + y.rows(), x.cols() + y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) mat(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) mat(x.rows() + i, x.cols() + j) = y(i, j);
    maps.push_back(std::move(mat));
  }
  return Representation(m.algebra_ptr(), std::move(dims), std::move(maps));
}

Homomorphism Homomorphism::compose_after(const Homomorphism& first) const {
  Homomorphism out;
  for (std::size_t v = 0; v < blocks.size(); ++v) out.blocks.push_back(blocks[v] * first.blocks.at(v));
  return out;
}

Matrix Homomorphism::global(const Representation& source, const Representation& target) const {
  Matrix out(target.total_dim(), source.total_dim());
  for (std::size_t v = 0; v < blocks.size(); ++v) {
    for (std::size_t i = 0; i < blocks[v].rows(); ++i)
      for (std::size_t j = 0; j < blocks[v].cols(); ++j)
        out(target.offset(v) + i, source.offset(v) + j) = blocks[v](i, j);
  }
  return out;
}

namespace {

struct HomSystem {
  std::vector<std::size_t> offsets;
  std::size_t unknowns = 0;
  std::vector<Vector> solutions;
  std::vector<std::size_t> free_columns;
};

HomSystem solve_hom(const Representation& m, const Representation& n) {
  const auto& pres = m.algebra().presentation();
  if (!(pres == n.algebra().presentation())) throw Error("hom between modules over different algebras");
  HomSystem sys;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    sys.offsets.push_back(sys.unknowns);
    sys.unknowns += n.dim(v) * m.dim(v);
  }
  auto var = [&](std::size_t v, std::size_t i, std::size_t j) {
    return sys.offsets[v] + i * m.dim(v) + j;
  };
  // N(a) phi_s - phi_t M(a) = 0
  std::vector<SparseRow> rows;
  for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
    const std::size_t s = pres.arrows[a].source;
    const std::size_t t = pres.arrows[a].target;
    const Matrix& ma = m.map(a);
    const Matrix& na = n.map(a);
    for (std::size_t i = 0; i < n.dim(t); ++i) {
      for (std::size_t j = 0; j < m.dim(s); ++j) {
        SparseRow row;
        for (std::size_t k = 0; k < n.dim(s); ++k) {
          if (sgn(na(i, k)) != 0) row.emplace_back(var(s, k, j), na(i, k));
        }
        for (std::size_t k = 0; k < m.dim(t); ++k) {
          if (sgn(ma(k, j)) != 0) row.emplace_back(var(t, i, k), -ma(k, j));
        }
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        SparseRow merged;
        for (auto& e : row) {
          if (!merged.empty() && merged.back().first == e.first) {
            merged.back().second += e.second;
            if (sgn(merged.back().second) == 0) merged.pop_back();
          } else {
            merged.push_back(std::move(e));
          }
        }
        if (!merged.empty()) rows.push_back(std::move(merged));
      }
    }
  }
  sys.solutions = nullspace(sys.unknowns, std::move(rows), &sys.free_columns);
  return sys;
}

Homomorphism unflatten(const Representation& m, const Representation& n, const HomSystem& sys,
                       const Vector& x) {
  Homomorphism h;
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    Matrix b(n.dim(v), m.dim(v));
    for (std::size_t i = 0; i < n.dim(v); ++i)
      for (std::size_t j = 0; j < m.dim(v); ++j) b(i, j) = x[sys.offsets[v] + i * m.dim(v) + j];
    h.blocks.push_back(std::move(b));
  }
  return h;
}

// Position of each free unknown as (vertex, row, col).
Rational entry_at(const Homomorphism& h, const std::vector<std::size_t>& offsets, std::size_t index) {
  std::size_t v = 0;
  while (v + 1 < offsets.size() && offsets[v + 1] <= index) ++v;
  const std::size_t local = index - offsets[v];
  const std::size_t cols = h.blocks[v].cols();
  return h.blocks[v](local / cols, local % cols);
}

}  // namespace

std::vector<Homomorphism> hom(const Representation& m, const Representation& n) {
  const HomSystem sys = solve_hom(m, n);
  std::vector<Homomorphism> out;
  for (const auto& x : sys.solutions) out.push_back(unflatten(m, n, sys, x));
  return out;
}

Vector EndAlgebra::coordinates(const Homomorphism& phi) const {
  std::vector<std::size_t> offsets;
  std::size_t off = 0;
  for (const auto& b : phi.blocks) {
    offsets.push_back(off);
    off += b.rows() * b.cols();
  }
  Vector out;
  for (std::size_t f : free_entries) out.push_back(entry_at(phi, offsets, f));
  return out;
}

Homomorphism EndAlgebra::element(const Vector& coords) const {
  Homomorphism out;
  for (const auto& b : basis.front().blocks) out.blocks.emplace_back(b.rows(), b.cols());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    for (std::size_t v = 0; v < out.blocks.size(); ++v) {
      out.blocks[v] = out.blocks[v] + basis[i].blocks[v].scaled(coords[i]);
    }
  }
  return out;
}

EndAlgebra end_algebra(const Representation& m) {
  const HomSystem sys = solve_hom(m, m);
  EndAlgebra e;
  e.free_entries = sys.free_columns;
  for (const auto& x : sys.solutions) e.basis.push_back(unflatten(m, m, sys, x));
  const std::size_t d = e.dim();
  e.mult.assign(d, std::vector<Vector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) e.mult[i][j] = e.coordinates(e.basis[i].compose_after(e.basis[j]));
  // tau(x, y) = trace of left multiplication by xy on End.
  Vector left_trace(d, Rational(0));
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t k = 0; k < d; ++k) left_trace[c] += e.mult[c][k][k];
  Matrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t c = 0; c < d; ++c) gram(i, j) += e.mult[i][j][c] * left_trace[c];
  e.radical_basis = nullspace(gram);
  return e;
}

IndecomposabilityCertificate is_absolutely_indecomposable(const Representation& m) {
  if (m.total_dim() == 0) throw Error("zero module");
  const auto homs = hom(m, m);
  const std::size_t d = homs.size();
  // Kernel of tr_M(xy); equals rad End in characteristic zero.
  Matrix gram(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Rational t = 0;
      for (std::size_t v = 0; v < homs[i].blocks.size(); ++v) {
        const Matrix& x = homs[i].blocks[v];
        const Matrix& y = homs[j].blocks[v];
        for (std::size_t a = 0; a < x.rows(); ++a)
          for (std::size_t b = 0; b < x.cols(); ++b)
            if (sgn(x(a, b)) != 0 && sgn(y(b, a)) != 0) t += x(a, b) * y(b, a);
      }
      gram(i, j) = t;
      gram(j, i) = t;
    }
  }
  IndecomposabilityCertificate c;
  c.end_dim = d;
  c.radical_dim = nullspace(gram).size();
  c.verdict = c.end_dim - c.radical_dim == 1;
  return c;
}

namespace {

// A vector of V outside W spanning a simple submodule of V/W.
std::pair<std::size_t, Vector> simple_step(const Representation& m, const Submodule& w,
                                           const Submodule& v) {
  const auto& pres = m.algebra().presentation();
  for (std::size_t x = 0; x < v.parts.size(); ++x) {
    if (w.parts[x].contains(v.parts[x])) continue;
    const auto& candidates = v.parts[x].basis();
    std::vector<SparseRow> rows;
    for (std::size_t a = 0; a < pres.arrows.size(); ++a) {
      if (pres.arrows[a].source != x) continue;
      const std::size_t t = pres.arrows[a].target;
      std::vector<Vector> images;
      for (const auto& c : candidates) images.push_back(w.parts[t].reduce(m.map(a).apply(c)));
      for (std::size_t r = 0; r < m.dim(t); ++r) {
        SparseRow row;
        for (std::size_t k = 0; k < images.size(); ++k)
          if (sgn(images[k][r]) != 0) row.emplace_back(k, images[k][r]);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
    for (const auto& coeffs : nullspace(candidates.size(), std::move(rows))) {
      Vector y(m.dim(x), Rational(0));
      for (std::size_t k = 0; k < coeffs.size(); ++k)
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += coeffs[k] * candidates[k][i];
      if (!w.parts[x].contains(y)) return {x, y};
    }
  }
  throw Error("no simple submodule found in a nonzero quotient");
}

}  // namespace

std::vector<Submodule> complete_flag(const Representation& m, const Submodule& u,
                                     const Submodule& v) {
  if (!v.contains(u)) throw Error("flag endpoints are not nested");
  std::vector<Submodule> chain{u};
  const Subspace target = v.global();
  while (chain.back().dim() < v.dim()) {
    const Submodule& w = chain.back();
    bool stepped = false;
    for (const auto& x : target.basis()) {
      if (w.contains(x)) continue;
      Submodule next = submodule_generated(m, w, std::span<const Vector>(&x, 1));
      if (next.dim() == w.dim() + 1) {
        chain.push_back(std::move(next));
        stepped = true;
        break;
      }
    }
    if (stepped) continue;
    auto [vertex, y] = simple_step(m, w, v);
    Vector g(m.total_dim(), Rational(0));
    std::copy(y.begin(), y.end(), g.begin() + static_cast<std::ptrdiff_t>(m.offset(vertex)));
    chain.push_back(submodule_generated(m, w, std::span<const Vector>(&g, 1)));
  }
  return chain;
}

}  // namespace qalg
