#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "qalg/error.hpp"
#include "qalg/representation.hpp"

using namespace qalg;
using namespace qalg::testing;

namespace {

Vector global_unit(const Representation& m, std::size_t vertex, std::size_t i) {
  Vector v(m.total_dim(), Rational(0));
  v[m.offset(vertex) + i] = 1;
  return v;
}

Matrix jordan3() {
  Matrix j(3, 3);
  j(1, 0) = 1;
  j(2, 1) = 1;
  return j;
}

}  // namespace

TEST_CASE("relation checks") {
  const auto kr = load_algebra("kronecker.qalg");
  CHECK(check_representation(make_rep(kr, {1, 1}, {{{1}}, {{0}}})).empty());

  const auto loop = load_algebra("loop3.qalg");
  CHECK(check_representation(Representation(loop, {3}, {jordan3()})).empty());
  const auto bad = check_representation(Representation(loop, {3}, {Matrix::identity(3)}));
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].message == "s*s*s != 0");

  CHECK_THROWS_WITH_AS(Representation(kr, {1, 1}, {Matrix(2, 1), Matrix(1, 1)}),
                       doctest::Contains("shape mismatch"), Error);
}

TEST_CASE("projective modules") {
  const auto kr = load_algebra("kronecker.qalg");
  const Projective p = projective_module(kr, 0);
  CHECK(p.module.dims() == std::vector<std::size_t>{1, 2});
  CHECK(p.module.total_dim() == 3);
  CHECK(check_representation(p.module).empty());

  const auto e1 = load_algebra("e1.qalg");
  CHECK(projective_module(e1, 0).module.total_dim() == 5);
  CHECK(check_representation(projective_module(e1, 1).module).empty());

  const Projective sink = projective_module(kr, 1);
  CHECK(sink.module.dims() == simple_module(kr, 1).dims());
}

TEST_CASE("radical, socle and top") {
  const auto kr = load_algebra("kronecker.qalg");
  const Representation p = projective_module(kr, 0).module;
  CHECK(radical(p).dim_vector() == std::vector<std::size_t>{0, 2});
  CHECK(socle(p).dim_vector() == std::vector<std::size_t>{0, 2});
  CHECK(top(p).dims() == std::vector<std::size_t>{1, 0});

  const Representation ss = direct_sum(simple_module(kr, 0), simple_module(kr, 1));
  CHECK(radical(ss).dim() == 0);
  CHECK(socle(ss) == whole_module(ss));

  const auto loop = load_algebra("loop3.qalg");
  const Representation reg = projective_module(loop, 0).module;
  CHECK(radical(reg).dim() == 2);
  CHECK(socle(reg).dim() == 1);
}

TEST_CASE("generated submodules") {
  const auto kr = load_algebra("kronecker.qalg");
  const Representation p = projective_module(kr, 0).module;
  const Vector top_vector = global_unit(p, 0, 0);
  CHECK(submodule_generated(p, std::vector<Vector>{top_vector}) == whole_module(p));
  const Vector a_vector = p.act_arrow(0, top_vector);
  const Submodule sa = submodule_generated(p, std::vector<Vector>{a_vector});
  CHECK(sa.dim_vector() == std::vector<std::size_t>{0, 1});
  CHECK(submodule_generated(p, std::vector<Vector>{}) == zero_submodule(p));
  CHECK(is_submodule(p, sa));
}

TEST_CASE("quotients") {
  const auto kr = load_algebra("kronecker.qalg");
  const Representation p = projective_module(kr, 0).module;
  const Vector a_vector = p.act_arrow(0, global_unit(p, 0, 0));
  const Submodule sa = submodule_generated(p, std::vector<Vector>{a_vector});
  const Quotient q = quotient(p, sa);
  CHECK(q.module.dims() == std::vector<std::size_t>{1, 1});
  CHECK(check_representation(q.module).empty());
  CHECK(is_zero(q.project(p, a_vector)));
  const Vector x = global_unit(p, 0, 0);
  CHECK(q.project(p, q.lift(p, q.project(p, x))) == q.project(p, x));
  // Projection commutes with the arrows.
  for (std::size_t arrow = 0; arrow < 2; ++arrow) {
    CHECK(q.project(p, p.act_arrow(arrow, x)) == q.module.act_arrow(arrow, q.project(p, x)));
  }
  CHECK(q.preimage(p, zero_submodule(q.module)) == sa);

  Submodule not_closed = zero_submodule(p);
  not_closed.parts[0] = Subspace::whole(1);
  CHECK_THROWS_AS(quotient(p, not_closed), Error);
}

TEST_CASE("structural invariants over the corpus") {
  for (const auto& [name, m] : small_module_corpus(5, 21)) {
    CAPTURE(name);
    REQUIRE(check_representation(m).empty());
    const Representation t = top(m);
    for (const auto& map : t.maps()) CHECK(map.is_zero());
    const Representation s = restrict_to(m, socle(m));
    for (const auto& map : s.maps()) CHECK(map.is_zero());
    CHECK(radical(m).dim() + t.total_dim() == m.total_dim());
  }
}

TEST_CASE("hom is additive") {
  const auto e1 = load_algebra("e1.qalg");
  const Representation p0 = projective_module(e1, 0).module;
  const Representation p1 = projective_module(e1, 1).module;
  const Representation s2 = simple_module(e1, 2);
  const Representation n = top(p0);
  for (const Representation* target : {&p0, &p1, &s2, &n}) {
    CHECK(hom(direct_sum(p0, p1), *target).size() == hom(p0, *target).size() + hom(p1, *target).size());
    CHECK(hom(direct_sum(s2, p1), *target).size() == hom(s2, *target).size() + hom(p1, *target).size());
  }
  // Hom(Ae, M) has the dimension of eM.
  CHECK(hom(p0, p1).size() == p1.dim(0));
  CHECK(hom(p1, p0).size() == p0.dim(1));
}

TEST_CASE("homomorphisms commute with the arrows") {
  const auto kr = load_algebra("kronecker.qalg");
  const Representation p = projective_module(kr, 0).module;
  const Representation m = make_rep(kr, {2, 3}, {{{1, 0}, {0, 1}, {0, 0}}, {{0, 0}, {1, 0}, {0, 1}}});
  for (const auto& f : hom(p, m)) {
    const Matrix g = f.global(p, m);
    for (std::size_t arrow = 0; arrow < 2; ++arrow) {
      for (std::size_t k = 0; k < p.total_dim(); ++k) {
        Vector x(p.total_dim(), Rational(0));
        x[k] = 1;
        CHECK(g.apply(p.act_arrow(arrow, x)) == m.act_arrow(arrow, g.apply(x)));
      }
    }
  }
}

TEST_CASE("endomorphism algebra") {
  for (const auto& [name, m] : small_module_corpus(5, 8)) {
    CAPTURE(name);
    const EndAlgebra e = end_algebra(m);
    CHECK(e.dim() == oracle::endomorphisms(m).size());
    for (std::size_t i = 0; i < e.dim(); ++i) {
      CHECK(e.coordinates(e.basis[i]) == unit_vector(e.dim(), i));
      for (std::size_t j = 0; j < e.dim(); ++j) {
        CHECK(e.element(e.mult[i][j]) == e.basis[i].compose_after(e.basis[j]));
      }
    }
    // The radical is an ideal and nilpotent.
    const std::size_t r = e.radical_basis.size();
    auto mult = [&](const Vector& x, const Vector& y) {
      Vector out(e.dim(), Rational(0));
      for (std::size_t i = 0; i < e.dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < e.dim(); ++j) {
          if (y[j] == 0) continue;
          for (std::size_t k = 0; k < e.dim(); ++k) out[k] += x[i] * y[j] * e.mult[i][j][k];
        }
      }
      return out;
    };
    const Subspace rad = Subspace::spanned_by(e.dim(), e.radical_basis);
    CHECK(rad.dim() == r);
    for (const auto& x : e.radical_basis) {
      for (std::size_t i = 0; i < e.dim(); ++i) {
        CHECK(rad.contains(mult(x, unit_vector(e.dim(), i))));
        CHECK(rad.contains(mult(unit_vector(e.dim(), i), x)));
      }
    }
    std::vector<Vector> power = e.radical_basis;
    for (std::size_t k = 0; k < m.total_dim() && !power.empty(); ++k) {
      std::vector<Vector> next;
      for (const auto& x : power) {
        for (const auto& y : e.radical_basis) next.push_back(mult(x, y));
      }
      power = Subspace::spanned_by(e.dim(), next).basis();
    }
    CHECK(power.empty());

    const auto cert = is_absolutely_indecomposable(m);
    CHECK(cert.end_dim == e.dim());
    CHECK(cert.radical_dim == r);
  }
}

TEST_CASE("indecomposability certificates") {
  const auto kr = load_algebra("kronecker.qalg");
  const auto s = is_absolutely_indecomposable(simple_module(kr, 0));
  CHECK(s.verdict);
  CHECK(s.end_dim == 1);
  CHECK(s.radical_dim == 0);

  const Representation p = projective_module(kr, 0).module;
  CHECK_FALSE(is_absolutely_indecomposable(direct_sum(p, p)).verdict);

  const auto pre = is_absolutely_indecomposable(
      make_rep(kr, {2, 3}, {{{1, 0}, {0, 1}, {0, 0}}, {{0, 0}, {1, 0}, {0, 1}}}));
  CHECK(pre.verdict);
  CHECK(pre.end_dim == 1);
  CHECK(pre.radical_dim == 0);

  const auto regular = is_absolutely_indecomposable(make_rep(kr, {2, 2}, {{{1, 0}, {0, 1}}, {{0, 0}, {1, 0}}}));
  CHECK(regular.verdict);
  CHECK(regular.end_dim == 2);
  CHECK(regular.radical_dim == 1);

  // Indecomposable over the rationals, split over the algebraic closure.
  const auto rotation = is_absolutely_indecomposable(make_rep(kr, {2, 2}, {{{1, 0}, {0, 1}}, {{0, -1}, {1, 0}}}));
  CHECK_FALSE(rotation.verdict);
  CHECK(rotation.end_dim == 2);
  CHECK(rotation.radical_dim == 0);
}

TEST_CASE("complete flags") {
  const auto kr = load_algebra("kronecker.qalg");
  const Representation p = projective_module(kr, 0).module;
  const Submodule soc = socle(p);
  CHECK(complete_flag(p, soc, soc).size() == 1);

  const auto flag = complete_flag(p, zero_submodule(p), soc);
  REQUIRE(flag.size() == 3);
  for (std::size_t k = 0; k < flag.size(); ++k) {
    CHECK(flag[k].dim() == k);
    CHECK(is_submodule(p, flag[k]));
    if (k) CHECK(flag[k].contains(flag[k - 1]));
  }
  CHECK(flag.back() == soc);

  CHECK_THROWS_AS(complete_flag(p, soc, zero_submodule(p)), Error);

  const auto e2 = load_algebra("e2.qalg");
  const Representation q = projective_module(e2, 0).module;
  const auto full = complete_flag(q, zero_submodule(q), whole_module(q));
  CHECK(full.size() == q.total_dim() + 1);
  for (std::size_t k = 1; k < full.size(); ++k) {
    CHECK(is_submodule(q, full[k]));
    CHECK(full[k].dim() == full[k - 1].dim() + 1);
  }
}
