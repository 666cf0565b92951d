#include "qalg/nondis.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "qalg/error.hpp"

namespace qalg {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

Vector basis_vector(const PathAlgebra& a, std::size_t i) { return unit_vector(a.dim(), i); }

// dim X / (S X) where X = span(hom) and S runs over the given multipliers.
std::size_t top_dim(const PathAlgebra& a, const std::vector<std::size_t>& hom,
                    const std::vector<std::size_t>& multipliers, bool on_left) {
  Subspace moved(a.dim());
  for (std::size_t h : hom) {
    for (std::size_t s : multipliers) {
      moved.insert(on_left ? a.multiply(basis_vector(a, s), basis_vector(a, h))
                           : a.multiply(basis_vector(a, h), basis_vector(a, s)));
    }
  }
  return hom.size() - moved.dim();
}

std::vector<std::size_t> radical_of_corner(const PathAlgebra& a, std::size_t x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto& b = a.element(i);
    if (b.degree > 0 && b.source == x && b.target == x) out.push_back(i);
  }
  return out;
}

std::optional<NonDistWitness> witness_for(const PathAlgebra& a, std::size_t e, std::size_t f) {
  if (hom_space(a, e, f).empty()) return std::nullopt;
  const auto filt = bimodule_radical_filtration(a, e, f);
  for (std::size_t l = 0; l < filt.layer_dims.size(); ++l) {
    if (filt.layer_dims[l] < 2) continue;
    Subspace below = l + 1 < filt.layers.size() ? filt.layers[l + 1] : Subspace(a.dim());
    std::vector<Vector> picked;
    for (const auto& row : filt.layers[l].basis()) {
      if (below.insert(row)) picked.push_back(row);
      if (picked.size() == 2) break;
    }
    return NonDistWitness{e, f, l, picked[0], picked[1]};
  }
  return std::nullopt;
}

}  // namespace

DistributivityVerdict is_distributive(const PathAlgebra& a) {
  const std::size_t nv = a.vertex_count();
  bool conditions = true;
  for (std::size_t e = 0; e < nv && conditions; ++e) {
    const auto corner = bimodule_radical_filtration(a, e, e);
    for (std::size_t d : corner.layer_dims) conditions = conditions && d <= 1;
    for (std::size_t f = 0; f < nv && conditions; ++f) {
      const auto h = hom_space(a, e, f);
      if (h.empty()) continue;
      const bool left = top_dim(a, h, radical_of_corner(a, f), true) <= 1;
      const bool right = top_dim(a, h, radical_of_corner(a, e), false) <= 1;
      conditions = left || right;
    }
  }
  DistributivityVerdict out;
  for (std::size_t e = 0; e < nv && !out.witness; ++e) {
    for (std::size_t f = 0; f < nv && !out.witness; ++f) out.witness = witness_for(a, e, f);
  }
  out.distributive = !out.witness.has_value();
  if (out.distributive != conditions) {
    throw Error("inconsistent distributivity data: layer test and cyclicity test disagree");
  }
  return out;
}

Reduction reduce_by_K(const AlgebraPtr& a, const NonDistWitness& witness) {
  const PathAlgebra& alg = *a;
  const std::size_t n = alg.dim();
  const auto filt = bimodule_radical_filtration(alg, witness.e, witness.f);

  std::vector<Vector> gens;
  if (witness.l + 1 < filt.layers.size()) {
    const auto& deeper = filt.layers[witness.l + 1].basis();
    gens.insert(gens.end(), deeper.begin(), deeper.end());
  }
  for (std::size_t j : radical_power_basis(alg, 1)) {
    const Vector r = basis_vector(alg, j);
    for (const Vector* x : {&witness.v, &witness.w}) {
      gens.push_back(alg.multiply(r, *x));
      gens.push_back(alg.multiply(*x, r));
    }
  }

  // Two-sided closure, kept homogeneous in (source, target).
  Subspace ideal(n);
  std::vector<Vector> work;
  auto add = [&](const Vector& x) {
    for (std::size_t s = 0; s < alg.vertex_count(); ++s) {
      for (std::size_t t = 0; t < alg.vertex_count(); ++t) {
        Vector part(n, Rational(0));
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
          if (sgn(x[i]) != 0 && alg.element(i).source == s && alg.element(i).target == t) {
            part[i] = x[i];
            any = true;
          }
        }
        if (any && ideal.insert(part)) work.push_back(std::move(part));
      }
    }
  };
  for (const auto& g : gens) add(g);
  while (!work.empty()) {
    const Vector x = std::move(work.back());
    work.pop_back();
    for (std::size_t ar = 0; ar < alg.presentation().arrows.size(); ++ar) {
      const Vector arrow = basis_vector(alg, alg.arrow_element(ar));
      add(alg.multiply(arrow, x));
      add(alg.multiply(x, arrow));
    }
  }

  Reduction out;
  out.kernel_dim = ideal.dim();
  if (ideal.empty()) {
    out.algebra = a;
    out.witness = witness;
    return out;
  }

  QuiverPresentation p = alg.presentation();
  for (const auto& row : ideal.basis()) {
    Relation rel;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(row[i]) != 0) rel.terms.push_back({row[i], alg.element(i).path});
    }
    p.relations.push_back(std::move(rel));
  }
  out.algebra = std::make_shared<const PathAlgebra>(build_path_algebra(std::move(p)));
  auto carry = [&](const Vector& x) {
    Vector y(out.algebra->dim(), Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(x[i]) == 0) continue;
      const Vector img = out.algebra->path_value(alg.element(i).path);
      for (std::size_t k = 0; k < y.size(); ++k) y[k] += x[i] * img[k];
    }
    return y;
  };
  out.witness = witness;
  out.witness.v = carry(witness.v);
  out.witness.w = carry(witness.w);
  return out;
}

Vector ConstructionState::embed(const Vector& a, std::size_t i) const {
  const auto& alg = *reduced_algebra;
  const Representation& p = projective_.module;
  Vector out(M.total_dim(), Rational(0));
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (sgn(a[k]) == 0) continue;
    if (position_[k] == kNone) throw Error("element does not lie in Ae");
    const std::size_t t = alg.element(k).target;
    const std::size_t local = position_[k] - p.offset(t);
    out[M.offset(t) + i * p.dim(t) + local] += a[k];
  }
  return out;
}

ConstructionState build_construction(const AlgebraPtr& reduced, const NonDistWitness& witness,
                                     std::size_t n) {
  if (n < 2) throw Error("construction needs at least two copies");
  ConstructionState s;
  s.reduced_algebra = reduced;
  s.witness = witness;
  s.n = n;
  s.projective_ = projective_module(reduced, witness.e);
  s.d = s.projective_.module.total_dim();
  s.position_.assign(reduced->dim(), kNone);
  for (std::size_t k = 0; k < s.projective_.basis.size(); ++k) s.position_[s.projective_.basis[k]] = k;

  s.M = s.projective_.module;
  for (std::size_t i = 1; i < n; ++i) s.M = direct_sum(s.M, s.projective_.module);

  const Vector unit = basis_vector(*reduced, reduced->vertex_element(witness.e));
  for (std::size_t i = 0; i < n; ++i) s.generators.push_back(s.embed(unit, i));

  std::vector<Vector> u0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Vector x = s.embed(witness.w, i);
    const Vector y = s.embed(witness.v, i + 1);
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= y[k];
    u0.push_back(std::move(x));
  }
  s.U0 = submodule_generated(s.M, u0);
  std::vector<Vector> h;
  for (std::size_t i = 0; i < n; ++i) h.push_back(s.embed(witness.v, i));
  s.H = submodule_generated(s.M, h);

  const Submodule zero = zero_submodule(s.M);
  auto meets_h = [&](const Submodule& u) { return !(u.intersect(s.H) == zero); };

  const Vector wxn = s.embed(witness.w, n - 1);
  Submodule u = submodule_generated(s.M, s.U0, std::span<const Vector>(&wxn, 1));
  if (meets_h(u)) throw Error("U0 + <w x_n> meets H; witness is not reduced");

  const Subspace jm = radical(s.M).global();
  for (const auto& b : jm.basis()) {
    if (u.contains(b)) continue;
    Submodule bigger = submodule_generated(s.M, u, std::span<const Vector>(&b, 1));
    if (!meets_h(bigger)) u = std::move(bigger);
  }
  // Adjoin simple submodules of JN that avoid the image of H until none remain.
  for (;;) {
    const Quotient q = quotient(s.M, u);
    const Submodule image_h = q.image(s.M, s.H);
    const Submodule candidates = socle(q.module).intersect(radical(q.module));
    std::optional<Vector> lift;
    for (std::size_t v = 0; v < candidates.parts.size() && !lift; ++v) {
      for (const auto& row : candidates.parts[v].basis()) {
        if (image_h.parts[v].contains(row)) continue;
        Vector y(q.module.total_dim(), Rational(0));
        std::copy(row.begin(), row.end(), y.begin() + static_cast<std::ptrdiff_t>(q.module.offset(v)));
        lift = q.lift(s.M, y);
        break;
      }
    }
    if (!lift) break;
    u = submodule_generated(s.M, u, std::span<const Vector>(&*lift, 1));
  }
  s.maximal_U = std::move(u);
  s.N = quotient(s.M, s.maximal_U);

  std::vector<Vector> tops;
  for (std::size_t i = 0; i + 1 < n; ++i) tops.push_back(s.N.project(s.M, s.generators[i]));
  s.V0 = submodule_generated(s.N.module, tops);
  return s;
}

FlagRanges flag_ranges(const ConstructionState& s) {
  FlagRanges r;
  r.m_side_high = s.M.total_dim() - s.U0.dim();
  r.m_side_low = s.M.total_dim() - s.maximal_U.dim();
  r.n_side_low = s.V0.dim();
  r.n_side_high = s.V0.sum(radical(s.N.module)).dim();
  return r;
}

namespace {

struct Chains {
  std::vector<Submodule> m_side;  // U0, U0 + <w x_n>, ..., maximal_U
  std::vector<Submodule> n_side;  // V0, ..., V0 + JN
};

struct Plan {
  std::string source;
  std::size_t n = 1;
  std::size_t index = 0;
};

class Planner {
 public:
  explicit Planner(const AlgebraPtr& a) : original_(a) {
    const auto verdict = is_distributive(*a);
    if (verdict.distributive) throw Error("algebra is distributive");
    reduction_ = reduce_by_K(a, *verdict.witness);
    projective_ = projective_module(reduction_.algebra, reduction_.witness.e);
    d_ = projective_.module.total_dim();
    const Representation& p = projective_.module;
    local_flag_ = complete_flag(p, zero_submodule(p), radical(p));
  }

  std::size_t d() const { return d_; }

  Plan plan(std::size_t m) {
    if (m == 0) throw Error("dimension target must be positive");
    if (m <= d_) return Plan{"local", 1, d_ - m};
    // (n-1)d - (n-2) <= m <= nd - (n-1)
    std::size_t n = 2;
    while (n * d_ - (n - 1) < m) ++n;
    for (std::size_t k = n; k < n + 4; ++k) {
      const ConstructionState& s = state(k);
      const Chains& c = chains_.at(k);
      const std::size_t total = s.M.total_dim();
      for (std::size_t j = 0; j < c.m_side.size(); ++j) {
        if (total - c.m_side[j].dim() == m) return Plan{"M-flag", k, j};
      }
      for (std::size_t j = 0; j < c.n_side.size(); ++j) {
        if (c.n_side[j].dim() == m) return Plan{"N-flag", k, j};
      }
    }
    throw Error("no flag subquotient of dimension " + std::to_string(m));
  }

  IndecomposableModule realize(const Plan& plan) const {
    IndecomposableModule out;
    out.n = plan.n;
    out.source = plan.source;
    Representation r;
    if (plan.source == "local") {
      r = quotient(projective_.module, local_flag_[plan.index]).module;
    } else if (plan.source == "M-flag") {
      r = quotient(states_.at(plan.n).M, chains_.at(plan.n).m_side[plan.index]).module;
    } else {
      r = restrict_to(states_.at(plan.n).N.module, chains_.at(plan.n).n_side[plan.index]);
    }
    out.module = r.rebind(original_);
    out.violations = check_representation(out.module);
    out.certificate = is_absolutely_indecomposable(out.module);
    return out;
  }

 private:
  const ConstructionState& state(std::size_t n) {
    auto it = states_.find(n);
    if (it != states_.end()) return it->second;
    ConstructionState s = build_construction(reduction_.algebra, reduction_.witness, n);
    Chains c;
    const Vector wxn = s.embed(reduction_.witness.w, n - 1);
    const Submodule start = submodule_generated(s.M, s.U0, std::span<const Vector>(&wxn, 1));
    c.m_side.push_back(s.U0);
    for (auto& w : complete_flag(s.M, start, s.maximal_U)) c.m_side.push_back(std::move(w));
    const Submodule top = s.V0.sum(radical(s.N.module));
    c.n_side = complete_flag(s.N.module, s.V0, top);
    chains_.emplace(n, std::move(c));
    return states_.emplace(n, std::move(s)).first->second;
  }

  AlgebraPtr original_;
  Reduction reduction_;
  Projective projective_;
  std::size_t d_ = 0;
  std::vector<Submodule> local_flag_;
  std::map<std::size_t, ConstructionState> states_;
  std::map<std::size_t, Chains> chains_;
};

}  // namespace

IndecomposableModule indecomposable_of_dimension(const AlgebraPtr& a, std::size_t m) {
  Planner planner(a);
  return planner.realize(planner.plan(m));
}

RangeResult indecomposables_in_range(const AlgebraPtr& a, std::size_t lo, std::size_t hi,
                                     unsigned threads) {
  if (lo == 0 || hi < lo) throw Error("dimension range must satisfy 1 <= a <= b");
  RangeResult out;
  Planner planner(a);
  std::vector<std::optional<Plan>> plans;
  for (std::size_t m = lo; m <= hi; ++m) {
    out.targets.push_back(m);
    try {
      plans.push_back(planner.plan(m));
      out.errors.emplace_back();
    } catch (const Error& e) {
      plans.push_back(std::nullopt);
      out.errors.emplace_back(e.what());
    }
  }
  out.modules.resize(plans.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(plans.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < plans.size(); i = next++) {
      if (!plans[i]) continue;
      try {
        out.modules[i] = planner.realize(*plans[i]);
      } catch (const Error& e) {
        out.errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

Truncation truncated_W(const AlgebraPtr& a, const NonDistWitness& witness, std::size_t n) {
  const Reduction red = reduce_by_K(a, witness);
  Truncation t;
  t.n = n;
  t.state = build_construction(red.algebra, red.witness, n);
  t.d = t.state.d;
  t.module = quotient(t.state.M, t.state.U0).module.rebind(a);
  return t;
}

}  // namespace qalg
