#include "qalg/ray_category.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "qalg/error.hpp"

namespace qalg {

namespace {

MorphismId compose_spec(const RayCategorySpec& s, MorphismId g, MorphismId f) {
  if (g == kZero || f == kZero) return kZero;
  if (s.morphisms[f].codomain != s.morphisms[g].domain) return kUndefined;
  return s.compose[g][f];
}

std::string name(const RayCategorySpec& s, MorphismId m) {
  if (m == kZero) return "ZERO";
  if (m == kUndefined) return "undefined";
  return s.morphisms.at(m).label;
}

}  // namespace

std::vector<AxiomViolation> check_axioms(const RayCategorySpec& s) {
  std::vector<AxiomViolation> out;
  const auto m = static_cast<MorphismId>(s.size());
  if (s.compose.size() != s.size()) {
    out.push_back({"category", "composition table has the wrong size"});
    return out;
  }
  for (MorphismId g = 0; g < m; ++g) {
    for (MorphismId f = 0; f < m; ++f) {
      const bool composable = s.morphisms[f].codomain == s.morphisms[g].domain;
      const MorphismId gf = s.compose[g][f];
      if (composable && gf == kUndefined) {
        out.push_back({"category", "missing entry " + name(s, g) + "*" + name(s, f)});
      } else if (composable && gf != kZero &&
                 (s.morphisms.at(gf).domain != s.morphisms[f].domain ||
                  s.morphisms.at(gf).codomain != s.morphisms[g].codomain)) {
        out.push_back({"category", name(s, g) + "*" + name(s, f) + " has the wrong endpoints"});
      }
    }
  }
  if (!out.empty()) return out;

  for (std::size_t x = 0; x < s.objects.size(); ++x) {
    const auto id = static_cast<MorphismId>(s.identities.at(x));
    for (MorphismId f = 0; f < m; ++f) {
      if (s.morphisms[f].codomain == x && compose_spec(s, id, f) != f) {
        out.push_back({"category", name(s, id) + " does not act as an identity on " + name(s, f)});
      }
      if (s.morphisms[f].domain == x && compose_spec(s, f, id) != f) {
        out.push_back({"category", name(s, id) + " does not act as an identity on " + name(s, f)});
      }
    }
  }

  // Associativity; a zero on exactly one side means zero fails to absorb.
  bool reported_b = false;
  bool reported_assoc = false;
  for (MorphismId f = 0; f < m; ++f) {
    for (MorphismId g = 0; g < m; ++g) {
      if (s.morphisms[f].codomain != s.morphisms[g].domain) continue;
      const MorphismId gf = s.compose[g][f];
      for (MorphismId h = 0; h < m; ++h) {
        if (s.morphisms[g].codomain != s.morphisms[h].domain) continue;
        const MorphismId left = compose_spec(s, s.compose[h][g], f);
        const MorphismId right = compose_spec(s, h, gf);
        if (left == right) continue;
        const std::string triple = name(s, h) + "*" + name(s, g) + "*" + name(s, f);
        if (left == kZero || right == kZero) {
          if (!reported_b) {
            out.push_back({"b", "zero does not absorb: (" + name(s, h) + "*" + name(s, g) + ")*" +
                                    name(s, f) + " = " + name(s, left) + " but " + name(s, h) +
                                    "*(" + name(s, g) + "*" + name(s, f) + ") = " + name(s, right)});
            reported_b = true;
          }
        } else if (!reported_assoc) {
          out.push_back({"category", "composition is not associative on " + triple});
          reported_assoc = true;
        }
      }
    }
  }

  for (MorphismId f = 0; f < m; ++f) {
    if (s.is_identity(f)) continue;
    for (MorphismId g = 0; g < m; ++g) {
      if (s.morphisms[g].domain != s.morphisms[f].codomain ||
          s.morphisms[g].codomain != s.morphisms[f].domain) {
        continue;
      }
      if (s.is_identity(s.compose[g][f]) && s.is_identity(s.compose[f][g])) {
        out.push_back({"a", name(s, f) + " is invertible with inverse " + name(s, g)});
      }
    }
  }

  for (std::size_t x = 0; x < s.objects.size(); ++x) {
    std::vector<MorphismId> endo;
    for (MorphismId f = 0; f < m; ++f) {
      if (s.morphisms[f].domain == x && s.morphisms[f].codomain == x && !s.is_identity(f)) {
        endo.push_back(f);
      }
    }
    if (endo.empty()) continue;
    bool found = false;
    for (MorphismId sigma : endo) {
      std::vector<MorphismId> powers{sigma};
      MorphismId p = sigma;
      while (powers.size() <= endo.size()) {
        p = compose_spec(s, sigma, p);
        if (p == kZero) break;
        powers.push_back(p);
      }
      if (p != kZero) continue;
      std::sort(powers.begin(), powers.end());
      if (std::adjacent_find(powers.begin(), powers.end()) != powers.end()) continue;
      if (powers == endo) {
        found = true;
        break;
      }
    }
    if (!found) {
      out.push_back({"d", "endomorphisms of " + s.objects[x] +
                              " are not the powers of a single nilpotent morphism"});
    }
  }

  for (std::size_t x = 0; x < s.objects.size(); ++x) {
    for (std::size_t y = 0; y < s.objects.size(); ++y) {
      if (x == y) continue;
      std::vector<MorphismId> hom;
      std::vector<MorphismId> ex;
      std::vector<MorphismId> ey;
      for (MorphismId f = 0; f < m; ++f) {
        const auto& d = s.morphisms[f];
        if (d.domain == x && d.codomain == y) hom.push_back(f);
        if (d.domain == x && d.codomain == x) ex.push_back(f);
        if (d.domain == y && d.codomain == y) ey.push_back(f);
      }
      if (hom.size() <= 1) continue;
      auto generated = [&](MorphismId g, bool right) {
        std::set<MorphismId> reach;
        for (MorphismId e : right ? ex : ey) {
          const MorphismId c = right ? compose_spec(s, g, e) : compose_spec(s, e, g);
          if (c != kZero) reach.insert(c);
        }
        return std::all_of(hom.begin(), hom.end(), [&](MorphismId h) { return reach.count(h) > 0; });
      };
      bool cyclic = false;
      for (MorphismId g : hom) cyclic = cyclic || generated(g, true) || generated(g, false);
      if (!cyclic) {
        out.push_back({"e", "morphisms " + s.objects[x] + " -> " + s.objects[y] +
                                " are cyclic on neither side"});
      }
    }
  }

  // Cancellation, grouped by the outer pair (kappa, lambda).
  bool reported_f = false;
  for (MorphismId kappa = 0; kappa < m && !reported_f; ++kappa) {
    for (MorphismId lambda = 0; lambda < m && !reported_f; ++lambda) {
      std::map<MorphismId, MorphismId> seen;
      for (MorphismId mu = 0; mu < m; ++mu) {
        if (s.morphisms[mu].domain != s.morphisms[kappa].codomain ||
            s.morphisms[mu].codomain != s.morphisms[lambda].domain) {
          continue;
        }
        const MorphismId v = compose_spec(s, lambda, compose_spec(s, mu, kappa));
        if (v == kZero) continue;
        auto [it, fresh] = seen.emplace(v, mu);
        if (!fresh) {
          out.push_back({"f", name(s, lambda) + "*" + name(s, it->second) + "*" + name(s, kappa) +
                                  " = " + name(s, lambda) + "*" + name(s, mu) + "*" +
                                  name(s, kappa) + " = " + name(s, v) + " but " +
                                  name(s, it->second) + " != " + name(s, mu)});
          reported_f = true;
          break;
        }
      }
    }
  }
  return out;
}

RayCategory::RayCategory(RayCategorySpec spec) : spec_(std::move(spec)) {
  const auto violations = check_axioms(spec_);
  if (!violations.empty()) {
    std::string msg = "not a ray category:";
    for (const auto& v : violations) msg += " [" + v.axiom + "] " + v.message + ";";
    msg.pop_back();
    throw Error(msg);
  }
  structure_ = quiver_depth_order(*this);
}

MorphismId RayCategory::compose(MorphismId g, MorphismId f) const { return compose_spec(spec_, g, f); }

MorphismId RayCategory::find(const std::string& label) const {
  const auto m = spec_.morphism_index(label);
  if (!m) throw Error("unknown morphism '" + label + "'");
  return *m;
}

bool RayCategory::is_irreducible(MorphismId f) const {
  const auto& irr = structure_.irreducibles;
  return std::find(irr.begin(), irr.end(), f) != irr.end();
}

std::string RayCategory::path_text(const RayPath& p) const {
  if (p.arrows.empty()) return "e_" + spec_.objects.at(p.start);
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += label(*it);
  }
  return out;
}

QuiverDepthOrder quiver_depth_order(const RayCategory& p) {
  const auto m = static_cast<MorphismId>(p.size());
  QuiverDepthOrder q;
  std::vector<std::vector<std::pair<MorphismId, MorphismId>>> factorizations(m);
  for (MorphismId a = 0; a < m; ++a) {
    if (p.is_identity(a)) continue;
    for (MorphismId b = 0; b < m; ++b) {
      if (p.is_identity(b)) continue;
      const MorphismId ab = p.compose(a, b);
      if (ab >= 0) factorizations[ab].emplace_back(a, b);
    }
  }
  for (MorphismId f = 0; f < m; ++f) {
    if (!p.is_identity(f) && factorizations[f].empty()) q.irreducibles.push_back(f);
  }

  q.depth.assign(m, -1);
  std::vector<char> busy(m, 0);
  std::function<int(MorphismId)> depth = [&](MorphismId f) -> int {
    if (q.depth[f] >= 0) return q.depth[f];
    if (p.is_identity(f)) return q.depth[f] = 0;
    if (busy[f]) throw Error("cyclic factorization through '" + p.label(f) + "'");
    busy[f] = 1;
    int best = 1;
    for (const auto& [a, b] : factorizations[f]) best = std::max(best, depth(a) + depth(b));
    busy[f] = 0;
    return q.depth[f] = best;
  };
  for (MorphismId f = 0; f < m; ++f) depth(f);

  q.leq.assign(m, std::vector<bool>(m, false));
  for (MorphismId mu = 0; mu < m; ++mu) {
    for (MorphismId beta = 0; beta < m; ++beta) {
      const MorphismId mb = p.compose(mu, beta);
      if (mb < 0) continue;
      for (MorphismId alpha = 0; alpha < m; ++alpha) {
        const MorphismId amb = p.compose(alpha, mb);
        if (amb >= 0) q.leq[mu][amb] = true;
      }
    }
  }
  for (MorphismId mu = 0; mu < m; ++mu) {
    if (p.is_identity(mu) || !factorizations[mu].size()) continue;
    bool maximal = true;
    for (MorphismId nu = 0; nu < m && maximal; ++nu) maximal = nu == mu || !q.leq[mu][nu];
    if (maximal) q.long_morphisms.push_back(mu);
  }
  return q;
}

namespace {

// Rays of a distributive algebra: layer i of the filtration of yAx.
struct RayTable {
  std::vector<BimoduleFiltration> filtrations;  // index x * nv + y
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, MorphismId> ray_of;
  std::vector<Vector> representative;
  RayCategorySpec spec;

  MorphismId locate(const PathAlgebra& a, std::size_t x, std::size_t y, const Vector& v) const {
    if (is_zero(v)) return kZero;
    const auto& filt = filtrations[x * a.vertex_count() + y];
    std::size_t layer = 0;
    while (layer + 1 < filt.layers.size() && filt.layers[layer + 1].contains(v)) ++layer;
    return ray_of.at({x, y, layer});
  }
};

RayTable build_rays(const PathAlgebra& a) {
  const std::size_t nv = a.vertex_count();
  const auto& pres = a.presentation();
  RayTable t;
  t.spec.objects = pres.vertices;
  t.spec.identities.resize(nv);
  t.filtrations.resize(nv * nv);
  std::set<std::string> used;
  for (std::size_t x = 0; x < nv; ++x) {
    for (std::size_t y = 0; y < nv; ++y) {
      if (hom_space(a, x, y).empty()) continue;
      auto filt = bimodule_radical_filtration(a, x, y);
      for (std::size_t i = 0; i < filt.layer_dims.size(); ++i) {
        if (filt.layer_dims[i] != 1) throw Error("algebra not distributive");
        Vector rep;
        for (const auto& row : filt.layers[i].basis()) {
          if (i + 1 >= filt.layers.size() || !filt.layers[i + 1].contains(row)) {
            rep = row;
            break;
          }
        }
        std::string label;
        if (x == y && i == 0) {
          label = "id_" + pres.vertices[x];
          t.spec.identities[x] = t.spec.morphisms.size();
        } else {
          std::size_t lead = 0;
          while (sgn(rep[lead]) == 0) ++lead;
          label = a.label(lead);
        }
        std::string unique = label;
        for (int k = 2; used.count(unique); ++k) unique = label + "#" + std::to_string(k);
        used.insert(unique);
        t.ray_of[{x, y, i}] = static_cast<MorphismId>(t.spec.morphisms.size());
        t.spec.morphisms.push_back({unique, x, y});
        t.representative.push_back(std::move(rep));
      }
      t.filtrations[x * nv + y] = std::move(filt);
    }
  }
  const std::size_t m = t.spec.morphisms.size();
  t.spec.compose.assign(m, std::vector<MorphismId>(m, kUndefined));
  for (std::size_t g = 0; g < m; ++g) {
    for (std::size_t f = 0; f < m; ++f) {
      const auto& df = t.spec.morphisms[f];
      const auto& dg = t.spec.morphisms[g];
      if (df.codomain != dg.domain) continue;
      const Vector prod = a.multiply(t.representative[g], t.representative[f]);
      t.spec.compose[g][f] = t.locate(a, df.domain, dg.codomain, prod);
    }
  }
  return t;
}

}  // namespace

RayCategory ray_category_of(const PathAlgebra& a) { return RayCategory(build_rays(a).spec); }

MorphismId evaluate_path(const RayCategory& p, const RayPath& path) {
  if (path.start >= p.object_count()) throw Error("path starts at an unknown object");
  std::size_t at = path.start;
  MorphismId cur = p.identity(at);
  for (MorphismId a : path.arrows) {
    if (a < 0 || static_cast<std::size_t>(a) >= p.size() || p.domain(a) != at) {
      throw Error("non-composable sequence");
    }
    at = p.codomain(a);
    cur = p.compose(a, cur);
  }
  return cur;
}

std::vector<RayPath> nonzero_paths(const RayCategory& p) {
  std::vector<RayPath> out;
  const auto& irr = p.structure().irreducibles;
  std::function<void(RayPath&, MorphismId)> grow = [&](RayPath& path, MorphismId value) {
    out.push_back(path);
    const std::size_t at = p.codomain(value);
    for (MorphismId a : irr) {
      if (p.domain(a) != at) continue;
      const MorphismId next = p.compose(a, value);
      if (next == kZero) continue;
      path.arrows.push_back(a);
      grow(path, next);
      path.arrows.pop_back();
    }
  };
  for (std::size_t x = 0; x < p.object_count(); ++x) {
    RayPath path{x, {}};
    grow(path, p.identity(x));
  }
  std::sort(out.begin(), out.end(), [](const RayPath& a, const RayPath& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.length() != b.length()) return a.length() < b.length();
    return a.arrows < b.arrows;
  });
  return out;
}

namespace {

bool path_less(const RayPath& a, const RayPath& b) {
  if (a.start != b.start) return a.start < b.start;
  if (a.length() != b.length()) return a.length() < b.length();
  return a.arrows < b.arrows;
}

RayPath subpath(const RayPath& p, const RayCategory& cat, std::size_t from, std::size_t to) {
  RayPath out;
  out.start = from == 0 ? p.start : cat.codomain(p.arrows[from - 1]);
  out.arrows.assign(p.arrows.begin() + static_cast<std::ptrdiff_t>(from),
                    p.arrows.begin() + static_cast<std::ptrdiff_t>(to));
  return out;
}

// v = p v' q, w = p w' q with p, q not both trivial and v', w' non-empty.
bool related(const RayCategory& cat, const RayPath& v, const RayPath& w) {
  const std::size_t lv = v.length();
  const std::size_t lw = w.length();
  for (std::size_t j = 0; j < std::min(lv, lw); ++j) {
    if (j > 0 && v.arrows[j - 1] != w.arrows[j - 1]) break;
    for (std::size_t i = 0; i + j < std::min(lv, lw); ++i) {
      if (i > 0 && v.arrows[lv - i] != w.arrows[lw - i]) break;
      if (i + j == 0) continue;
      const MorphismId mv = evaluate_path(cat, subpath(v, cat, j, lv - i));
      if (mv != kZero && mv == evaluate_path(cat, subpath(w, cat, j, lw - i))) return true;
    }
  }
  return false;
}

struct Components {
  std::vector<RayPath> paths;
  std::vector<MorphismId> value;
  std::vector<std::size_t> parent;

  std::size_t root(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
};

Components interlacing_components(const RayCategory& p) {
  Components c;
  c.paths = nonzero_paths(p);
  for (const auto& path : c.paths) c.value.push_back(evaluate_path(p, path));
  c.parent.resize(c.paths.size());
  std::iota(c.parent.begin(), c.parent.end(), 0);
  std::map<MorphismId, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < c.paths.size(); ++i) groups[c.value[i]].push_back(i);
  for (const auto& [mu, members] : groups) {
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (c.root(members[a]) == c.root(members[b])) continue;
        if (related(p, c.paths[members[a]], c.paths[members[b]])) {
          c.parent[c.root(members[a])] = c.root(members[b]);
        }
      }
    }
  }
  return c;
}

}  // namespace

bool interlaced(const RayCategory& p, const RayPath& v, const RayPath& w) {
  const MorphismId mv = evaluate_path(p, v);
  if (mv == kZero || mv != evaluate_path(p, w)) return false;
  if (v == w) return v.length() >= 2;
  Components c = interlacing_components(p);
  const auto iv = std::find(c.paths.begin(), c.paths.end(), v) - c.paths.begin();
  const auto iw = std::find(c.paths.begin(), c.paths.end(), w) - c.paths.begin();
  return c.root(static_cast<std::size_t>(iv)) == c.root(static_cast<std::size_t>(iw));
}

std::vector<Contour> contours(const RayCategory& p) {
  Components c = interlacing_components(p);
  std::vector<Contour> out;
  for (std::size_t a = 0; a < c.paths.size(); ++a) {
    for (std::size_t b = a + 1; b < c.paths.size(); ++b) {
      if (c.value[a] != c.value[b] || c.root(a) == c.root(b)) continue;
      out.push_back({c.value[a], c.paths[a], c.paths[b]});
    }
  }
  std::sort(out.begin(), out.end(), [](const Contour& x, const Contour& y) {
    if (x.mu != y.mu) return x.mu < y.mu;
    if (!(x.v == y.v)) return path_less(x.v, y.v);
    return path_less(x.w, y.w);
  });
  return out;
}

RayCategory quotient(const RayCategory& p, MorphismId tau) {
  if (tau < 0 || static_cast<std::size_t>(tau) >= p.size()) throw Error("unknown morphism");
  if (p.is_identity(tau)) throw Error("cannot take the quotient by an identity");
  const auto& leq = p.structure().leq;
  const auto m = static_cast<MorphismId>(p.size());
  std::vector<MorphismId> remap(m, kZero);
  RayCategorySpec s;
  s.objects = p.spec().objects;
  for (MorphismId f = 0; f < m; ++f) {
    if (leq[tau][f]) continue;
    remap[f] = static_cast<MorphismId>(s.morphisms.size());
    s.morphisms.push_back(p.spec().morphisms[f]);
  }
  for (std::size_t x = 0; x < s.objects.size(); ++x) {
    s.identities.push_back(static_cast<std::size_t>(remap[p.identity(x)]));
  }
  s.compose.assign(s.morphisms.size(), std::vector<MorphismId>(s.morphisms.size(), kUndefined));
  for (MorphismId g = 0; g < m; ++g) {
    if (remap[g] == kZero) continue;
    for (MorphismId f = 0; f < m; ++f) {
      if (remap[f] == kZero) continue;
      const MorphismId gf = p.compose(g, f);
      if (gf == kUndefined) continue;
      s.compose[remap[g]][remap[f]] = gf == kZero ? kZero : remap[gf];
    }
  }
  return RayCategory(std::move(s));
}

namespace {

struct FactorTables {
  // left[s][r]: s = xi r for some xi; right[s][r]: s xi = r for some xi.
  std::vector<std::vector<bool>> left;
  std::vector<std::vector<bool>> right;
};

FactorTables factor_tables(const RayCategory& p) {
  const auto m = static_cast<MorphismId>(p.size());
  FactorTables t;
  t.left.assign(m, std::vector<bool>(m, false));
  t.right.assign(m, std::vector<bool>(m, false));
  for (MorphismId a = 0; a < m; ++a) {
    for (MorphismId b = 0; b < m; ++b) {
      const MorphismId ab = p.compose(a, b);
      if (ab < 0) continue;
      t.left[ab][b] = true;   // ab = a b
      t.right[a][ab] = true;  // a b = ab
    }
  }
  return t;
}

using Node = std::pair<MorphismId, MorphismId>;

std::vector<Node> canonical(std::vector<Node> nodes) {
  const std::size_t n = nodes.size();
  std::vector<Node> best;
  auto consider = [&](const std::vector<Node>& seq) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Node> rot(seq.begin() + static_cast<std::ptrdiff_t>(r), seq.end());
      rot.insert(rot.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(r));
      if (best.empty() || rot < best) best = rot;
    }
  };
  consider(nodes);
  return best;
}

}  // namespace

bool verify_crown(const RayCategory& p, const Crown& c) {
  const std::size_t n = c.n();
  if (n < 2 || c.rho.size() != n) return false;
  const auto m = static_cast<MorphismId>(p.size());
  auto valid = [&](MorphismId f) {
    return f >= 0 && f < m && !p.is_identity(f);
  };
  for (std::size_t i = 0; i < n; ++i) {
    const MorphismId s = c.sigma[i];
    const MorphismId r = c.rho[i];
    const MorphismId s_next = c.sigma[(i + 1) % n];
    if (!valid(s) || !valid(r)) return false;
    if (p.domain(s) != p.domain(r) || p.codomain(r) != p.codomain(s_next)) return false;
    for (MorphismId xi = 0; xi < m; ++xi) {
      if (p.compose(xi, r) == s || p.compose(xi, s) == r) return false;
      if (p.compose(s_next, xi) == r || p.compose(r, xi) == s_next) return false;
    }
  }
  return true;
}

std::vector<Crown> find_crowns(const RayCategory& p, std::size_t max_n) {
  const auto m = static_cast<MorphismId>(p.size());
  const FactorTables t = factor_tables(p);
  std::vector<Node> nodes;
  for (MorphismId s = 0; s < m; ++s) {
    if (p.is_identity(s)) continue;
    for (MorphismId r = 0; r < m; ++r) {
      if (r == s || p.is_identity(r) || p.domain(r) != p.domain(s)) continue;
      if (t.left[s][r] || t.left[r][s]) continue;
      nodes.emplace_back(s, r);
    }
  }
  std::vector<std::vector<std::size_t>> next(nodes.size());
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    const MorphismId r = nodes[a].second;
    for (std::size_t b = 0; b < nodes.size(); ++b) {
      const MorphismId s2 = nodes[b].first;
      if (p.codomain(r) != p.codomain(s2)) continue;
      if (t.right[s2][r] || t.right[r][s2]) continue;
      next[a].push_back(b);
    }
  }

  std::vector<Crown> out;
  std::set<std::vector<Node>> seen;
  std::vector<std::size_t> stack;
  std::vector<char> on_stack(nodes.size(), 0);
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    const std::size_t cur = stack.back();
    for (std::size_t b : next[cur]) {
      if (b == start && stack.size() >= 2) {
        std::vector<Node> cycle;
        for (std::size_t k : stack) cycle.push_back(nodes[k]);
        if (seen.insert(canonical(cycle)).second) {
          Crown c;
          for (const auto& [s, r] : cycle) {
            c.sigma.push_back(s);
            c.rho.push_back(r);
          }
          out.push_back(std::move(c));
        }
        continue;
      }
      if (b <= start || on_stack[b] || stack.size() >= max_n) continue;
      stack.push_back(b);
      on_stack[b] = 1;
      dfs(start);
      on_stack[b] = 0;
      stack.pop_back();
    }
  };
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    stack = {s};
    on_stack[s] = 1;
    dfs(s);
    on_stack[s] = 0;
  }
  std::stable_sort(out.begin(), out.end(), [](const Crown& a, const Crown& b) { return a.n() < b.n(); });
  return out;
}

int crown_weight(const RayCategory& p, const Crown& c) {
  int t = 0;
  for (std::size_t i = 0; i < c.n(); ++i) {
    t += p.structure().depth[c.sigma[i]] + p.structure().depth[c.rho[i]];
  }
  return t;
}

std::optional<Crown> minimal_crown(const RayCategory& p, std::size_t max_n) {
  std::optional<Crown> best;
  std::pair<std::size_t, int> key{0, 0};
  for (auto& c : find_crowns(p, max_n)) {
    const std::pair<std::size_t, int> k{c.n(), crown_weight(p, c)};
    if (!best || k < key) {
      key = k;
      best = std::move(c);
    }
  }
  return best;
}

RayFunctor make_functor(RayCategory source, RayCategory target, std::vector<std::size_t> object_map,
                        std::vector<MorphismId> morphism_map) {
  if (object_map.size() != source.object_count() || morphism_map.size() != source.size()) {
    throw Error("not a functor: maps have the wrong size");
  }
  const auto m = static_cast<MorphismId>(source.size());
  for (std::size_t x = 0; x < source.object_count(); ++x) {
    if (object_map[x] >= target.object_count()) throw Error("not a functor: unknown target object");
    if (morphism_map[source.identity(x)] != target.identity(object_map[x])) {
      throw Error("not a functor: identity of " + source.spec().objects[x] + " is not preserved");
    }
  }
  for (MorphismId f = 0; f < m; ++f) {
    const MorphismId img = morphism_map[f];
    if (img == kZero) continue;
    if (img < 0 || static_cast<std::size_t>(img) >= target.size() ||
        target.domain(img) != object_map[source.domain(f)] ||
        target.codomain(img) != object_map[source.codomain(f)]) {
      throw Error("not a functor: image of '" + source.label(f) + "' has the wrong endpoints");
    }
  }
  for (MorphismId g = 0; g < m; ++g) {
    for (MorphismId f = 0; f < m; ++f) {
      const MorphismId gf = source.compose(g, f);
      if (gf == kUndefined) continue;
      const MorphismId lhs = gf == kZero ? kZero : morphism_map[gf];
      const MorphismId rhs = target.compose(morphism_map[g], morphism_map[f]);
      if (lhs != rhs) {
        throw Error("not a functor: composition " + source.label(g) + "*" + source.label(f) +
                    " is not preserved");
      }
    }
  }
  return RayFunctor{std::move(source), std::move(target), std::move(object_map), std::move(morphism_map)};
}

RayFunctor make_functor(const FunctorSpec& spec, const RayCategory& target) {
  const PathAlgebra a = build_path_algebra(spec.source);
  const RayTable rays = build_rays(a);
  RayCategory source(rays.spec);
  const auto& pres = a.presentation();

  std::vector<std::size_t> object_map(pres.vertices.size(), static_cast<std::size_t>(-1));
  for (const auto& [from, to] : spec.object_map) {
    const auto x = pres.vertex_index(from);
    const auto y = target.spec().object_index(to);
    if (!x) throw Error("unknown source vertex '" + from + "'");
    if (!y) throw Error("unknown target object '" + to + "'");
    object_map[*x] = *y;
  }
  for (std::size_t x = 0; x < object_map.size(); ++x) {
    if (object_map[x] == static_cast<std::size_t>(-1)) {
      throw Error("vertex '" + pres.vertices[x] + "' has no image");
    }
  }

  std::vector<MorphismId> arrow_image(pres.arrows.size(), kUndefined);
  for (const auto& [label, chain] : spec.arrow_map) {
    const auto ar = pres.arrow_index(label);
    if (!ar) throw Error("unknown source arrow '" + label + "'");
    std::string joined;
    for (const auto& part : chain) joined += (joined.empty() ? "" : "*") + part;
    MorphismId img;
    if (const auto direct = target.spec().morphism_index(joined)) {
      img = *direct;
    } else {
      img = target.identity(object_map[pres.arrows[*ar].source]);
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const MorphismId step = target.find(*it);
        if (img != kZero && target.codomain(img) != target.domain(step)) {
          throw Error("not a functor: image of '" + label + "' is not composable");
        }
        img = target.compose(step, img);
      }
    }
    if (img != kZero && (target.domain(img) != object_map[pres.arrows[*ar].source] ||
                         target.codomain(img) != object_map[pres.arrows[*ar].target])) {
      throw Error("not a functor: image of '" + label + "' has the wrong endpoints");
    }
    arrow_image[*ar] = img;
  }
  for (std::size_t ar = 0; ar < arrow_image.size(); ++ar) {
    if (arrow_image[ar] == kUndefined) throw Error("arrow '" + pres.arrows[ar].label + "' has no image");
  }

  // Push every path through; zero paths must go to zero and parallel equal
  // paths to one morphism.
  std::vector<MorphismId> morphism_map(source.size(), kUndefined);
  std::function<void(Path&, MorphismId)> walk = [&](Path& path, MorphismId img) {
    const Vector value = a.path_value(path);
    const std::size_t x = pres.source(path);
    const std::size_t y = pres.target(path);
    const MorphismId ray = rays.locate(a, x, y, value);
    if (ray == kZero) {
      if (img != kZero) {
        throw Error("not a functor: zero path " + pres.path_text(path) + " maps to " + target.label(img));
      }
      return;
    }
    if (morphism_map[ray] == kUndefined) {
      morphism_map[ray] = img;
    } else if (morphism_map[ray] != img) {
      throw Error("not a functor: paths equal to " + source.label(ray) + " map to different morphisms");
    }
    for (std::size_t ar = 0; ar < pres.arrows.size(); ++ar) {
      if (pres.arrows[ar].source != y) continue;
      path.arrows.push_back(ar);
      walk(path, target.compose(arrow_image[ar], img));
      path.arrows.pop_back();
    }
  };
  for (std::size_t x = 0; x < pres.vertices.size(); ++x) {
    Path path{x, {}};
    walk(path, target.identity(object_map[x]));
  }
  for (std::size_t f = 0; f < morphism_map.size(); ++f) {
    if (morphism_map[f] == kUndefined) throw Error("morphism '" + source.label(static_cast<MorphismId>(f)) + "' is not reached by a path");
  }
  return make_functor(std::move(source), target, std::move(object_map), std::move(morphism_map));
}

CleavingVerdict is_cleaving(const RayFunctor& f) {
  const RayCategory& d = f.source;
  const RayCategory& p = f.target;
  const auto m = static_cast<MorphismId>(d.size());
  const auto pm = static_cast<MorphismId>(p.size());
  CleavingVerdict v;
  for (MorphismId mu = 0; mu < m; ++mu) {
    if (f.morphism_map[mu] == kZero) {
      v = {false, "a", kZero, mu, "F(" + d.label(mu) + ") = 0"};
      return v;
    }
  }
  auto factors_left = [&](const RayCategory& c, MorphismId through, MorphismId target, MorphismId limit) {
    for (MorphismId xi = 0; xi < limit; ++xi) {
      if (c.compose(xi, through) == target) return true;
    }
    return false;
  };
  auto factors_right = [&](const RayCategory& c, MorphismId through, MorphismId target, MorphismId limit) {
    for (MorphismId xi = 0; xi < limit; ++xi) {
      if (c.compose(through, xi) == target) return true;
    }
    return false;
  };
  for (MorphismId alpha : d.structure().irreducibles) {
    const MorphismId fa = f.morphism_map[alpha];
    for (MorphismId mu = 0; mu < m; ++mu) {
      const MorphismId fm = f.morphism_map[mu];
      if (d.domain(mu) == d.domain(alpha) && factors_left(p, fa, fm, pm) &&
          !factors_left(d, alpha, mu, m)) {
        return {false, "b", alpha, mu,
                "F(" + d.label(mu) + ") factors through F(" + d.label(alpha) + ") but " +
                    d.label(mu) + " does not factor through " + d.label(alpha)};
      }
      if (d.codomain(mu) == d.codomain(alpha) && factors_right(p, fa, fm, pm) &&
          !factors_right(d, alpha, mu, m)) {
        return {false, "b-dual", alpha, mu,
                "F(" + d.label(mu) + ") factors through F(" + d.label(alpha) + ") but " +
                    d.label(mu) + " does not factor through " + d.label(alpha)};
      }
    }
  }
  return v;
}

LongScan find_long_not_in_contour(const RayCategory& p) {
  LongScan out;
  const auto& longs = p.structure().long_morphisms;
  out.has_long = !longs.empty();
  std::set<MorphismId> occurring;
  for (const auto& c : contours(p)) occurring.insert(c.mu);
  for (MorphismId mu : longs) {
    if (!occurring.count(mu)) {
      out.morphism = mu;
      break;
    }
  }
  return out;
}

SlicePoset slice_poset(const RayCategory& p, std::size_t x, SliceSide side) {
  if (x >= p.object_count()) throw Error("unknown object");
  const auto m = static_cast<MorphismId>(p.size());
  SlicePoset out;
  for (MorphismId f = 0; f < m; ++f) {
    if ((side == SliceSide::From ? p.domain(f) : p.codomain(f)) == x) out.elements.push_back(f);
  }
  for (MorphismId phi : out.elements) {
    for (MorphismId psi : out.elements) {
      for (MorphismId chi = 0; chi < m; ++chi) {
        const MorphismId c = side == SliceSide::From ? p.compose(chi, phi) : p.compose(phi, chi);
        if (c == psi) {
          out.relation.emplace_back(phi, psi);
          break;
        }
      }
    }
  }
  return out;
}

QuiverPresentation linearize(const RayCategory& p) {
  const auto& q = p.structure();
  QuiverPresentation out;
  out.vertices = p.spec().objects;
  std::map<MorphismId, std::size_t> arrow_of;
  for (MorphismId a : q.irreducibles) {
    arrow_of[a] = out.arrows.size();
    out.arrows.push_back({p.label(a), p.domain(a), p.codomain(a)});
  }
  auto to_path = [&](const RayPath& r) {
    Path path{r.start, {}};
    for (MorphismId a : r.arrows) path.arrows.push_back(arrow_of.at(a));
    return path;
  };

  const auto paths = nonzero_paths(p);
  std::vector<MorphismId> value;
  for (const auto& r : paths) value.push_back(evaluate_path(p, r));

  // Minimal zero paths: a non-zero path followed by one more arrow, whose
  // tail without the first arrow is still non-zero.
  std::vector<Relation> monomials;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (MorphismId a : q.irreducibles) {
      if (p.domain(a) != p.codomain(value[i])) continue;
      if (p.compose(a, value[i]) != kZero) continue;
      RayPath longer = paths[i];
      longer.arrows.push_back(a);
      if (longer.length() >= 2 && evaluate_path(p, subpath(longer, p, 1, longer.length())) == kZero) continue;
      monomials.push_back(Relation{{Term{Rational(1), to_path(longer)}}});
    }
  }

  // Binomials p - rep against the first path of each value, minimized in the
  // span of non-zero paths.
  std::map<MorphismId, std::size_t> first;
  std::map<RayPath, std::size_t> column;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    column[paths[i]] = i;
    first.emplace(value[i], i);
  }
  Subspace ideal(paths.size());
  std::vector<Relation> binomials;
  auto vec_of = [&](const RayPath& a, const RayPath& b) {
    Vector v(paths.size(), Rational(0));
    const auto ia = column.find(a);
    const auto ib = column.find(b);
    if (ia != column.end()) v[ia->second] += 1;
    if (ib != column.end()) v[ib->second] -= 1;
    return v;
  };
  auto extend = [&](const RayPath& r, const RayPath& u, const RayPath& w) {
    // u applied before r, w after.
    RayPath out_path = u;
    out_path.arrows.insert(out_path.arrows.end(), r.arrows.begin(), r.arrows.end());
    out_path.arrows.insert(out_path.arrows.end(), w.arrows.begin(), w.arrows.end());
    return out_path;
  };
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const std::size_t rep = first.at(value[i]);
    if (rep == i) continue;
    const Vector v = vec_of(paths[i], paths[rep]);
    if (ideal.contains(v)) continue;
    binomials.push_back(Relation{{Term{Rational(1), to_path(paths[i])},
                                  Term{Rational(-1), to_path(paths[rep])}}});
    const std::size_t x = p.domain(value[i]);
    const std::size_t y = p.codomain(value[i]);
    for (const auto& u : paths) {
      if (p.codomain(evaluate_path(p, u)) != x) continue;
      for (const auto& w : paths) {
        if (w.start != y) continue;
        RayPath wa = extend(paths[i], u, w);
        RayPath wb = extend(paths[rep], u, w);
        wa.start = wb.start = u.start;
        ideal.insert(vec_of(wa, wb));
      }
    }
  }
  out.relations = std::move(binomials);
  out.relations.insert(out.relations.end(), monomials.begin(), monomials.end());
  validate(out);
  return out;
}

}  // namespace qalg
