#include "qalg/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "qalg/error.hpp"

namespace qalg {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

Json to_json(const Representation& m, bool with_maps) {
  const auto& pres = m.algebra().presentation();
  Json out;
  out["dim_vector"] = m.dims();
  out["total_dim"] = m.total_dim();
  out["vertices"] = pres.vertices;
  if (with_maps) {
    Json maps = Json::object();
    for (std::size_t a = 0; a < pres.arrows.size(); ++a) maps[pres.arrows[a].label] = to_json(m.map(a));
    out["maps"] = std::move(maps);
  }
  return out;
}

Json to_json(const IndecomposabilityCertificate& c) {
  return Json{{"verdict", c.verdict}, {"end_dim", c.end_dim}, {"radical_dim", c.radical_dim}};
}

Json to_json(const PathAlgebra& a, const NonDistWitness& w) {
  const auto& pres = a.presentation();
  return Json{{"e", pres.vertices.at(w.e)},
              {"f", pres.vertices.at(w.f)},
              {"l", w.l},
              {"v", a.format(w.v)},
              {"w", a.format(w.w)}};
}

Json to_json(const RayCategory& p, const Crown& c) {
  Json morphisms = Json::array();
  for (std::size_t i = 0; i < c.n(); ++i) {
    morphisms.push_back(p.label(c.sigma[i]));
    morphisms.push_back(p.label(c.rho[i]));
  }
  return Json{{"crown_length", c.length()},
              {"morphisms", std::move(morphisms)},
              {"n", c.n()},
              {"t", crown_weight(p, c)}};
}

Json to_json(const RayCategory& p, const Contour& c) {
  return Json{{"mu", p.label(c.mu)}, {"v", p.path_text(c.v)}, {"w", p.path_text(c.w)}};
}

Json to_json(const RayCategory& p, const CleavingVerdict& v) {
  Json out{{"cleaving", v.cleaving}};
  if (!v.cleaving) {
    out["condition"] = v.condition;
    out["alpha"] = v.alpha == kZero ? Json(nullptr) : Json(p.label(v.alpha));
    out["mu"] = v.mu == kZero ? Json(nullptr) : Json(p.label(v.mu));
    out["message"] = v.message;
  }
  return out;
}

Json to_json(const AxiomViolation& v) { return Json{{"axiom", v.axiom}, {"message", v.message}}; }

Json summary_json(const RayCategory& p) {
  const auto& q = p.structure();
  Json morphisms = Json::array();
  for (MorphismId f = 0; f < static_cast<MorphismId>(p.size()); ++f) {
    const bool is_long = std::find(q.long_morphisms.begin(), q.long_morphisms.end(), f) !=
                         q.long_morphisms.end();
    morphisms.push_back(Json{{"label", p.label(f)},
                             {"domain", p.spec().objects[p.domain(f)]},
                             {"codomain", p.spec().objects[p.codomain(f)]},
                             {"depth", q.depth[f]},
                             {"identity", p.is_identity(f)},
                             {"irreducible", p.is_irreducible(f)},
                             {"long", is_long}});
  }
  Json irreducibles = Json::array();
  for (MorphismId f : q.irreducibles) irreducibles.push_back(p.label(f));
  Json longs = Json::array();
  for (MorphismId f : q.long_morphisms) longs.push_back(p.label(f));
  return Json{{"objects", p.spec().objects},
              {"morphisms", std::move(morphisms)},
              {"irreducibles", std::move(irreducibles)},
              {"long", std::move(longs)}};
}

std::string serialize_report(const Json& value) { return value.dump(2) + "\n"; }

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

}  // namespace qalg
