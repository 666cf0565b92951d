#ifndef QALG_REPORT_HPP
#define QALG_REPORT_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "qalg/nondis.hpp"
#include "qalg/ray_category.hpp"
#include "qalg/representation.hpp"

namespace qalg {

using Json = nlohmann::json;

// Rationals are strings "p/q" ("p" for integers); matrices are row-major
// arrays of such strings. Keys come out sorted.
Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const Representation& m, bool with_maps = true);
Json to_json(const IndecomposabilityCertificate& c);
Json to_json(const PathAlgebra& a, const NonDistWitness& w);
Json to_json(const RayCategory& p, const Crown& c);
Json to_json(const RayCategory& p, const Contour& c);
Json to_json(const RayCategory& p, const CleavingVerdict& v);
Json to_json(const AxiomViolation& v);
Json summary_json(const RayCategory& p);

/// Two-space indented JSON followed by a newline.
std::string serialize_report(const Json& value);

std::string sha256_hex(std::string_view data);

}  // namespace qalg

#endif  // QALG_REPORT_HPP
