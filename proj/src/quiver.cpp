#include "qalg/quiver.hpp"

#include <set>

#include "qalg/error.hpp"

namespace qalg {

std::optional<std::size_t> QuiverPresentation::vertex_index(std::string_view label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == label) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> QuiverPresentation::arrow_index(std::string_view label) const {
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t QuiverPresentation::source(const Path& p) const {
  return p.arrows.empty() ? p.start : arrows.at(p.arrows.front()).source;
}

std::size_t QuiverPresentation::target(const Path& p) const {
  return p.arrows.empty() ? p.start : arrows.at(p.arrows.back()).target;
}

bool QuiverPresentation::is_path(const Path& p) const {
  if (p.start >= vertices.size()) return false;
  std::size_t at = p.start;
  for (std::size_t a : p.arrows) {
    if (a >= arrows.size() || arrows[a].source != at) return false;
    at = arrows[a].target;
  }
  return true;
}

std::string QuiverPresentation::path_text(const Path& p) const {
  if (p.arrows.empty()) return "e_" + vertices.at(p.start);
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!out.empty()) out += '*';
    out += arrows.at(*it).label;
  }
  return out;
}

std::string QuiverPresentation::relation_text(const Relation& r) const {
  std::string out;
  for (const auto& t : r.terms) {
    Rational c = t.coefficient;
    if (out.empty()) {
      if (sgn(c) < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
      if (sgn(c) < 0) c = -c;
    }
    if (c != 1) out += to_string(c) + " ";
    out += path_text(t.path);
  }
  if (out.empty()) out = "0";
  return out + " = 0";
}

void validate(const QuiverPresentation& p) {
  std::set<std::string> seen;
  for (const auto& v : p.vertices) {
    if (v.empty()) throw Error("empty vertex label");
    if (!seen.insert(v).second) throw Error("duplicate vertex label '" + v + "'");
  }
  std::set<std::string> arrow_labels;
  for (const auto& a : p.arrows) {
    if (a.label.empty()) throw Error("empty arrow label");
    if (!arrow_labels.insert(a.label).second) {
      throw Error("duplicate arrow label '" + a.label + "'");
    }
    if (a.source >= p.vertices.size() || a.target >= p.vertices.size()) {
      throw Error("arrow '" + a.label + "' has an undeclared endpoint");
    }
  }
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const auto& r = p.relations[i];
    if (r.terms.empty()) throw Error("relation " + std::to_string(i + 1) + " is trivially zero");
    std::set<Path> paths;
    for (const auto& t : r.terms) {
      if (!p.is_path(t.path)) {
        throw Error("relation " + std::to_string(i + 1) + " contains a non-composable path");
      }
      if (t.path.length() < 2) {
        throw Error("relation " + std::to_string(i + 1) + " contains the path '" +
                    p.path_text(t.path) + "' of length < 2");
      }
      if (sgn(t.coefficient) == 0) {
        throw Error("relation " + std::to_string(i + 1) + " has a zero coefficient");
      }
      if (!paths.insert(t.path).second) {
        throw Error("relation " + std::to_string(i + 1) + " repeats a path");
      }
      if (p.source(t.path) != p.source(r.terms.front().path) ||
          p.target(t.path) != p.target(r.terms.front().path)) {
        throw Error("relation " + std::to_string(i + 1) + " has non-parallel terms '" +
                    p.path_text(r.terms.front().path) + "' and '" + p.path_text(t.path) + "'");
      }
    }
  }
}

}  // namespace qalg
