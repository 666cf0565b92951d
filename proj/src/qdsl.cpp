#include "qalg/qdsl.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "qalg/error.hpp"

namespace qalg {

std::optional<std::size_t> RayCategorySpec::object_index(std::string_view label) const {
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i] == label) return i;
  }
  return std::nullopt;
}

std::optional<MorphismId> RayCategorySpec::morphism_index(std::string_view label) const {
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    if (morphisms[i].label == label) return static_cast<MorphismId>(i);
  }
  return std::nullopt;
}

bool RayCategorySpec::is_identity(MorphismId m) const {
  return m >= 0 && std::find(identities.begin(), identities.end(),
                             static_cast<std::size_t>(m)) != identities.end();
}

namespace {

enum class TokenKind { Ident, Number, Symbol, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

bool is_ident_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '\'' || c >= 0x80;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = column;
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
      if (j >= text.size() || text[j] != '"') throw ParseError(line, column, "unterminated quoted label");
      if (j == i + 1) throw ParseError(line, column, "empty quoted label");
      t.kind = TokenKind::Ident;
      t.text = std::string(text.substr(i + 1, j - i - 1));
      advance(j - i + 1);
    } else if (is_ident_byte(c)) {
      std::size_t j = i;
      while (j < text.size() && is_ident_byte(static_cast<unsigned char>(text[j]))) ++j;
      t.text = std::string(text.substr(i, j - i));
      t.kind = std::all_of(t.text.begin(), t.text.end(),
                           [](char ch) { return ch >= '0' && ch <= '9'; })
                   ? TokenKind::Number
                   : TokenKind::Ident;
      advance(j - i);
    } else if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      t.kind = TokenKind::Symbol;
      t.text = "->";
      advance(2);
    } else if (std::string_view(";,:*.+-/={}").find(static_cast<char>(c)) != std::string_view::npos) {
      t.kind = TokenKind::Symbol;
      t.text = std::string(1, static_cast<char>(c));
      advance(1);
    } else {
      throw ParseError(line, column, std::string("unexpected character '") +
                                         static_cast<char>(c) + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.kind = TokenKind::End;
  end.line = line;
  end.column = column;
  out.push_back(end);
  return out;
}

struct RawTerm {
  Rational coefficient;
  std::vector<Token> labels;  // as written, right-to-left
  Token where;
};

struct RawRelation {
  std::vector<RawTerm> terms;
  Token where;
};

struct RawArrow {
  Token label;
  Token source;
  Token target;
};

struct RawAlgebra {
  std::vector<Token> vertices;
  std::vector<RawArrow> arrows;
  std::vector<RawRelation> relations;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == TokenKind::End; }
  bool is_symbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::Symbol && peek(ahead).text == s;
  }
  bool is_keyword(std::string_view s) const {
    return peek().kind == TokenKind::Ident && peek().text == s;
  }

  [[noreturn]] void fail(const Token& t, const std::string& message) const {
    throw ParseError(t.line, t.column, message);
  }

  static std::string describe(const Token& t) {
    if (t.kind == TokenKind::End) return "end of input";
    return "'" + t.text + "'";
  }

  void expect_symbol(std::string_view s) {
    if (!is_symbol(s)) fail(peek(), "expected '" + std::string(s) + "' but found " + describe(peek()));
    next();
  }

  Token expect_label(const char* what) {
    if (peek().kind != TokenKind::Ident && peek().kind != TokenKind::Number) {
      fail(peek(), std::string("expected ") + what + " but found " + describe(peek()));
    }
    return next();
  }

  Token expect_ident(const char* what) {
    if (peek().kind != TokenKind::Ident) {
      fail(peek(), std::string("expected ") + what + " but found " + describe(peek()));
    }
    return next();
  }

  // Composite label chain "c*b*a"; returned as written.
  std::vector<Token> label_chain(const char* what) {
    std::vector<Token> out;
    out.push_back(expect_label(what));
    while (is_symbol("*") || is_symbol(".")) {
      next();
      out.push_back(expect_label(what));
    }
    return out;
  }

  Rational coefficient() {
    const Token num = next();
    std::string text = num.text;
    if (is_symbol("/")) {
      next();
      if (peek().kind != TokenKind::Number) fail(peek(), "expected denominator after '/'");
      text += "/" + next().text;
    }
    try {
      return parse_rational(text);
    } catch (const std::invalid_argument& e) {
      fail(num, e.what());
    }
  }

  // Appends the terms of one side of a relation, multiplied by sign.
  void expression(std::vector<RawTerm>& terms, int sign) {
    bool first = true;
    while (true) {
      int term_sign = 1;
      if (is_symbol("+") || is_symbol("-")) {
        term_sign = next().text == "-" ? -1 : 1;
      } else if (!first) {
        break;
      }
      first = false;
      const Token where = peek();
      RawTerm term;
      term.where = where;
      term.coefficient = sign * term_sign;
      bool has_coefficient = false;
      if (peek().kind == TokenKind::Number) {
        term.coefficient *= coefficient();
        has_coefficient = true;
        if (is_symbol("*")) {
          next();
          if (peek().kind != TokenKind::Ident) fail(peek(), "expected a path after '*'");
        }
      }
      if (peek().kind == TokenKind::Ident) {
        term.labels = label_chain("arrow label");
      } else if (!has_coefficient) {
        fail(peek(), "expected a term but found " + describe(peek()));
      } else if (sgn(term.coefficient) != 0) {
        fail(where, "constant term must be 0");
      }
      if (!term.labels.empty()) terms.push_back(std::move(term));
    }
  }

  RawRelation relation() {
    RawRelation r;
    r.where = peek();
    expression(r.terms, 1);
    if (is_symbol("=")) {
      next();
      expression(r.terms, -1);
    }
    return r;
  }

  // Parses .qalg statements until end of input or a closing brace.
  RawAlgebra algebra_statements() {
    RawAlgebra raw;
    while (!at_end() && !is_symbol("}")) {
      if (is_keyword("vertices")) {
        next();
        while (!is_symbol(";")) {
          raw.vertices.push_back(expect_label("vertex label"));
          if (is_symbol(",")) next();
        }
        next();
      } else if (is_keyword("arrows")) {
        next();
        do {
          if (is_symbol(",")) next();
          RawArrow a;
          a.label = expect_ident("arrow label");
          expect_symbol(":");
          a.source = expect_label("source vertex");
          expect_symbol("->");
          a.target = expect_label("target vertex");
          raw.arrows.push_back(std::move(a));
        } while (is_symbol(","));
        expect_symbol(";");
      } else if (is_keyword("relations")) {
        next();
        if (!is_symbol(";")) {
          do {
            if (is_symbol(",")) next();
            raw.relations.push_back(relation());
          } while (is_symbol(","));
        }
        expect_symbol(";");
      } else {
        fail(peek(), "expected 'vertices', 'arrows' or 'relations' but found " + describe(peek()));
      }
    }
    return raw;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

QuiverPresentation resolve(const RawAlgebra& raw, const Parser& parser) {
  QuiverPresentation p;
  for (const auto& v : raw.vertices) {
    if (p.vertex_index(v.text)) parser.fail(v, "duplicate vertex '" + v.text + "'");
    p.vertices.push_back(v.text);
  }
  for (const auto& a : raw.arrows) {
    if (p.arrow_index(a.label.text)) parser.fail(a.label, "duplicate arrow '" + a.label.text + "'");
    const auto s = p.vertex_index(a.source.text);
    if (!s) parser.fail(a.source, "undeclared vertex '" + a.source.text + "'");
    const auto t = p.vertex_index(a.target.text);
    if (!t) parser.fail(a.target, "undeclared vertex '" + a.target.text + "'");
    p.arrows.push_back(Arrow{a.label.text, *s, *t});
  }
  for (const auto& raw_rel : raw.relations) {
    Relation rel;
    std::optional<std::pair<std::size_t, std::size_t>> endpoints;
    for (const auto& raw_term : raw_rel.terms) {
      Path path;
      for (auto it = raw_term.labels.rbegin(); it != raw_term.labels.rend(); ++it) {
        const auto a = p.arrow_index(it->text);
        if (!a) parser.fail(*it, "undeclared arrow '" + it->text + "'");
        if (!path.arrows.empty() && p.arrows[path.arrows.back()].target != p.arrows[*a].source) {
          parser.fail(*it, "arrow '" + it->text + "' does not compose with the path before it");
        }
        path.arrows.push_back(*a);
      }
      path.start = p.arrows[path.arrows.front()].source;
      if (path.length() < 2) {
        parser.fail(raw_term.where, "relation contains the path '" + p.path_text(path) +
                                        "' of length " + std::to_string(path.length()) +
                                        "; relations need paths of length >= 2");
      }
      const std::pair<std::size_t, std::size_t> ends{p.source(path), p.target(path)};
      if (endpoints && *endpoints != ends) {
        parser.fail(raw_term.where, "relation terms are not parallel: '" + p.path_text(path) +
                                        "' differs in source or target");
      }
      endpoints = ends;
      auto same = std::find_if(rel.terms.begin(), rel.terms.end(),
                               [&](const Term& t) { return t.path == path; });
      if (same != rel.terms.end()) {
        same->coefficient += raw_term.coefficient;
      } else {
        rel.terms.push_back(Term{raw_term.coefficient, path});
      }
    }
    std::erase_if(rel.terms, [](const Term& t) { return sgn(t.coefficient) == 0; });
    if (rel.terms.empty()) parser.fail(raw_rel.where, "relation is trivially zero");
    p.relations.push_back(std::move(rel));
  }
  validate(p);
  return p;
}

// Labels that are not plain identifiers are written in double quotes.
std::string quote(const std::string& label) {
  const bool plain = !label.empty() && std::all_of(label.begin(), label.end(), [](char ch) {
    return is_ident_byte(static_cast<unsigned char>(ch));
  });
  return plain && label != "ZERO" ? label : "\"" + label + "\"";
}

}  // namespace

QuiverPresentation parse_algebra(std::string_view text) {
  Parser parser(text);
  RawAlgebra raw = parser.algebra_statements();
  if (!parser.at_end()) parser.fail(parser.peek(), "unexpected " + Parser::describe(parser.peek()));
  return resolve(raw, parser);
}

RayCategorySpec parse_ray_category(std::string_view text) {
  Parser parser(text);
  std::vector<Token> objects;
  struct RawMorphism {
    Token label;
    Token domain;
    std::optional<Token> codomain;
  };
  std::vector<RawMorphism> morphisms;
  struct RawEntry {
    Token outer;
    Token inner;
    Token result;  // text "ZERO" or "0" for zero
  };
  std::vector<RawEntry> entries;
  Token compose_end = parser.peek();

  while (!parser.at_end()) {
    if (parser.is_keyword("objects")) {
      parser.next();
      while (!parser.is_symbol(";")) {
        objects.push_back(parser.expect_label("object label"));
        if (parser.is_symbol(",")) parser.next();
      }
      parser.next();
    } else if (parser.is_keyword("morphisms")) {
      parser.next();
      do {
        if (parser.is_symbol(",")) parser.next();
        RawMorphism m;
        m.label = parser.expect_label("morphism label");
        if (m.label.text == "ZERO") parser.fail(m.label, "'ZERO' is reserved");
        parser.expect_symbol(":");
        m.domain = parser.expect_label("object label");
        if (parser.is_symbol("->")) {
          parser.next();
          m.codomain = parser.expect_label("object label");
        }
        morphisms.push_back(std::move(m));
      } while (parser.is_symbol(","));
      parser.expect_symbol(";");
    } else if (parser.is_keyword("compose")) {
      parser.next();
      if (!parser.is_symbol(";")) {
        do {
          if (parser.is_symbol(",")) parser.next();
          RawEntry e;
          e.outer = parser.expect_label("morphism label");
          if (!parser.is_symbol("*") && !parser.is_symbol(".")) {
            parser.fail(parser.peek(), "expected '*' in composition entry");
          }
          parser.next();
          e.inner = parser.expect_label("morphism label");
          parser.expect_symbol("=");
          e.result = parser.expect_label("morphism label or ZERO");
          entries.push_back(std::move(e));
        } while (parser.is_symbol(","));
      }
      compose_end = parser.peek();
      parser.expect_symbol(";");
    } else {
      parser.fail(parser.peek(), "expected 'objects', 'morphisms' or 'compose' but found " +
                                     Parser::describe(parser.peek()));
    }
  }
  if (entries.empty()) compose_end = parser.peek();

  RayCategorySpec spec;
  for (const auto& o : objects) {
    if (spec.object_index(o.text)) parser.fail(o, "duplicate object '" + o.text + "'");
    spec.objects.push_back(o.text);
  }
  const std::size_t unset = static_cast<std::size_t>(-1);
  spec.identities.assign(spec.objects.size(), unset);
  for (const auto& m : morphisms) {
    if (spec.morphism_index(m.label.text)) {
      parser.fail(m.label, "duplicate morphism '" + m.label.text + "'");
    }
    const auto d = spec.object_index(m.domain.text);
    if (!d) parser.fail(m.domain, "undeclared object '" + m.domain.text + "'");
    std::size_t c = *d;
    if (m.codomain) {
      const auto cc = spec.object_index(m.codomain->text);
      if (!cc) parser.fail(*m.codomain, "undeclared object '" + m.codomain->text + "'");
      c = *cc;
    } else {
      if (spec.identities[*d] != unset) {
        parser.fail(m.label, "object '" + m.domain.text + "' already has an identity");
      }
      spec.identities[*d] = spec.morphisms.size();
    }
    spec.morphisms.push_back(MorphismDecl{m.label.text, *d, c});
  }
  for (std::size_t x = 0; x < spec.objects.size(); ++x) {
    if (spec.identities[x] != unset) continue;
    const std::string label = "id_" + spec.objects[x];
    if (spec.morphism_index(label)) {
      throw Error("cannot create identity '" + label + "': label already used");
    }
    spec.identities[x] = spec.morphisms.size();
    spec.morphisms.push_back(MorphismDecl{label, x, x});
  }

  const std::size_t n = spec.morphisms.size();
  spec.compose.assign(n, std::vector<MorphismId>(n, kUndefined));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t f = 0; f < n; ++f) {
      if (spec.morphisms[f].codomain != spec.morphisms[g].domain) continue;
      const auto gi = static_cast<MorphismId>(g);
      const auto fi = static_cast<MorphismId>(f);
      if (spec.is_identity(gi)) {
        spec.compose[g][f] = fi;
      } else if (spec.is_identity(fi)) {
        spec.compose[g][f] = gi;
      }
    }
  }
  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  for (const auto& e : entries) {
    const auto g = spec.morphism_index(e.outer.text);
    if (!g) parser.fail(e.outer, "unknown morphism '" + e.outer.text + "'");
    const auto f = spec.morphism_index(e.inner.text);
    if (!f) parser.fail(e.inner, "unknown morphism '" + e.inner.text + "'");
    const auto& mg = spec.morphisms[*g];
    const auto& mf = spec.morphisms[*f];
    if (mf.codomain != mg.domain) {
      parser.fail(e.outer, "'" + e.outer.text + "*" + e.inner.text + "' is not composable");
    }
    MorphismId r = kZero;
    if (e.result.text != "ZERO" && e.result.text != "0") {
      const auto ri = spec.morphism_index(e.result.text);
      if (!ri) parser.fail(e.result, "unknown morphism '" + e.result.text + "'");
      const auto& mr = spec.morphisms[*ri];
      if (mr.domain != mf.domain || mr.codomain != mg.codomain) {
        parser.fail(e.result, "'" + e.result.text + "' is not parallel to '" + e.outer.text + "*" +
                                  e.inner.text + "'");
      }
      r = *ri;
    }
    auto& slot = spec.compose[*g][*f];
    if (spec.is_identity(*g) || spec.is_identity(*f)) {
      if (slot != r) parser.fail(e.outer, "identity entries must compose as identities");
      continue;
    }
    if (given[*g][*f] && slot != r) {
      parser.fail(e.outer, "conflicting entries for '" + e.outer.text + "*" + e.inner.text + "'");
    }
    given[*g][*f] = true;
    slot = r;
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t f = 0; f < n; ++f) {
      if (spec.morphisms[f].codomain != spec.morphisms[g].domain) continue;
      if (spec.is_identity(static_cast<MorphismId>(g)) ||
          spec.is_identity(static_cast<MorphismId>(f))) {
        continue;
      }
      if (!given[g][f]) {
        parser.fail(compose_end, "missing entry '" + spec.morphisms[g].label + "*" +
                                     spec.morphisms[f].label + "'");
      }
    }
  }
  return spec;
}

FunctorSpec parse_functor(std::string_view text) {
  Parser parser(text);
  FunctorSpec out;
  std::optional<RawAlgebra> source;
  while (!parser.at_end()) {
    if (parser.is_keyword("source")) {
      const Token at = parser.next();
      if (source) parser.fail(at, "duplicate 'source' block");
      parser.expect_symbol("{");
      source = parser.algebra_statements();
      parser.expect_symbol("}");
      out.source = resolve(*source, parser);
    } else if (parser.is_keyword("objects")) {
      parser.next();
      do {
        if (parser.is_symbol(",")) parser.next();
        const Token from = parser.expect_label("object label");
        parser.expect_symbol("->");
        const Token to = parser.expect_label("object label");
        out.object_map.emplace_back(from.text, to.text);
      } while (parser.is_symbol(","));
      parser.expect_symbol(";");
    } else if (parser.is_keyword("arrows")) {
      parser.next();
      do {
        if (parser.is_symbol(",")) parser.next();
        const Token from = parser.expect_label("arrow label");
        parser.expect_symbol("->");
        std::vector<std::string> image;
        for (const auto& t : parser.label_chain("morphism label")) image.push_back(t.text);
        out.arrow_map.emplace_back(from.text, std::move(image));
      } while (parser.is_symbol(","));
      parser.expect_symbol(";");
    } else {
      parser.fail(parser.peek(), "expected 'source', 'objects' or 'arrows' but found " +
                                     Parser::describe(parser.peek()));
    }
  }
  if (!source) parser.fail(parser.peek(), "missing 'source' block");
  return out;
}

std::string to_text(const QuiverPresentation& p) {
  std::string out = "vertices";
  for (const auto& v : p.vertices) out += " " + quote(v);
  out += ";\n";
  if (!p.arrows.empty()) {
    out += "arrows";
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
      const auto& a = p.arrows[i];
      out += (i ? ", " : " ") + quote(a.label) + ":" + quote(p.vertices[a.source]) + "->" +
             quote(p.vertices[a.target]);
    }
    out += ";\n";
  }
  for (const auto& r : p.relations) {
    std::string rel;
    for (const auto& t : r.terms) {
      Rational c = t.coefficient;
      if (rel.empty()) {
        if (sgn(c) < 0) rel += "-";
      } else {
        rel += sgn(c) < 0 ? " - " : " + ";
      }
      if (sgn(c) < 0) c = -c;
      if (c != 1) rel += to_string(c) + " ";
      for (std::size_t k = t.path.arrows.size(); k-- > 0;) {
        rel += quote(p.arrows[t.path.arrows[k]].label);
        if (k) rel += "*";
      }
    }
    out += "relations " + rel + " = 0;\n";
  }
  return out;
}

std::string to_text(const RayCategorySpec& spec) {
  std::string out = "objects";
  for (const auto& o : spec.objects) out += " " + quote(o);
  out += ";\n";
  if (!spec.morphisms.empty()) {
    out += "morphisms";
    for (std::size_t i = 0; i < spec.morphisms.size(); ++i) {
      const auto& m = spec.morphisms[i];
      out += (i ? ", " : " ") + quote(m.label) + ":" + quote(spec.objects[m.domain]);
      if (!spec.is_identity(static_cast<MorphismId>(i))) out += "->" + quote(spec.objects[m.codomain]);
    }
    out += ";\n";
  }
  std::string entries;
  for (std::size_t g = 0; g < spec.size(); ++g) {
    for (std::size_t f = 0; f < spec.size(); ++f) {
      const MorphismId r = spec.compose[g][f];
      if (r == kUndefined) continue;
      if (spec.is_identity(static_cast<MorphismId>(g)) ||
          spec.is_identity(static_cast<MorphismId>(f))) {
        continue;
      }
      entries += entries.empty() ? " " : ", ";
      entries += quote(spec.morphisms[g].label) + "*" + quote(spec.morphisms[f].label) + " = " +
                 (r == kZero ? std::string("ZERO")
                             : quote(spec.morphisms[static_cast<std::size_t>(r)].label));
    }
  }
  if (!entries.empty()) out += "compose" + entries + ";\n";
  return out;
}

}  // namespace qalg
