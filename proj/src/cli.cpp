#include "qalg/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qalg/error.hpp"
#include "qalg/nondis.hpp"
#include "qalg/qdsl.hpp"
#include "qalg/ray_category.hpp"
#include "qalg/report.hpp"
#include "qalg/version.hpp"

namespace qalg {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

class Session {
 public:
  Session(const RunConfig& c, std::ostream& out) : config_(c), out_(out) {
    text_ = read_file(c.input);
    header_ = Json{{"tool", "qalg"}, {"version", kVersion}, {"input_sha256", sha256_hex(text_)},
                   {"command", c.subcommand}};
  }

  bool json() const { return config_.format == "json" || config_.emit_json; }

  void emit(Json body) {
    body["report"] = header_;
    out_ << serialize_report(body);
  }

  void text_header() {
    out_ << "# qalg " << kVersion << " " << config_.subcommand << " sha256:"
         << header_["input_sha256"].get<std::string>() << "\n";
  }

  AlgebraPtr algebra() {
    return std::make_shared<const PathAlgebra>(
        build_path_algebra(parse_algebra(text_), effective_max_dim(config_)));
  }

  // .raycat input is taken as is; anything else as a distributive algebra.
  RayCategory category(std::vector<AxiomViolation>* violations = nullptr) {
    if (ends_with(config_.input, ".raycat")) {
      RayCategorySpec spec = parse_ray_category(text_);
      auto v = check_axioms(spec);
      if (!v.empty()) {
        if (violations) *violations = std::move(v);
        return RayCategory();
      }
      return RayCategory(std::move(spec));
    }
    return ray_category_of(*algebra());
  }

  const RunConfig& config_;
  std::ostream& out_;
  std::string text_;
  Json header_;
};

int do_check(Session& s) {
  const AlgebraPtr a = s.algebra();
  const auto verdict = is_distributive(*a);
  const auto& pres = a->presentation();
  const std::size_t bound = 2 * a->dim() + 1000;
  if (s.json()) {
    Json hom_dims = Json::array();
    for (std::size_t e = 0; e < pres.vertices.size(); ++e) {
      Json row = Json::array();
      for (std::size_t f = 0; f < pres.vertices.size(); ++f) row.push_back(hom_space(*a, e, f).size());
      hom_dims.push_back(std::move(row));
    }
    Json body{{"algebra", Json{{"dim", a->dim()},
                               {"nilpotency_index", a->nilpotency_index()},
                               {"vertices", pres.vertices},
                               {"arrows", pres.arrows.size()},
                               {"relations", pres.relations.size()},
                               {"hom_dims", std::move(hom_dims)}}},
              {"distributive", verdict.distributive},
              {"dimension_bound", bound}};
    body["witness"] = verdict.witness ? to_json(*a, *verdict.witness) : Json(nullptr);
    s.emit(std::move(body));
  } else {
    s.text_header();
    s.out_ << "algebra: dim " << a->dim() << ", nilpotency index " << a->nilpotency_index() << ", "
           << pres.vertices.size() << " vertices, " << pres.arrows.size() << " arrows, "
           << pres.relations.size() << " relations\n";
    s.out_ << "distributive: " << (verdict.distributive ? "yes" : "no") << "\n";
    if (verdict.witness) {
      const auto& w = *verdict.witness;
      s.out_ << "witness: e=" << pres.vertices[w.e] << " f=" << pres.vertices[w.f] << " l=" << w.l
             << " v=" << a->format(w.v) << " w=" << a->format(w.w) << "\n";
    }
    s.out_ << "dimension bound: 2*dim A + 1000 = " << bound << "\n";
  }
  return kExitOk;
}

int do_build(Session& s) {
  const auto& c = s.config_;
  std::size_t lo = 0;
  std::size_t hi = 0;
  if (c.dim && c.dims) throw UsageError("--dim and --dims are mutually exclusive");
  if (c.dim) {
    lo = hi = *c.dim;
  } else if (c.dims) {
    std::tie(lo, hi) = *c.dims;
  } else {
    throw UsageError("build-indec needs --dim or --dims");
  }
  if (lo == 0 || hi < lo) throw UsageError("dimension targets must satisfy 1 <= a <= b");
  const AlgebraPtr a = s.algebra();
  const RangeResult r = indecomposables_in_range(a, lo, hi, c.threads);
  bool failed = false;
  Json modules = Json::array();
  if (!s.json()) s.text_header();
  for (std::size_t i = 0; i < r.targets.size(); ++i) {
    const std::size_t m = r.targets[i];
    if (!r.modules[i]) {
      failed = true;
      if (s.json()) {
        modules.push_back(Json{{"target", m}, {"error", r.errors[i]}});
      } else {
        s.out_ << "m=" << m << " error: " << r.errors[i] << "\n";
      }
      continue;
    }
    const auto& mod = *r.modules[i];
    const bool ok = mod.violations.empty() && mod.certificate.verdict && mod.module.total_dim() == m;
    failed = failed || !ok;
    if (s.json()) {
      Json entry = to_json(mod.module, true);
      entry["target"] = m;
      entry["certificate"] = to_json(mod.certificate);
      entry["relations_ok"] = mod.violations.empty();
      entry["source"] = mod.source;
      entry["n"] = mod.n;
      modules.push_back(std::move(entry));
    } else {
      s.out_ << "m=" << m << " n=" << mod.n << " source=" << mod.source
             << " dim_vector=" << join(mod.module.dims()) << " end=" << mod.certificate.end_dim
             << " rad=" << mod.certificate.radical_dim
             << " relations=" << (mod.violations.empty() ? "ok" : "violated")
             << " indecomposable=" << (mod.certificate.verdict ? "yes" : "no") << "\n";
    }
  }
  if (s.json()) s.emit(Json{{"modules", std::move(modules)}});
  return failed ? kExitDomain : kExitOk;
}

int do_ray_cat(Session& s) {
  std::vector<AxiomViolation> violations;
  const RayCategory p = s.category(&violations);
  if (!violations.empty()) {
    if (s.json()) {
      Json v = Json::array();
      for (const auto& x : violations) v.push_back(to_json(x));
      s.emit(Json{{"axioms_ok", false}, {"violations", std::move(v)}});
    } else {
      s.text_header();
      s.out_ << "axioms: violated\n";
      for (const auto& x : violations) s.out_ << "  [" << x.axiom << "] " << x.message << "\n";
    }
    return kExitDomain;
  }
  if (s.json()) {
    Json body = summary_json(p);
    body["axioms_ok"] = true;
    body["violations"] = Json::array();
    s.emit(std::move(body));
    return kExitOk;
  }
  s.text_header();
  const auto& q = p.structure();
  s.out_ << "axioms: ok\n" << "objects: " << p.object_count() << ", morphisms: " << p.size() << "\n";
  for (MorphismId f = 0; f < static_cast<MorphismId>(p.size()); ++f) {
    s.out_ << "  " << p.label(f) << ": " << p.spec().objects[p.domain(f)] << " -> "
           << p.spec().objects[p.codomain(f)] << " depth " << q.depth[f];
    if (p.is_irreducible(f)) s.out_ << " irreducible";
    if (std::find(q.long_morphisms.begin(), q.long_morphisms.end(), f) != q.long_morphisms.end())
      s.out_ << " long";
    s.out_ << "\n";
  }
  return kExitOk;
}

std::string morphism_list(const RayCategory& p, const std::vector<MorphismId>& ids) {
  std::string out;
  for (MorphismId f : ids) out += (out.empty() ? "" : ", ") + p.label(f);
  return out.empty() ? "-" : out;
}

int do_crowns(Session& s) {
  const RayCategory p = s.category();
  const std::size_t max_n = s.config_.max_n;
  if (max_n < 2) throw UsageError("--max-n must be at least 2");
  std::vector<Crown> crowns;
  if (s.config_.minimal) {
    if (auto c = minimal_crown(p, max_n)) crowns.push_back(std::move(*c));
  } else {
    crowns = find_crowns(p, max_n);
  }
  if (s.json()) {
    Json list = Json::array();
    for (const auto& c : crowns) list.push_back(to_json(p, c));
    Json body{{"count", crowns.size()}, {"max_n", max_n}};
    if (s.config_.minimal) {
      body["minimal_crown"] = crowns.empty() ? Json(nullptr) : list.front();
    } else {
      body["crowns"] = std::move(list);
    }
    s.emit(std::move(body));
    return kExitOk;
  }
  s.text_header();
  if (crowns.empty()) s.out_ << "no crowns with n <= " << max_n << "\n";
  for (const auto& c : crowns) {
    s.out_ << "crown length " << c.length() << " t=" << crown_weight(p, c) << ": (";
    for (std::size_t i = 0; i < c.n(); ++i) {
      s.out_ << (i ? ", " : "") << p.label(c.sigma[i]) << ", " << p.label(c.rho[i]);
    }
    s.out_ << ")\n";
  }
  return kExitOk;
}

int do_contours(Session& s) {
  const RayCategory p = s.category();
  const auto list = contours(p);
  const LongScan scan = find_long_not_in_contour(p);
  if (s.json()) {
    Json items = Json::array();
    for (const auto& c : list) items.push_back(to_json(p, c));
    Json longs = Json::array();
    for (MorphismId f : p.structure().long_morphisms) longs.push_back(p.label(f));
    s.emit(Json{{"contours", std::move(items)},
                {"long", std::move(longs)},
                {"long_not_in_contour", scan.morphism ? Json(p.label(*scan.morphism)) : Json(nullptr)}});
    return kExitOk;
  }
  s.text_header();
  s.out_ << "contours: " << list.size() << "\n";
  for (const auto& c : list) {
    s.out_ << "  " << p.label(c.mu) << ": " << p.path_text(c.v) << " | " << p.path_text(c.w) << "\n";
  }
  s.out_ << "long: " << morphism_list(p, p.structure().long_morphisms) << "\n";
  if (scan.morphism) {
    s.out_ << "long morphism in no contour: " << p.label(*scan.morphism) << "\n";
  } else if (!scan.has_long) {
    s.out_ << "long morphism in no contour: none (no long morphisms)\n";
  } else {
    s.out_ << "long morphism in no contour: none (every long morphism occurs in a contour)\n";
  }
  return kExitOk;
}

int do_cleave(Session& s) {
  if (s.config_.functor.empty()) throw UsageError("cleave needs --functor FILE");
  const RayCategory target = s.category();
  const FunctorSpec spec = parse_functor(read_file(s.config_.functor));
  const RayFunctor f = make_functor(spec, target);
  const CleavingVerdict v = is_cleaving(f);
  if (s.json()) {
    Json body = to_json(f.source, v);
    body["source_morphisms"] = f.source.size();
    s.emit(std::move(body));
    return kExitOk;
  }
  s.text_header();
  s.out_ << "cleaving: " << (v.cleaving ? "yes" : "no") << "\n";
  if (!v.cleaving) s.out_ << "condition " << v.condition << ": " << v.message << "\n";
  return kExitOk;
}

std::vector<std::string> contour_texts(const RayCategory& p) {
  std::vector<std::string> out;
  for (const auto& c : contours(p)) {
    out.push_back(p.label(c.mu) + ":" + p.path_text(c.v) + "|" + p.path_text(c.w));
  }
  return out;
}

std::vector<std::string> labels(const RayCategory& p, const std::vector<MorphismId>& ids) {
  std::vector<std::string> out;
  for (MorphismId f : ids) out.push_back(p.label(f));
  return out;
}

int do_quotient(Session& s) {
  if (s.config_.morphism.empty()) throw UsageError("quotient needs --morphism NAME");
  const RayCategory p = s.category();
  const MorphismId tau = p.find(s.config_.morphism);
  const RayCategory q = quotient(p, tau);
  const bool same_quiver = labels(p, p.structure().irreducibles) == labels(q, q.structure().irreducibles);
  const bool same_contours = contour_texts(p) == contour_texts(q);
  if (s.json()) {
    Json body{{"tau", p.label(tau)},
              {"quotient", summary_json(q)},
              {"raycat", to_text(q.spec())},
              {"quiver_preserved", same_quiver},
              {"contours_preserved", same_contours}};
    s.emit(std::move(body));
    return kExitOk;
  }
  s.text_header();
  s.out_ << "# quotient by " << p.label(tau) << "; quiver "
         << (same_quiver ? "preserved" : "changed") << ", contours "
         << (same_contours ? "preserved" : "changed") << "\n";
  s.out_ << to_text(q.spec());
  return kExitOk;
}

}  // namespace

std::size_t effective_max_dim(const RunConfig& config) {
  if (config.max_dim) return *config.max_dim;
  if (const char* env = std::getenv("QALG_MAX_DIM")) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("QALG_MAX_DIM must be a positive integer, got '") + env + "'");
  }
  return PathAlgebra::kDefaultMaxDim;
}

std::optional<std::pair<std::size_t, std::size_t>> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos || dots == 0 || dots + 2 >= text.size()) return std::nullopt;
  const std::string a = text.substr(0, dots);
  const std::string b = text.substr(dots + 2);
  auto digits = [](const std::string& x) {
    return !x.empty() && x.size() < 10 &&
           std::all_of(x.begin(), x.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  if (!digits(a) || !digits(b)) return std::nullopt;
  return std::make_pair(static_cast<std::size_t>(std::stoul(a)), static_cast<std::size_t>(std::stoul(b)));
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "text" && config.format != "json") {
      throw UsageError("--format must be text or json");
    }
    if (config.input.empty()) throw UsageError("no input file");
    effective_max_dim(config);
    Session s(config, out);
    if (config.subcommand == "check") return do_check(s);
    if (config.subcommand == "build-indec") return do_build(s);
    if (config.subcommand == "ray-cat") return do_ray_cat(s);
    if (config.subcommand == "crowns") return do_crowns(s);
    if (config.subcommand == "contours") return do_contours(s);
    if (config.subcommand == "cleave") return do_cleave(s);
    if (config.subcommand == "quotient") return do_quotient(s);
    throw UsageError("unknown subcommand '" + config.subcommand + "'");
  } catch (const UsageError& e) {
    err << "qalg: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << config.input << ": " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "qalg: " << e.what() << "\n";
    return kExitDomain;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quiver algebras: indecomposables of every dimension and ray categories", "qalg"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  RunConfig config;
  std::size_t max_dim = 0;
  std::string dims;
  std::string algebra_file;

  auto common = [&](CLI::App* sub, bool positional_required) {
    auto* opt = sub->add_option("input", config.input, "input file (.qalg or .raycat)");
    if (positional_required) opt->required();
    sub->add_option("--format", config.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-dim", max_dim, "basis size guard (overrides QALG_MAX_DIM)")
        ->check(CLI::PositiveNumber);
  };
  auto* check = app.add_subcommand("check", "parse, build and test distributivity");
  common(check, true);
  auto* build = app.add_subcommand("build-indec", "certified indecomposables of given dimensions");
  common(build, false);
  build->add_option("--algebra", algebra_file, "input .qalg file");
  build->add_option("--dim", config.dim, "one target dimension")->check(CLI::PositiveNumber);
  build->add_option("--dims", dims, "target range a..b");
  build->add_flag("--emit-json", config.emit_json, "emit modules and certificates as JSON");
  build->add_option("--threads", config.threads, "worker threads (0 = all cores)");
  auto* raycat = app.add_subcommand("ray-cat", "ray category, axioms, quiver, depth, long morphisms");
  common(raycat, true);
  auto* crowns = app.add_subcommand("crowns", "crowns up to a half-length bound");
  common(crowns, true);
  crowns->add_flag("--minimal", config.minimal, "only the (n, t)-minimal crown");
  crowns->add_option("--max-n", config.max_n, "largest half-length searched");
  auto* cont = app.add_subcommand("contours", "contours and long morphisms in no contour");
  common(cont, true);
  auto* cleave = app.add_subcommand("cleave", "check whether a functor is cleaving");
  common(cleave, true);
  cleave->add_option("--functor", config.functor, ".rayfun file")->required();
  auto* quot = app.add_subcommand("quotient", "quotient by a morphism");
  common(quot, true);
  quot->add_option("--morphism", config.morphism, "morphism label")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qalg: " << e.what() << "\n";
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) {
    config.subcommand = sub->get_name();
    if (sub->get_subcommands().empty() && sub->count("--max-dim")) config.max_dim = max_dim;
  }
  if (!algebra_file.empty()) {
    if (!config.input.empty() && config.input != algebra_file) {
      err << "qalg: give the algebra either positionally or with --algebra\n";
      return kExitUsage;
    }
    config.input = algebra_file;
  }
  if (!dims.empty()) {
    config.dims = parse_range(dims);
    if (!config.dims) {
      err << "qalg: --dims expects a..b\n";
      return kExitUsage;
    }
  }
  return run(config, out, err);
}

}  // namespace qalg
