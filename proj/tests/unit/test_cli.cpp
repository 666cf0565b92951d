#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "fixtures.hpp"
#include "qalg/cli.hpp"
#include "qalg/report.hpp"

using namespace qalg;
using namespace qalg::testing;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qalg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    if (value) {
      setenv(name, value, 1);
    } else {
      unsetenv(name);
    }
  }
  ~ScopedEnv() {
    if (old_) {
      setenv(name_, old_->c_str(), 1);
    } else {
      unsetenv(name_);
    }
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

}  // namespace

TEST_CASE("ranges") {
  CHECK(parse_range("1..25") == std::pair<std::size_t, std::size_t>{1, 25});
  CHECK(parse_range("7..7") == std::pair<std::size_t, std::size_t>{7, 7});
  CHECK_FALSE(parse_range("1-25"));
  CHECK_FALSE(parse_range("..3"));
  CHECK_FALSE(parse_range("3.."));
  CHECK_FALSE(parse_range("a..b"));
  CHECK_FALSE(parse_range("-1..3"));
}

TEST_CASE("max_dim precedence") {
  ScopedEnv clear("QALG_MAX_DIM", nullptr);
  RunConfig c;
  CHECK(effective_max_dim(c) == PathAlgebra::kDefaultMaxDim);
  {
    ScopedEnv env("QALG_MAX_DIM", "77");
    CHECK(effective_max_dim(c) == 77);
    c.max_dim = 5;
    CHECK(effective_max_dim(c) == 5);
  }
  c.max_dim.reset();
  ScopedEnv bad("QALG_MAX_DIM", "lots");
  CHECK(invoke({"check", fixture_path("a3.qalg")}).code == kExitUsage);
}

TEST_CASE("check") {
  const auto r = invoke({"check", fixture_path("kronecker.qalg")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("distributive: no") != std::string::npos);
  CHECK(r.out.find("witness: e=1 f=2 l=0 v=a w=b") != std::string::npos);
  CHECK(r.out.rfind("# qalg ", 0) == 0);

  const auto j = invoke({"check", fixture_path("kronecker.qalg"), "--format", "json"});
  REQUIRE(j.code == kExitOk);
  const Json body = Json::parse(j.out);
  CHECK(body["distributive"] == false);
  CHECK(body["witness"]["v"] == "a");
  CHECK(body["report"]["input_sha256"] == sha256_hex(read_fixture("kronecker.qalg")));
  CHECK(body["report"]["command"] == "check");
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({"check", fixture_path("no_such_file.qalg")}).code == kExitUsage);
  CHECK(invoke({"check", fixture_path("a3.qalg"), "--format", "xml"}).code == kExitUsage);
  CHECK(invoke({"build-indec", fixture_path("e1.qalg"), "--dims", "5-9"}).code == kExitUsage);
  CHECK(invoke({"build-indec", fixture_path("e1.qalg"), "--dim", "0"}).code == kExitUsage);
  CHECK(invoke({"ray-cat", fixture_path("missing_entry.raycat")}).code == kExitDomain);
  CHECK(invoke({"ray-cat", fixture_path("broken_f.raycat")}).code == kExitDomain);
  CHECK(invoke({"build-indec", fixture_path("a3.qalg"), "--dim", "3"}).code == kExitDomain);
  CHECK(invoke({"check", fixture_path("loop_free.qalg"), "--max-dim", "40"}).code == kExitDomain);
  CHECK(invoke({"quotient", fixture_path("a3.qalg"), "--morphism", "nope"}).code == kExitDomain);
  CHECK(invoke({"cleave", fixture_path("a3.qalg"), "--functor", fixture_path("not_functor.rayfun")}).code ==
        kExitDomain);
  CHECK(invoke({"--version"}).code == kExitOk);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"build-indec", fixture_path("e2.qalg"), "--dims", "1..12", "--emit-json"},
      {"ray-cat", fixture_path("fig2_2.qalg"), "--format", "json"},
      {"crowns", fixture_path("fig2_2.qalg")},
      {"contours", fixture_path("cs_square.qalg"), "--format", "json"},
  };
  for (const auto& cmd : commands) {
    CAPTURE(cmd[0]);
    const auto a = invoke(cmd);
    auto threaded = cmd;
    if (cmd[0] == "build-indec") {
      threaded.push_back("--threads");
      threaded.push_back("3");
    }
    const auto b = invoke(threaded);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("certificates re-verify in isolation") {
  const auto r = invoke({"build-indec", fixture_path("e1.qalg"), "--dims", "1..15", "--emit-json"});
  REQUIRE(r.code == kExitOk);
  const Json body = Json::parse(r.out);
  const auto a = load_algebra("e1.qalg");
  const auto& pres = a->presentation();
  REQUIRE(body["modules"].size() == 15);
  for (const auto& entry : body["modules"]) {
    const std::size_t m = entry["target"];
    CAPTURE(m);
    std::vector<std::size_t> dims = entry["dim_vector"];
    std::vector<Matrix> maps;
    for (const auto& arrow : pres.arrows) {
      const Json& rows = entry["maps"][arrow.label];
      Matrix x(dims[arrow.target], dims[arrow.source]);
      REQUIRE(rows.size() == x.rows());
      for (std::size_t i = 0; i < x.rows(); ++i) {
        for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) = parse_rational(rows[i][j].get<std::string>());
      }
      maps.push_back(std::move(x));
    }
    const Representation rep(a, dims, maps);
    CHECK(rep.total_dim() == m);
    CHECK(check_representation(rep).empty());
    const auto cert = is_absolutely_indecomposable(rep);
    CHECK(cert.verdict);
    CHECK(to_json(cert) == entry["certificate"]);
  }
}

TEST_CASE("ray category commands") {
  const auto crowns = invoke({"crowns", fixture_path("fig2_2.qalg"), "--minimal", "--format", "json"});
  REQUIRE(crowns.code == kExitOk);
  CHECK(Json::parse(crowns.out)["minimal_crown"]["crown_length"] == 6);

  const auto q = invoke({"quotient", fixture_path("a3.qalg"), "--morphism", "β*α"});
  CHECK(q.code == kExitOk);
  CHECK(q.out.find("quiver preserved, contours preserved") != std::string::npos);

  const auto cleave = invoke({"cleave", fixture_path("cs_square.qalg"), "--functor", fixture_path("cs_contour.rayfun")});
  CHECK(cleave.code == kExitOk);

  const auto axioms = invoke({"ray-cat", fixture_path("loop3.raycat")});
  CHECK(axioms.code == kExitOk);
  CHECK(axioms.out.find("axioms: ok") != std::string::npos);
}
