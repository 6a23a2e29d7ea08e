#include "support.hpp"

#include "lorflat/catalog.hpp"
#include "lorflat/cli.hpp"
#include "lorflat/document.hpp"
#include "lorflat/metric_lie.hpp"

#include <json.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

using namespace lorflat;
using namespace lorflat::testing;

namespace {

using Json = nlohmann::ordered_json;

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

/// Input document written to a process-unique temp path, removed on scope
/// exit.
struct TempFile {
  std::filesystem::path path;
  TempFile(const std::string& name, const std::string& text) {
    path = std::filesystem::temp_directory_path() /
           ("lorflat_cli_" + std::to_string(::getpid()) + "_" + name);
    std::ofstream(path) << text;
  }
  ~TempFile() {
    std::error_code ec;
    std::filesystem::remove(path, ec);
  }
  std::string str() const { return path.string(); }
};

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

const char* kCurved = R"({
  "dim": 2, "basis": ["ebar", "e"],
  "brackets": [{"i": 0, "j": 1, "coeffs": {"1": "1"}}],
  "metric": [["-1", "0"], ["0", "1"]]
})";

} // namespace

TEST_CASE("check reports the classification of a catalog document") {
  const CliResult cat = run({"catalog", "g3", "--mu", "1", "--alpha", "2"});
  REQUIRE(cat.code == 0);
  const TempFile doc("g3.json", cat.out);

  const CliResult r = run({"check", doc.str()});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "dim: 3"));
  CHECK(contains(r.out, "jacobi: pass"));
  CHECK(contains(r.out, "signature: (1, 2) lorentzian"));
  CHECK(contains(r.out, "flat: yes"));
  CHECK(contains(r.out, "unimodular: no"));
  CHECK(contains(r.out, "h = 1*e"));
  CHECK(contains(r.out, "structure theorem: pass"));

  const CliResult j = run({"check", doc.str(), "--json"});
  CHECK(j.code == 0);
  const Json parsed = Json::parse(j.out);
  CHECK(parsed["dim"] == 3);
  CHECK(parsed["jacobi"] == true);
  CHECK(parsed["flat"] == true);
  CHECK(parsed["unimodular"] == false);
  CHECK(parsed["signature"]["kind"] == "lorentzian");
  CHECK(parsed["h"] == Json::array({"1", "0", "0"}));
  CHECK(parsed["structure_theorem"] == true);
}

TEST_CASE("check reads from stdin when the path is a dash") {
  const CliResult cat = run({"catalog", "g2", "--mu", "-3/2"});
  REQUIRE(cat.code == 0);

  std::istringstream feed(cat.out);
  auto* old = std::cin.rdbuf(feed.rdbuf());
  const CliResult r = run({"check", "-"});
  std::cin.rdbuf(old);

  CHECK(r.code == 0);
  CHECK(contains(r.out, "dim: 2"));
  CHECK(contains(r.out, "flat: yes"));
  CHECK(contains(r.out, "h = -3/2*e"));
}

TEST_CASE("exit codes separate domain failures from unusable input") {
  // Unusable input is exit 2.
  const TempFile junk("junk.json", "not json");
  CHECK(run({"check", junk.str()}).code == 2);

  const TempFile zero_den("zeroden.json", R"({
    "dim": 2, "basis": ["a", "b"],
    "brackets": [{"i": 0, "j": 1, "coeffs": {"0": "1/0"}}],
    "metric": [["1", "0"], ["0", "1"]]
  })");
  const CliResult bad = run({"check", zero_den.str()});
  CHECK(bad.code == 2);
  CHECK(contains(bad.err, "algebra.brackets[0].coeffs.0"));
  CHECK(contains(bad.err, "zero denominator"));

  CHECK(run({"check", "/nonexistent/input.json"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"catalog", "g2"}).code == 2);
  CHECK(run({"catalog", "g2", "--mu", "0"}).code == 2);
  CHECK(run({"catalog", "g2", "--mu", "1", "--alpha", "5"}).code == 2);
  CHECK(run({"solve", "3", "--mu", "1"}).code == 2);
  CHECK(run({}).code == 2);

  // Help is not an error.
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"check", "--help"}).code == 0);

  // A well-formed document failing a requested verdict is exit 1.
  const TempFile curved("curved.json", kCurved);
  CHECK(run({"check", curved.str()}).code == 0);
  CHECK(run({"check", curved.str(), "--flat"}).code == 1);
  CHECK(run({"check", curved.str(), "--nonunimodular"}).code == 0);

  // A Jacobi violation fails the plain check.
  const TempFile broken("broken.json", R"({
    "dim": 3, "basis": ["a", "b", "c"],
    "brackets": [{"i": 0, "j": 1, "coeffs": {"0": "1"}}, {"i": 1, "j": 2, "coeffs": {"1": "1"}}],
    "metric": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
  })");
  const CliResult jac = run({"check", broken.str()});
  CHECK(jac.code == 1);
  CHECK(contains(jac.out, "jacobi: fail"));

  // A degenerate metric fails the plain check too.
  const TempFile degen("degen.json", R"({
    "dim": 2, "basis": ["a", "b"], "brackets": [],
    "metric": [["1", "0"], ["0", "0"]]
  })");
  const CliResult deg = run({"check", degen.str()});
  CHECK(deg.code == 1);
  CHECK(contains(deg.out, "metric: degenerate"));
}

TEST_CASE("extend rejects inadmissible tuples and verifies admissible ones") {
  const TempFile tuple("tuple.json", R"({
    "base": {"dim": 1, "basis": ["b1"], "brackets": [], "metric": [["1"]]},
    "xi": [["2"]], "dee": [["2"]], "mu": "2", "b0": ["3"]
  })");
  const CliResult ok = run({"extend", tuple.str(), "--verify"});
  CHECK(ok.code == 0);
  CHECK(contains(ok.err, "structure theorem: pass"));
  const MetricLieAlgebra g = parse_algebra(ok.out);
  CHECK(g.dim() == 3);
  CHECK(discriminate(g).matches == std::vector<FamilyId>{FamilyId::G3P});

  const TempFile bad("badtuple.json", R"({
    "base": {"dim": 1, "basis": ["b1"], "brackets": [], "metric": [["1"]]},
    "xi": [["2"]], "dee": [["5"]], "mu": "2", "b0": ["0"]
  })");
  const CliResult rej = run({"extend", bad.str()});
  CHECK(rej.code == 1);
  CHECK(contains(rej.err, "not admissible"));
}

TEST_CASE("factor round trips a catalog member through the tuple document") {
  const CliResult cat =
      run({"catalog", "g4p", "--eps", "1", "--mu", "1/2", "--gamma", "3", "--alpha", "1"});
  REQUIRE(cat.code == 0);
  const TempFile doc("g4p.json", cat.out);

  const CliResult fac = run({"factor", doc.str(), "--roundtrip"});
  CHECK(fac.code == 0);
  CHECK(contains(fac.err, "roundtrip: exact"));

  // The emitted tuple re-extends to an algebra check accepts outright.
  const Json parsed = Json::parse(fac.out);
  const TempFile tup("tuple2.json", parsed["tuple"].dump());
  const CliResult ext = run({"extend", tup.str()});
  CHECK(ext.code == 0);
  const MetricLieAlgebra g = parse_algebra(ext.out);
  CHECK(discriminate(g).matches == std::vector<FamilyId>{FamilyId::G4P});
}

TEST_CASE("solve lists the admissible branches") {
  const CliResult one = run({"solve", "1", "--mu", "3"});
  CHECK(one.code == 0);
  CHECK(contains(one.out, "branches: 2"));
  CHECK(contains(one.out, "zero:"));
  CHECK(contains(one.out, "scalar:"));

  const CliResult two = run({"solve", "2", "--mu", "3", "--json"});
  CHECK(two.code == 0);
  const Json parsed = Json::parse(two.out);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 4);
  CHECK(parsed[0]["name"] == "rank-one");
  CHECK(parsed[0]["free_params"] == 1);
}

TEST_CASE("canon reports the lorentzian case and the rotation rates") {
  const TempFile nullrot("nullrot.json", R"({
    "matrix": [["0", "0", "1"], ["0", "0", "1"], ["1", "-1", "0"]]
  })");
  const CliResult r = run({"canon", nullrot.str(), "--lorentz"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "case: III"));
  CHECK(contains(r.out, "alpha: 1"));

  const TempFile rot("rot.json", R"({
    "matrix": [["0", "2", "0"], ["-2", "0", "0"], ["0", "0", "0"]]
  })");
  const CliResult e = run({"canon", rot.str(), "--json"});
  CHECK(e.code == 0);
  const Json parsed = Json::parse(e.out);
  CHECK(parsed["case"] == "none");
  CHECK(parsed["blocks"].size() == 1);
  CHECK(parsed["blocks"][0]["rate"] == 2.0);
  CHECK(parsed["kernel"] == 1);

  // A document metric overrides the flag: boost wrt an explicit null-pair
  // gram.
  const TempFile boost("boost.json", R"({
    "matrix": [["3/2", "0"], ["0", "-3/2"]],
    "metric": [["0", "1"], ["1", "0"]]
  })");
  const CliResult b = run({"canon", boost.str()});
  CHECK(b.code == 0);
  CHECK(contains(b.out, "case: II"));
  CHECK(contains(b.out, "alpha: 1.5"));

  // Non-skew input is a domain failure, not a parse failure.
  const TempFile notskew("notskew.json", R"({
    "matrix": [["1", "0"], ["0", "1"]]
  })");
  CHECK(run({"canon", notskew.str()}).code == 1);
  // A metric that is neither Lorentzian nor the identity is rejected.
  const TempFile badmetric("badmetric.json", R"({
    "matrix": [["0", "1"], ["-1", "0"]],
    "metric": [["2", "0"], ["0", "2"]]
  })");
  CHECK(run({"canon", badmetric.str()}).code == 1);
}
