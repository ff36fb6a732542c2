#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "orbitadm/cli.hpp"
#include "orbitadm/report.hpp"
#include "test_support.hpp"

using namespace orbitadm;
using namespace orbitadm::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data_file(const std::string& name) { return std::string(ORBITADM_TEST_DATA_DIR) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Hand-derived verdicts for the bundled examples.
struct Expected {
  const char* name;
  std::size_t d_tau, m;
  const char* spectral;
  const char* admissibility;
};
constexpr Expected kExpected[] = {
    {"abelian_r3", 0, 0, "AbsolutelyContinuous", "ConjecturallyNotAdmissible"},
    {"axb_f0", 0, 1, "Singular", "NotAdmissible"},
    {"axb_f1", 1, 1, "AbsolutelyContinuous", "Admissible"},
    {"diag12", 1, 2, "Singular", "NotAdmissible"},
    {"grelaud", 1, 1, "AbsolutelyContinuous", "Admissible"},
    {"h3_x", 1, 1, "AbsolutelyContinuous", "ConjecturallyNotAdmissible"},
    {"h3_yz", 1, 2, "Singular", "NotAdmissible"},
    {"h3_z", 0, 1, "Singular", "NotAdmissible"},
    {"h5", 2, 2, "AbsolutelyContinuous", "ConjecturallyNotAdmissible"},
};

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, Json>>& leaves) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, leaves);
  } else {
    leaves.emplace_back(prefix, j);
  }
}

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }

 private:
  const char* name_;
};

}  // namespace

TEST_CASE("verdict exit codes and headline fields") {
  const Run f1 = run({"verdict", "corpus:axb_f1"});
  CHECK(f1.code == kExitOk);
  CHECK(f1.out.find("admissibility.verdict: Admissible\n") != std::string::npos);

  const Run f0 = run({"verdict", "corpus:axb_f0", "--json"});
  CHECK(f0.code == kExitOk);
  const Json j = Json::parse(f0.out);
  CHECK(j["admissibility"]["verdict"] == "NotAdmissible");
  CHECK(j["spectral"]["verdict"] == "Singular");
  CHECK(j["witness"].is_null());
}

TEST_CASE("validate reports broken Jacobi with the triple") {
  const Run r = run({"validate", data_file("broken_jacobi.orb")});
  CHECK(r.code == kExitInputError);
  CHECK(r.err.find("(X, Y, Z)") != std::string::npos);
  CHECK(run({"verdict", data_file("broken_jacobi.orb")}).code == kExitInputError);
}

TEST_CASE("input and precondition errors map to exit codes") {
  const Run syntax = run({"verdict", data_file("bad_syntax.orb")});
  CHECK(syntax.code == kExitInputError);
  CHECK(syntax.err.find("line 4, column 11") != std::string::npos);

  CHECK(run({"verdict", data_file("missing.orb")}).code == kExitInputError);
  CHECK(run({"verdict", "corpus:nope"}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);

  CHECK(run({"verdict", data_file("e2.orb")}).code == kExitPrecondition);
  CHECK(run({"validate", data_file("e2.orb")}).code == kExitPrecondition);
  const Run forced = run({"verdict", data_file("e2.orb"), "--assume-exponential", "--json"});
  CHECK(forced.code == kExitOk);
  CHECK(Json::parse(forced.out)["warnings"].size() >= 1);

  CHECK(run({"verdict", data_file("sl2.orb")}).code == kExitPrecondition);
  CHECK(run({"verdict", "corpus:h5", "--symbolic", "--symbolic-threshold", "4"}).code == kExitPrecondition);
  CHECK(run({"verdict", "corpus:h5", "--symbolic"}).code == kExitOk);
  CHECK(run({"validate", "corpus:h3_x"}).code == kExitOk);
}

TEST_CASE("verdict output matches the fixtures") {
  for (const auto& e : kExpected) {
    CAPTURE(e.name);
    const Run r = run({"verdict", std::string("corpus:") + e.name, "--seed", "7", "--json"});
    REQUIRE(r.code == kExitOk);
    const std::string fixture = read_file(std::string(ORBITADM_FIXTURE_DIR) + "/" + e.name + ".json");
    CHECK(r.out == fixture);

    const Json j = Json::parse(fixture);
    CHECK(j["d_tau"] == e.d_tau);
    CHECK(j["m"] == e.m);
    CHECK(j["spectral"]["verdict"] == e.spectral);
    CHECK(j["admissibility"]["verdict"] == e.admissibility);
    CHECK(j["seed"] == 7);
    CHECK(j["spectral"]["symbolic_d_tau"] == e.d_tau);
  }
  CHECK(corpus().size() == std::size(kExpected));
}

TEST_CASE("text and JSON renderings agree field for field") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const Run text = run({"verdict", "corpus:" + name, "--seed", "3"});
    const Run json = run({"verdict", "corpus:" + name, "--seed", "3", "--json"});
    std::vector<std::pair<std::string, Json>> leaves;
    flatten(Json::parse(json.out), "", leaves);
    std::istringstream lines(text.out);
    std::string line;
    std::size_t i = 0;
    for (; std::getline(lines, line); ++i) {
      REQUIRE(i < leaves.size());
      const auto& [key, value] = leaves[i];
      REQUIRE(line.rfind(key + ": ", 0) == 0);
      const std::string shown = line.substr(key.size() + 2);
      if (value.is_array()) {
        std::string expected = "[";
        for (std::size_t k = 0; k < value.size(); ++k) expected += (k ? ", " : "") + scalar_text(value[k]);
        CHECK(shown == expected + "]");
      } else {
        CHECK(shown == scalar_text(value));
      }
    }
    CHECK(i == leaves.size());
  }
}

TEST_CASE("seed precedence: flag, file, environment, default") {
  const auto seed_of = [](const Run& r) { return Json::parse(r.out)["seed"].get<std::uint64_t>(); };
  CHECK(seed_of(run({"verdict", "corpus:h3_x", "--json"})) == 0);
  {
    ScopedEnv env("ORBITADM_SEED", "42");
    CHECK(seed_of(run({"verdict", "corpus:h3_x", "--json"})) == 42);
    CHECK(seed_of(run({"verdict", "corpus:h3_x", "--json", "--seed", "5"})) == 5);
    CHECK(seed_of(run({"verdict", data_file("seeded.orb"), "--json"})) == 11);
    CHECK(run({"verdict", "corpus:h3_x", "--json"}).out == run({"verdict", "corpus:h3_x", "--json", "--seed", "42"}).out);
  }
  {
    ScopedEnv env("ORBITADM_SEED", "not-a-number");
    CHECK(run({"verdict", "corpus:h3_x"}).code == kExitInputError);
  }
}

TEST_CASE("repeated runs are byte-identical") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    for (const char* fmt : {"--json", "--seed"}) {
      std::vector<std::string> args{"verdict", "corpus:" + name, "--trials", "7"};
      if (std::string(fmt) == "--json") args.push_back("--json");
      else args.insert(args.end(), {"--seed", "99"});
      CHECK(run(args).out == run(args).out);
    }
  }
}

TEST_CASE("rank and jacobian subcommands") {
  const Run rank = run({"rank", "corpus:h3_yz", "--point", "5", "--json"});
  REQUIRE(rank.code == kExitOk);
  const Json r = Json::parse(rank.out);
  CHECK(r["rank_M"] == 1);
  CHECK(r["dim_G_orbit"] == 2);
  CHECK(r["h_stabilizer"] == Json::array({"Z"}));

  CHECK(run({"rank", "corpus:h3_yz", "--point", "1,2"}).code == kExitInputError);
  CHECK(run({"rank", "corpus:h3_yz", "--point", "1/2"}).code == kExitOk);

  const Run jac = run({"jacobian", "corpus:axb_f1", "--point", "0", "--json"});
  REQUIRE(jac.code == kExitOk);
  const Json jj = Json::parse(jac.out);
  CHECK(jj["numerical_rank"] == 2);
  CHECK(jj["expected_rank"] == 2);
  CHECK(jj["max_dev_topleft"].get<double>() < 1e-6);
  CHECK(run({"jacobian", "corpus:axb_f1", "--point", "0", "--step", "-1"}).code == kExitInputError);
}

TEST_CASE("corpus listing and source dump") {
  const Run list = run({"corpus"});
  CHECK(list.code == kExitOk);
  for (const auto& name : corpus_names()) CHECK(list.out.find(name + "  ") != std::string::npos);
  const Run one = run({"corpus", "grelaud"});
  CHECK(one.code == kExitOk);
  CHECK(one.out == std::string(find_corpus("grelaud")->source));
}
