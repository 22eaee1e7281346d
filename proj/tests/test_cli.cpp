#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kahler/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = kahler::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(KAHLER_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("omega on B(5)") {
  Result r = run({"omega", "--file", data("b5.alg"), "--base", "field"});
  CHECK(r.code == 0);
  CHECK(r.out.find("is_omega_zero = false") != std::string::npos);
  Result j = run({"--json", "omega", "--file", data("b5.alg")});
  auto doc = json_of(j);
  CHECK(doc["is_omega_zero"] == false);
  CHECK(doc["dimension"] == 12);
  CHECK(doc["generators"] == nlohmann::json::array({"dX", "dY"}));
}

TEST_CASE("d-zero") {
  Result f = run({"--json", "d-zero", "X^2*Y^2 + X^5 + Y^5", "--file", data("b5.alg")});
  CHECK(f.code == 0);
  CHECK(json_of(f)["is_d_zero"] == true);
  Result x = run({"--json", "d-zero", "X", "--file", data("b5.alg")});
  CHECK(json_of(x)["is_d_zero"] == false);
  Result bad = run({"d-zero", "X +", "--file", data("b5.alg")});
  CHECK(bad.code == 2);
}

TEST_CASE("dim") {
  Result r = run({"--json", "dim", "--file", data("b5.alg")});
  CHECK(r.code == 0);
  CHECK(json_of(r)["dimension"] == 11);
  CHECK(json_of(r)["truncation_order"] == 6);
  CHECK(run({"dim", "--file", data("hyperbola.alg")}).out.find("infinite") != std::string::npos);
  // (X) is not primary to the maximal ideal.
  CHECK(run({"dim", "--file", data("line.alg")}).code == 2);
}

TEST_CASE("kernel-degree and veronese") {
  for (int d = 1; d <= 6; ++d) {
    Result r = run({"--json", "kernel-degree", "--deg", std::to_string(d), "--file", data("hyperbola.alg")});
    CHECK(r.code == 0);
    CHECK(json_of(r)["dimension"] == 0);
  }
  Result v = run({"--json", "veronese", "--max-deg", "6", "--file", data("cross.alg")});
  CHECK(v.code == 0);
  auto doc = json_of(v);
  CHECK(doc["pass"] == true);
  CHECK(doc["kernel_dimensions"][1]["kernel_dimension"] == 2);
  CHECK(run({"veronese", "--max-deg", "3", "--file", data("hyperbola.alg")}).code == 2);
}

TEST_CASE("map-omega") {
  Result z = run({"--json", "map-omega", "--map", data("frobenius.map")});
  CHECK(z.code == 0);
  CHECK(json_of(z)["zero_map"] == true);
  Result id = run({"--json", "map-omega", "--map", data("identity.map")});
  CHECK(json_of(id)["zero_map"] == false);
}

TEST_CASE("parse errors cite line and column") {
  Result r = run({"parse-check", "--file", data("bad.alg")});
  CHECK(r.code == 2);
  CHECK(r.err.find("bad.alg:3:11") != std::string::npos);
  CHECK(run({"parse-check", "--file", data("missing.alg")}).code == 2);
}

TEST_CASE("dump round-trips") {
  for (const char* f : {"b5.alg", "dual.alg", "weighted.alg", "cross.alg", "tower2.alg"}) {
    CAPTURE(f);
    Result once = run({"parse-check", "--dump", "--file", data(f)});
    REQUIRE(once.code == 0);
    std::string tmp = std::string("dump_roundtrip_") + f;
    std::ofstream(tmp) << once.out;
    Result twice = run({"parse-check", "--dump", "--file", tmp});
    CHECK(twice.out == once.out);
    std::remove(tmp.c_str());
  }
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"verify", "preparatory", "--n", "4"}).code == 2);
  CHECK(run({"verify", "euler", "--field", "Fp:4"}).code == 2);
  CHECK(run({"kernel-degree", "--file", data("hyperbola.alg")}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify verbs") {
  Result p = run({"--json", "--no-timing", "verify", "preparatory", "--n", "5", "--field", "QQ"});
  CHECK(p.code == 0);
  auto doc = json_of(p);
  CHECK(doc["pass"] == true);
  CHECK(doc["elapsed_ms"] == 0);
  CHECK(run({"verify", "euler", "--trials", "100", "--field", "Fp:3"}).code == 0);
  CHECK(run({"verify", "killing"}).code == 0);
  CHECK(run({"verify", "killing", "--file", data("b5.alg"), "--element", "X^2*Y^2 + X^5 + Y^5"}).code == 0);
  CHECK(run({"verify", "charp-tower", "--p", "5", "--n-max", "2"}).code == 0);
  CHECK(run({"verify", "twisted", "--p", "3", "--n", "2"}).code == 0);
  CHECK(run({"verify", "local-case", "--count", "5", "--file", data("dual.alg")}).code == 0);
  CHECK(run({"verify", "gabber", "--steps", "1", "--start", "dual"}).code == 0);
  // Honest cap reporting: B(5) needs B_6 factors past the default cap.
  Result cap = run({"--json", "verify", "gabber", "--steps", "1", "--start", "b5"});
  CHECK(cap.code == 3);
  CHECK(json_of(cap)["status"] == "cap_exceeded");
  CHECK(run({"--budget", "5", "verify", "preparatory", "--n", "5"}).code == 3);
}

TEST_CASE("golden reports") {
  struct Golden {
    const char* file;
    std::vector<std::string> args;
  };
  std::vector<Golden> cases{
      {"preparatory_n5.json", {"verify", "preparatory", "--n", "5", "--field", "QQ"}},
      {"killing_dual.json", {"verify", "killing"}},
      {"charp_p2.json", {"verify", "charp-tower", "--p", "2", "--n-max", "3"}},
      {"twisted_p2_n1.json", {"verify", "twisted", "--p", "2", "--n", "1"}},
      {"gabber_b5_cap.json", {"verify", "gabber", "--steps", "1", "--start", "b5"}},
  };
  for (const auto& g : cases) {
    CAPTURE(g.file);
    std::vector<std::string> args{"--json", "--no-timing"};
    args.insert(args.end(), g.args.begin(), g.args.end());
    Result r = run(args);
    CHECK(r.out == slurp(std::string(KAHLER_GOLDEN) + "/" + g.file));
  }
}
