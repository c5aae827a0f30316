#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

using nlohmann::json;

namespace {

std::string binary() {
  const char* path = std::getenv("FRL_BIN");
  REQUIRE_MESSAGE(path != nullptr, "FRL_BIN must point at the frl binary");
  return path;
}

int run_cli(const std::string& args) {
  std::string cmd = binary() + " " + args + " >/dev/null 2>/dev/null";
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WEXITSTATUS(rc);
}

std::string capture_stdout(const std::string& args) {
  std::string cmd = binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

} // namespace

TEST_CASE("golden corpus: exit codes match the documented contract") {
  // 0 = success/holds/witness-found, 1 = refuted/not-found, 2 = usage error
  const std::pair<const char*, int> corpus[] = {
      // translate
      {"translate --sentence 'E x . (x*x = 1 & ~(x = 1))'", 0},
      {"translate --sentence 'E x . E y . (~(x = 1) & ~(y = 1))'", 0},
      {"translate --sentence 'E x . x = 1'", 2},        // q = 0
      {"translate --sentence 'A x . ~(x = 1)'", 2},     // not primitive
      {"translate --sentence 'E x . (x = '", 2},        // syntax error
      // check: universal
      {"check --model zfree --sentence 'A x . A y . x*y = y*x' --word-len 1", 1},
      {"check --model zfree --sentence 'A x . ((G(x) & x^2 = 1) -> x = 1)' --word-len 2", 0},
      {"check --model zfree --sentence 'A x . ((P(x) & x^2 = 0) -> x = 0)' --word-len 1", 0},
      {"check --model free --sentence 'A x . A y . x*y = y*x' --word-len 1", 1},
      {"check --model free --sentence 'A x . (x^2 = 1 -> x = 1)' --word-len 2", 0},
      {"check --model sym:2 --sentence 'A x . (x^2 = 1 -> x = 1)'", 1},
      {"check --model sym:3 --sentence "
       "'A x . A y . A z . ((~(y = 1) & x*y = y*x & y*z = z*y) -> x*z = z*x)'", 0},
      {"check --model sym:4 --sentence "
       "'A x . A y . A z . ((~(y = 1) & x*y = y*x & y*z = z*y) -> x*z = z*x)'", 1},
      // check: existential
      {"check --model free --sentence 'E x . ~(x = 1)' --word-len 1", 0},
      {"check --model zfree --sentence 'E x . (G(x) & x*x = 1 & ~(x = 1))' --word-len 2 "
       "--support 1 --coeff 1", 1},
      {"check --model zfree --sentence 'A x . E y . x*y = y*x' --word-len 1", 2}, // mixed
      {"check --model nowhere --sentence 'A x . x = 1'", 2},
      {"check --model zp-sym:2:4 --sentence 'A x . x = 0'", 2}, // modulus not prime
      // eval
      {"eval --model zfree --formula 'x*y = y*x' --assign 'x=a,y=a'", 0},
      {"eval --model zfree --formula 'x*y = y*x' --assign 'x=a,y=b'", 1},
      {"eval --model zfree --formula 'G(x)' --assign 'x=[-1*a]'", 1},
      {"eval --model zfree --formula 'x = 1' --assign ''", 2},   // unbound variable
      {"eval --model free --formula 'G(x)' --assign 'x=a'", 2},  // predicate needs L2
      {"eval --model sym:3 --formula 'x*x*x = 1' --assign 'x=(2,3,1)'", 0},
      {"eval --model zp-sym:1:2 --formula 'x + x = 0' --assign 'x=1*(1)'", 0},
      // classify / axioms / diagram
      {"classify --sentence 'A x . ((G(x) & x^2 = 1) -> x = 1)'", 0},
      {"classify --sentence 'A x . x = 1' --lang l3", 2},
      {"classify --sentence 'A x . G(x)' --lang l0", 2},
      {"axioms --family torsion --n-max 4", 0},
      {"axioms --family rct", 0},
      {"axioms --family nosuch", 2},
      {"diagram --constants 'a,1' --depth 1", 0},
      {"diagram --constants 'a,a' --depth 1", 2}, // duplicate constants
      // separate / zerodivisor
      {"separate --element '[1*a - 1*b]'", 0},
      {"separate --element '[0]'", 2},
      {"zerodivisor --element '[1 - a]' --radius 3", 1},
      {"zerodivisor --element '[1 - a]' --model zcyc:4", 0},
      {"zerodivisor --element '[0]' --radius 2", 2},
      // stallings / intersect
      {"stallings --subgroup 'a*a,b' --member 'a*a*b'", 0},
      {"stallings --subgroup 'a*a,b' --member 'a'", 1},
      {"stallings --subgroup 'a*a,b'", 0},
      {"stallings --subgroup 'c'", 2}, // outside rank 2
      {"intersect --left 'a*a,b' --right 'a'", 0},
      // usage
      {"", 2},
      {"--help", 0},
  };
  for (const auto& [args, expected] : corpus) {
    CAPTURE(args);
    CHECK(run_cli(args) == expected);
  }
}

TEST_CASE("json verdicts validate against the schema and match text mode") {
  std::string text =
      capture_stdout("check --model zfree --sentence 'A x . A y . x*y = y*x' --word-len 1");
  std::string raw = capture_stdout(
      "--json check --model zfree --sentence 'A x . A y . x*y = y*x' --word-len 1");
  json v = json::parse(raw);
  CHECK(v.at("verdict") == "refuted");
  CHECK(text.starts_with("refuted"));
  CHECK(v.at("bounds").at("word_len") == 1);
  CHECK(v.at("bounds").at("support").is_number_integer());
  CHECK(v.at("bounds").at("coeff").is_number_integer());
  REQUIRE(v.at("assignment").is_object());
  CHECK(v.at("assignment").at("x") == "[a]");
  CHECK(v.at("assignment").at("y") == "[b]");
  CHECK(v.at("rank") == 2);
  CHECK(v.at("seed").is_number_integer());

  json holds = json::parse(capture_stdout(
      "--json check --model zfree --sentence 'A x . ((G(x) & x^2 = 1) -> x = 1)' --word-len 2"));
  CHECK(holds.at("verdict") == "holds-at-bound");
  CHECK(holds.at("assignment").is_null());
  std::string holds_text = capture_stdout(
      "check --model zfree --sentence 'A x . ((G(x) & x^2 = 1) -> x = 1)' --word-len 2");
  CHECK(holds_text.starts_with("holds-at-bound"));
}

TEST_CASE("certificate json has the published shape") {
  json cert = json::parse(capture_stdout("separate --element '[2*a - 3*b + 1]'"));
  CHECK(cert.at("degree").is_number_integer());
  CHECK(cert.at("prime").is_number_integer());
  REQUIRE(cert.at("images").is_object());
  for (const auto& [name, line] : cert.at("images").items()) {
    CHECK((name == "a" || name == "b"));
    REQUIRE(line.is_array());
    CHECK(static_cast<int>(line.size()) == cert.at("degree").get<int>());
  }
  REQUIRE(cert.at("image_terms").is_array());
  CHECK(!cert.at("image_terms").empty());
  for (const auto& term : cert.at("image_terms")) {
    REQUIRE(term.is_array());
    REQUIRE(term.size() == 2);
    CHECK(term[0].is_number_integer());
    CHECK(term[1].is_array());
  }
  CHECK(cert.at("verified") == true);
  // prime coprime to 2, 3, 1 => 5
  CHECK(cert.at("prime") == 5);
}

TEST_CASE("translate output is bit-exact") {
  CHECK(capture_stdout("translate --sentence 'E x . (x*x = 1 & ~(x = 1))'") ==
        "A x . ((G(x) & x*x = 1) -> 1 - x = 0)\n");
  CHECK(capture_stdout("translate --sentence 'E x . E y . (~(x = 1) & ~(y = 1))'") ==
        "A x . A y . ((G(x) & G(y)) -> (1 - x)*(1 - y) = 0)\n");
}

TEST_CASE("seed and rank come from flags or environment") {
  std::string cmd = "FRL_SEED=77 FRL_RANK=3 " + binary() +
                    " stallings --subgroup 'a*a,c' 2>&1 >/dev/null | head -1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[256] = {0};
  REQUIRE(fgets(buf, sizeof buf, pipe) != nullptr);
  pclose(pipe);
  CHECK(std::string(buf) == "# frl seed=77 rank=3\n");
}
