#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "preheap/serialize.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("preheap-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }

  fs::path write(const std::string& name, const Json& j) {
    const auto p = dir / name;
    std::ofstream out(p);
    out << j.dump(2);
    return p;
  }
};

int run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

Json read_json(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  return Json::parse(in);
}

}  // namespace

TEST_CASE("bool solve-right produces the implication and verifies") {
  Scratch s;
  const auto a = s.write("a.json", {{"universe", {"p", "q"}}, {"members", {"p"}}});
  const auto b = s.write("b.json", {{"universe", {"p", "q"}}, {"members", {"q"}}});
  const auto out = s.dir / "out.json";

  const int rc = run_cli("--theory bool --op solve-right --a " + a.string() + " --b " +
                         b.string() + " --out " + out.string());
  CHECK(rc == 0);
  const auto doc = read_json(out);
  CHECK(doc["status"] == "ok");
  CHECK(doc["result"]["members"] == Json::array({"q"}));
  CHECK(doc["verification"]["solution"] == true);
  CHECK(doc["verification"]["maximal"] == true);
}

TEST_CASE("malformed contract exits with the validation status") {
  Scratch s;
  const auto a = s.write("a.json", {{"universe", {"1", "2"}},
                                    {"assumptions", {"1"}},
                                    {"guarantees", {"1"}}});  // 2 uncovered
  const auto b = s.write("b.json", {{"universe", {"1", "2"}},
                                    {"assumptions", {"1", "2"}},
                                    {"guarantees", {"1", "2"}}});
  CHECK(run_cli("--theory agc --op compose --a " + a.string() + " --b " + b.string()) == 2);
}

TEST_CASE("missing flags exit with the validation status") {
  CHECK(run_cli("--theory bool --op solve-right") == 2);
  CHECK(run_cli("--theory nonsense --op solve-right") == 2);
}

TEST_CASE("interface-automata incompatibility is a theory-level failure") {
  Scratch s;
  // solve-right solves compose(a, x) <= b; mirror(b) clashes with a on c.
  const auto a = s.write("a.json", {{"states", {"q"}},
                                    {"initial", {"q"}},
                                    {"inputs", {"c"}},
                                    {"outputs", Json::array()},
                                    {"hidden", Json::array()},
                                    {"steps", Json::array()}});
  const auto b = s.write("b.json", {{"states", {"p"}},
                                    {"initial", {"p"}},
                                    {"inputs", {"c"}},
                                    {"outputs", Json::array()},
                                    {"hidden", Json::array()},
                                    {"steps", {{"p", "c", "p"}}}});
  const auto out = s.dir / "out.json";
  const int rc = run_cli("--theory ia --op solve-right --a " + a.string() + " --b " + b.string() +
                         " --out " + out.string());
  CHECK(rc == 3);
  CHECK(read_json(out)["status"] == "undefined");
}

TEST_CASE("language quotient with word-list operands verifies at the bound") {
  Scratch s;
  const Json alpha1{{"kind", "tuple"}, {"components", {{{"id", "S1"}, {"symbols", {"a", "b"}}}}}};
  const Json alpha12{{"kind", "tuple"},
                     {"components",
                      {{{"id", "S1"}, {"symbols", {"a", "b"}}},
                       {{"id", "S2"}, {"symbols", {"c", "d"}}}}}};
  const auto a = s.write("a.json", {{"alphabet", alpha1}, {"words", {{"a"}, {"a", "a"}}}});
  const auto b = s.write("b.json", {{"alphabet", alpha12}, {"words", {Json::array({Json::array({"a", "c"})})}}});
  const auto out = s.dir / "out.json";

  const int rc = run_cli("--theory lang-sync --op solve-right --a " + a.string() + " --b " +
                         b.string() + " --bound 3 --out " + out.string());
  CHECK(rc == 0);
  const auto doc = read_json(out);
  CHECK(doc["verification"]["solution"] == true);
  CHECK(doc["verification"]["maximal"] == true);

  SUBCASE("composing the dividend with the quotient reproduces b") {
    const auto z = s.write("z.json", doc["result"]["dfa"]);
    const auto out2 = s.dir / "out2.json";
    const int rc2 = run_cli("--theory lang-sync --op compose --a " + a.string() + " --b " +
                            z.string() + " --out " + out2.string());
    CHECK(rc2 == 0);
    CHECK(read_json(out2)["result"]["words_le_bound"] == Json::array({"(a,c)"}));
  }
}

TEST_CASE("a closed form contradicted by the oracle fails loudly") {
  Scratch s;
  // Divisor consuming the dividend's visible output: the quotient evaluates
  // but its composition with the divisor does not refine the dividend, so
  // verification must fail with the dedicated exit status.
  const auto q = s.write("q.json", {{"states", {"q0", "q1"}},
                                    {"initial", {"q0"}},
                                    {"inputs", {"o1"}},
                                    {"outputs", Json::array()},
                                    {"hidden", Json::array()},
                                    {"steps", {{"q0", "o1", "q1"}}}});
  const auto p = s.write("p.json", {{"states", {"p0", "p1"}},
                                    {"initial", {"p0"}},
                                    {"inputs", Json::array()},
                                    {"outputs", {"o1", "o2"}},
                                    {"hidden", Json::array()},
                                    {"steps", {{"p0", "o1", "p1"}, {"p1", "o2", "p1"}}}});
  const auto out = s.dir / "out.json";
  const int rc = run_cli("--theory ia --op oracle-verify --a " + q.string() + " --b " +
                         p.string() + " --out " + out.string());
  CHECK(rc == 4);
  CHECK(read_json(out)["status"] == "verification-failed");
}

TEST_CASE("serialized values parse back to equal values") {
  using namespace preheap;
  const FiniteSet s({"p", "q", "r"}, std::vector<std::string>{"p", "r"});
  CHECK(finite_set_from_json(to_json(s)) == s);

  const Contract c(FiniteSet({"1", "2"}, std::vector<std::string>{"1"}),
                   FiniteSet::full({"1", "2"}));
  CHECK(contract_from_json(to_json(c)) == c);

  const InterfaceAutomaton a({"v0", "v1"}, 0, {"i"}, {"o"}, {"h"},
                             {{0, "i", 1}, {1, "h", 0}, {1, "o", 0}});
  CHECK(automaton_from_json(to_json(a)) == a);

  const auto alpha = StructuredAlphabet::tuple({{"S1", {"a", "b"}}});
  const auto d = from_raw_words(alpha, {{{"a"}}, {{"b"}, {"a"}}});
  CHECK(same_language(language_from_json(to_json(d)), d));
}

TEST_CASE("axioms op reports violations as data, not as a crash") {
  Scratch s;
  const auto a = s.write("a.json", {{"universe", {"p", "q"}}, {"members", {"p"}}});
  const auto out = s.dir / "out.json";
  const int rc =
      run_cli("--theory bool --op axioms --a " + a.string() + " --out " + out.string());
  CHECK(rc == 0);
  const auto doc = read_json(out);
  CHECK(doc["result"]["ok"] == true);
  CHECK(doc["result"]["identity"]["members"] == Json::array({"p", "q"}));
}
