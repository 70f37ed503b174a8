#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "support.hpp"

using namespace donkeykit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_model(const std::string& name, const nlohmann::json& j) {
  const auto path = std::filesystem::temp_directory_path() / ("donkeykit-test-" + name + ".json");
  std::ofstream(path) << j.dump();
  return path.string();
}

std::string farm_model(bool beats) {
  const nlohmann::json pair = nlohmann::json::array({nlohmann::json::array({"u1", "u2"})});
  nlohmann::json j = {{"universe", {"u1", "u2"}},
                      {"pred", {{"farmer", {"u1"}}, {"donkey", {"u2"}}}},
                      {"rel", {{"own", pair}, {"beat", nlohmann::json::array()}}}};
  if (beats) j["rel"]["beat"] = pair;
  return write_model(beats ? "farm-beats" : "farm", j);
}

const std::string kDiscourse = "[[a man] [witp]] . [[he] [whistles]]";
const std::string kDonkey = "[[every [farmer [who [owns [a donkey]]]]] [beats it]]";

}  // namespace

TEST_CASE("typecheck") {
  Run r = cli({"typecheck", "(gIn_0_0 whistle he)"});
  CHECK(r.code == 0);
  CHECK(r.out == "e |> 1\n");
  r = cli({"typecheck", "(whistle he)"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  r = cli({"typecheck", "(("});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
  r = cli({"typecheck", "(gIn_0_0 whistle he)", "--json"});
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json::array({"e |> 1"}));
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"derive", "[he whistles]", "--max-index", "-1"}).code == 2);
  CHECK(cli({"typecheck", "--help"}).code == 0);
}

TEST_CASE("unknown lexicon words") {
  const Run r = cli({"typecheck", "(gIn_0_0 sing he)"});
  CHECK(r.code == 2);
  CHECK(r.err.find("sing") != std::string::npos);
}

TEST_CASE("derive") {
  Run r = cli({"derive", kDiscourse, "--target", "e |x 1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[1] (z_0_0 (gOut_1_0 seq)") == 0);
  CHECK(r.out.find("z=1") != std::string::npos);
  r = cli({"derive", kDiscourse, "--target", "1"});
  CHECK(r.code == 1);
  r = cli({"derive", kDiscourse, "--json"});
  const nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[2]["type"] == "e |x 1");
  CHECK(j[2]["reading"]["z"] == 1);
  CHECK(cli({"derive", "[a unicorn]"}).code == 2);
  CHECK(cli({"derive", kDiscourse, "--budget", "5"}).code == 3);
}

TEST_CASE("text and json carry the same derivations") {
  const Run text = cli({"derive", kDiscourse});
  const nlohmann::json j = nlohmann::json::parse(cli({"derive", kDiscourse, "--json"}).out);
  for (const auto& d : j)
    CHECK(text.out.find(d["term"].get<std::string>() + " : " + d["type"].get<std::string>()) !=
          std::string::npos);
}

TEST_CASE("eval a term") {
  const std::string model = write_model(
      "whistle", {{"universe", {"u1", "u2"}}, {"pred", {{"whistle", {"u1"}}}}});
  const Run r = cli({"eval", "(gIn_0_0 whistle he)", "--model", model, "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out) ==
        nlohmann::json::parse(R"({"type":"e |> 1","table":[{"args":["u1"],"truth":true},
                                                           {"args":["u2"],"truth":false}]})"));
}

TEST_CASE("eval the donkey sentence") {
  Run r = cli({"eval", "(every x y)", "--model", farm_model(true), "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out) == nlohmann::json::parse(R"({"type":"1","truth":true})"));
  r = cli({"eval", "(every x y)", "--model", farm_model(false)});
  CHECK(r.out == "type: 1\ntruth: false\n");
  r = cli({"eval", kDonkey, "--target", "1", "--model", farm_model(true)});
  CHECK(r.code == 0);
  CHECK(r.out == "type: 1\ntruth: true\n");
}

TEST_CASE("eval needs a choice among readings") {
  const std::string model = write_model(
      "man", {{"universe", {"j"}}, {"pred", {{"man", {"j"}}, {"witp", {"j"}}, {"whistle", {"j"}}}}});
  Run r = cli({"eval", kDiscourse, "--model", model});
  CHECK(r.code == 2);
  CHECK(r.err.find("[3] (z_0_0") != std::string::npos);
  r = cli({"eval", kDiscourse, "--model", model, "--index", "3", "--json"});
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["type"] == "e |x 1");
  CHECK(j["truth"] == true);
  CHECK(cli({"eval", kDiscourse, "--model", model, "--index", "4"}).code == 2);
  CHECK(cli({"eval", kDiscourse, "--model", "/nonexistent.json"}).code == 2);
}

TEST_CASE("check") {
  Run r = cli({"check", "donkey-universal", "--max-size", "2", "--exhaustive"});
  CHECK(r.code == 0);
  CHECK(r.out == "donkey-universal: checked 4112 models, 0 mismatches\n");
  r = cli({"check", "a-man-whistles-bound", "--max-size", "3", "--exhaustive", "--json"});
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["checked"] == 584);
  CHECK(j["mismatch_count"] == 0);
  const Run a = cli({"check", "donkey-universal", "--random", "500", "--seed", "7", "--max-size", "3"});
  const Run b = cli({"check", "donkey-universal", "--random", "500", "--seed", "7", "--max-size", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(cli({"check", "no-such-spec"}).code == 2);
}

TEST_CASE("models") {
  Run r = cli({"models", "man", "--max-size", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "U={u1} man={}\nU={u1} man={u1}\n2 models\n");
  r = cli({"models", "loves", "--max-size", "1", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"("love":[["u1","u1"]])") != std::string::npos);
  CHECK(cli({"models", "every"}).code == 2);
}

TEST_CASE("lexicon from a file") {
  const Run r = cli({"typecheck", "(gIn_0_0 whistle he)", "--lexicon",
                     DONKEYKIT_SOURCE_DIR "/data/donkey.lex"});
  CHECK(r.code == 0);
  CHECK(cli({"typecheck", "he", "--lexicon", "/nonexistent.lex"}).code == 2);
}

TEST_CASE("static indefinite") {
  const Run r = cli({"derive", "[[a man] [witp]]", "--static", "--target", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(witp (a man)) : 1") != std::string::npos);
}
