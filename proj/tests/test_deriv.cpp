#include <doctest.h>

#include "donkeykit/deriv.hpp"
#include "donkeykit/error.hpp"
#include "support.hpp"

using namespace donkeykit;
using testing::fragment;
using testing::show;
using testing::ty;

namespace {

std::vector<Derivation> search(const std::string& sentence, const std::optional<std::string>& target,
                               SearchBounds bounds = {}, const Lexicon& lex = fragment()) {
  std::optional<Type> t;
  if (target) t = ty(*target);
  return search_derivations(parse_syntax_tree(sentence, lex), lex, bounds, t);
}

std::vector<std::string> printed(const std::vector<Derivation>& ds) {
  std::vector<std::string> out;
  for (const Derivation& d : ds) out.push_back(to_string(d.term) + " : " + show(d.type));
  return out;
}

const char* const kDiscourse = "[[a man] [witp]] . [[he] [whistles]]";

}  // namespace

TEST_CASE("syntax trees") {
  const SyntaxTree t = parse_syntax_tree("[[a man] [witp]]", fragment());
  CHECK(to_string(t) == "[[a man] witp]");
  CHECK(t.leaf_count() == 3);
  CHECK(t.lexemes() == std::vector<std::string>{"a", "man", "witp"});
  const SyntaxTree d = parse_syntax_tree(kDiscourse, fragment());
  CHECK(to_string(d) == "[[seq [he whistles]] [[a man] witp]]");
  CHECK(d.right().left().left().word() == "a");
}

TEST_CASE("syntax tree errors") {
  CHECK_THROWS_AS(parse_syntax_tree("[a man witp]", fragment()), ParseError);
  CHECK_THROWS_AS(parse_syntax_tree("[[a man]", fragment()), ParseError);
  CHECK_THROWS_AS(parse_syntax_tree("[a unicorn]", fragment()), UnknownLexeme);
}

TEST_CASE("shift alphabet") {
  SearchBounds b;
  CHECK(shift_alphabet(b).size() == 27);
  b.allow_s = true;
  CHECK(shift_alphabet(b).size() == 36);
  b.restrict_composition = true;
  CHECK(shift_alphabet(b).size() == 12);
}

TEST_CASE("a man walks in the park") {
  const Lexicon st = fragment().with_variant(LexiconVariant::Static);
  const auto ds = search("[[a man] [witp]]", "1", {}, st);
  REQUIRE(ds.size() == 1);
  CHECK(to_string(ds[0].term) == "(witp (a man))");
  CHECK(printed(search("[[a man] [witp]]", std::nullopt)) ==
        std::vector<std::string>{"(gOut_0_0 witp (a (gOut_0_0 man))) : e |x 1"});
}

TEST_CASE("he whistles") {
  const auto ds = search("[he whistles]", std::nullopt);
  REQUIRE(ds.size() == 1);
  CHECK(show(ds[0].type) == "e |> 1");
  const ReadingReport r = classify_reading(search("[he]", std::nullopt).at(0));
  CHECK(r.residual_in.size() == 1);
  CHECK(r.residual_out.empty());
  CHECK(r.z_count == 0);
}

TEST_CASE("he loves her has two scopings") {
  const auto ds = search("[[he] [loves her]]", "e |> e |> 1");
  REQUIRE(ds.size() == 2);
  for (const Derivation& d : ds) CHECK(show(d.type) == "e |> e |> 1");
  CHECK(dedup_derivations(ds, fragment()).size() == 2);
}

TEST_CASE("discourse readings") {
  const auto ds = search(kDiscourse, std::nullopt);
  CHECK(printed(ds) == std::vector<std::string>{
      "(gIn_0_1 (gOut_1_0 seq) (gIn_0_0 whistle he) (gOut_0_0 witp (a (gOut_0_0 man)))) : e |> e |x 1",
      "(gOut_1_0 (gIn_0_1 seq) (gIn_0_0 whistle he) (gOut_0_0 witp (a (gOut_0_0 man)))) : e |x e |> 1",
      "(z_0_0 (gOut_1_0 seq) (gIn_0_0 whistle he) (gOut_0_0 witp (a (gOut_0_0 man)))) : e |x 1",
  });
  const ReadingReport free = classify_reading(ds[1]);
  CHECK(free.residual_in.size() == 1);
  CHECK(free.residual_out.size() == 1);
  CHECK(free.z_count == 0);
  const ReadingReport bound = classify_reading(ds[2]);
  CHECK(bound.residual_in.empty());
  CHECK(bound.z_count == 1);
  CHECK(reading_to_json(bound).dump() == R"({"residual_in":[],"residual_out":["e"],"s":0,"z":1})");
}

TEST_CASE("targets filter and specialize") {
  CHECK(search(kDiscourse, "e |x 1").size() == 1);
  CHECK(search(kDiscourse, "1").empty());
  const auto bound = search("[[a girl] [walks]] . [[she] [talks]]", "s |x 1");
  REQUIRE(bound.size() == 1);
  CHECK(show(bound[0].type) == "e |x 1");
}

TEST_CASE("no girl walks, she talks") {
  const char* s = "[[no girl] [walks]] . [[she] [talks]]";
  CHECK(search(s, "1").empty());
  CHECK(search(s, "s |x 1").empty());
  const auto free = search(s, "e |> 1");
  REQUIRE(free.size() == 1);
  CHECK(to_string(free[0].term) ==
        "(gIn_0_1 seq (gIn_0_0 talk she) (no (gOut_0_0 girl) (gOut_0_0 walk)))");
}

TEST_CASE("tighter bounds lose readings") {
  SearchBounds b;
  b.max_shifts = 2;
  CHECK(search(kDiscourse, "e |x 1", b).size() == 1);
  b.max_shifts = 1;
  CHECK(search(kDiscourse, "e |x 1", b).empty());
  CHECK(search("[he whistles]", std::nullopt, b).size() == 1);
  b.max_shifts = 0;
  CHECK(search(kDiscourse, std::nullopt, b).empty());
}

TEST_CASE("leaf shifts record the decoration") {
  const auto ds = search("[[a man] [witp]]", std::nullopt);
  REQUIRE(ds.size() == 1);
  const Derivation& d = ds[0];
  REQUIRE(d.leaf_shifts.size() == 3);
  CHECK(d.leaf_shifts[0].empty());
  CHECK(d.leaf_shifts[1].size() == 1);
  CHECK(d.leaf_shifts[2].size() == 1);
  CHECK(shift_count(d) == 2);
  const nlohmann::json j = derivation_to_json(d);
  CHECK(j["type"] == "e |x 1");
  CHECK(j["term"] == "(gOut_0_0 witp (a (gOut_0_0 man)))");
}

TEST_CASE("dedup") {
  SearchBounds raw;
  raw.deduplicate = false;
  const auto all = search(kDiscourse, std::nullopt, raw);
  const auto kept = dedup_derivations(all, fragment());
  CHECK(all.size() >= kept.size());
  CHECK(printed(kept) == printed(search(kDiscourse, std::nullopt)));
  CHECK(dedup_derivations({kept[0], kept[0]}, fragment()).size() == 1);
  CHECK(dedup_derivations({kept[0]}, fragment()).size() == 1);
}

TEST_CASE("probe models are seeded") {
  const auto a = probe_models(fragment());
  CHECK(a.size() == 3);
  CHECK(a == probe_models(fragment()));
  CHECK(a != probe_models(fragment(), 1));
  for (const Model& m : a) CHECK(m.size() == 3);
}

TEST_CASE("budgets") {
  SearchBounds b;
  b.node_budget = 10;
  CHECK_THROWS_AS(search(kDiscourse, std::nullopt, b), BudgetExceeded);
}

TEST_CASE("search is deterministic") {
  CHECK(printed(search(kDiscourse, std::nullopt)) == printed(search(kDiscourse, std::nullopt)));
}
