#include <doctest.h>

#include "donkeykit/error.hpp"
#include "support.hpp"

using namespace donkeykit;
using testing::fragment;
using testing::show;

namespace {

std::string data_dir() { return DONKEYKIT_SOURCE_DIR "/data"; }

ValueSet denote_word(const std::string& word, const Model& m, const std::string& type) {
  return eval_term(Term::lex(word), testing::ty(type), m, fragment());
}

}  // namespace

TEST_CASE("core lexicon") {
  const Lexicon core = Lexicon::core();
  CHECK(core.size() == 8);
  CHECK(core.builtin_count() == 8);
  for (const char* w : {"a", "every", "who", "no", "he", "she", "it", "seq"}) CHECK(core.find(w));
  CHECK(show(core.at("he").polytype) == "e |> e");
}

TEST_CASE("model words get lifted types") {
  CHECK(show(fragment().at("man").polytype) == "e -> 1");
  CHECK(show(fragment().at("own").polytype) == "e -> e -> 1");
}

TEST_CASE("parse_lexicon counts declarations") {
  const Lexicon lex = parse_lexicon("pred man\npred witp\n# comment\n\npred whistle\n");
  CHECK(lex.size() == 11);
  CHECK(lex.builtin_count() == 8);
}

TEST_CASE("built-ins cannot be redeclared") {
  CHECK_THROWS_AS(parse_lexicon("pred every\n"), LexiconError);
  CHECK_THROWS_AS(parse_lexicon("pred man\nrel man\n"), LexiconError);
}

TEST_CASE("malformed lexicon lines") {
  CHECK_THROWS_AS(parse_lexicon("noun man\n"), ParseError);
  CHECK_THROWS_AS(parse_lexicon("pred\n"), ParseError);
  CHECK_THROWS_AS(load_lexicon("/nonexistent/donkey.lex"), LexiconError);
}

TEST_CASE("shipped lexicon file") {
  const Lexicon lex = load_lexicon(data_dir() + "/donkey.lex");
  CHECK(lex.size() - lex.builtin_count() == 12);
  CHECK(lex.size() == fragment().size());
}

TEST_CASE("word resolution") {
  const Lexicon& lex = fragment();
  CHECK(lex.resolve("whistles") == "whistle");
  CHECK(lex.resolve("Every") == "every");
  CHECK(lex.resolve("her") == "she");
  CHECK(lex.resolve("him") == "he");
  CHECK(lex.resolve("owns") == "own");
  CHECK_FALSE(lex.resolve("sings").has_value());
}

TEST_CASE("static variant changes only the indefinite") {
  const Lexicon st = fragment().with_variant(LexiconVariant::Static);
  CHECK(st.variant() == LexiconVariant::Static);
  CHECK(show(st.at("a").polytype) == "(e -> 1) -> e");
  CHECK(show(st.at("every").polytype) == show(fragment().at("every").polytype));
}

TEST_CASE("pronoun denotes the identity") {
  Model m({"a", "b"});
  const ValueSet he = denote_word("he", m, "e |> e");
  REQUIRE(he.size() == 1);
  const Value c = *he.begin();
  for (std::uint32_t x = 0; x < 2; ++x) CHECK(c(Value::atom(x)) == ValueSet{Value::atom(x)});
}

TEST_CASE("predicates denote their extension") {
  Model m({"a", "b", "c"});
  m.set_predicate("man", {0, 1});
  const Value man = *denote_word("man", m, "e -> 1").begin();
  CHECK(man(Value::atom(0)) == ValueSet{Value::star()});
  CHECK(man(Value::atom(2)).empty());
}

TEST_CASE("indefinite outputs the man himself") {
  Model m({"a", "b"});
  m.set_predicate("man", {0});
  const ValueSet v = eval_term(parse_term("(a (gOut_0_0 man))"), testing::ty("e |x e"), m, fragment());
  CHECK(v == ValueSet{Value::pair(Value::atom(0), Value::atom(0))});
}
