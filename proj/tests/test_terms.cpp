#include <doctest.h>

#include "donkeykit/error.hpp"
#include "support.hpp"

using namespace donkeykit;
using testing::fragment;
using testing::types_of;

using Strings = std::vector<std::string>;

TEST_CASE("parse_term builds left-nested applications") {
  const Term t = parse_term("(gIn_0_0 whistle he)");
  const Term expected = Term::app(
      Term::app(Term::shift(ShiftBase::GIn, 0, 0), Term::lex("whistle")), Term::lex("he"));
  CHECK(t == expected);
  CHECK(to_string(t) == "(gIn_0_0 whistle he)");
}

TEST_CASE("bare shift names default to indices zero") {
  const Term t = parse_term("(z (gIn_1_0 seq) (gIn_0_0 whistle he) amw)");
  CHECK(to_string(t) == "(z_0_0 (gIn_1_0 seq) (gIn_0_0 whistle he) amw)");
  CHECK(to_string(parse_term("s")) == "s_0_0");
  CHECK(to_string(parse_term("gOut")) == "gOut_0_0");
}

TEST_CASE("parse_term rejects malformed input") {
  CHECK_THROWS_AS(parse_term("(("), ParseError);
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("(a b"), ParseError);
  CHECK_THROWS_AS(parse_term("a b)"), ParseError);
}

TEST_CASE("term measures") {
  const Term t = testing::term("(every x y)");
  CHECK(binder_count(t, ShiftBase::Z) == 1);
  CHECK(binder_count(t, ShiftBase::S) == 0);
  CHECK(shift_count(parse_term("(gIn_0_0 whistle he)")) == 1);
  CHECK(term_size(parse_term("(gIn_0_0 whistle he)")) == 5);
}

TEST_CASE("abbreviations expand recursively") {
  const Term t = expand(parse_term("(z (gOut_1_0 seq) hw amw)"), standard_abbreviations());
  CHECK(to_string(t) ==
        "(z_0_0 (gOut_1_0 seq) (gIn_0_0 whistle he) (gOut_0_0 witp (a (gOut_0_0 man))))");
}

TEST_CASE("he whistles") {
  CHECK(types_of("(gIn_0_0 whistle he)") == Strings{"e |> 1"});
  CHECK(types_of("(whistle he)").empty());
}

TEST_CASE("a man walks in the park") {
  CHECK(types_of("amw") == Strings{"e |x 1"});
  const Lexicon st = fragment().with_variant(LexiconVariant::Static);
  CHECK(types_of("(witp (a man))", st) == Strings{"1"});
}

TEST_CASE("both scopings of he loves her") {
  CHECK(types_of("(gIn_1_0 (gIn_0_1 love) she he)") == Strings{"e |> e |> 1"});
  CHECK(types_of("(gIn_0_1 (gIn_1_0 love) she he)") == Strings{"e |> e |> 1"});
}

TEST_CASE("free and bound readings of the discourse") {
  CHECK(types_of("(gOut_1_0 (gIn_0_1 seq) hw amw)") == Strings{"e |x e |> 1"});
  CHECK(types_of("(z_0_0 (gOut_1_0 seq) hw amw)") == Strings{"e |x 1"});
  CHECK(types_of("(z_0_0 (gIn_1_0 seq) hw amw)").empty());
}

TEST_CASE("donkey sentence halves") {
  CHECK(types_of("x") == Strings{"σ1 |x e -> σ1 |x e |x 1"});
  CHECK(types_of("y") == Strings{"σ1 |x e |x e -> σ1 |x e |x 1"});
  CHECK(types_of("(every x y)") == Strings{"1"});
}

TEST_CASE("no girl walks, she talks") {
  CHECK(types_of("(no (gOut_0_0 girl) (gOut_0_0 walk))") == Strings{"1"});
  CHECK(types_of("(gIn_0_1 seq (gIn_0_0 talk she) (no (gOut_0_0 girl) (gOut_0_0 walk)))") ==
        Strings{"e |> 1"});
}

TEST_CASE("unknown lexemes") {
  CHECK_THROWS_AS(types_of("(gIn_0_0 sing he)"), UnknownLexeme);
}

TEST_CASE("shift indices beyond the typing bound") {
  TypingOptions opts;
  opts.max_index = 1;
  CHECK_THROWS_AS(typecheck_term(parse_term("(gIn_2_0 whistle he)"), fragment(), opts),
                  BoundExceeded);
}

TEST_CASE("every typing re-checks against its own nodes") {
  VarSupply vars;
  for (const char* text : {"(gIn_0_0 whistle he)", "(every x y)", "(z_0_0 (gOut_1_0 seq) hw amw)"}) {
    for (const Typing& typing : infer(testing::term(text), fragment(), vars)) {
      const TypedNode& root = *typing.root;
      REQUIRE(root.functor);
      const Type f = typing.subst.apply(root.functor->type);
      const Type x = typing.subst.apply(root.argument->type);
      CHECK(f == normalize(Type::arrow(x, typing.type())));
    }
  }
}
