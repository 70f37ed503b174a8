#include <doctest.h>

#include "donkeykit/error.hpp"
#include "support.hpp"

using namespace donkeykit;
using testing::show;
using testing::ty;

TEST_CASE("printing associates to the right") {
  CHECK(show(Type::arrow(Type::e(), Type::arrow(Type::e(), Type::unit()))) == "e -> e -> 1");
  CHECK(show(Type::arrow(Type::arrow(Type::e(), Type::unit()), Type::unit())) == "(e -> 1) -> 1");
  CHECK(show(Type::in(Type::e(), Type::in(Type::e(), Type::unit()))) == "e |> e |> 1");
  CHECK(show(ty("e -> e |> 1")) == "e -> e |> 1");
  CHECK(show(ty("(e -> e) |> 1")) == "(e -> e) |> 1");
}

TEST_CASE("parse accepts unicode spellings") {
  CHECK(ty("e ∈ e ⋉ 1") == ty("e |> e |x 1"));
  CHECK(show(ty("e → 1")) == "e -> 1");
}

TEST_CASE("parse rejects malformed types") {
  VarSupply vars;
  CHECK_THROWS_AS(parse_type("e ->", vars), ParseError);
  CHECK_THROWS_AS(parse_type("(e", vars), ParseError);
  CHECK_THROWS_AS(parse_type("", vars), ParseError);
}

TEST_CASE("normalize") {
  CHECK(normalize(Type::out(Type::unit(), Type::e())) == Type::e());
  CHECK(normalize(Type::out(Type::prod(Type::e(), Type::e()), Type::unit())) ==
        Type::out(Type::e(), Type::out(Type::e(), Type::unit())));
  CHECK(normalize(Type::in(Type::e(), Type::unit())) == Type::in(Type::e(), Type::unit()));
  const Type nested =
      Type::out(Type::prod(Type::prod(Type::e(), Type::unit()), Type::e()), Type::unit());
  CHECK(show(normalize(nested)) == "e |x e |x 1");
  CHECK(is_canonical(normalize(nested)));
  CHECK_FALSE(is_canonical(nested));
}

TEST_CASE("unify: structural match") {
  VarSupply vars;
  const Type a = vars.fresh("α"), b = vars.fresh("β");
  auto sols = unify(Type::arrow(a, b), Type::arrow(Type::e(), Type::unit()));
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].apply(a) == Type::e());
  CHECK(sols[0].apply(b) == Type::unit());
}

TEST_CASE("unify: distinct base types") {
  CHECK(unify(Type::e(), Type::unit()).empty());
  CHECK(unify(ty("e -> 1"), ty("e |> 1")).empty());
}

TEST_CASE("unify: output spine prefix") {
  VarSupply vars;
  const Type s = vars.fresh("σ");
  auto sols = unify(Type::out(s, Type::unit()), ty("e |x e |x 1"));
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].apply(s) == Type::prod(Type::e(), Type::e()));
}

TEST_CASE("unify: variable tail gives one solution per prefix") {
  VarSupply vars;
  const Type s = vars.fresh("σ"), t = vars.fresh("τ");
  auto sols = unify(Type::out(s, t), ty("e |x e |x 1"));
  CHECK(sols.size() == 3);
  for (const Substitution& u : sols) CHECK(u.apply(Type::out(s, t)) == ty("e |x e |x 1"));
}

TEST_CASE("unify: occurs check") {
  VarSupply vars;
  const Type a = vars.fresh("α");
  CHECK(unify(a, Type::arrow(a, Type::e())).empty());
}

TEST_CASE("unify: rigid variables act as constants") {
  VarSupply vars;
  const Type a = vars.fresh("α");
  CHECK(unify(a, Type::e(), {}, {a.var_id()}).empty());
  CHECK(unify(a, a, {}, {a.var_id()}).size() == 1);
}

TEST_CASE("instance_of") {
  CHECK(instance_of(ty("e -> 1"), ty("a -> b")));
  CHECK_FALSE(instance_of(ty("a -> b"), ty("e -> 1")));
  CHECK(instance_of(ty("e |x 1"), ty("s |x 1")));
  CHECK(instance_of(ty("1"), ty("s |x 1")));
}

TEST_CASE("canonical renaming") {
  VarSupply vars(50);
  const Type t = parse_type("b -> a -> b", vars);
  CHECK(show(canonical_rename(t)) == "b1 -> a1 -> b1");
  CHECK(alpha_equivalent(t, parse_type("x -> y -> x", vars)));
  CHECK_FALSE(alpha_equivalent(t, parse_type("x -> y -> y", vars)));
}

TEST_CASE("ground replaces variables with unit") {
  CHECK(show(ground(ty("s |x e -> t"))) == "e -> 1");
}

TEST_CASE("shift types") {
  VarSupply vars;
  auto shown = [&](ShiftBase b, int i, int j) {
    return show(canonical_rename(shift_type(b, i, j, vars)));
  };
  CHECK(shown(ShiftBase::GIn, 0, 0) == "(α1 -> β1) -> σ1 |> α1 -> σ1 |> β1");
  CHECK(shown(ShiftBase::GOut, 0, 0) == "(α1 -> β1) -> σ1 |x α1 -> σ1 |x β1");
  CHECK(shown(ShiftBase::Z, 0, 0) == "(α1 -> σ1 |x β1 -> γ1) -> σ1 |> α1 -> σ1 |x β1 -> γ1");
  CHECK(shown(ShiftBase::S, 0, 0) == "(σ1 |x β1 -> α1 -> γ1) -> σ1 |x β1 -> σ1 |> α1 -> γ1");
  CHECK(shown(ShiftBase::GIn, 0, 1) == "(α1 -> τ1 -> β1) -> σ1 |> α1 -> τ1 -> σ1 |> β1");
}

TEST_CASE("shift indices beyond the bound") {
  VarSupply vars;
  CHECK_THROWS_AS(shift_type(ShiftBase::GIn, 3, 0, vars, 2), BoundExceeded);
  CHECK_NOTHROW(shift_type(ShiftBase::GIn, 2, 2, vars, 2));
}

TEST_CASE("referent components") {
  CHECK(referent_components(Type::unit()).empty());
  CHECK(referent_components(ty("e * e * e")).size() == 3);
  const OutSpine sp = out_spine(ty("e |x e |> 1"));
  CHECK(sp.heads.size() == 1);
  CHECK(show(sp.tail) == "e |> 1");
}
