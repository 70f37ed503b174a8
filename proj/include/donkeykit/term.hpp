#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "donkeykit/lexicon.hpp"
#include "donkeykit/types.hpp"

namespace donkeykit {

// Closed combinator term: lexical constants, indexed shifts and
// application. There are no variables in the object language.
class Term {
 public:
  enum class Kind : std::uint8_t { Lex, Shift, App };

  static Term lex(std::string name);
  static Term shift(ShiftBase base, int i, int j);
  static Term app(Term functor, Term argument);
  // Left-nested application: apply(f, {a, b}) is f(a)(b).
  static Term apply(Term functor, const std::vector<Term>& args);

  Kind kind() const;
  const std::string& name() const;  // Lex
  ShiftBase base() const;            // Shift
  int i() const;
  int j() const;
  const Term& functor() const;       // App
  const Term& argument() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// S-expression syntax with prefix application: `(f a b)` is f(a)(b).
// Shifts are spelled gIn_i_j, gOut_i_j, z_i_j, s_i_j; a bare gIn, gOut, z
// or s means indices 0 and 0. Printing always writes both indices.
Term parse_term(std::string_view text);
std::string to_string(const Term& t);

std::size_t term_size(const Term& t);
std::size_t shift_count(const Term& t);
// Occurrences of the binding shifts z and s.
std::size_t binder_count(const Term& t, ShiftBase base);

using Abbreviations = std::map<std::string, Term, std::less<>>;

// Replaces lexemes named in `abbrev` by their definitions, recursively.
Term expand(const Term& t, const Abbreviations& abbrev);

// amw = a man walks in the park, hw = he whistles, and the two halves x
// and y of the donkey sentence.
const Abbreviations& standard_abbreviations();

// A typing of a term: every node's type before substitution, plus the
// substitution of the whole derivation. Nodes keep the fresh variables
// their denotation depends on (the threaded referent type of a shift, the
// schema variables of a lexical entry).
struct TypedNode {
  Term term = Term::lex("");
  Type type = Type::unit();
  const LexEntry* entry = nullptr;
  Type referent = Type::unit();
  std::map<std::string, Type> schema;
  std::shared_ptr<const TypedNode> functor;
  std::shared_ptr<const TypedNode> argument;
};

struct Typing {
  std::shared_ptr<const TypedNode> root;
  Substitution subst;

  Type type() const { return subst.apply(root->type); }
};

struct TypingOptions {
  int max_index = kDefaultMaxShiftIndex;
};

// All typings of t. Throws UnknownLexeme and BoundExceeded.
std::vector<Typing> infer(const Term& t, const Lexicon& lexicon, VarSupply& vars,
                          const TypingOptions& opts = {});

// Typing of App(functor, argument) from typings of the two parts.
std::vector<Typing> infer_app(const Term& app, const Typing& functor,
                              const Typing& argument, VarSupply& vars);

// Principal canonical types of t, sorted by printed form: types that are
// instances of another typing are left out. Empty iff t is ill-typed.
std::vector<Type> typecheck_term(const Term& t, const Lexicon& lexicon,
                                 const TypingOptions& opts = {});

}  // namespace donkeykit
