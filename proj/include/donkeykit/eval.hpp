#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "donkeykit/lexicon.hpp"
#include "donkeykit/model.hpp"
#include "donkeykit/term.hpp"
#include "donkeykit/types.hpp"
#include "donkeykit/value.hpp"

namespace donkeykit {

struct EvalStats {
  std::uint64_t closures_built = 0;
};

// A term fixed at one ground typing, ready to be evaluated on many models.
// Type variables the typing leaves open are instantiated to 1. Typings in
// which every shift threads a non-empty referent are preferred.
class CompiledTerm {
 public:
  // Throws WrongType when no typing of t unifies with `type`.
  static CompiledTerm compile(const Term& t, const Type& type, const Lexicon& lexicon);
  static CompiledTerm compile(const Term& t, const Typing& typing, const Type& type,
                              const Lexicon& lexicon);

  const Term& term() const { return term_; }
  const Type& type() const { return type_; }

  // Ground type of every application node in pre-order, with the printed
  // subterm; used to check intermediate types of a derivation.
  std::vector<std::pair<std::string, Type>> subterm_types() const;

  ValueSet evaluate(const Model& model, EvalStats* stats = nullptr) const;

  struct Node;
  struct Builder;

 private:
  Term term_ = Term::lex("");
  Type type_ = Type::unit();
  std::shared_ptr<const Node> root_;
};

ValueSet eval_term(const Term& t, const Type& type, const Model& model, const Lexicon& lexicon);

// Denotation of a shift at a ground referent type.
Value shift_value(ShiftBase base, int i, int j, const Type& referent,
                  const std::shared_ptr<EvalContext>& ctx);

// Truth at type 1: nonempty is true. Throws WrongType for any other type.
bool truth(const ValueSet& v, const Type& type);

// Drops the leading |x components of every value: the set of what is left,
// at the remaining type. Discourse referents are closed existentially.
struct Projection {
  ValueSet values;
  Type type;
};
Projection project_referents(const ValueSet& v, const Type& type);

struct TableRow {
  std::vector<std::size_t> args;
  bool truth;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

// Truth table of a value of type e |> ... |> e |> 1 (k inputs, k >= 0):
// one row per k-tuple of individuals in lexicographic order.
struct Table {
  Type type = Type::unit();
  std::size_t arity = 0;
  std::vector<TableRow> rows;  // a single row with no args when arity is 0

  bool constant(bool value) const;
  friend bool operator==(const Table&, const Table&) = default;
};

// Throws UnsupportedType unless type is an e |> chain over 1.
Table tabulate(const ValueSet& v, const Type& type, const Model& model);

// {"type":"1","truth":b} or {"type":..., "table":[{"args":[...],"truth":b}]}.
nlohmann::json table_to_json(const Table& t, const Model& model);

// Observable content of a value set at any type built from e, 1, |x and *,
// and |> or -> over e: outputs are grouped by referent, inputs and
// arguments of type e tabulated. Throws UnsupportedType otherwise.
nlohmann::json observe(const ValueSet& v, const Type& type, const Model& model);

}  // namespace donkeykit
