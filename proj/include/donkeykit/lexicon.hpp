#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "donkeykit/model.hpp"
#include "donkeykit/types.hpp"
#include "donkeykit/value.hpp"

namespace donkeykit {

enum class DenotationKind : std::uint8_t {
  ModelPredicate,
  ModelRelation,
  PronounIdentity,
  IndefiniteA,
  StaticIndefiniteA,
  UniversalEvery,
  RelativeWho,
  NegativeNo,
  Concat,
};

std::string_view denotation_kind_name(DenotationKind k);

struct LexEntry {
  std::string name;
  // Canonical; its variables are the schema variables of the entry.
  Type polytype;
  DenotationKind kind;
  bool builtin = false;
};

// A lexical type instantiated with fresh variables. `schema` maps each
// schema variable name (e.g. "σ1") to the fresh variable standing for it.
struct Instance {
  Type type;
  std::map<std::string, Type> schema;
};

Instance instantiate(const LexEntry& entry, VarSupply& vars);

// Selects the denotation of the indefinite. Dynamic is the output-producing
// form used throughout; Static is the plain (e -> 1) -> e form, sufficient
// for sentences with no cross-sentential anaphora.
enum class LexiconVariant : std::uint8_t { Dynamic, Static };

class Lexicon {
 public:
  // The eight built-ins: a, every, who, no, he, she, it, seq.
  static Lexicon core(LexiconVariant variant = LexiconVariant::Dynamic);

  // Throws LexiconError on duplicates and on attempts to redefine a built-in.
  void add_predicate(const std::string& name);
  void add_relation(const std::string& name);

  const LexEntry* find(std::string_view name) const;
  const LexEntry& at(std::string_view name) const;  // throws UnknownLexeme

  // Maps a surface word onto an entry name: the word itself, or the word
  // without a final "s" (third person singular verbs), case-insensitively;
  // "her" and "him" map onto "she" and "he".
  std::optional<std::string> resolve(std::string_view word) const;

  std::size_t size() const { return entries_.size(); }
  std::size_t builtin_count() const;
  const std::map<std::string, LexEntry, std::less<>>& entries() const { return entries_; }
  LexiconVariant variant() const { return variant_; }

  // Same declarations over the other built-in variant.
  Lexicon with_variant(LexiconVariant v) const;

 private:
  void add(LexEntry e);
  std::map<std::string, LexEntry, std::less<>> entries_;
  LexiconVariant variant_ = LexiconVariant::Dynamic;
};

// Line-oriented format: `pred <name>` and `rel <name>` declarations, `#`
// starts a comment, blank lines are ignored.
Lexicon parse_lexicon(std::string_view text,
                      LexiconVariant variant = LexiconVariant::Dynamic);
Lexicon load_lexicon(const std::string& path,
                     LexiconVariant variant = LexiconVariant::Dynamic);

// Ground type of a schema variable of the instance being evaluated.
using SchemaLookup = std::function<Type(const std::string&)>;

// Denotation of a lexical entry at a ground instance of its type.
// Quantificational entries enumerate the universe and the outputs their
// arguments actually return, never a function space.
ValueSet denote(const LexEntry& entry, const SchemaLookup& schema,
                const std::shared_ptr<EvalContext>& ctx);

}  // namespace donkeykit
