#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "donkeykit/lexicon.hpp"
#include "donkeykit/model.hpp"
#include "donkeykit/term.hpp"
#include "donkeykit/types.hpp"

namespace donkeykit {

// Binary constituency tree over resolved lexeme names.
class SyntaxTree {
 public:
  static SyntaxTree leaf(std::string word, std::string lexeme);
  static SyntaxTree node(SyntaxTree left, SyntaxTree right);

  bool is_leaf() const;
  const std::string& word() const;    // surface form, leaves only
  const std::string& lexeme() const;  // lexicon entry, leaves only
  const SyntaxTree& left() const;
  const SyntaxTree& right() const;

  std::size_t leaf_count() const;
  std::vector<std::string> lexemes() const;  // surface order

 private:
  struct Node;
  explicit SyntaxTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const SyntaxTree& t);

// `[[a man] [witp]]`: brackets group, whitespace separates words, `[x]` is
// x itself, more than two children is an error. Sentences separated by `.`
// are folded left to right: S1 . S2 becomes [[seq S2] S1]. Words resolve
// through the lexicon; unknown words throw UnknownLexeme.
SyntaxTree parse_syntax_tree(std::string_view text, const Lexicon& lexicon);

struct SearchBounds {
  int max_index = 2;
  int max_shifts = 3;
  bool allow_s = false;
  bool restrict_composition = false;  // cap the i index at 0

  // Type combinations attempted before the search gives up.
  std::uint64_t node_budget = 50'000'000;
  // Decorated terms materialized for the root before giving up.
  std::uint64_t term_budget = 200'000;

  // When false, every decorated term is returned without probe dedup.
  bool deduplicate = true;
};

// The shift constants available under the bounds, in a fixed order.
std::vector<Term> shift_alphabet(const SearchBounds& bounds);

struct Derivation {
  SyntaxTree tree;
  Term term;
  Type type;
  // Shift sequences on each leaf in surface order, innermost first.
  std::vector<std::vector<Term>> leaf_shifts;
  // For each internal node in pre-order, whether the left child is the functor.
  std::vector<bool> left_functor;
};

std::size_t shift_count(const Derivation& d);

struct SearchStats {
  std::uint64_t combinations = 0;
  std::uint64_t classes = 0;
  std::uint64_t terms = 0;
  std::size_t before_dedup = 0;
};

// All decorated terms over the tree within the bounds, optionally only
// those whose type unifies with `target`, deduplicated and ordered by term
// size, then printed form. A shift's referent type is never 1: such a
// shift is the identity or threads nothing. With a target, each
// derivation's type is its principal type specialized to the target.
// Throws BudgetExceeded when a budget runs out and UnknownLexeme for
// unresolved leaves.
std::vector<Derivation> search_derivations(const SyntaxTree& tree, const Lexicon& lexicon,
                                           const SearchBounds& bounds,
                                           const std::optional<Type>& target = std::nullopt,
                                           SearchStats* stats = nullptr);

struct ReadingReport {
  std::vector<Type> residual_in;
  std::vector<Type> residual_out;
  std::size_t z_count = 0;
  std::size_t s_count = 0;
};

ReadingReport classify_reading(const Derivation& d);

// Three models over a three-element universe with seeded pseudorandom
// extensions for every declared predicate and relation.
std::vector<Model> probe_models(const Lexicon& lexicon, std::uint64_t seed = 0x5eed);

// Collapses derivations with equal canonical type and equal observable
// denotation on the probe models, keeping the one with fewest shifts
// (then smallest, then first in printed order). The result is sorted by
// term size, then printed form.
std::vector<Derivation> dedup_derivations(const std::vector<Derivation>& ds,
                                          const Lexicon& lexicon);

nlohmann::json derivation_to_json(const Derivation& d);
nlohmann::json reading_to_json(const ReadingReport& r);

}  // namespace donkeykit
