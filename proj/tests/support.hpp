#pragma once

#include <string>
#include <vector>

#include "donkeykit/cli.hpp"
#include "donkeykit/eval.hpp"
#include "donkeykit/lexicon.hpp"
#include "donkeykit/term.hpp"
#include "donkeykit/types.hpp"

namespace testing {

inline const donkeykit::Lexicon& fragment() {
  static const donkeykit::Lexicon lex = donkeykit::parse_lexicon(donkeykit::default_lexicon_text());
  return lex;
}

inline donkeykit::Type ty(const std::string& text) {
  static donkeykit::VarSupply vars(100000);
  return donkeykit::parse_type(text, vars);
}

inline std::string show(const donkeykit::Type& t) { return donkeykit::to_string(t); }

inline donkeykit::Term term(const std::string& text) {
  return donkeykit::expand(donkeykit::parse_term(text), donkeykit::standard_abbreviations());
}

inline std::vector<std::string> types_of(const std::string& text,
                                         const donkeykit::Lexicon& lex = fragment()) {
  std::vector<std::string> out;
  for (const donkeykit::Type& t : donkeykit::typecheck_term(term(text), lex)) out.push_back(show(t));
  return out;
}

}  // namespace testing
