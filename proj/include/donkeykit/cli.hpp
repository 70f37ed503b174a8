#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "donkeykit/lexicon.hpp"

namespace donkeykit {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitEmpty = 1,  // no types, no derivations, or oracle mismatches
  kExitInput = 2,  // parse, lexicon, model or usage errors
  kExitBudget = 3,
};

// Declarations of the shipped content words.
std::string_view default_lexicon_text();

// Lexicon from --lexicon, else $DONKEYKIT_LEXICON, else the shipped one.
Lexicon resolve_lexicon(const std::string& path, LexiconVariant variant);

// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace donkeykit
