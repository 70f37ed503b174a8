#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "donkeykit/eval.hpp"
#include "donkeykit/lexicon.hpp"
#include "donkeykit/oracle.hpp"

namespace donkeykit {

struct Mismatch {
  nlohmann::json model;
  nlohmann::json engine;
  nlohmann::json oracle;
};

struct CompareReport {
  std::uint64_t checked = 0;
  std::uint64_t mismatch_count = 0;
  std::vector<Mismatch> mismatches;  // at most `keep`, sorted by model
  bool vacuous() const { return checked == 0; }
  bool passed() const { return mismatch_count == 0; }
};

// The engine's reading as an oracle result: output components are closed
// off, then the remaining e |> ... |> 1 value is tabulated.
OracleResult engine_result(const CompiledTerm& term, const Model& model);

// Evaluates the spec and the compiled term on every model of the stream.
// Throws ShapeMismatch when the term's reading does not have the spec's
// arity.
CompareReport compare(const SentenceSpec& spec, const CompiledTerm& term, ModelStream& models,
                      std::size_t keep = 20);

// The spec's own term, expanded and compiled at its target type.
CompiledTerm compile_spec(const SentenceSpec& spec, const Lexicon& lexicon);

nlohmann::json report_to_json(const CompareReport& r);

}  // namespace donkeykit
