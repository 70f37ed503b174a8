#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "donkeykit/model.hpp"

namespace donkeykit {

struct Signature {
  std::vector<std::string> predicates;
  std::vector<std::string> relations;
};

// Hand-written first-order condition for one reading of a test sentence.
// Truth readings have arity 0; readings with residual inputs of type e
// have one argument per input.
struct SentenceSpec {
  std::string id;
  std::string reading;
  std::string sentence;  // bracketed syntax
  std::string term;      // the worked-out term, abbreviations allowed
  std::string target;    // type the term is evaluated at
  Signature signature;
  std::size_t arity = 0;
  std::function<bool(const Model&, const std::vector<std::size_t>&)> condition;
};

// Value of a condition on a model: one entry per argument tuple in
// lexicographic order (a single entry when arity is 0).
struct OracleResult {
  std::size_t arity = 0;
  std::vector<bool> values;

  friend bool operator==(const OracleResult&, const OracleResult&) = default;
};

OracleResult fo_truth(const SentenceSpec& spec, const Model& model);
nlohmann::json oracle_to_json(const OracleResult& r, const Model& model);

const std::vector<SentenceSpec>& sentence_specs();
const SentenceSpec& find_spec(const std::string& id);  // throws Error

// The same spec evaluated on models whose relations a and b are exchanged.
SentenceSpec with_swapped_relations(const SentenceSpec& spec, const std::string& a,
                                    const std::string& b);

constexpr std::uint64_t kDefaultModelCap = 10'000'000;

// Number of models over universes of size 1..max_size; saturates at
// UINT64_MAX.
std::uint64_t count_models(const Signature& sig, std::size_t max_size);

// Pulls models one at a time. Universes are named u1..uk.
class ModelStream {
 public:
  // Every extension choice for every size 1..max_size, smallest sizes
  // first. Throws SizeOverflow when the count exceeds `cap`.
  static ModelStream exhaustive(const Signature& sig, std::size_t max_size,
                                std::uint64_t cap = kDefaultModelCap);
  // `count` models of size `size` with pseudorandom extensions.
  static ModelStream random(const Signature& sig, std::size_t size, std::uint64_t seed,
                            std::uint64_t count);
  static ModelStream of(std::vector<Model> models);

  bool next(Model& out);
  std::uint64_t total() const { return total_; }

 private:
  enum class Mode { Exhaustive, Random, Fixed };
  Mode mode_ = Mode::Fixed;
  Signature sig_;
  std::size_t max_size_ = 0;
  std::size_t size_ = 0;
  std::uint64_t index_ = 0;
  std::uint64_t total_ = 0;
  std::uint64_t produced_ = 0;
  std::mt19937_64 rng_;
  std::vector<Model> fixed_;
};

// Model over u1..un whose extensions are read from the low bits of `bits`:
// n bits per predicate, then n*n per relation (index a*n+b), in signature
// order.
Model model_from_bits(const Signature& sig, std::size_t n, std::uint64_t bits);

}  // namespace donkeykit
