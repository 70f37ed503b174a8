#include <doctest.h>

#include "donkeykit/compare.hpp"
#include "donkeykit/error.hpp"
#include "support.hpp"

using namespace donkeykit;
using testing::fragment;

namespace {

const Signature kDonkey{{"farmer", "donkey"}, {"own", "beat"}};
const Signature kMan{{"man", "witp", "whistle"}, {}};

Model farm(bool beats) {
  Model m({"a", "b"});
  m.set_predicate("farmer", {0});
  m.set_predicate("donkey", {1});
  m.set_relation("own", {{0, 1}});
  m.set_relation("beat", beats ? std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}
                               : std::vector<std::pair<std::size_t, std::size_t>>{});
  return m;
}

std::vector<Model> drain(ModelStream s) {
  std::vector<Model> out;
  Model m;
  while (s.next(m)) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("donkey oracle") {
  const SentenceSpec& spec = find_spec("donkey-universal");
  CHECK(fo_truth(spec, farm(true)).values == std::vector<bool>{true});
  CHECK(fo_truth(spec, farm(false)).values == std::vector<bool>{false});
  Model m = farm(false);
  m.set_predicate("farmer", {});
  CHECK(fo_truth(spec, m).values == std::vector<bool>{true});
}

TEST_CASE("oracle requires the signature") {
  CHECK_THROWS_AS(fo_truth(find_spec("donkey-universal"), Model({"a"})), MissingPredicate);
}

TEST_CASE("oracle tables") {
  Model m({"a", "b"});
  m.set_predicate("man", {0});
  m.set_predicate("witp", {0});
  m.set_predicate("whistle", {1});
  const OracleResult r = fo_truth(find_spec("a-man-whistles-free"), m);
  CHECK(r.arity == 1);
  CHECK(r.values == std::vector<bool>{false, true});
  CHECK(oracle_to_json(r, m).dump() ==
        R"({"table":[{"args":["a"],"truth":false},{"args":["b"],"truth":true}]})");
  CHECK(fo_truth(find_spec("a-man-whistles-bound"), m).values == std::vector<bool>{false});
}

TEST_CASE("spec registry") {
  CHECK(sentence_specs().size() == 5);
  CHECK_THROWS_AS(find_spec("no-such-spec"), Error);
  for (const SentenceSpec& s : sentence_specs()) CHECK_NOTHROW(compile_spec(s, fragment()));
}

TEST_CASE("model counts") {
  CHECK(count_models(Signature{{"man"}, {}}, 1) == 2);
  CHECK(count_models(kDonkey, 2) == 4112);
  CHECK(count_models(kMan, 3) == 584);
  CHECK(count_models(kDonkey, 6) == UINT64_MAX);
  CHECK(drain(ModelStream::exhaustive(Signature{{"man"}, {}}, 1)).size() == 2);
  CHECK(drain(ModelStream::exhaustive(kDonkey, 2)).size() == 4112);
  CHECK(drain(ModelStream::exhaustive(kMan, 3)).size() == 584);
}

TEST_CASE("exhaustive enumeration is complete and distinct") {
  const auto models = drain(ModelStream::exhaustive(kMan, 2));
  for (std::size_t a = 0; a < models.size(); ++a)
    for (std::size_t b = a + 1; b < models.size(); ++b) REQUIRE_FALSE(models[a] == models[b]);
  CHECK(models.front().universe() == std::vector<std::string>{"u1"});
  CHECK(models.back().universe() == std::vector<std::string>{"u1", "u2"});
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(ModelStream::exhaustive(kDonkey, 0), ModelError);
  CHECK_THROWS_AS(ModelStream::exhaustive(kDonkey, 4), SizeOverflow);
  CHECK_THROWS_AS(ModelStream::random(kDonkey, 0, 7, 1), ModelError);
  CHECK_THROWS_AS(ModelStream::random(kDonkey, 6, 7, 1), SizeOverflow);
}

TEST_CASE("random models are reproducible") {
  const auto a = drain(ModelStream::random(kDonkey, 3, 7, 3));
  CHECK(a.size() == 3);
  CHECK(a == drain(ModelStream::random(kDonkey, 3, 7, 3)));
  CHECK(a != drain(ModelStream::random(kDonkey, 3, 8, 3)));
}

TEST_CASE("model_from_bits") {
  const Model m = model_from_bits(Signature{{"man"}, {"love"}}, 2, 0b1000'01);
  CHECK(m.holds("man", 0));
  CHECK_FALSE(m.holds("man", 1));
  CHECK(m.holds("love", 1, 1));
  CHECK_FALSE(m.holds("love", 0, 0));
}

TEST_CASE("compare") {
  const SentenceSpec& spec = find_spec("a-man-whistles-bound");
  const CompiledTerm c = compile_spec(spec, fragment());
  ModelStream all = ModelStream::exhaustive(spec.signature, 3);
  const CompareReport r = compare(spec, c, all);
  CHECK(r.checked == 584);
  CHECK(r.passed());
  CHECK_FALSE(r.vacuous());
}

TEST_CASE("empty stream is a vacuous pass") {
  const SentenceSpec& spec = find_spec("donkey-universal");
  ModelStream none = ModelStream::of({});
  const CompareReport r = compare(spec, compile_spec(spec, fragment()), none);
  CHECK(r.passed());
  CHECK(r.vacuous());
  CHECK(report_to_json(r)["vacuous"] == true);
}

TEST_CASE("shape mismatch") {
  const SentenceSpec& spec = find_spec("a-man-whistles-free");
  const CompiledTerm bound = compile_spec(find_spec("a-man-whistles-bound"), fragment());
  ModelStream s = ModelStream::exhaustive(spec.signature, 1);
  CHECK_THROWS_AS(compare(spec, bound, s), ShapeMismatch);
}

TEST_CASE("corrupted spec is caught") {
  const SentenceSpec& spec = find_spec("donkey-universal");
  const SentenceSpec swapped = with_swapped_relations(spec, "beat", "own");
  ModelStream s = ModelStream::exhaustive(spec.signature, 2);
  const CompareReport r = compare(swapped, compile_spec(spec, fragment()), s, 5);
  CHECK(r.checked == 4112);
  CHECK(r.mismatch_count > 0);
  CHECK(r.mismatches.size() == 5);
  for (std::size_t k = 1; k < r.mismatches.size(); ++k)
    CHECK(r.mismatches[k - 1].model.dump() < r.mismatches[k].model.dump());
}
