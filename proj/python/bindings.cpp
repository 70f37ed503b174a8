#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "donkeykit/cli.hpp"
#include "donkeykit/compare.hpp"
#include "donkeykit/deriv.hpp"
#include "donkeykit/error.hpp"
#include "donkeykit/oracle.hpp"
#include "donkeykit/term.hpp"

namespace py = pybind11;
using namespace donkeykit;

namespace {

Lexicon lexicon_for(const std::optional<std::string>& path, bool static_a) {
  return resolve_lexicon(path.value_or(""), static_a ? LexiconVariant::Static : LexiconVariant::Dynamic);
}

Type parse(const std::string& text) {
  VarSupply vars;
  return parse_type(text, vars);
}

std::vector<std::string> typecheck(const std::string& term, const std::optional<std::string>& lexicon,
                                   bool static_a) {
  std::vector<std::string> out;
  const Term t = expand(parse_term(term), standard_abbreviations());
  for (const Type& ty : typecheck_term(t, lexicon_for(lexicon, static_a))) out.push_back(to_string(ty));
  return out;
}

std::string derive(const std::string& sentence, const std::optional<std::string>& target,
                   int max_index, int max_shifts, bool allow_s, bool static_a,
                   const std::optional<std::string>& lexicon) {
  const Lexicon lex = lexicon_for(lexicon, static_a);
  SearchBounds b;
  b.max_index = max_index;
  b.max_shifts = max_shifts;
  b.allow_s = allow_s;
  std::optional<Type> t;
  if (target) t = parse(*target);
  std::vector<Derivation> ds;
  {
    py::gil_scoped_release release;
    ds = search_derivations(parse_syntax_tree(sentence, lex), lex, b, t);
  }
  nlohmann::json j = nlohmann::json::array();
  for (const Derivation& d : ds) j.push_back(derivation_to_json(d));
  return j.dump();
}

std::string evaluate(const std::string& term, const std::string& type, const std::string& model,
                     bool static_a, const std::optional<std::string>& lexicon) {
  const Lexicon lex = lexicon_for(lexicon, static_a);
  const Model m = model_from_json(nlohmann::json::parse(model));
  const CompiledTerm c =
      CompiledTerm::compile(expand(parse_term(term), standard_abbreviations()), parse(type), lex);
  const ValueSet v = c.evaluate(m);
  const Projection p = project_referents(v, c.type());
  nlohmann::json j = table_to_json(tabulate(p.values, p.type, m), m);
  j["type"] = to_string(c.type());
  if (!(p.type == c.type())) {
    const nlohmann::json seen = observe(v, c.type(), m);
    j["outputs"] = seen.contains("outputs") ? seen["outputs"] : seen;
  }
  return j.dump();
}

std::string check(const std::string& id, std::size_t max_size, std::uint64_t random,
                  std::uint64_t seed) {
  const SentenceSpec& spec = find_spec(id);
  const CompiledTerm c = compile_spec(spec, parse_lexicon(default_lexicon_text()));
  ModelStream s = random > 0 ? ModelStream::random(spec.signature, max_size, seed, random)
                             : ModelStream::exhaustive(spec.signature, max_size);
  nlohmann::json j = report_to_json(compare(spec, c, s));
  j["spec"] = spec.id;
  return j.dump();
}

py::tuple cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_donkeykit, m) {
  m.doc() = "Variable-free dynamic semantics: typing, derivation search and evaluation";

  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<UnknownLexeme>(m, "UnknownLexeme", base.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

  m.def("normalize_type", [](const std::string& t) { return to_string(canonical_rename(normalize(parse(t)))); },
        py::arg("type"));
  m.def("typecheck", &typecheck, py::arg("term"), py::arg("lexicon") = std::nullopt,
        py::arg("static") = false);
  m.def("derive_json", &derive, py::arg("sentence"), py::arg("target") = std::nullopt,
        py::arg("max_index") = 2, py::arg("max_shifts") = 3, py::arg("allow_s") = false,
        py::arg("static") = false, py::arg("lexicon") = std::nullopt);
  m.def("evaluate_json", &evaluate, py::arg("term"), py::arg("type"), py::arg("model"),
        py::arg("static") = false, py::arg("lexicon") = std::nullopt);
  m.def("check_json", &check, py::arg("spec"), py::arg("max_size"), py::arg("random") = 0,
        py::arg("seed") = 7);
  m.def("spec_ids", [] {
    std::vector<std::string> ids;
    for (const SentenceSpec& s : sentence_specs()) ids.push_back(s.id);
    return ids;
  });
  m.def("default_lexicon", [] { return std::string(default_lexicon_text()); });
  m.def("run_cli", &cli, py::arg("args"));
}
