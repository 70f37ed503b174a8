#include "donkeykit/compare.hpp"

#include <algorithm>

#include "donkeykit/error.hpp"

namespace donkeykit {

namespace {

std::size_t input_arity(Type t) {
  std::size_t k = 0;
  while (t.is(TypeKind::In)) {
    ++k;
    t = t.rhs();
  }
  return k;
}

}  // namespace

OracleResult engine_result(const CompiledTerm& term, const Model& model) {
  Projection p = project_referents(term.evaluate(model), term.type());
  Table t = tabulate(p.values, p.type, model);
  OracleResult out;
  out.arity = t.arity;
  for (const TableRow& r : t.rows) out.values.push_back(r.truth);
  return out;
}

CompareReport compare(const SentenceSpec& spec, const CompiledTerm& term, ModelStream& models,
                      std::size_t keep) {
  const std::size_t arity = input_arity(project_referents({}, term.type()).type);
  if (arity != spec.arity)
    throw ShapeMismatch("spec '" + spec.id + "' has " + std::to_string(spec.arity) +
                        " arguments but the term's reading at " + to_string(term.type()) +
                        " has " + std::to_string(arity));
  CompareReport report;
  Model m;
  while (models.next(m)) {
    ++report.checked;
    OracleResult engine = engine_result(term, m);
    OracleResult oracle = fo_truth(spec, m);
    if (engine == oracle) continue;
    ++report.mismatch_count;
    report.mismatches.push_back(
        {model_to_json(m), oracle_to_json(engine, m), oracle_to_json(oracle, m)});
    std::sort(report.mismatches.begin(), report.mismatches.end(),
              [](const Mismatch& a, const Mismatch& b) { return a.model.dump() < b.model.dump(); });
    if (report.mismatches.size() > keep) report.mismatches.pop_back();
  }
  return report;
}

CompiledTerm compile_spec(const SentenceSpec& spec, const Lexicon& lexicon) {
  VarSupply vars;
  const Type target = parse_type(spec.target, vars);
  const Term term = expand(parse_term(spec.term), standard_abbreviations());
  return CompiledTerm::compile(term, target, lexicon);
}

nlohmann::json report_to_json(const CompareReport& r) {
  nlohmann::json mismatches = nlohmann::json::array();
  for (const Mismatch& m : r.mismatches)
    mismatches.push_back({{"model", m.model}, {"engine", m.engine}, {"oracle", m.oracle}});
  return {{"checked", r.checked},
          {"mismatch_count", r.mismatch_count},
          {"mismatches", mismatches},
          {"vacuous", r.vacuous()}};
}

}  // namespace donkeykit
