#include "donkeykit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "donkeykit/compare.hpp"
#include "donkeykit/deriv.hpp"
#include "donkeykit/error.hpp"
#include "donkeykit/eval.hpp"
#include "donkeykit/oracle.hpp"

namespace donkeykit {

std::string_view default_lexicon_text() {
  return R"(# content words
pred farmer
pred donkey
pred man
pred woman
pred girl
pred witp
pred whistle
pred walk
pred talk
rel own
rel beat
rel love
)";
}

Lexicon resolve_lexicon(const std::string& path, LexiconVariant variant) {
  if (!path.empty()) return load_lexicon(path, variant);
  if (const char* env = std::getenv("DONKEYKIT_LEXICON"); env && *env)
    return load_lexicon(env, variant);
  return parse_lexicon(default_lexicon_text(), variant);
}

namespace {

struct Options {
  std::string lexicon;
  std::string model;
  int max_index = 2;
  int max_shifts = 3;
  bool allow_s = false;
  bool no_composition = false;
  bool static_a = false;
  std::string target;
  int index = 0;
  bool json = false;
  std::uint64_t seed = 7;
  std::size_t max_size = 0;
  bool exhaustive = false;
  std::uint64_t random = 0;
  std::uint64_t budget = SearchBounds{}.node_budget;
  std::string input;
  std::vector<std::string> words;
};

SearchBounds bounds_of(const Options& o) {
  SearchBounds b;
  b.max_index = o.max_index;
  b.max_shifts = o.max_shifts;
  b.allow_s = o.allow_s;
  b.restrict_composition = o.no_composition;
  b.node_budget = o.budget;
  return b;
}

std::optional<Type> target_of(const Options& o) {
  if (o.target.empty()) return std::nullopt;
  VarSupply vars;
  return parse_type(o.target, vars);
}

bool is_sentence(const std::string& text) { return text.find('[') != std::string::npos ||
                                                   text.find('(') == std::string::npos; }

std::string join_types(const std::vector<Type>& ts) {
  std::string s = "[";
  for (std::size_t k = 0; k < ts.size(); ++k) s += (k ? ", " : "") + to_string(ts[k]);
  return s + "]";
}

int cmd_typecheck(const Options& o, const Lexicon& lex, std::ostream& out) {
  const Term t = expand(parse_term(o.input), standard_abbreviations());
  TypingOptions opts;
  opts.max_index = std::max(o.max_index, kDefaultMaxShiftIndex);
  const std::vector<Type> types = typecheck_term(t, lex, opts);
  if (o.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const Type& ty : types) j.push_back(to_string(ty));
    out << j.dump() << "\n";
  } else {
    for (const Type& ty : types) out << to_string(ty) << "\n";
  }
  return types.empty() ? kExitEmpty : kExitOk;
}

int cmd_derive(const Options& o, const Lexicon& lex, std::ostream& out) {
  const SyntaxTree tree = parse_syntax_tree(o.input, lex);
  const std::vector<Derivation> ds = search_derivations(tree, lex, bounds_of(o), target_of(o));
  if (o.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const Derivation& d : ds) j.push_back(derivation_to_json(d));
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < ds.size(); ++k) {
      const ReadingReport r = classify_reading(ds[k]);
      out << "[" << k + 1 << "] " << to_string(ds[k].term) << " : " << to_string(ds[k].type)
          << "\n    in=" << join_types(r.residual_in) << " out=" << join_types(r.residual_out)
          << " z=" << r.z_count << " s=" << r.s_count << "\n";
    }
  }
  return ds.empty() ? kExitEmpty : kExitOk;
}

nlohmann::json result_json(const CompiledTerm& c, const Model& m) {
  const ValueSet v = c.evaluate(m);
  const Projection p = project_referents(v, c.type());
  nlohmann::json j = table_to_json(tabulate(p.values, p.type, m), m);
  if (!(p.type == c.type())) {
    j["type"] = to_string(c.type());
    const nlohmann::json seen = observe(v, c.type(), m);
    j["outputs"] = seen.contains("outputs") ? seen["outputs"] : seen;
  }
  return j;
}

void print_result(const nlohmann::json& j, std::ostream& out) {
  out << "type: " << j["type"].get<std::string>() << "\n";
  if (j.contains("truth")) out << "truth: " << (j["truth"].get<bool>() ? "true" : "false") << "\n";
  if (j.contains("table")) {
    for (const auto& row : j["table"]) {
      std::string args;
      for (const auto& a : row["args"]) args += (args.empty() ? "" : ",") + a.get<std::string>();
      out << args << " -> " << (row["truth"].get<bool>() ? "true" : "false") << "\n";
    }
  }
  if (j.contains("outputs")) out << "outputs: " << j["outputs"].dump() << "\n";
}

class Ambiguous : public Error {
 public:
  using Error::Error;
};

int cmd_eval(const Options& o, const Lexicon& lex, std::ostream& out) {
  if (o.model.empty()) throw ModelError("eval needs --model");
  const Model m = load_model(o.model);
  std::vector<std::pair<Term, Type>> candidates;
  if (is_sentence(o.input)) {
    const SyntaxTree tree = parse_syntax_tree(o.input, lex);
    for (const Derivation& d : search_derivations(tree, lex, bounds_of(o), target_of(o)))
      candidates.emplace_back(d.term, d.type);
  } else {
    const Term t = expand(parse_term(o.input), standard_abbreviations());
    if (auto target = target_of(o)) {
      candidates.emplace_back(t, *target);
    } else {
      for (const Type& ty : typecheck_term(t, lex)) candidates.emplace_back(t, ty);
    }
  }
  if (candidates.empty()) return kExitEmpty;
  std::size_t pick = 0;
  if (o.index > 0) {
    if (static_cast<std::size_t>(o.index) > candidates.size())
      throw Ambiguous("--index " + std::to_string(o.index) + " out of range; there are " +
                      std::to_string(candidates.size()) + " candidates");
    pick = static_cast<std::size_t>(o.index) - 1;
  } else if (candidates.size() > 1) {
    std::string msg = "ambiguous: " + std::to_string(candidates.size()) +
                      " candidates, choose one with --index:";
    for (std::size_t k = 0; k < candidates.size(); ++k)
      msg += "\n  [" + std::to_string(k + 1) + "] " + to_string(candidates[k].first) + " : " +
             to_string(candidates[k].second);
    throw Ambiguous(msg);
  }
  const CompiledTerm c = CompiledTerm::compile(candidates[pick].first, candidates[pick].second, lex);
  const nlohmann::json j = result_json(c, m);
  if (o.json)
    out << j.dump() << "\n";
  else
    print_result(j, out);
  return kExitOk;
}

void print_report(const CompareReport& r, std::ostream& out) {
  out << "checked " << r.checked << " models, " << r.mismatch_count << " mismatches"
      << (r.vacuous() ? " (vacuous)" : "") << "\n";
  for (const Mismatch& m : r.mismatches)
    out << "  model " << m.model.dump() << "\n    engine " << m.engine.dump() << "\n    oracle "
        << m.oracle.dump() << "\n";
}

void merge(CompareReport& into, const CompareReport& r) {
  into.checked += r.checked;
  into.mismatch_count += r.mismatch_count;
  into.mismatches.insert(into.mismatches.end(), r.mismatches.begin(), r.mismatches.end());
}

int cmd_check(const Options& o, const Lexicon& lex, std::ostream& out) {
  const SentenceSpec& spec = find_spec(o.input);
  const CompiledTerm c = compile_spec(spec, lex);
  const bool relational = !spec.signature.relations.empty();
  CompareReport report;
  if (!o.exhaustive && o.random == 0) {
    // The designated suite: exhaustive up to 3 individuals (2 with
    // relations), plus 10000 random models of size 3 with relations.
    ModelStream ex = ModelStream::exhaustive(spec.signature, relational ? 2 : 3);
    merge(report, compare(spec, c, ex));
    if (relational) {
      ModelStream rnd = ModelStream::random(spec.signature, 3, o.seed, 10000);
      merge(report, compare(spec, c, rnd));
    }
  } else {
    const std::size_t size = o.max_size ? o.max_size : 3;
    if (o.exhaustive) {
      ModelStream ex = ModelStream::exhaustive(spec.signature, size);
      merge(report, compare(spec, c, ex));
    }
    if (o.random > 0) {
      ModelStream rnd = ModelStream::random(spec.signature, size, o.seed, o.random);
      merge(report, compare(spec, c, rnd));
    }
  }
  if (o.json) {
    nlohmann::json j = report_to_json(report);
    j["spec"] = spec.id;
    out << j.dump(2) << "\n";
  } else {
    out << spec.id << ": ";
    print_report(report, out);
  }
  return report.passed() ? kExitOk : kExitEmpty;
}

std::string model_line(const Model& m) {
  std::string s;
  for (const auto& [name, ext] : m.predicates()) {
    s += name + "={";
    bool first = true;
    for (std::size_t x = 0; x < ext.size(); ++x)
      if (ext[x]) {
        s += (first ? "" : ",") + m.name(x);
        first = false;
      }
    s += "} ";
  }
  for (const auto& [name, ext] : m.relations()) {
    s += name + "={";
    bool first = true;
    for (std::size_t k = 0; k < ext.size(); ++k)
      if (ext[k]) {
        s += std::string(first ? "" : ",") + "(" + m.name(k / m.size()) + "," + m.name(k % m.size()) + ")";
        first = false;
      }
    s += "} ";
  }
  std::string universe;
  for (const std::string& u : m.universe()) universe += (universe.empty() ? "" : ",") + u;
  return "U={" + universe + "} " + s.substr(0, s.empty() ? 0 : s.size() - 1);
}

int cmd_models(const Options& o, const Lexicon& lex, std::ostream& out) {
  Signature sig;
  for (const std::string& w : o.words) {
    const std::optional<std::string> name = lex.resolve(w);
    const LexEntry& e = lex.at(name ? *name : w);
    if (e.kind == DenotationKind::ModelPredicate)
      sig.predicates.push_back(e.name);
    else if (e.kind == DenotationKind::ModelRelation)
      sig.relations.push_back(e.name);
    else
      throw LexiconError("'" + w + "' is not a predicate or relation");
  }
  const std::size_t size = o.max_size ? o.max_size : 1;
  ModelStream s = o.random > 0 ? ModelStream::random(sig, size, o.seed, o.random)
                               : ModelStream::exhaustive(sig, size);
  Model m;
  while (s.next(m)) out << (o.json ? model_to_json(m).dump() : model_line(m)) << "\n";
  if (!o.json) out << s.total() << " models\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variable-free dynamic semantics: typing, derivation search, evaluation"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--lexicon", o.lexicon, "Lexicon file (default: $DONKEYKIT_LEXICON or built-in)");
    c->add_flag("--static", o.static_a, "Use the static indefinite, (e -> 1) -> e");
    c->add_flag("--json", o.json, "JSON output");
  };
  auto search = [&](CLI::App* c) {
    c->add_option("--max-index", o.max_index, "Largest i and j on a shift")
        ->check(CLI::NonNegativeNumber);
    c->add_option("--max-shifts", o.max_shifts, "Most shifts on one word")
        ->check(CLI::NonNegativeNumber);
    c->add_flag("--allow-s", o.allow_s, "Also search the s binder");
    c->add_flag("--no-composition", o.no_composition, "Only shifts with i = 0");
    c->add_option("--target", o.target, "Keep derivations whose type unifies with this type");
    c->add_option("--budget", o.budget, "Type combinations before giving up");
  };
  auto sampling = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "Seed for random models");
    c->add_option("--max-size", o.max_size, "Largest universe (exhaustive) or universe size (random)");
    c->add_flag("--exhaustive", o.exhaustive, "Enumerate all models");
    c->add_option("--random", o.random, "Number of random models");
  };

  CLI::App* typecheck = app.add_subcommand("typecheck", "Print the principal types of a term");
  typecheck->add_option("term", o.input, "Term, e.g. \"(gIn_0_0 whistle he)\"")->required();
  common(typecheck);
  typecheck->add_option("--max-index", o.max_index, "Largest i and j on a shift");

  CLI::App* derive = app.add_subcommand("derive", "Search shift decorations of a bracketed sentence");
  derive->add_option("sentence", o.input, "Sentence, e.g. \"[[a man] [witp]]\"")->required();
  common(derive);
  search(derive);

  CLI::App* eval = app.add_subcommand("eval", "Evaluate a term or sentence on a model");
  eval->add_option("input", o.input, "Term or bracketed sentence")->required();
  eval->add_option("--model", o.model, "Model JSON file")->required();
  eval->add_option("--index", o.index, "Which candidate to evaluate (1-based)");
  common(eval);
  search(eval);

  CLI::App* check = app.add_subcommand("check", "Compare a sentence's reading with its oracle");
  check->add_option("spec", o.input, "Spec id, e.g. donkey-universal")->required();
  common(check);
  sampling(check);

  CLI::App* models = app.add_subcommand("models", "List the models over some predicates and relations");
  models->add_option("names", o.words, "Predicate and relation names")->required();
  common(models);
  sampling(models);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInput;
  }

  try {
    const Lexicon lex = resolve_lexicon(
        o.lexicon, o.static_a ? LexiconVariant::Static : LexiconVariant::Dynamic);
    if (typecheck->parsed()) return cmd_typecheck(o, lex, out);
    if (derive->parsed()) return cmd_derive(o, lex, out);
    if (eval->parsed()) return cmd_eval(o, lex, out);
    if (check->parsed()) return cmd_check(o, lex, out);
    if (models->parsed()) return cmd_models(o, lex, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace donkeykit
