#include "donkeykit/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "donkeykit/error.hpp"

namespace donkeykit {

std::string_view denotation_kind_name(DenotationKind k) {
  switch (k) {
    case DenotationKind::ModelPredicate:
      return "predicate";
    case DenotationKind::ModelRelation:
      return "relation";
    case DenotationKind::PronounIdentity:
      return "pronoun";
    case DenotationKind::IndefiniteA:
      return "indefinite";
    case DenotationKind::StaticIndefiniteA:
      return "static-indefinite";
    case DenotationKind::UniversalEvery:
      return "every";
    case DenotationKind::RelativeWho:
      return "who";
    case DenotationKind::NegativeNo:
      return "no";
    case DenotationKind::Concat:
      return "seq";
  }
  return "?";
}

namespace {

Type builtin_type(std::string_view text) {
  VarSupply vars;
  return normalize(parse_type(text, vars));
}

std::string hint_of(const std::string& name) {
  std::string h;
  for (char c : name) {
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '\'') continue;
    h += c;
  }
  return h.empty() ? std::string("v") : h;
}

Type rename(const Type& t, const std::map<VarId, Type>& to) {
  if (t.is(TypeKind::Var)) return to.at(t.var_id());
  if (!t.is_binary()) return t;
  Type l = rename(t.lhs(), to), r = rename(t.rhs(), to);
  switch (t.kind()) {
    case TypeKind::Arrow:
      return Type::arrow(l, r);
    case TypeKind::In:
      return Type::in(l, r);
    case TypeKind::Out:
      return Type::out(l, r);
    default:
      return Type::prod(l, r);
  }
}

void collect_schema(const Type& t, std::map<VarId, std::string>& out) {
  if (t.is(TypeKind::Var)) {
    out.emplace(t.var_id(), t.var_name());
  } else if (t.is_binary()) {
    collect_schema(t.lhs(), out);
    collect_schema(t.rhs(), out);
  }
}

}  // namespace

Instance instantiate(const LexEntry& entry, VarSupply& vars) {
  std::map<VarId, std::string> schema_vars;
  collect_schema(entry.polytype, schema_vars);
  Instance inst{entry.polytype, {}};
  if (schema_vars.empty()) return inst;
  std::map<VarId, Type> to;
  for (const auto& [id, name] : schema_vars) {
    Type fresh = vars.fresh(hint_of(name));
    to.emplace(id, fresh);
    inst.schema.emplace(name, fresh);
  }
  inst.type = rename(entry.polytype, to);
  return inst;
}

Lexicon Lexicon::core(LexiconVariant variant) {
  Lexicon lex;
  lex.variant_ = variant;
  const Type quantifier =
      builtin_type("(e |x e -> σ |x 1) -> (σ |x e -> σ' |x 1) -> 1");
  if (variant == LexiconVariant::Dynamic) {
    lex.add({"a", builtin_type("(e |x e -> σ |x 1) -> σ |x e"),
             DenotationKind::IndefiniteA, true});
  } else {
    lex.add({"a", builtin_type("(e -> 1) -> e"), DenotationKind::StaticIndefiniteA, true});
  }
  lex.add({"every", quantifier, DenotationKind::UniversalEvery, true});
  lex.add({"no", quantifier, DenotationKind::NegativeNo, true});
  lex.add({"who",
           builtin_type("(σ2 |x e -> σ3 |x 1) -> (σ1 |x e -> σ2 |x 1) -> σ1 |x e -> σ3 |x 1"),
           DenotationKind::RelativeWho, true});
  const Type pronoun = builtin_type("e |> e");
  for (const char* name : {"he", "she", "it"})
    lex.add({name, pronoun, DenotationKind::PronounIdentity, true});
  lex.add({"seq", builtin_type("1 -> 1 -> 1"), DenotationKind::Concat, true});
  return lex;
}

void Lexicon::add(LexEntry e) {
  auto it = entries_.find(e.name);
  if (it != entries_.end()) {
    if (it->second.builtin)
      throw LexiconError("cannot override built-in '" + e.name + "'");
    throw LexiconError("duplicate declaration of '" + e.name + "'");
  }
  std::string name = e.name;
  entries_.emplace(std::move(name), std::move(e));
}

void Lexicon::add_predicate(const std::string& name) {
  add({name, Type::arrow(Type::e(), Type::unit()), DenotationKind::ModelPredicate, false});
}

void Lexicon::add_relation(const std::string& name) {
  add({name, Type::arrow(Type::e(), Type::arrow(Type::e(), Type::unit())),
       DenotationKind::ModelRelation, false});
}

const LexEntry* Lexicon::find(std::string_view name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

const LexEntry& Lexicon::at(std::string_view name) const {
  const LexEntry* e = find(name);
  if (!e) throw UnknownLexeme(std::string(name));
  return *e;
}

std::optional<std::string> Lexicon::resolve(std::string_view word) const {
  std::string w(word);
  if (!find(w)) {
    std::transform(w.begin(), w.end(), w.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  }
  if (find(w)) return w;
  if (w == "her" && find("she")) return std::string("she");
  if (w == "him" && find("he")) return std::string("he");
  if (w.size() > 1 && w.back() == 's' && find(std::string_view(w).substr(0, w.size() - 1)))
    return w.substr(0, w.size() - 1);
  return std::nullopt;
}

std::size_t Lexicon::builtin_count() const {
  std::size_t n = 0;
  for (const auto& [name, e] : entries_) n += e.builtin ? 1 : 0;
  return n;
}

Lexicon Lexicon::with_variant(LexiconVariant v) const {
  Lexicon out = core(v);
  for (const auto& [name, e] : entries_) {
    if (e.builtin) continue;
    out.add(e);
  }
  return out;
}

Lexicon parse_lexicon(std::string_view text, LexiconVariant variant) {
  Lexicon lex = Lexicon::core(variant);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string keyword, name, extra;
    if (!(words >> keyword)) continue;
    if (!(words >> name) || (words >> extra) || (keyword != "pred" && keyword != "rel"))
      throw ParseError("lexicon: expected 'pred <name>' or 'rel <name>'", line_start);
    for (char c : name) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-'))
        throw ParseError("lexicon: invalid name '" + name + "'", line_start);
    }
    if (keyword == "pred")
      lex.add_predicate(name);
    else
      lex.add_relation(name);
  }
  return lex;
}

Lexicon load_lexicon(const std::string& path, LexiconVariant variant) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open lexicon file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_lexicon(buf.str(), variant);
}

// ---------------------------------------------------------------------------
// Denotations

namespace {

using Ctx = std::shared_ptr<EvalContext>;

const ValueSet& truth_set(bool b) {
  static const ValueSet yes{Value::star()};
  static const ValueSet no;
  return b ? yes : no;
}

Value individual(std::size_t i) { return Value::atom(static_cast<std::uint32_t>(i)); }

// Referent tuples s such that <s,*> is in p(<u,u>), for each individual u.
template <typename Visit>
void restrictor_outputs(const Value& p, const Type& sigma, std::size_t n, Visit visit) {
  for (std::size_t u = 0; u < n; ++u) {
    const Value uu = Value::pair(individual(u), individual(u));
    for (const Value& r : p(uu)) {
      if (!visit(u, split_referents(r, sigma).referents)) return;
    }
  }
}

}  // namespace

ValueSet denote(const LexEntry& entry, const SchemaLookup& schema, const Ctx& ctx) {
  const Model& model = ctx->model();
  const std::size_t n = model.size();
  switch (entry.kind) {
    case DenotationKind::ModelPredicate: {
      const std::vector<bool>* ext = &model.predicate(entry.name);
      return ValueSet::single(ctx->make_closure(
          [ext, ctx](const Value& x) { return truth_set((*ext)[x.individual()]); }));
    }
    case DenotationKind::ModelRelation: {
      // First argument is the object: Own(y)(x) holds iff (x, y) is in own.
      const std::vector<bool>* ext = &model.relation(entry.name);
      return ValueSet::single(ctx->make_closure([ext, n, ctx](const Value& obj) {
        const std::size_t y = obj.individual();
        return ValueSet::single(ctx->make_closure([ext, n, y, ctx](const Value& subj) {
          return truth_set((*ext)[subj.individual() * n + y]);
        }));
      }));
    }
    case DenotationKind::PronounIdentity:
      return ValueSet::single(ctx->make_closure([](const Value& v) { return ValueSet::single(v); }));
    case DenotationKind::StaticIndefiniteA:
      return ValueSet::single(ctx->make_closure([n](const Value& p) {
        ValueSet out;
        for (std::size_t u = 0; u < n; ++u)
          if (!p(individual(u)).empty()) out.insert(individual(u));
        return out;
      }));
    case DenotationKind::IndefiniteA: {
      const Type sigma = schema("σ");
      return ValueSet::single(ctx->make_closure([sigma, n](const Value& p) {
        ValueSet out;
        restrictor_outputs(p, sigma, n, [&](std::size_t u, const Value& s) {
          out.insert(join_referents(sigma, s, individual(u)));
          return true;
        });
        return out;
      }));
    }
    case DenotationKind::UniversalEvery:
    case DenotationKind::NegativeNo: {
      const Type sigma = schema("σ");
      const bool universal = entry.kind == DenotationKind::UniversalEvery;
      return ValueSet::single(ctx->make_closure([sigma, n, ctx, universal](const Value& p) {
        return ValueSet::single(ctx->make_closure([p, sigma, n, universal](const Value& q) {
          // every: no restrictor output fails the scope.
          // no: no restrictor output satisfies the scope.
          bool ok = true;
          restrictor_outputs(p, sigma, n, [&](std::size_t u, const Value& s) {
            const bool scope = !q(join_referents(sigma, s, individual(u))).empty();
            if (scope != universal) ok = false;
            return ok;
          });
          return truth_set(ok);
        }));
      }));
    }
    case DenotationKind::RelativeWho: {
      const Type sigma1 = schema("σ1");
      const Type sigma2 = schema("σ2");
      return ValueSet::single(ctx->make_closure([=](const Value& p) {
        return ValueSet::single(ctx->make_closure([=](const Value& q) {
          return ValueSet::single(ctx->make_closure([=](const Value& sv) {
            const Value v = split_referents(sv, sigma1).rest;
            ValueSet out;
            for (const Value& r : q(sv)) {
              const Value s2 = split_referents(r, sigma2).referents;
              out.insert_all(p(join_referents(sigma2, s2, v)));
            }
            return out;
          }));
        }));
      }));
    }
    case DenotationKind::Concat:
      return ValueSet::single(ctx->make_closure([ctx](const Value&) {
        return ValueSet::single(
            ctx->make_closure([](const Value&) { return ValueSet::single(Value::star()); }));
      }));
  }
  throw Error("unhandled denotation kind");
}

}  // namespace donkeykit
