#include "donkeykit/eval.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "donkeykit/error.hpp"

namespace donkeykit {

struct CompiledTerm::Node {
  Term::Kind kind;
  Term term = Term::lex("");
  Type type = Type::unit();
  const LexEntry* entry = nullptr;
  std::map<std::string, Type> schema;
  ShiftBase base = ShiftBase::GIn;
  int i = 0;
  int j = 0;
  Type referent = Type::unit();
  std::shared_ptr<const Node> functor;
  std::shared_ptr<const Node> argument;
};

namespace {

using Ctx = std::shared_ptr<EvalContext>;

std::shared_ptr<const CompiledTerm::Node> compile_node(const TypedNode& n,
                                                      const Substitution& s) {
  auto out = std::make_shared<CompiledTerm::Node>();
  out->kind = n.term.kind();
  out->term = n.term;
  out->type = ground(s.apply(n.type));
  switch (n.term.kind()) {
    case Term::Kind::Lex:
      out->entry = n.entry;
      for (const auto& [name, v] : n.schema) out->schema.emplace(name, ground(s.apply(v)));
      break;
    case Term::Kind::Shift:
      out->base = n.term.base();
      out->i = n.term.i();
      out->j = n.term.j();
      out->referent = ground(s.apply(n.referent));
      break;
    case Term::Kind::App:
      out->functor = compile_node(*n.functor, s);
      out->argument = compile_node(*n.argument, s);
      break;
  }
  return out;
}

ValueSet eval_node(const CompiledTerm::Node& n, const Ctx& ctx) {
  switch (n.kind) {
    case Term::Kind::Lex:
      return denote(
          *n.entry,
          [&n](const std::string& name) {
            auto it = n.schema.find(name);
            if (it == n.schema.end())
              throw TypeMismatch("entry '" + n.entry->name + "' has no schema variable " + name);
            return it->second;
          },
          ctx);
    case Term::Kind::Shift:
      return ValueSet::single(shift_value(n.base, n.i, n.j, n.referent, ctx));
    case Term::Kind::App: {
      ValueSet out = apply_val(eval_node(*n.functor, ctx), eval_node(*n.argument, ctx));
      if (n.type.is(TypeKind::Arrow) || n.type.is(TypeKind::In))
        return ValueSet::single(union_relation(out));
      return out;
    }
  }
  return {};
}

void collect_types(const CompiledTerm::Node& n,
                   std::vector<std::pair<std::string, Type>>& out) {
  out.emplace_back(to_string(n.term), n.type);
  if (n.kind == Term::Kind::App) {
    collect_types(*n.functor, out);
    collect_types(*n.argument, out);
  }
}

}  // namespace

namespace {

void shift_referents(const TypedNode& n, std::vector<Type>& out) {
  if (n.term.kind() == Term::Kind::Shift) out.push_back(n.referent);
  if (n.term.kind() == Term::Kind::App) {
    shift_referents(*n.functor, out);
    shift_referents(*n.argument, out);
  }
}

// A solution under which some shift threads the empty referent.
bool vacuous(const Typing& typing, const Substitution& s) {
  std::vector<Type> refs;
  shift_referents(*typing.root, refs);
  return std::any_of(refs.begin(), refs.end(),
                     [&](const Type& r) { return ground(s.apply(r)).is(TypeKind::Unit); });
}

CompiledTerm build(const Term& t, const Typing& typing, const Substitution& s);

}  // namespace

struct CompiledTerm::Builder {
  static CompiledTerm make(const Term& t, std::shared_ptr<const Node> root) {
    CompiledTerm c;
    c.term_ = t;
    c.type_ = root->type;
    c.root_ = std::move(root);
    return c;
  }
};

namespace {

CompiledTerm build(const Term& t, const Typing& typing, const Substitution& s) {
  return CompiledTerm::Builder::make(t, compile_node(*typing.root, s));
}

}  // namespace

CompiledTerm CompiledTerm::compile(const Term& t, const Typing& typing, const Type& type,
                                   const Lexicon& lexicon) {
  (void)lexicon;
  auto sols = unify(typing.type(), normalize(type), typing.subst);
  if (sols.empty())
    throw WrongType("term " + to_string(t) + " has no typing at " + to_string(type));
  for (const Substitution& s : sols)
    if (!vacuous(typing, s)) return build(t, typing, s);
  return build(t, typing, sols.front());
}

CompiledTerm CompiledTerm::compile(const Term& t, const Type& type, const Lexicon& lexicon) {
  VarSupply vars(1u << 20);
  const Type target = normalize(type);
  std::optional<CompiledTerm> fallback;
  for (const Typing& typing : infer(t, lexicon, vars)) {
    for (const Substitution& s : unify(typing.type(), target, typing.subst)) {
      if (!vacuous(typing, s)) return build(t, typing, s);
      if (!fallback) fallback = build(t, typing, s);
    }
  }
  if (fallback) return *fallback;
  throw WrongType("term " + to_string(t) + " has no typing at " + to_string(type));
}

std::vector<std::pair<std::string, Type>> CompiledTerm::subterm_types() const {
  std::vector<std::pair<std::string, Type>> out;
  collect_types(*root_, out);
  return out;
}

ValueSet CompiledTerm::evaluate(const Model& model, EvalStats* stats) const {
  auto ctx = EvalContext::create(model);
  ValueSet out = eval_node(*root_, ctx);
  if (stats) stats->closures_built += ctx->closures_built();
  return out;
}

ValueSet eval_term(const Term& t, const Type& type, const Model& model, const Lexicon& lexicon) {
  return CompiledTerm::compile(t, type, lexicon).evaluate(model);
}

// ---------------------------------------------------------------------------
// Shifts

namespace {

Value base_shift(ShiftBase base, const Type& sigma, const Ctx& ctx) {
  switch (base) {
    case ShiftBase::GIn:
      // λf λv λs f(v(s))
      return ctx->make_closure([ctx](const Value& f) {
        return ValueSet::single(ctx->make_closure([ctx, f](const Value& v) {
          return ValueSet::single(ctx->make_closure(
              [f, v](const Value& s) { return apply_val(ValueSet::single(f), v(s)); }));
        }));
      });
    case ShiftBase::GOut:
      // λf λ<s,v> <s, f(v)>
      return ctx->make_closure([ctx, sigma](const Value& f) {
        return ValueSet::single(ctx->make_closure([f, sigma](const Value& p) {
          SplitValue sv = split_referents(p, sigma);
          ValueSet out;
          for (const Value& r : f(sv.rest)) out.insert(join_referents(sigma, sv.referents, r));
          return out;
        }));
      });
    case ShiftBase::Z:
      // λf λv λ<s,u> f(v(s))(<s,u>)
      return ctx->make_closure([ctx, sigma](const Value& f) {
        return ValueSet::single(ctx->make_closure([ctx, sigma, f](const Value& v) {
          return ValueSet::single(ctx->make_closure([sigma, f, v](const Value& p) {
            const Value s = split_referents(p, sigma).referents;
            return apply_val(apply_val(ValueSet::single(f), v(s)), ValueSet::single(p));
          }));
        }));
      });
    case ShiftBase::S:
      // λf λ<s,u> λv f(<s,u>)(v(s))
      return ctx->make_closure([ctx, sigma](const Value& f) {
        return ValueSet::single(ctx->make_closure([ctx, sigma, f](const Value& p) {
          return ValueSet::single(ctx->make_closure([sigma, f, p](const Value& v) {
            const Value s = split_referents(p, sigma).referents;
            return apply_val(f(p), v(s));
          }));
        }));
      });
  }
  throw Error("unhandled shift base");
}

// G = λg λf λv g(f(v))
Value compose(const Value& g, const Ctx& ctx) {
  return ctx->make_closure([ctx, g](const Value& f) {
    return ValueSet::single(ctx->make_closure(
        [g, f](const Value& v) { return apply_val(ValueSet::single(g), f(v)); }));
  });
}

// I = λg λf λv' λx g(λv f(v)(x))(v')
Value insert(const Value& g, const Ctx& ctx) {
  return ctx->make_closure([ctx, g](const Value& f) {
    return ValueSet::single(ctx->make_closure([ctx, g, f](const Value& v1) {
      return ValueSet::single(ctx->make_closure([ctx, g, f, v1](const Value& x) {
        const Value h = ctx->make_closure(
            [f, x](const Value& v) { return apply_val(f(v), ValueSet::single(x)); });
        return apply_val(g(h), ValueSet::single(v1));
      }));
    }));
  });
}

}  // namespace

Value shift_value(ShiftBase base, int i, int j, const Type& referent, const Ctx& ctx) {
  Value v = base_shift(base, referent, ctx);
  for (int k = 0; k < j; ++k) v = insert(v, ctx);
  for (int k = 0; k < i; ++k) v = compose(v, ctx);
  return v;
}

// ---------------------------------------------------------------------------
// Observation

bool truth(const ValueSet& v, const Type& type) {
  if (!normalize(type).is(TypeKind::Unit))
    throw WrongType("truth value requested at type " + to_string(type));
  return !v.empty();
}

Projection project_referents(const ValueSet& v, const Type& type) {
  Projection p{v, normalize(type)};
  while (p.type.is(TypeKind::Out)) {
    ValueSet rest;
    for (const Value& x : p.values) rest.insert(x.second());
    p.values = std::move(rest);
    p.type = p.type.rhs();
  }
  return p;
}

bool Table::constant(bool value) const {
  for (const TableRow& r : rows)
    if (r.truth != value) return false;
  return true;
}

Table tabulate(const ValueSet& v, const Type& type, const Model& model) {
  Table t;
  t.type = normalize(type);
  Type cur = t.type;
  while (cur.is(TypeKind::In)) {
    if (!cur.lhs().is(TypeKind::E))
      throw UnsupportedType("cannot tabulate inputs of type " + to_string(cur.lhs()));
    ++t.arity;
    cur = cur.rhs();
  }
  if (!cur.is(TypeKind::Unit))
    throw UnsupportedType("cannot tabulate a value of type " + to_string(type));
  std::vector<std::size_t> args(t.arity, 0);
  const std::size_t n = model.size();
  if (t.arity > 0 && n == 0) return t;
  for (;;) {
    ValueSet s = v;
    for (std::size_t a : args) s = apply_val(s, ValueSet::single(Value::atom(static_cast<std::uint32_t>(a))));
    t.rows.push_back({args, !s.empty()});
    std::size_t k = t.arity;
    while (k > 0 && ++args[k - 1] == n) args[--k] = 0;
    if (k == 0) break;
  }
  return t;
}

nlohmann::json table_to_json(const Table& t, const Model& model) {
  nlohmann::json j;
  j["type"] = to_string(t.type);
  if (t.arity == 0) {
    j["truth"] = !t.rows.empty() && t.rows.front().truth;
    return j;
  }
  j["table"] = nlohmann::json::array();
  for (const TableRow& r : t.rows) {
    nlohmann::json args = nlohmann::json::array();
    for (std::size_t a : r.args) args.push_back(model.name(a));
    j["table"].push_back({{"args", args}, {"truth", r.truth}});
  }
  return j;
}

nlohmann::json observe(const ValueSet& v, const Type& type, const Model& model) {
  const Type t = normalize(type);
  switch (t.kind()) {
    case TypeKind::Unit:
      return !v.empty();
    case TypeKind::E: {
      nlohmann::json arr = nlohmann::json::array();
      for (const Value& x : v) arr.push_back(model.name(x.individual()));
      return arr;
    }
    case TypeKind::Prod: {
      nlohmann::json arr = nlohmann::json::array();
      for (const Value& x : v) arr.push_back(to_string(x, model));
      return arr;
    }
    case TypeKind::Out: {
      std::map<Value, ValueSet> groups;
      for (const Value& x : v) groups[x.first()].insert(x.second());
      for (const auto& [ref, rest] : groups) {
        if (ref.kind() == Value::Kind::Fn)
          throw UnsupportedType("cannot observe functional referents of type " + to_string(t));
      }
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& [ref, rest] : groups)
        arr.push_back({{"referent", to_string(ref, model)}, {"value", observe(rest, t.rhs(), model)}});
      return nlohmann::json{{"outputs", arr}};
    }
    case TypeKind::In:
    case TypeKind::Arrow: {
      if (!t.lhs().is(TypeKind::E))
        throw UnsupportedType("cannot observe a function from " + to_string(t.lhs()));
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t u = 0; u < model.size(); ++u) {
        ValueSet r = apply_val(v, ValueSet::single(Value::atom(static_cast<std::uint32_t>(u))));
        arr.push_back({{"arg", model.name(u)}, {"value", observe(r, t.rhs(), model)}});
      }
      return nlohmann::json{{t.is(TypeKind::In) ? "input" : "apply", arr}};
    }
    default:
      throw UnsupportedType("cannot observe a value of type " + to_string(t));
  }
}

}  // namespace donkeykit
