#include "donkeykit/term.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "donkeykit/error.hpp"

namespace donkeykit {

struct Term::Node {
  Kind kind;
  std::string name;
  ShiftBase base = ShiftBase::GIn;
  int i = 0;
  int j = 0;
  Term functor{nullptr};
  Term argument{nullptr};
};

Term Term::lex(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Lex;
  n->name = std::move(name);
  return Term{std::move(n)};
}

Term Term::shift(ShiftBase base, int i, int j) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Shift;
  n->base = base;
  n->i = i;
  n->j = j;
  return Term{std::move(n)};
}

Term Term::app(Term functor, Term argument) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->functor = std::move(functor);
  n->argument = std::move(argument);
  return Term{std::move(n)};
}

Term Term::apply(Term functor, const std::vector<Term>& args) {
  for (const Term& a : args) functor = app(std::move(functor), a);
  return functor;
}

Term::Kind Term::kind() const { return node_->kind; }
const std::string& Term::name() const { return node_->name; }
ShiftBase Term::base() const { return node_->base; }
int Term::i() const { return node_->i; }
int Term::j() const { return node_->j; }
const Term& Term::functor() const { return node_->functor; }
const Term& Term::argument() const { return node_->argument; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Lex:
      return a.name() == b.name();
    case Term::Kind::Shift:
      return a.base() == b.base() && a.i() == b.i() && a.j() == b.j();
    case Term::Kind::App:
      return a.functor() == b.functor() && a.argument() == b.argument();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Syntax

namespace {

bool parse_shift_name(std::string_view word, ShiftBase& base, int& i, int& j) {
  static constexpr std::pair<std::string_view, ShiftBase> bases[] = {
      {"gIn", ShiftBase::GIn}, {"gOut", ShiftBase::GOut}, {"z", ShiftBase::Z}, {"s", ShiftBase::S}};
  for (auto [name, b] : bases) {
    if (word.substr(0, name.size()) != name) continue;
    std::string_view rest = word.substr(name.size());
    if (rest.empty()) {
      base = b;
      i = j = 0;
      return true;
    }
    if (rest[0] != '_') continue;
    rest.remove_prefix(1);
    auto sep = rest.find('_');
    if (sep == std::string_view::npos) continue;
    std::string_view is = rest.substr(0, sep), js = rest.substr(sep + 1);
    if (is.empty() || js.empty()) continue;
    auto r1 = std::from_chars(is.data(), is.data() + is.size(), i);
    auto r2 = std::from_chars(js.data(), js.data() + js.size(), j);
    if (r1.ec != std::errc{} || r1.ptr != is.data() + is.size()) continue;
    if (r2.ec != std::errc{} || r2.ptr != js.data() + js.size()) continue;
    base = b;
    return true;
  }
  return false;
}

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}

  Term parse() {
    Term t = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected input after term");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("term syntax: " + msg, pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Term expr() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] == '(') {
      ++pos_;
      Term head = expr();
      std::vector<Term> args;
      for (;;) {
        skip();
        if (pos_ >= s_.size()) fail("missing ')'");
        if (s_[pos_] == ')') break;
        args.push_back(expr());
      }
      ++pos_;
      return Term::apply(std::move(head), args);
    }
    if (s_[pos_] == ')') fail("unexpected ')'");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
           s_[pos_] != '(' && s_[pos_] != ')')
      ++pos_;
    std::string_view word = s_.substr(start, pos_ - start);
    ShiftBase base;
    int i = 0, j = 0;
    if (parse_shift_name(word, base, i, j)) return Term::shift(base, i, j);
    return Term::lex(std::string(word));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void print(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Lex:
      out += t.name();
      return;
    case Term::Kind::Shift:
      out += shift_base_name(t.base());
      out += '_' + std::to_string(t.i()) + '_' + std::to_string(t.j());
      return;
    case Term::Kind::App: {
      std::vector<const Term*> args;
      const Term* head = &t;
      while (head->kind() == Term::Kind::App) {
        args.push_back(&head->argument());
        head = &head->functor();
      }
      out += '(';
      print(*head, out);
      for (auto it = args.rbegin(); it != args.rend(); ++it) {
        out += ' ';
        print(**it, out);
      }
      out += ')';
      return;
    }
  }
}

}  // namespace

Term parse_term(std::string_view text) { return TermParser(text).parse(); }

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

std::size_t term_size(const Term& t) {
  if (t.kind() != Term::Kind::App) return 1;
  return 1 + term_size(t.functor()) + term_size(t.argument());
}

std::size_t shift_count(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Shift:
      return 1;
    case Term::Kind::App:
      return shift_count(t.functor()) + shift_count(t.argument());
    default:
      return 0;
  }
}

std::size_t binder_count(const Term& t, ShiftBase base) {
  switch (t.kind()) {
    case Term::Kind::Shift:
      return t.base() == base ? 1 : 0;
    case Term::Kind::App:
      return binder_count(t.functor(), base) + binder_count(t.argument(), base);
    default:
      return 0;
  }
}

namespace {

Term expand_rec(const Term& t, const Abbreviations& abbrev, std::set<std::string>& active) {
  switch (t.kind()) {
    case Term::Kind::Lex: {
      auto it = abbrev.find(t.name());
      if (it == abbrev.end()) return t;
      if (!active.insert(t.name()).second)
        throw Error("abbreviation '" + t.name() + "' is recursive");
      Term out = expand_rec(it->second, abbrev, active);
      active.erase(t.name());
      return out;
    }
    case Term::Kind::App:
      return Term::app(expand_rec(t.functor(), abbrev, active),
                       expand_rec(t.argument(), abbrev, active));
    default:
      return t;
  }
}

}  // namespace

Term expand(const Term& t, const Abbreviations& abbrev) {
  std::set<std::string> active;
  return expand_rec(t, abbrev, active);
}

const Abbreviations& standard_abbreviations() {
  static const Abbreviations abbrev = {
      {"amw", parse_term("(gOut_0_0 witp (a (gOut_0_0 man)))")},
      {"hw", parse_term("(gIn_0_0 whistle he)")},
      {"x", parse_term("(who (gOut_1_0 (gOut_0_1 own) (a (gOut_0_0 donkey))) (gOut_0_0 farmer))")},
      {"y", parse_term("(gOut_1_0 (z_0_0 (gOut_1_0 beat)) it)")},
  };
  return abbrev;
}

// ---------------------------------------------------------------------------
// Type inference

std::vector<Typing> infer_app(const Term& app, const Typing& functor, const Typing& argument,
                              VarSupply& vars) {
  Substitution base = functor.subst;
  base.merge(argument.subst);
  Type result = vars.fresh("β");
  auto node = std::make_shared<TypedNode>();
  node->term = app;
  node->type = result;
  node->functor = functor.root;
  node->argument = argument.root;
  std::vector<Typing> out;
  for (Substitution& s :
       unify(functor.root->type, Type::arrow(argument.root->type, result), base)) {
    out.push_back({node, std::move(s)});
  }
  return out;
}

std::vector<Typing> infer(const Term& t, const Lexicon& lexicon, VarSupply& vars,
                          const TypingOptions& opts) {
  switch (t.kind()) {
    case Term::Kind::Lex: {
      const LexEntry& entry = lexicon.at(t.name());
      Instance inst = instantiate(entry, vars);
      auto node = std::make_shared<TypedNode>();
      node->term = t;
      node->type = inst.type;
      node->entry = &entry;
      node->schema = std::move(inst.schema);
      return {Typing{node, {}}};
    }
    case Term::Kind::Shift: {
      ShiftSchema schema = shift_schema(t.base(), t.i(), t.j(), vars, opts.max_index);
      auto node = std::make_shared<TypedNode>();
      node->term = t;
      node->type = schema.type;
      node->referent = schema.referent;
      return {Typing{node, {}}};
    }
    case Term::Kind::App: {
      std::vector<Typing> fs = infer(t.functor(), lexicon, vars, opts);
      std::vector<Typing> xs = infer(t.argument(), lexicon, vars, opts);
      std::vector<Typing> out;
      for (const Typing& f : fs)
        for (const Typing& x : xs)
          for (Typing& r : infer_app(t, f, x, vars)) out.push_back(std::move(r));
      return out;
    }
  }
  return {};
}

std::vector<Type> typecheck_term(const Term& t, const Lexicon& lexicon,
                                 const TypingOptions& opts) {
  VarSupply vars;
  std::vector<Type> distinct;
  for (const Typing& typing : infer(t, lexicon, vars, opts)) {
    Type ty = canonical_rename(typing.type());
    if (std::none_of(distinct.begin(), distinct.end(),
                     [&](const Type& u) { return alpha_equivalent(u, ty); }))
      distinct.push_back(ty);
  }
  std::vector<Type> out;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    bool instance = false;
    for (std::size_t j = 0; j < distinct.size() && !instance; ++j)
      instance = i != j && instance_of(distinct[i], distinct[j]);
    if (!instance) out.push_back(distinct[i]);
  }
  std::sort(out.begin(), out.end(),
            [](const Type& a, const Type& b) { return to_string(a) < to_string(b); });
  return out;
}

}  // namespace donkeykit
