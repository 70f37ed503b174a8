#include "donkeykit/types.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <utility>

#include "donkeykit/error.hpp"

namespace donkeykit {

struct Type::Node {
  TypeKind kind;
  Type lhs{nullptr};
  Type rhs{nullptr};
  VarId id = 0;
  std::string name;
};

Type Type::e() {
  static const Type t = [] {
    auto n = std::make_shared<Node>();
    n->kind = TypeKind::E;
    return Type{std::move(n)};
  }();
  return t;
}

Type Type::unit() {
  static const Type t = [] {
    auto n = std::make_shared<Node>();
    n->kind = TypeKind::Unit;
    return Type{std::move(n)};
  }();
  return t;
}

#define DONKEYKIT_BINARY(fn, KIND)                  \
  Type Type::fn(Type a, Type b) {                   \
    auto n = std::make_shared<Node>();              \
    n->kind = TypeKind::KIND;                       \
    n->lhs = std::move(a);                          \
    n->rhs = std::move(b);                          \
    return Type{std::move(n)};                      \
  }
DONKEYKIT_BINARY(arrow, Arrow)
DONKEYKIT_BINARY(in, In)
DONKEYKIT_BINARY(out, Out)
DONKEYKIT_BINARY(prod, Prod)
#undef DONKEYKIT_BINARY

Type Type::var(VarId id, std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = TypeKind::Var;
  n->id = id;
  n->name = std::move(name);
  return Type{std::move(n)};
}

TypeKind Type::kind() const { return node_->kind; }

bool Type::is_binary() const {
  switch (kind()) {
    case TypeKind::Arrow:
    case TypeKind::In:
    case TypeKind::Out:
    case TypeKind::Prod:
      return true;
    default:
      return false;
  }
}

const Type& Type::lhs() const { return node_->lhs; }
const Type& Type::rhs() const { return node_->rhs; }
VarId Type::var_id() const { return node_->id; }
const std::string& Type::var_name() const { return node_->name; }

bool operator==(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.is(TypeKind::Var)) return a.var_id() == b.var_id();
  if (!a.is_binary()) return true;
  return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

std::strong_ordering operator<=>(const Type& a, const Type& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  if (a.is(TypeKind::Var)) return a.var_id() <=> b.var_id();
  if (!a.is_binary()) return std::strong_ordering::equal;
  if (auto c = a.lhs() <=> b.lhs(); c != 0) return c;
  return a.rhs() <=> b.rhs();
}

Type VarSupply::fresh(std::string_view hint) {
  VarId id = next_++;
  return Type::var(id, std::string(hint) + std::to_string(id));
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

// Out with both sides already canonical.
Type make_out(const Type& head, const Type& body) {
  if (head.is(TypeKind::Unit)) return body;
  if (head.is(TypeKind::Prod))
    return make_out(head.lhs(), make_out(head.rhs(), body));
  return Type::out(head, body);
}

Type rebuild(const Type& t, Type l, Type r) {
  if (t.is(TypeKind::Out)) {
    if (l == t.lhs() && r == t.rhs() && !l.is(TypeKind::Unit) &&
        !l.is(TypeKind::Prod))
      return t;
    return make_out(l, r);
  }
  if (l == t.lhs() && r == t.rhs()) return t;
  switch (t.kind()) {
    case TypeKind::Arrow:
      return Type::arrow(std::move(l), std::move(r));
    case TypeKind::In:
      return Type::in(std::move(l), std::move(r));
    default:
      return Type::prod(std::move(l), std::move(r));
  }
}

}  // namespace

Type normalize(const Type& t) {
  if (!t.is_binary()) return t;
  return rebuild(t, normalize(t.lhs()), normalize(t.rhs()));
}

bool is_canonical(const Type& t) {
  if (!t.is_binary()) return true;
  if (t.is(TypeKind::Out) &&
      (t.lhs().is(TypeKind::Unit) || t.lhs().is(TypeKind::Prod)))
    return false;
  return is_canonical(t.lhs()) && is_canonical(t.rhs());
}

// ---------------------------------------------------------------------------
// Printing and parsing

namespace {

int level(const Type& t) {
  switch (t.kind()) {
    case TypeKind::Arrow:
      return 0;
    case TypeKind::In:
    case TypeKind::Out:
      return 1;
    case TypeKind::Prod:
      return 2;
    default:
      return 3;
  }
}

void print(const Type& t, int need, std::string& out) {
  const bool parens = level(t) < need;
  if (parens) out += '(';
  switch (t.kind()) {
    case TypeKind::E:
      out += 'e';
      break;
    case TypeKind::Unit:
      out += '1';
      break;
    case TypeKind::Var:
      out += t.var_name();
      break;
    default: {
      const int lv = level(t);
      print(t.lhs(), lv + 1, out);
      switch (t.kind()) {
        case TypeKind::Arrow:
          out += " -> ";
          break;
        case TypeKind::In:
          out += " |> ";
          break;
        case TypeKind::Out:
          out += " |x ";
          break;
        default:
          out += " * ";
          break;
      }
      print(t.rhs(), lv, out);
    }
  }
  if (parens) out += ')';
}

class TypeParser {
 public:
  TypeParser(std::string_view text, VarSupply& vars) : s_(text), vars_(vars) {}

  Type parse() {
    Type t = arrow();
    skip();
    if (pos_ != s_.size()) fail("unexpected input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("type syntax: " + msg, pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Type arrow() {
    Type l = io();
    if (eat("->") || eat("→")) return Type::arrow(l, arrow());
    return l;
  }

  Type io() {
    Type l = product();
    if (eat("|>") || eat("∈")) return Type::in(l, io());
    if (eat("|x") || eat("⋉")) return Type::out(l, io());
    return l;
  }

  Type product() {
    Type l = atom();
    if (eat("*") || eat("×")) return Type::prod(l, product());
    return l;
  }

  static bool ident_byte(unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80;
  }

  Type atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of type");
    if (eat("(")) {
      Type t = arrow();
      if (!eat(")")) fail("expected ')'");
      return t;
    }
    if (eat("1")) return Type::unit();
    const unsigned char c = static_cast<unsigned char>(s_[pos_]);
    // Multi-byte operators start with bytes >= 0x80 too; they were tried
    // by the callers before reaching here.
    if (!(std::isalpha(c) || c == '_' || c >= 0x80) ||
        s_.substr(pos_, 3) == "→" || s_.substr(pos_, 3) == "∈" ||
        s_.substr(pos_, 3) == "⋉" || s_.substr(pos_, 2) == "×")
      fail("expected a type");
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_byte(static_cast<unsigned char>(s_[pos_]))) {
      if (s_.substr(pos_, 3) == "→" || s_.substr(pos_, 3) == "∈" ||
          s_.substr(pos_, 3) == "⋉" || s_.substr(pos_, 2) == "×")
        break;
      ++pos_;
    }
    std::string name(s_.substr(start, pos_ - start));
    if (name == "e") return Type::e();
    auto it = names_.find(name);
    if (it != names_.end()) return it->second;
    Type v = Type::var(vars_.fresh("v").var_id(), name);
    names_.emplace(name, v);
    return v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  VarSupply& vars_;
  std::map<std::string, Type> names_;
};

void collect_vars(const Type& t, std::set<VarId>& out) {
  if (t.is(TypeKind::Var)) {
    out.insert(t.var_id());
  } else if (t.is_binary()) {
    collect_vars(t.lhs(), out);
    collect_vars(t.rhs(), out);
  }
}

}  // namespace

std::string to_string(const Type& t) {
  std::string out;
  print(t, 0, out);
  return out;
}

Type parse_type(std::string_view text, VarSupply& vars) {
  return TypeParser(text, vars).parse();
}

std::set<VarId> free_vars(const Type& t) {
  std::set<VarId> out;
  collect_vars(t, out);
  return out;
}

bool occurs(VarId v, const Type& t) {
  if (t.is(TypeKind::Var)) return t.var_id() == v;
  if (!t.is_binary()) return false;
  return occurs(v, t.lhs()) || occurs(v, t.rhs());
}

namespace {

std::string name_prefix(const std::string& name) {
  std::size_t end = name.size();
  while (end > 0 && std::isdigit(static_cast<unsigned char>(name[end - 1]))) --end;
  return end == 0 ? std::string("v") : name.substr(0, end);
}

Type rename_with(const Type& t, std::map<VarId, Type>& seen,
                 std::map<std::string, int>& counters, VarId& next_id) {
  if (t.is(TypeKind::Var)) {
    auto it = seen.find(t.var_id());
    if (it != seen.end()) return it->second;
    std::string prefix = name_prefix(t.var_name());
    int n = ++counters[prefix];
    Type v = Type::var(next_id++, prefix + std::to_string(n));
    seen.emplace(t.var_id(), v);
    return v;
  }
  if (!t.is_binary()) return t;
  Type l = rename_with(t.lhs(), seen, counters, next_id);
  Type r = rename_with(t.rhs(), seen, counters, next_id);
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

bool alpha_eq(const Type& a, const Type& b, std::map<VarId, VarId>& ab,
              std::map<VarId, VarId>& ba) {
  if (a.kind() != b.kind()) return false;
  if (a.is(TypeKind::Var)) {
    auto [i, fresh_a] = ab.emplace(a.var_id(), b.var_id());
    auto [j, fresh_b] = ba.emplace(b.var_id(), a.var_id());
    return i->second == b.var_id() && j->second == a.var_id();
  }
  if (!a.is_binary()) return true;
  return alpha_eq(a.lhs(), b.lhs(), ab, ba) && alpha_eq(a.rhs(), b.rhs(), ab, ba);
}

}  // namespace

Type canonical_rename(const Type& t) {
  std::map<VarId, Type> seen;
  std::map<std::string, int> counters;
  VarId next_id = 1;
  return rename_with(t, seen, counters, next_id);
}

bool alpha_equivalent(const Type& a, const Type& b) {
  std::map<VarId, VarId> ab, ba;
  return alpha_eq(normalize(a), normalize(b), ab, ba);
}

Type ground(const Type& t) {
  Substitution s;
  for (VarId v : free_vars(t)) s.bind(v, Type::unit());
  return s.apply(t);
}

std::vector<Type> referent_components(const Type& t) {
  std::vector<Type> out;
  std::function<void(const Type&)> walk = [&](const Type& x) {
    if (x.is(TypeKind::Unit)) return;
    if (x.is(TypeKind::Prod)) {
      walk(x.lhs());
      walk(x.rhs());
      return;
    }
    out.push_back(x);
  };
  walk(t);
  return out;
}

OutSpine out_spine(const Type& t) {
  OutSpine s{{}, t};
  while (s.tail.is(TypeKind::Out)) {
    s.heads.push_back(s.tail.lhs());
    s.tail = s.tail.rhs();
  }
  return s;
}

// ---------------------------------------------------------------------------
// Substitution

void Substitution::bind(VarId v, Type t) { map_.insert_or_assign(v, std::move(t)); }

const Type* Substitution::lookup(VarId v) const {
  auto it = map_.find(v);
  return it == map_.end() ? nullptr : &it->second;
}

Type Substitution::apply(const Type& t) const {
  if (t.is(TypeKind::Var)) {
    const Type* bound = lookup(t.var_id());
    return bound ? apply(*bound) : t;
  }
  if (!t.is_binary()) return t;
  return rebuild(t, apply(t.lhs()), apply(t.rhs()));
}

void Substitution::merge(const Substitution& other) {
  for (const auto& [v, t] : other.map_) map_.insert_or_assign(v, t);
}

// ---------------------------------------------------------------------------
// Unification

namespace {

struct Problem {
  Substitution theta;
  std::vector<std::pair<Type, Type>> pending;
};

Type prod_chain(const std::vector<Type>& items, std::size_t k) {
  Type t = items[k - 1];
  for (std::size_t i = k - 1; i-- > 0;) t = Type::prod(items[i], t);
  return t;
}

Type rebuild_spine(const OutSpine& s, std::size_t from) {
  Type t = s.tail;
  for (std::size_t i = s.heads.size(); i-- > from;) t = Type::out(s.heads[i], t);
  return t;
}

class Unifier {
 public:
  Unifier(const std::set<VarId>& rigid, bool first_only)
      : rigid_(rigid), first_only_(first_only) {}

  std::vector<Substitution> results;

  void solve(Problem p) {
    while (!p.pending.empty()) {
      if (first_only_ && !results.empty()) return;
      auto [a0, b0] = std::move(p.pending.back());
      p.pending.pop_back();
      Type a = p.theta.apply(a0);
      Type b = p.theta.apply(b0);
      if (a == b) continue;
      if (bindable(a)) {
        if (occurs(a.var_id(), b)) return;
        p.theta.bind(a.var_id(), b);
        continue;
      }
      if (bindable(b)) {
        if (occurs(b.var_id(), a)) return;
        p.theta.bind(b.var_id(), a);
        continue;
      }
      const bool ao = a.is(TypeKind::Out);
      const bool bo = b.is(TypeKind::Out);
      if (ao && bo) {
        const bool va = head_var(a);
        const bool vb = head_var(b);
        if ((!va && !vb) || a.lhs() == b.lhs()) {
          p.pending.emplace_back(a.rhs(), b.rhs());
          p.pending.emplace_back(a.lhs(), b.lhs());
          continue;
        }
        if (va) branch_prefixes(p, a, b, /*skip_single=*/false);
        if (vb) branch_prefixes(p, b, a, /*skip_single=*/va);
        return;
      }
      if (ao || bo) {
        const Type& o = ao ? a : b;
        const Type& other = ao ? b : a;
        if (!head_var(o)) return;
        p.theta.bind(o.lhs().var_id(), Type::unit());
        p.pending.emplace_back(o.rhs(), other);
        continue;
      }
      if (a.kind() != b.kind() || !a.is_binary()) return;
      p.pending.emplace_back(a.rhs(), b.rhs());
      p.pending.emplace_back(a.lhs(), b.lhs());
    }
    results.push_back(std::move(p.theta));
  }

 private:
  bool bindable(const Type& t) const {
    return t.is(TypeKind::Var) && rigid_.count(t.var_id()) == 0;
  }
  bool head_var(const Type& t) const { return bindable(t.lhs()); }

  // `headed` = v |x rest with v a variable; v takes each prefix of the
  // spine of `other`, and rest is unified with what remains.
  void branch_prefixes(const Problem& p, const Type& headed, const Type& other,
                       bool skip_single) {
    const VarId v = headed.lhs().var_id();
    const OutSpine spine = out_spine(other);
    for (std::size_t k = 0; k <= spine.heads.size(); ++k) {
      if (k == 1 && skip_single) continue;
      Type prefix = k == 0 ? Type::unit() : prod_chain(spine.heads, k);
      if (occurs(v, prefix)) continue;
      Problem q = p;
      q.theta.bind(v, prefix);
      q.pending.emplace_back(headed.rhs(), rebuild_spine(spine, k));
      solve(std::move(q));
      if (first_only_ && !results.empty()) return;
    }
  }

  const std::set<VarId>& rigid_;
  bool first_only_;
};

Type tuple_of(const std::vector<Type>& items) {
  Type t = Type::unit();
  for (std::size_t i = items.size(); i-- > 0;) t = Type::arrow(items[i], t);
  return t;
}

Type shift_ids(const Type& t, VarId offset) {
  if (t.is(TypeKind::Var)) return Type::var(t.var_id() + offset, t.var_name());
  if (!t.is_binary()) return t;
  Type l = shift_ids(t.lhs(), offset);
  Type r = shift_ids(t.rhs(), offset);
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

}  // namespace

namespace {

Type instance_tuple(const Substitution& s, const std::set<VarId>& vars) {
  std::vector<Type> items;
  for (VarId v : vars) items.push_back(s.apply(Type::var(v, "v")));
  return tuple_of(items);
}

// True when the tuple `specific` is an instance of the tuple `general`.
bool tuple_subsumes(const Type& general, const Type& specific) {
  std::set<VarId> rigid = free_vars(specific);
  VarId offset = 1;
  for (VarId v : rigid) offset = std::max(offset, v + 1);
  for (VarId v : free_vars(general)) offset = std::max(offset, v + 1);
  Unifier u(rigid, /*first_only=*/true);
  u.solve(Problem{{}, {{shift_ids(general, offset), specific}}});
  return !u.results.empty();
}

}  // namespace

bool instance_of(const Type& specific, const Type& general) {
  return tuple_subsumes(normalize(general), normalize(specific));
}

bool subsumes(const Substitution& general, const Substitution& specific,
              const std::vector<Type>& over) {
  std::set<VarId> vars;
  for (const Type& t : over) collect_vars(t, vars);
  return tuple_subsumes(instance_tuple(general, vars), instance_tuple(specific, vars));
}

std::vector<Substitution> unify(const Type& a, const Type& b,
                                const Substitution& initial,
                                const std::set<VarId>& rigid) {
  Unifier u(rigid, /*first_only=*/false);
  u.solve(Problem{initial, {{a, b}}});
  std::vector<Substitution> found = std::move(u.results);
  if (found.size() <= 1) return found;

  std::set<VarId> vars;
  collect_vars(a, vars);
  collect_vars(b, vars);
  for (const auto& [v, t] : initial.bindings()) vars.insert(v);

  // Drop exact renamings first, then instances of another unifier.
  std::vector<Substitution> distinct;
  std::vector<Type> tuples;
  std::set<std::string> keys;
  for (Substitution& s : found) {
    Type t = instance_tuple(s, vars);
    if (!keys.insert(to_string(canonical_rename(t))).second) continue;
    distinct.push_back(std::move(s));
    tuples.push_back(std::move(t));
  }
  std::vector<Substitution> kept;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < distinct.size() && !redundant; ++j) {
      if (i == j) continue;
      if (!tuple_subsumes(tuples[j], tuples[i])) continue;
      // Mutually general unifiers are renamings; keep the first.
      redundant = !tuple_subsumes(tuples[i], tuples[j]) || j < i;
    }
    if (!redundant) kept.push_back(distinct[i]);
  }
  return kept;
}

// ---------------------------------------------------------------------------
// Shift schemas

std::string_view shift_base_name(ShiftBase b) {
  switch (b) {
    case ShiftBase::GIn:
      return "gIn";
    case ShiftBase::GOut:
      return "gOut";
    case ShiftBase::Z:
      return "z";
    case ShiftBase::S:
      return "s";
  }
  return "?";
}

namespace {

// Insertion: (a -> r) becomes (a -> t -> r).
Type insert_after_first(const Type& f, const Type& t) {
  return Type::arrow(f.lhs(), Type::arrow(t, f.rhs()));
}

}  // namespace

ShiftSchema shift_schema(ShiftBase base, int i, int j, VarSupply& vars,
                         int max_index) {
  if (i < 0 || j < 0 || i > max_index || j > max_index)
    throw BoundExceeded("shift index (" + std::to_string(i) + "," +
                        std::to_string(j) + ") exceeds bound " +
                        std::to_string(max_index));
  Type alpha = vars.fresh("α");
  Type beta = vars.fresh("β");
  Type sigma = vars.fresh("σ");
  Type from = Type::unit(), to = Type::unit();
  switch (base) {
    case ShiftBase::GIn:
      from = Type::arrow(alpha, beta);
      to = Type::arrow(Type::in(sigma, alpha), Type::in(sigma, beta));
      break;
    case ShiftBase::GOut:
      from = Type::arrow(alpha, beta);
      to = Type::arrow(Type::out(sigma, alpha), Type::out(sigma, beta));
      break;
    case ShiftBase::Z: {
      Type gamma = vars.fresh("γ");
      Type produced = Type::out(sigma, beta);
      from = Type::arrow(alpha, Type::arrow(produced, gamma));
      to = Type::arrow(Type::in(sigma, alpha), Type::arrow(produced, gamma));
      break;
    }
    case ShiftBase::S: {
      Type gamma = vars.fresh("γ");
      Type produced = Type::out(sigma, beta);
      from = Type::arrow(produced, Type::arrow(alpha, gamma));
      to = Type::arrow(produced, Type::arrow(Type::in(sigma, alpha), gamma));
      break;
    }
  }
  for (int k = 0; k < j; ++k) {
    Type tau = vars.fresh("τ");
    from = insert_after_first(from, tau);
    to = insert_after_first(to, tau);
  }
  for (int k = 0; k < i; ++k) {
    Type tau = vars.fresh("τ");
    from = Type::arrow(tau, from);
    to = Type::arrow(tau, to);
  }
  return {Type::arrow(from, to), sigma};
}

Type shift_type(ShiftBase base, int i, int j, VarSupply& vars, int max_index) {
  return shift_schema(base, i, j, vars, max_index).type;
}

}  // namespace donkeykit
