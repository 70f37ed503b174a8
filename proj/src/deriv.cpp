#include "donkeykit/deriv.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "donkeykit/error.hpp"
#include "donkeykit/eval.hpp"

namespace donkeykit {

// ---------------------------------------------------------------------------
// Syntax trees

struct SyntaxTree::Node {
  std::string word;
  std::string lexeme;
  std::vector<SyntaxTree> children;
};

SyntaxTree SyntaxTree::leaf(std::string word, std::string lexeme) {
  auto n = std::make_shared<Node>();
  n->word = std::move(word);
  n->lexeme = std::move(lexeme);
  return SyntaxTree{std::move(n)};
}

SyntaxTree SyntaxTree::node(SyntaxTree left, SyntaxTree right) {
  auto n = std::make_shared<Node>();
  n->children = {std::move(left), std::move(right)};
  return SyntaxTree{std::move(n)};
}

bool SyntaxTree::is_leaf() const { return node_->children.empty(); }
const std::string& SyntaxTree::word() const { return node_->word; }
const std::string& SyntaxTree::lexeme() const { return node_->lexeme; }

const SyntaxTree& SyntaxTree::left() const { return node_->children.at(0); }
const SyntaxTree& SyntaxTree::right() const { return node_->children.at(1); }

std::size_t SyntaxTree::leaf_count() const {
  return is_leaf() ? 1 : left().leaf_count() + right().leaf_count();
}

std::vector<std::string> SyntaxTree::lexemes() const {
  if (is_leaf()) return {lexeme()};
  std::vector<std::string> out = left().lexemes();
  for (std::string& s : right().lexemes()) out.push_back(std::move(s));
  return out;
}

std::string to_string(const SyntaxTree& t) {
  if (t.is_leaf()) return t.word();
  auto side = [](const SyntaxTree& c) {
    return c.is_leaf() ? c.word() : to_string(c);
  };
  return "[" + side(t.left()) + " " + side(t.right()) + "]";
}

namespace {

class TreeParser {
 public:
  TreeParser(std::string_view s, const Lexicon& lex) : s_(s), lex_(lex) {}

  SyntaxTree parse() {
    std::vector<SyntaxTree> sentences;
    for (;;) {
      skip();
      if (pos_ >= s_.size()) break;
      std::vector<SyntaxTree> items = sequence(false);
      sentences.push_back(group(std::move(items)));
      skip();
      if (pos_ < s_.size() && s_[pos_] == '.') ++pos_;
    }
    if (sentences.empty()) fail("empty sentence");
    SyntaxTree out = sentences.front();
    for (std::size_t k = 1; k < sentences.size(); ++k)
      out = SyntaxTree::node(SyntaxTree::node(SyntaxTree::leaf("seq", "seq"), sentences[k]), out);
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("sentence syntax: " + msg, pos_);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  SyntaxTree group(std::vector<SyntaxTree> items) {
    if (items.empty()) fail("empty brackets");
    if (items.size() > 2) fail("a constituent has more than two children");
    if (items.size() == 1) return items.front();
    return SyntaxTree::node(std::move(items[0]), std::move(items[1]));
  }

  std::vector<SyntaxTree> sequence(bool bracketed) {
    std::vector<SyntaxTree> items;
    for (;;) {
      skip();
      if (pos_ >= s_.size()) {
        if (bracketed) fail("missing ']'");
        return items;
      }
      const char c = s_[pos_];
      if (c == ']') {
        if (!bracketed) fail("unexpected ']'");
        ++pos_;
        return items;
      }
      if (c == '.') {
        if (bracketed) fail("'.' inside brackets");
        return items;
      }
      if (c == '[') {
        ++pos_;
        items.push_back(group(sequence(true)));
        continue;
      }
      const std::size_t start = pos_;
      while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) &&
             s_[pos_] != '[' && s_[pos_] != ']' && s_[pos_] != '.')
        ++pos_;
      std::string word(s_.substr(start, pos_ - start));
      auto lexeme = lex_.resolve(word);
      if (!lexeme) throw UnknownLexeme(word);
      items.push_back(SyntaxTree::leaf(word, *lexeme));
    }
  }

  std::string_view s_;
  const Lexicon& lex_;
  std::size_t pos_ = 0;
};

}  // namespace

SyntaxTree parse_syntax_tree(std::string_view text, const Lexicon& lexicon) {
  return TreeParser(text, lexicon).parse();
}

// ---------------------------------------------------------------------------
// Search

std::vector<Term> shift_alphabet(const SearchBounds& bounds) {
  std::vector<ShiftBase> bases = {ShiftBase::GIn, ShiftBase::GOut, ShiftBase::Z};
  if (bounds.allow_s) bases.push_back(ShiftBase::S);
  const int max_i = bounds.restrict_composition ? 0 : bounds.max_index;
  std::vector<Term> out;
  for (ShiftBase b : bases)
    for (int i = 0; i <= max_i; ++i)
      for (int j = 0; j <= bounds.max_index; ++j) out.push_back(Term::shift(b, i, j));
  return out;
}

std::size_t shift_count(const Derivation& d) { return shift_count(d.term); }

namespace {

// Printed form with every variable renamed to v1, v2, ... in order of first
// occurrence, marked variables suffixed with '!': equal keys iff
// alpha-equivalent with the same marks.
std::string type_key(const Type& t, const std::set<VarId>& marked = {}) {
  std::map<VarId, Type> names;
  std::function<Type(const Type&)> go = [&](const Type& x) -> Type {
    switch (x.kind()) {
      case TypeKind::Var: {
        auto it = names.find(x.var_id());
        if (it != names.end()) return it->second;
        const VarId id = static_cast<VarId>(names.size() + 1);
        Type v = Type::var(id, "v" + std::to_string(id) + (marked.count(x.var_id()) ? "!" : ""));
        names.emplace(x.var_id(), v);
        return v;
      }
      case TypeKind::Arrow:
        return Type::arrow(go(x.lhs()), go(x.rhs()));
      case TypeKind::In:
        return Type::in(go(x.lhs()), go(x.rhs()));
      case TypeKind::Out:
        return Type::out(go(x.lhs()), go(x.rhs()));
      case TypeKind::Prod:
        return Type::prod(go(x.lhs()), go(x.rhs()));
      default:
        return x;
    }
  };
  return to_string(go(normalize(t)));
}


std::string var_prefix(const std::string& name) {
  std::size_t end = name.size();
  while (end > 0 && std::isdigit(static_cast<unsigned char>(name[end - 1]))) --end;
  return end == 0 ? std::string("τ") : name.substr(0, end);
}

Type freshen(const Type& t, VarSupply& vars, std::map<VarId, Type>& names) {
  switch (t.kind()) {
    case TypeKind::Var: {
      auto it = names.find(t.var_id());
      if (it != names.end()) return it->second;
      Type v = vars.fresh(var_prefix(t.var_name()));
      names.emplace(t.var_id(), v);
      return v;
    }
    case TypeKind::Arrow:
      return Type::arrow(freshen(t.lhs(), vars, names), freshen(t.rhs(), vars, names));
    case TypeKind::In:
      return Type::in(freshen(t.lhs(), vars, names), freshen(t.rhs(), vars, names));
    case TypeKind::Out:
      return Type::out(freshen(t.lhs(), vars, names), freshen(t.rhs(), vars, names));
    case TypeKind::Prod:
      return Type::prod(freshen(t.lhs(), vars, names), freshen(t.rhs(), vars, names));
    default:
      return t;
  }
}

Type freshen(const Type& t, VarSupply& vars) {
  std::map<VarId, Type> names;
  return freshen(t, vars, names);
}

bool may_be_function(const Type& t) {
  if (t.is(TypeKind::Arrow) || t.is(TypeKind::Var)) return true;
  return t.is(TypeKind::Out) && t.lhs().is(TypeKind::Var) && may_be_function(t.rhs());
}

bool heads_compatible(const Type& a, const Type& b) {
  if (a.is(TypeKind::Var) || b.is(TypeKind::Var)) return true;
  if (a.is(TypeKind::Out) && a.lhs().is(TypeKind::Var)) return true;
  if (b.is(TypeKind::Out) && b.lhs().is(TypeKind::Var)) return true;
  return a.kind() == b.kind();
}

// A canonical type with the variables that stand for threaded referents.
// Such a variable must not end up as 1: a shift threading the empty
// referent is the identity (gOut) or a vacuous wrapper (gIn, z, s).
struct Constrained {
  Type type;
  std::set<VarId> referents;
};

void match_vars(const Type& from, const Type& to, std::map<VarId, VarId>& ids) {
  if (from.is(TypeKind::Var)) {
    ids.emplace(from.var_id(), to.var_id());
  } else if (from.is_binary()) {
    match_vars(from.lhs(), to.lhs(), ids);
    match_vars(from.rhs(), to.rhs(), ids);
  }
}

// Canonical renaming of t, carrying the referent variables along; referent
// variables that no longer occur are dropped by the caller beforehand.
Constrained canonical(const Type& t, const std::set<VarId>& referents) {
  const Type n = normalize(t);
  Constrained out{canonical_rename(n), {}};
  std::map<VarId, VarId> ids;
  match_vars(n, out.type, ids);
  for (VarId v : referents) out.referents.insert(ids.at(v));
  return out;
}

// Carries the referent constraints through s. Fails when one of them is
// instantiated to 1; otherwise `left` receives the still-open variables.
bool settle(const Substitution& s, const std::set<VarId>& referents, std::set<VarId>& left) {
  for (VarId v : referents) {
    const Type t = s.apply(Type::var(v, "σ"));
    if (t.is(TypeKind::Unit)) return false;
    if (t.is(TypeKind::Var)) {
      left.insert(t.var_id());
      continue;
    }
    if (t.is(TypeKind::Prod)) {
      std::vector<Type> parts = referent_components(t);
      if (parts.empty()) return false;
    }
  }
  return true;
}

Constrained freshen(const Constrained& c, VarSupply& vars) {
  std::map<VarId, Type> names;
  Constrained out{freshen(c.type, vars, names), {}};
  for (VarId v : c.referents) out.referents.insert(names.at(v).var_id());
  return out;
}

// Result types of applying a function of type f to an argument of type x.
std::vector<Constrained> apply_types(const Constrained& f, const Constrained& x) {
  if (!may_be_function(f.type)) return {};
  if (f.type.is(TypeKind::Arrow) && !heads_compatible(f.type.lhs(), x.type)) return {};
  VarSupply vars;
  const Constrained f1 = freshen(f, vars);
  const Constrained x1 = freshen(x, vars);
  const Type beta = vars.fresh("β");
  std::set<VarId> referents = f1.referents;
  referents.insert(x1.referents.begin(), x1.referents.end());
  std::vector<Constrained> out;
  for (const Substitution& s : unify(f1.type, Type::arrow(x1.type, beta))) {
    std::set<VarId> left;
    if (!settle(s, referents, left)) continue;
    const Type result = s.apply(beta);
    if (std::any_of(left.begin(), left.end(), [&](VarId v) { return !occurs(v, result); }))
      continue;
    out.push_back(canonical(result, left));
  }
  return out;
}

struct Origin {
  // Leaf classes: prev is the class the shift was applied to (-1 for the
  // bare lexeme) and shift indexes the alphabet. Internal classes: the
  // classes of the two children and which one is the functor.
  int a = -1;
  int b = -1;
  bool left_functor = false;
};

struct TypeClass {
  Constrained type;
  int depth = 0;  // leaves: fewest shifts reaching the class
  std::vector<Origin> origins;
};

struct ClassTable {
  std::vector<TypeClass> classes;
  std::unordered_map<std::string, int> index;

  // Returns the class id and whether it is new.
  std::pair<int, bool> add(const Constrained& t, int depth) {
    std::string key = type_key(t.type, t.referents);
    auto it = index.find(key);
    if (it != index.end()) return {it->second, false};
    const int id = static_cast<int>(classes.size());
    classes.push_back({t, depth, {}});
    index.emplace(std::move(key), id);
    return {id, true};
  }
};

struct SearchNode {
  const SyntaxTree* tree;
  int left = -1;
  int right = -1;
  ClassTable table;
};

struct Partial {
  Term term = Term::lex("");
  std::vector<std::vector<Term>> leaf_shifts;
  std::vector<bool> left_functor;
};

class Search {
 public:
  Search(const Lexicon& lex, const SearchBounds& bounds, SearchStats& stats)
      : lex_(lex), bounds_(bounds), stats_(stats), alphabet_(shift_alphabet(bounds)) {
    if (bounds.max_index < 0 || bounds.max_shifts < 0)
      throw BoundExceeded("search bounds must be non-negative");
    for (const Term& s : alphabet_) {
      VarSupply vars;
      ShiftSchema schema = shift_schema(s.base(), s.i(), s.j(), vars, bounds.max_index);
      alphabet_types_.push_back(canonical(schema.type, {schema.referent.var_id()}));
    }
  }

  int build(const SyntaxTree& t) {
    SearchNode n;
    n.tree = &t;
    if (!t.is_leaf()) {
      n.left = build(t.left());
      n.right = build(t.right());
    }
    nodes_.push_back(std::move(n));
    const int id = static_cast<int>(nodes_.size()) - 1;
    if (t.is_leaf())
      fill_leaf(id);
    else
      fill_app(id);
    stats_.classes += nodes_[id].table.classes.size();
    return id;
  }

  const SearchNode& node(int id) const { return nodes_[id]; }

  const std::vector<Partial>& terms(int node, int cls, int depth = -1) {
    SearchNode& n = nodes_[node];
    if (depth < 0) depth = n.tree->is_leaf() ? bounds_.max_shifts : 0;
    const auto key = std::make_tuple(node, cls, depth);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Partial> out;
    const TypeClass& c = n.table.classes[cls];
    if (n.tree->is_leaf()) {
      for (const Origin& o : c.origins) {
        if (o.a < 0) {
          out.push_back({Term::lex(n.tree->lexeme()), {{}}, {}});
          continue;
        }
        if (depth == 0) continue;
        const Term& shift = alphabet_[o.b];
        for (const Partial& p : terms(node, o.a, depth - 1)) {
          Partial q = p;
          q.term = Term::app(shift, p.term);
          q.leaf_shifts[0].push_back(shift);
          out.push_back(std::move(q));
          charge();
        }
      }
    } else {
      for (const Origin& o : c.origins) {
        const std::vector<Partial>& ls = terms(n.left, o.a);
        const std::vector<Partial>& rs = terms(n.right, o.b);
        for (const Partial& l : ls) {
          for (const Partial& r : rs) {
            Partial q;
            q.term = o.left_functor ? Term::app(l.term, r.term) : Term::app(r.term, l.term);
            q.leaf_shifts = l.leaf_shifts;
            q.leaf_shifts.insert(q.leaf_shifts.end(), r.leaf_shifts.begin(), r.leaf_shifts.end());
            q.left_functor.push_back(o.left_functor);
            q.left_functor.insert(q.left_functor.end(), l.left_functor.begin(),
                                  l.left_functor.end());
            q.left_functor.insert(q.left_functor.end(), r.left_functor.begin(),
                                  r.left_functor.end());
            out.push_back(std::move(q));
            charge();
          }
        }
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  // Number of decorated terms of a class, saturating at UINT64_MAX.
  std::uint64_t count(int node, int cls, int depth = -1) {
    const SearchNode& n = nodes_[node];
    if (depth < 0) depth = n.tree->is_leaf() ? bounds_.max_shifts : 0;
    const auto key = std::make_tuple(node, cls, depth);
    auto it = counts_.find(key);
    if (it != counts_.end()) return it->second;
    auto add = [](std::uint64_t a, std::uint64_t b) {
      return a > UINT64_MAX - b ? UINT64_MAX : a + b;
    };
    auto mul = [](std::uint64_t a, std::uint64_t b) {
      return (b != 0 && a > UINT64_MAX / b) ? UINT64_MAX : a * b;
    };
    std::uint64_t total = 0;
    for (const Origin& o : n.table.classes[cls].origins) {
      if (n.tree->is_leaf()) {
        if (o.a < 0)
          total = add(total, 1);
        else if (depth > 0)
          total = add(total, count(node, o.a, depth - 1));
      } else {
        total = add(total, mul(count(n.left, o.a), count(n.right, o.b)));
      }
    }
    counts_.emplace(key, total);
    return total;
  }

 private:
  void charge() {
    if (++stats_.terms > bounds_.term_budget)
      throw BudgetExceeded("search produced more than " + std::to_string(bounds_.term_budget) +
                           " decorated terms");
  }

  void combine() {
    if (++stats_.combinations > bounds_.node_budget)
      throw BudgetExceeded("search exceeded its budget of " +
                           std::to_string(bounds_.node_budget) + " type combinations");
  }

  void fill_leaf(int id) {
    ClassTable& table = nodes_[id].table;
    const LexEntry& entry = lex_.at(nodes_[id].tree->lexeme());
    const int root = table.add({canonical_rename(entry.polytype), {}}, 0).first;
    table.classes[root].origins.push_back({-1, -1, false});
    std::vector<int> frontier = {root};
    for (int depth = 1; depth <= bounds_.max_shifts; ++depth) {
      std::vector<int> next;
      for (int prev : frontier) {
        for (std::size_t k = 0; k < alphabet_.size(); ++k) {
          combine();
          const Constrained arg = table.classes[prev].type;
          for (const Constrained& t : apply_types(alphabet_types_[k], arg)) {
            auto [cls, fresh] = table.add(t, depth);
            table.classes[cls].origins.push_back({prev, static_cast<int>(k), false});
            if (fresh) next.push_back(cls);
          }
        }
      }
      frontier = std::move(next);
    }
  }

  void fill_app(int id) {
    const ClassTable& lt = nodes_[nodes_[id].left].table;
    const ClassTable& rt = nodes_[nodes_[id].right].table;
    ClassTable table;
    std::map<std::tuple<int, int, int, bool>, bool> seen;
    for (int li = 0; li < static_cast<int>(lt.classes.size()); ++li) {
      for (int ri = 0; ri < static_cast<int>(rt.classes.size()); ++ri) {
        for (bool left_functor : {true, false}) {
          const Constrained& f = left_functor ? lt.classes[li].type : rt.classes[ri].type;
          const Constrained& x = left_functor ? rt.classes[ri].type : lt.classes[li].type;
          combine();
          for (const Constrained& t : apply_types(f, x)) {
            const int cls = table.add(t, 0).first;
            if (seen.emplace(std::make_tuple(cls, li, ri, left_functor), true).second)
              table.classes[cls].origins.push_back({li, ri, left_functor});
          }
        }
      }
    }
    nodes_[id].table = std::move(table);
  }

  const Lexicon& lex_;
  const SearchBounds& bounds_;
  SearchStats& stats_;
  std::vector<Term> alphabet_;
  std::vector<Constrained> alphabet_types_;
  std::vector<SearchNode> nodes_;
  std::map<std::tuple<int, int, int>, std::vector<Partial>> memo_;
  std::map<std::tuple<int, int, int>, std::uint64_t> counts_;
};

}  // namespace

std::vector<Derivation> search_derivations(const SyntaxTree& tree, const Lexicon& lexicon,
                                           const SearchBounds& bounds,
                                           const std::optional<Type>& target,
                                           SearchStats* stats) {
  for (const std::string& w : tree.lexemes()) lexicon.at(w);
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  Search search(lexicon, bounds, st);
  const int root = search.build(tree);

  std::vector<Derivation> found;
  const ClassTable& table = search.node(root).table;
  for (int cls = 0; cls < static_cast<int>(table.classes.size()); ++cls) {
    const Constrained& c = table.classes[cls].type;
    Type type = c.type;
    if (target) {
      VarSupply vars;
      const Constrained t1 = freshen(c, vars);
      const Type t2 = freshen(normalize(*target), vars);
      std::optional<Type> matched;
      for (const Substitution& s : unify(t1.type, t2)) {
        std::set<VarId> left;
        if (settle(s, t1.referents, left) && left.empty()) {
          matched = canonical_rename(s.apply(t1.type));
          break;
        }
      }
      if (!matched) continue;
      type = *matched;
    }
    if (search.count(root, cls) > bounds.term_budget - std::min(bounds.term_budget, st.terms))
      throw BudgetExceeded("search would produce more than " +
                           std::to_string(bounds.term_budget) + " decorated terms");
    for (const Partial& p : search.terms(root, cls))
      found.push_back({tree, p.term, type, p.leaf_shifts, p.left_functor});
  }
  st.before_dedup = found.size();
  if (!bounds.deduplicate) return found;
  return dedup_derivations(found, lexicon);
}

ReadingReport classify_reading(const Derivation& d) {
  ReadingReport r;
  Type t = normalize(d.type);
  while (t.is(TypeKind::Out) || t.is(TypeKind::In)) {
    (t.is(TypeKind::Out) ? r.residual_out : r.residual_in).push_back(t.lhs());
    t = t.rhs();
  }
  r.z_count = binder_count(d.term, ShiftBase::Z);
  r.s_count = binder_count(d.term, ShiftBase::S);
  return r;
}

std::vector<Model> probe_models(const Lexicon& lexicon, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Model> out;
  for (int k = 0; k < 3; ++k) {
    Model m({"p1", "p2", "p3"});
    for (const auto& [name, entry] : lexicon.entries()) {
      if (entry.kind == DenotationKind::ModelPredicate) {
        std::vector<std::size_t> members;
        for (std::size_t x = 0; x < 3; ++x)
          if (rng() & 1) members.push_back(x);
        m.set_predicate(name, members);
      } else if (entry.kind == DenotationKind::ModelRelation) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t x = 0; x < 3; ++x)
          for (std::size_t y = 0; y < 3; ++y)
            if (rng() & 1) pairs.emplace_back(x, y);
        m.set_relation(name, pairs);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

bool representative_before(const Derivation& a, const Derivation& b) {
  const std::size_t sa = shift_count(a), sb = shift_count(b);
  if (sa != sb) return sa < sb;
  const std::size_t za = term_size(a.term), zb = term_size(b.term);
  if (za != zb) return za < zb;
  return to_string(a.term) < to_string(b.term);
}

}  // namespace

std::vector<Derivation> dedup_derivations(const std::vector<Derivation>& ds,
                                          const Lexicon& lexicon) {
  const std::vector<Model> probes = probe_models(lexicon);
  std::map<std::string, std::size_t> best;
  std::vector<Derivation> kept;
  for (const Derivation& d : ds) {
    CompiledTerm compiled = [&] {
      try {
        return CompiledTerm::compile(d.term, d.type, lexicon);
      } catch (const WrongType&) {
        throw Error("internal: derivation " + to_string(d.term) + " does not typecheck at " +
                    to_string(d.type));
      }
    }();
    std::string key = type_key(d.type);
    try {
      for (const Model& m : probes)
        key += "|" + observe(compiled.evaluate(m), compiled.type(), m).dump();
    } catch (const UnsupportedType&) {
      key += "|" + to_string(d.term);
    }
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(key, kept.size());
      kept.push_back(d);
    } else if (representative_before(d, kept[it->second])) {
      kept[it->second] = d;
    }
  }
  std::stable_sort(kept.begin(), kept.end(), [](const Derivation& a, const Derivation& b) {
    const std::size_t za = term_size(a.term), zb = term_size(b.term);
    if (za != zb) return za < zb;
    return to_string(a.term) < to_string(b.term);
  });
  return kept;
}

nlohmann::json reading_to_json(const ReadingReport& r) {
  nlohmann::json in = nlohmann::json::array(), out = nlohmann::json::array();
  for (const Type& t : r.residual_in) in.push_back(to_string(t));
  for (const Type& t : r.residual_out) out.push_back(to_string(t));
  return {{"residual_in", in}, {"residual_out", out}, {"z", r.z_count}, {"s", r.s_count}};
}

nlohmann::json derivation_to_json(const Derivation& d) {
  nlohmann::json shifts = nlohmann::json::array();
  const std::vector<std::string> words = d.tree.lexemes();
  for (std::size_t k = 0; k < d.leaf_shifts.size(); ++k) {
    nlohmann::json seq = nlohmann::json::array();
    for (const Term& s : d.leaf_shifts[k]) seq.push_back(to_string(s));
    shifts.push_back({{"leaf", k < words.size() ? words[k] : ""}, {"shifts", seq}});
  }
  return {{"tree", to_string(d.tree)},
          {"term", to_string(d.term)},
          {"type", to_string(d.type)},
          {"shifts", shifts},
          {"reading", reading_to_json(classify_reading(d))}};
}

}  // namespace donkeykit
