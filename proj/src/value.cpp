#include "donkeykit/value.hpp"

#include <algorithm>
#include <atomic>

#include "donkeykit/error.hpp"

namespace donkeykit {

Value Value::atom(std::uint32_t individual) {
  Value v;
  v.kind_ = Kind::Atom;
  v.atom_ = individual;
  return v;
}

Value Value::star() { return Value{}; }

Value Value::pair(Value first, Value second) {
  Value v;
  v.kind_ = Kind::Pair;
  v.pair_ = std::make_shared<const PairNode>(PairNode{std::move(first), std::move(second)});
  return v;
}

Value Value::closure(std::shared_ptr<const Closure> fn) {
  Value v;
  v.kind_ = Kind::Fn;
  v.fn_ = std::move(fn);
  return v;
}

std::uint32_t Value::individual() const {
  if (kind_ != Kind::Atom) throw TypeMismatch("expected an individual");
  return atom_;
}

const Value& Value::first() const {
  if (kind_ != Kind::Pair) throw TypeMismatch("expected a pair");
  return pair_->first;
}

const Value& Value::second() const {
  if (kind_ != Kind::Pair) throw TypeMismatch("expected a pair");
  return pair_->second;
}

const Closure& Value::fn() const {
  if (kind_ != Kind::Fn) throw TypeMismatch("expected a function");
  return *fn_;
}

ValueSet Value::operator()(const Value& arg) const { return fn().body(arg); }

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  switch (a.kind_) {
    case Value::Kind::Atom:
      return a.atom_ <=> b.atom_;
    case Value::Kind::Star:
      return std::strong_ordering::equal;
    case Value::Kind::Pair:
      if (a.pair_ == b.pair_) return std::strong_ordering::equal;
      if (auto c = a.pair_->first <=> b.pair_->first; c != 0) return c;
      return a.pair_->second <=> b.pair_->second;
    case Value::Kind::Fn:
      return a.fn_->id <=> b.fn_->id;
  }
  return std::strong_ordering::equal;
}

namespace {

std::atomic<std::uint64_t> next_closure_id{0};

Value new_closure(std::function<ValueSet(const Value&)> body) {
  return Value::closure(std::make_shared<const Closure>(Closure{std::move(body), next_closure_id++}));
}

}  // namespace

Value union_relation(const ValueSet& fns) {
  if (fns.size() == 1) return *fns.begin();
  return new_closure([fns](const Value& a) {
    ValueSet out;
    for (const Value& c : fns) out.insert_all(c(a));
    return out;
  });
}

ValueSet apply_val(const ValueSet& f, const ValueSet& x) {
  ValueSet out;
  if (x.size() > 1 && std::all_of(x.begin(), x.end(),
                                  [](const Value& v) { return v.kind() == Value::Kind::Fn; })) {
    const Value r = union_relation(x);
    for (const Value& c : f) out.insert_all(c(r));
    return out;
  }
  for (const Value& c : f)
    for (const Value& v : x) out.insert_all(c(v));
  return out;
}

std::shared_ptr<EvalContext> EvalContext::create(const Model& model) {
  return std::shared_ptr<EvalContext>(new EvalContext(model));
}

Value EvalContext::make_closure(std::function<ValueSet(const Value&)> body) {
  ++next_id_;
  return new_closure(std::move(body));
}

namespace {

Value build(const Type& t, const std::vector<Value>& comps, std::size_t& next) {
  if (t.is(TypeKind::Unit)) return Value::star();
  if (t.is(TypeKind::Prod)) {
    Value l = build(t.lhs(), comps, next);
    Value r = build(t.rhs(), comps, next);
    return Value::pair(std::move(l), std::move(r));
  }
  return comps.at(next++);
}

void flatten(const Type& t, const Value& v, std::vector<Value>& out) {
  if (t.is(TypeKind::Unit)) return;
  if (t.is(TypeKind::Prod)) {
    flatten(t.lhs(), v.first(), out);
    flatten(t.rhs(), v.second(), out);
    return;
  }
  out.push_back(v);
}

}  // namespace

SplitValue split_referents(const Value& v, const Type& referents) {
  const std::size_t k = referent_components(referents).size();
  std::vector<Value> comps;
  comps.reserve(k);
  const Value* cur = &v;
  for (std::size_t i = 0; i < k; ++i) {
    comps.push_back(cur->first());
    cur = &cur->second();
  }
  std::size_t next = 0;
  return {build(referents, comps, next), *cur};
}

Value join_referents(const Type& referents, const Value& s, const Value& rest) {
  std::vector<Value> comps;
  flatten(referents, s, comps);
  Value out = rest;
  for (std::size_t i = comps.size(); i-- > 0;) out = Value::pair(comps[i], out);
  return out;
}

std::string to_string(const Value& v, const Model& m) {
  switch (v.kind()) {
    case Value::Kind::Atom:
      return v.individual() < m.size() ? m.name(v.individual())
                                       : "#" + std::to_string(v.individual());
    case Value::Kind::Star:
      return "*";
    case Value::Kind::Pair:
      return "<" + to_string(v.first(), m) + "," + to_string(v.second(), m) + ">";
    case Value::Kind::Fn:
      return "<fn#" + std::to_string(v.fn().id) + ">";
  }
  return "?";
}

std::string to_string(const ValueSet& vs, const Model& m) {
  std::string out = "{";
  bool first = true;
  for (const Value& v : vs) {
    if (!first) out += ", ";
    first = false;
    out += to_string(v, m);
  }
  return out + "}";
}

}  // namespace donkeykit
