#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "donkeykit/model.hpp"
#include "donkeykit/types.hpp"

namespace donkeykit {

class Value;
class ValueSet;

struct Closure {
  std::function<ValueSet(const Value&)> body;
  std::uint64_t id;
};

// Semantic value at a canonical type: an individual, the unit *, a pair
// (both for |x spines and for products) or a closure (for -> and |>).
class Value {
 public:
  enum class Kind : std::uint8_t { Atom, Star, Pair, Fn };

  static Value atom(std::uint32_t individual);
  static Value star();
  static Value pair(Value first, Value second);
  static Value closure(std::shared_ptr<const Closure> fn);

  Kind kind() const { return kind_; }
  std::uint32_t individual() const;
  const Value& first() const;
  const Value& second() const;
  const Closure& fn() const;

  ValueSet operator()(const Value& arg) const;

  friend bool operator==(const Value& a, const Value& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  struct PairNode;
  Kind kind_ = Kind::Star;
  std::uint32_t atom_ = 0;
  std::shared_ptr<const PairNode> pair_;
  std::shared_ptr<const Closure> fn_;
};

struct Value::PairNode {
  Value first;
  Value second;
};

// Finite set of values of one type, kept sorted so output is stable.
// Closures are ordered by construction id, not extensionally.
class ValueSet {
 public:
  ValueSet() = default;
  ValueSet(std::initializer_list<Value> vs) : items_(vs) {}

  static ValueSet single(Value v) { return ValueSet{std::move(v)}; }

  void insert(Value v) { items_.insert(std::move(v)); }
  void insert_all(const ValueSet& other) { items_.insert(other.items_.begin(), other.items_.end()); }

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  using const_iterator = std::set<Value>::const_iterator;
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }

  friend bool operator==(const ValueSet&, const ValueSet&) = default;

 private:
  std::set<Value> items_;
};

// Image of x under the relation f: the union of c(v) over c in f, v in x.
// Values of function type are relations, so a set of several closures is
// passed on as the single closure of their union.
ValueSet apply_val(const ValueSet& f, const ValueSet& x);

// The closure mapping a to the union of c(a) over c in fns; the empty
// relation when fns is empty.
Value union_relation(const ValueSet& fns);

// Per-evaluation state: the model and the count of closures built.
// Closures hold a shared reference so they stay usable after evaluation
// returns.
class EvalContext : public std::enable_shared_from_this<EvalContext> {
 public:
  static std::shared_ptr<EvalContext> create(const Model& model);

  const Model& model() const { return model_; }
  std::uint64_t closures_built() const { return next_id_; }

  Value make_closure(std::function<ValueSet(const Value&)> body);

 private:
  explicit EvalContext(const Model& model) : model_(model) {}
  Model model_;
  std::uint64_t next_id_ = 0;
};

// Splitting and rebuilding pairs along an output spine. `referents` is the
// (ground) type of the leading component, which may be 1 or a product and
// therefore covers zero or more pair layers.
struct SplitValue {
  Value referents;
  Value rest;
};
SplitValue split_referents(const Value& v, const Type& referents);
Value join_referents(const Type& referents, const Value& s, const Value& rest);

std::string to_string(const Value& v, const Model& m);
std::string to_string(const ValueSet& vs, const Model& m);

}  // namespace donkeykit
