#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace donkeykit {

using VarId = std::uint32_t;

enum class TypeKind : std::uint8_t { E, Unit, Arrow, In, Out, Prod, Var };

// Immutable type term. Copies share structure.
//
//   e         individuals
//   1         unit; sentences denote subsets of {*}
//   a -> b    function (relation, once lifted into the powerset monad)
//   a |> b    input: b depending on an antecedent of type a
//   a |x b    output: b paired with discourse referents of type a
//   a * b     product
//
// Variables compare by id only; the name is for display.
class Type {
 public:
  static Type e();
  static Type unit();
  static Type arrow(Type from, Type to);
  static Type in(Type antecedent, Type body);
  static Type out(Type referents, Type body);
  static Type prod(Type first, Type second);
  static Type var(VarId id, std::string name);

  TypeKind kind() const;
  bool is(TypeKind k) const { return kind() == k; }
  bool is_binary() const;

  // Only valid for binary constructors.
  const Type& lhs() const;
  const Type& rhs() const;

  // Only valid for variables.
  VarId var_id() const;
  const std::string& var_name() const;

  friend bool operator==(const Type& a, const Type& b);
  friend std::strong_ordering operator<=>(const Type& a, const Type& b);

 private:
  struct Node;
  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Session-local source of fresh type variables.
class VarSupply {
 public:
  VarSupply() = default;
  explicit VarSupply(VarId first) : next_(first) {}

  // The printed name is hint followed by the id, e.g. "σ12".
  Type fresh(std::string_view hint);
  VarId peek() const { return next_; }

 private:
  VarId next_ = 1;
};

// Rewrites 1 |x t => t and (a * b) |x t => a |x (b |x t) innermost-first
// until no rule applies.
Type normalize(const Type& t);
bool is_canonical(const Type& t);

std::string to_string(const Type& t);

// Parses the textual type syntax. Precedence from loosest: ->, then
// |> and |x, then *. All three levels associate to the right. Identifiers
// other than `e` are type variables; equal names denote the same variable
// within one call. Unicode spellings → ∈ ⋉ × are accepted too.
Type parse_type(std::string_view text, VarSupply& vars);

std::set<VarId> free_vars(const Type& t);
bool occurs(VarId v, const Type& t);

// Renames variables in order of first occurrence: each variable keeps the
// alphabetic part of its name and gets the next index for that prefix.
Type canonical_rename(const Type& t);
bool alpha_equivalent(const Type& a, const Type& b);

// Replaces every remaining variable with 1 and normalizes.
Type ground(const Type& t);

// Components of the flattened product a type contributes when it heads an
// output spine: 1 contributes none, a * b the components of both.
std::vector<Type> referent_components(const Type& t);

// Splits a canonical type into its leading |x heads and the remainder.
struct OutSpine {
  std::vector<Type> heads;
  Type tail;
};
OutSpine out_spine(const Type& t);

class Substitution {
 public:
  Substitution() = default;

  // Precondition: v is unbound and does not occur in t after resolution.
  void bind(VarId v, Type t);
  const Type* lookup(VarId v) const;
  bool contains(VarId v) const { return map_.count(v) != 0; }
  std::size_t size() const { return map_.size(); }

  // Resolves bound variables transitively; the result is normalized.
  Type apply(const Type& t) const;

  // Union of bindings; the domains must be disjoint.
  void merge(const Substitution& other);

  const std::map<VarId, Type>& bindings() const { return map_; }

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.map_ == b.map_;
  }

 private:
  std::map<VarId, Type> map_;
};

// All most-general unifiers of a and b modulo the output isomorphisms,
// extending `initial`. Variables in `rigid` behave as constants.
//
// A variable heading an output spine is matched against every prefix of
// the other spine (the empty prefix binds it to 1). Unifiers that are
// instances of another returned unifier are dropped.
std::vector<Substitution> unify(const Type& a, const Type& b,
                                const Substitution& initial = {},
                                const std::set<VarId>& rigid = {});

// True when some substitution for the variables of `general` turns it into
// `specific` (modulo the output isomorphisms).
bool instance_of(const Type& specific, const Type& general);

// True when `specific` is an instance of `general` on the variables of vars.
bool subsumes(const Substitution& general, const Substitution& specific,
              const std::vector<Type>& over);

enum class ShiftBase : std::uint8_t { GIn, GOut, Z, S };

std::string_view shift_base_name(ShiftBase b);

// Type of the indexed shift G^i(I^j(base)) with fresh variables, together
// with the variable standing for the threaded referent type of the base.
struct ShiftSchema {
  Type type;
  Type referent;
};

constexpr int kDefaultMaxShiftIndex = 4;

// Throws BoundExceeded when i or j exceeds max_index.
ShiftSchema shift_schema(ShiftBase base, int i, int j, VarSupply& vars,
                         int max_index = kDefaultMaxShiftIndex);
Type shift_type(ShiftBase base, int i, int j, VarSupply& vars,
                int max_index = kDefaultMaxShiftIndex);

}  // namespace donkeykit
