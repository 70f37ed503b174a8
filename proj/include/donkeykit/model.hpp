#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace donkeykit {

// Finite first-order structure: a universe of named individuals, unary
// predicate extensions and binary relation extensions. Individuals are
// addressed by their index in the universe.
class Model {
 public:
  Model() = default;
  explicit Model(std::vector<std::string> universe);

  std::size_t size() const { return universe_.size(); }
  const std::vector<std::string>& universe() const { return universe_; }
  const std::string& name(std::size_t i) const { return universe_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  void set_predicate(const std::string& name, const std::vector<std::size_t>& members);
  void set_relation(const std::string& name,
                    const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  bool has_predicate(const std::string& name) const { return preds_.count(name) != 0; }
  bool has_relation(const std::string& name) const { return rels_.count(name) != 0; }

  // Membership vectors; throw MissingPredicate for unknown names.
  // Relations are indexed by first * size() + second.
  const std::vector<bool>& predicate(const std::string& name) const;
  const std::vector<bool>& relation(const std::string& name) const;

  bool holds(const std::string& pred, std::size_t x) const { return predicate(pred)[x]; }
  bool holds(const std::string& rel, std::size_t x, std::size_t y) const {
    return relation(rel)[x * size() + y];
  }

  const std::map<std::string, std::vector<bool>>& predicates() const { return preds_; }
  const std::map<std::string, std::vector<bool>>& relations() const { return rels_; }

  friend bool operator==(const Model&, const Model&) = default;

 private:
  std::vector<std::string> universe_;
  std::map<std::string, std::vector<bool>> preds_;
  std::map<std::string, std::vector<bool>> rels_;
};

// {"universe":[...], "pred":{name:[...]}, "rel":{name:[[a,b],...]}}
nlohmann::json model_to_json(const Model& m);
Model model_from_json(const nlohmann::json& j);
Model load_model(const std::string& path);

}  // namespace donkeykit
