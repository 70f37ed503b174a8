#include "donkeykit/model.hpp"

#include <fstream>
#include <set>

#include "donkeykit/error.hpp"

namespace donkeykit {

Model::Model(std::vector<std::string> universe) : universe_(std::move(universe)) {
  std::set<std::string> seen;
  for (const auto& n : universe_) {
    if (n.empty()) throw ModelError("individual names must be nonempty");
    if (!seen.insert(n).second) throw ModelError("duplicate individual '" + n + "'");
  }
}

std::optional<std::size_t> Model::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (universe_[i] == name) return i;
  return std::nullopt;
}

void Model::set_predicate(const std::string& name,
                          const std::vector<std::size_t>& members) {
  if (name.empty()) throw ModelError("predicate names must be nonempty");
  std::vector<bool> ext(size(), false);
  for (std::size_t m : members) {
    if (m >= size()) throw ModelError("extension of '" + name + "' leaves the universe");
    ext[m] = true;
  }
  preds_[name] = std::move(ext);
}

void Model::set_relation(const std::string& name,
                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  if (name.empty()) throw ModelError("relation names must be nonempty");
  std::vector<bool> ext(size() * size(), false);
  for (auto [a, b] : pairs) {
    if (a >= size() || b >= size())
      throw ModelError("extension of '" + name + "' leaves the universe");
    ext[a * size() + b] = true;
  }
  rels_[name] = std::move(ext);
}

const std::vector<bool>& Model::predicate(const std::string& name) const {
  auto it = preds_.find(name);
  if (it == preds_.end()) throw MissingPredicate(name);
  return it->second;
}

const std::vector<bool>& Model::relation(const std::string& name) const {
  auto it = rels_.find(name);
  if (it == rels_.end()) throw MissingPredicate(name);
  return it->second;
}

nlohmann::json model_to_json(const Model& m) {
  nlohmann::json j;
  j["universe"] = m.universe();
  j["pred"] = nlohmann::json::object();
  j["rel"] = nlohmann::json::object();
  for (const auto& [name, ext] : m.predicates()) {
    auto& arr = j["pred"][name] = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (ext[i]) arr.push_back(m.name(i));
  }
  for (const auto& [name, ext] : m.relations()) {
    auto& arr = j["rel"][name] = nlohmann::json::array();
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = 0; b < m.size(); ++b)
        if (ext[a * m.size() + b]) arr.push_back({m.name(a), m.name(b)});
  }
  return j;
}

Model model_from_json(const nlohmann::json& j) {
  try {
    Model m(j.at("universe").get<std::vector<std::string>>());
    auto index = [&](const std::string& n) {
      auto i = m.index_of(n);
      if (!i) throw ModelError("unknown individual '" + n + "'");
      return *i;
    };
    if (j.contains("pred")) {
      for (const auto& [name, arr] : j.at("pred").items()) {
        std::vector<std::size_t> members;
        for (const auto& x : arr) members.push_back(index(x.get<std::string>()));
        m.set_predicate(name, members);
      }
    }
    if (j.contains("rel")) {
      for (const auto& [name, arr] : j.at("rel").items()) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (const auto& p : arr) {
          if (!p.is_array() || p.size() != 2)
            throw ModelError("relation '" + name + "' entries must be pairs");
          pairs.emplace_back(index(p[0].get<std::string>()), index(p[1].get<std::string>()));
        }
        m.set_relation(name, pairs);
      }
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ModelError(std::string("malformed model: ") + e.what());
  }
}

Model load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ModelError("model file '" + path + "': " + e.what());
  }
  return model_from_json(j);
}

}  // namespace donkeykit
