#include "donkeykit/oracle.hpp"

#include <algorithm>

#include "donkeykit/error.hpp"

namespace donkeykit {

OracleResult fo_truth(const SentenceSpec& spec, const Model& model) {
  for (const std::string& p : spec.signature.predicates) model.predicate(p);
  for (const std::string& r : spec.signature.relations) model.relation(r);
  OracleResult out;
  out.arity = spec.arity;
  std::vector<std::size_t> args(spec.arity, 0);
  const std::size_t n = model.size();
  if (spec.arity > 0 && n == 0) return out;
  for (;;) {
    out.values.push_back(spec.condition(model, args));
    std::size_t k = spec.arity;
    while (k > 0 && ++args[k - 1] == n) args[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

nlohmann::json oracle_to_json(const OracleResult& r, const Model& model) {
  if (r.arity == 0) return {{"truth", !r.values.empty() && r.values.front()}};
  nlohmann::json rows = nlohmann::json::array();
  std::vector<std::size_t> args(r.arity, 0);
  for (bool v : r.values) {
    nlohmann::json names = nlohmann::json::array();
    for (std::size_t a : args) names.push_back(model.name(a));
    rows.push_back({{"args", names}, {"truth", v}});
    std::size_t k = r.arity;
    while (k > 0 && ++args[k - 1] == model.size()) args[--k] = 0;
  }
  return {{"table", rows}};
}

// ---------------------------------------------------------------------------
// Registry

namespace {

using Args = std::vector<std::size_t>;

bool exists(const Model& m, const std::function<bool(std::size_t)>& p) {
  for (std::size_t x = 0; x < m.size(); ++x)
    if (p(x)) return true;
  return false;
}

bool forall(const Model& m, const std::function<bool(std::size_t)>& p) {
  for (std::size_t x = 0; x < m.size(); ++x)
    if (!p(x)) return false;
  return true;
}

std::vector<SentenceSpec> build_specs() {
  std::vector<SentenceSpec> specs;
  const Signature man{{"man", "witp", "whistle"}, {}};
  const std::string discourse1 = "[[a man] [witp]] . [[he] [whistles]]";

  specs.push_back({"a-man-whistles-bound", "bound", discourse1,
                   "(z_0_0 (gOut_1_0 seq) hw amw)", "e |x 1", man, 0,
                   [](const Model& m, const Args&) {
                     return exists(m, [&](std::size_t x) {
                       return m.holds("man", x) && m.holds("witp", x) && m.holds("whistle", x);
                     });
                   }});

  specs.push_back({"a-man-whistles-free", "free", discourse1,
                   "(gOut_1_0 (gIn_0_1 seq) hw amw)", "e |x e |> 1", man, 1,
                   [](const Model& m, const Args& a) {
                     return exists(m, [&](std::size_t x) {
                              return m.holds("man", x) && m.holds("witp", x);
                            }) &&
                            m.holds("whistle", a[0]);
                   }});

  specs.push_back(
      {"donkey-universal", "bound",
       "[[every [farmer [who [owns [a donkey]]]]] [beats it]]", "(every x y)", "1",
       Signature{{"farmer", "donkey"}, {"own", "beat"}}, 0, [](const Model& m, const Args&) {
         return forall(m, [&](std::size_t x) {
           auto owned = [&](std::size_t y) { return m.holds("donkey", y) && m.holds("own", x, y); };
           if (!(m.holds("farmer", x) && exists(m, owned))) return true;
           return forall(m, [&](std::size_t y) { return !owned(y) || m.holds("beat", x, y); });
         });
       }});

  specs.push_back({"no-girl-she-talks", "free", "[[no girl] [walks]] . [[she] [talks]]",
                   "(gIn_0_1 seq (gIn_0_0 talk she) (no (gOut_0_0 girl) (gOut_0_0 walk)))",
                   "e |> 1", Signature{{"girl", "walk", "talk"}, {}}, 1,
                   [](const Model& m, const Args& a) {
                     return !exists(m, [&](std::size_t x) {
                              return m.holds("girl", x) && m.holds("walk", x);
                            }) &&
                            m.holds("talk", a[0]);
                   }});

  specs.push_back({"a-girl-she-talks", "bound", "[[a girl] [walks]] . [[she] [talks]]",
                   "(z_0_0 (gOut_1_0 seq) (gIn_0_0 talk she) (gOut_0_0 walk (a (gOut_0_0 girl))))",
                   "e |x 1", Signature{{"girl", "walk", "talk"}, {}}, 0,
                   [](const Model& m, const Args&) {
                     return exists(m, [&](std::size_t x) {
                       return m.holds("girl", x) && m.holds("walk", x) && m.holds("talk", x);
                     });
                   }});
  return specs;
}

}  // namespace

const std::vector<SentenceSpec>& sentence_specs() {
  static const std::vector<SentenceSpec> specs = build_specs();
  return specs;
}

const SentenceSpec& find_spec(const std::string& id) {
  for (const SentenceSpec& s : sentence_specs())
    if (s.id == id) return s;
  throw Error("unknown sentence spec '" + id + "'");
}

SentenceSpec with_swapped_relations(const SentenceSpec& spec, const std::string& a,
                                    const std::string& b) {
  SentenceSpec out = spec;
  out.id = spec.id + "[" + a + "<->" + b + "]";
  auto inner = spec.condition;
  out.condition = [inner, a, b](const Model& m, const Args& args) {
    Model swapped(m.universe());
    for (const auto& [name, ext] : m.predicates()) {
      std::vector<std::size_t> members;
      for (std::size_t x = 0; x < ext.size(); ++x)
        if (ext[x]) members.push_back(x);
      swapped.set_predicate(name, members);
    }
    for (const auto& [name, ext] : m.relations()) {
      const std::string& target = name == a ? b : name == b ? a : name;
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t k = 0; k < ext.size(); ++k)
        if (ext[k]) pairs.emplace_back(k / m.size(), k % m.size());
      swapped.set_relation(target, pairs);
    }
    return inner(swapped, args);
  };
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::size_t bits_for(const Signature& sig, std::size_t n) {
  return n * sig.predicates.size() + n * n * sig.relations.size();
}

std::vector<std::string> universe_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= n; ++k) names.push_back("u" + std::to_string(k));
  return names;
}

}  // namespace

std::uint64_t count_models(const Signature& sig, std::size_t max_size) {
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= max_size; ++n) {
    const std::size_t bits = bits_for(sig, n);
    if (bits >= 64) return UINT64_MAX;
    const std::uint64_t c = std::uint64_t{1} << bits;
    if (total > UINT64_MAX - c) return UINT64_MAX;
    total += c;
  }
  return total;
}

Model model_from_bits(const Signature& sig, std::size_t n, std::uint64_t bits) {
  Model m(universe_names(n));
  std::size_t pos = 0;
  auto bit = [&] { return ((bits >> pos++) & 1u) != 0; };
  for (const std::string& p : sig.predicates) {
    std::vector<std::size_t> members;
    for (std::size_t x = 0; x < n; ++x)
      if (bit()) members.push_back(x);
    m.set_predicate(p, members);
  }
  for (const std::string& r : sig.relations) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (bit()) pairs.emplace_back(x, y);
    m.set_relation(r, pairs);
  }
  return m;
}

ModelStream ModelStream::exhaustive(const Signature& sig, std::size_t max_size,
                                    std::uint64_t cap) {
  if (max_size < 1) throw ModelError("models need at least one individual");
  const std::uint64_t total = count_models(sig, max_size);
  if (total > cap)
    throw SizeOverflow("exhaustive enumeration would produce " +
                       (total == UINT64_MAX ? std::string("too many") : std::to_string(total)) +
                       " models (cap " + std::to_string(cap) + "); use random mode instead");
  ModelStream s;
  s.mode_ = Mode::Exhaustive;
  s.sig_ = sig;
  s.max_size_ = max_size;
  s.size_ = 1;
  s.total_ = total;
  return s;
}

ModelStream ModelStream::random(const Signature& sig, std::size_t size, std::uint64_t seed,
                                std::uint64_t count) {
  if (size < 1) throw ModelError("models need at least one individual");
  if (bits_for(sig, size) > 64)
    throw SizeOverflow("random models of size " + std::to_string(size) +
                       " exceed 64 extension bits");
  ModelStream s;
  s.mode_ = Mode::Random;
  s.sig_ = sig;
  s.size_ = size;
  s.total_ = count;
  s.rng_.seed(seed);
  return s;
}

ModelStream ModelStream::of(std::vector<Model> models) {
  ModelStream s;
  s.mode_ = Mode::Fixed;
  s.total_ = models.size();
  s.fixed_ = std::move(models);
  return s;
}

bool ModelStream::next(Model& out) {
  if (produced_ >= total_) return false;
  switch (mode_) {
    case Mode::Fixed:
      out = fixed_[produced_];
      break;
    case Mode::Random: {
      const std::size_t bits = bits_for(sig_, size_);
      std::uint64_t word = rng_();
      if (bits < 64) word &= (std::uint64_t{1} << bits) - 1;
      out = model_from_bits(sig_, size_, word);
      break;
    }
    case Mode::Exhaustive: {
      while (index_ >= (std::uint64_t{1} << bits_for(sig_, size_))) {
        index_ = 0;
        ++size_;
      }
      out = model_from_bits(sig_, size_, index_++);
      break;
    }
  }
  ++produced_;
  return true;
}

}  // namespace donkeykit
