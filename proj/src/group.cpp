#include "growthlab/group.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "growthlab/errors.hpp"

namespace growthlab {

GroupElement::GroupElement(Transducer machine, std::string word)
    : machine_(reduce(trim(machine))), canonical_(minimize(machine_)), word_(std::move(word)) {}

GroupElement compose(const GroupElement& x, const GroupElement& y) {
  std::string w = x.word().empty() ? y.word()
                  : y.word().empty() ? x.word()
                                     : x.word() + " " + y.word();
  return GroupElement(compose(x.machine(), y.machine()), w);
}

GroupElement invert(const GroupElement& x) {
  return GroupElement(invert(x.machine()), x.word().empty() ? "" : "(" + x.word() + ")^-1");
}

GroupElement identity_element(const Transducer::AlphabetPtr& alphabet) {
  return GroupElement(Transducer::identity(alphabet));
}

int GeneratorSet::index(std::string_view symbol) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].symbol == symbol) return static_cast<int>(i);
  throw NotFound("generator '" + std::string(symbol) + "' in " + name);
}

GroupElement GeneratorSet::element(std::string_view symbol) const {
  return GroupElement(generators[index(symbol)].machine, std::string(symbol));
}

GroupElement GeneratorSet::product(const std::vector<int>& word) const {
  Transducer t = Transducer::identity(alphabet);
  for (int s : word) t = compose(t, generators.at(s).machine);
  return GroupElement(t, format_word(word));
}

std::vector<int> GeneratorSet::parse_word(std::string_view text) const {
  std::vector<int> out;
  bool single = std::all_of(generators.begin(), generators.end(),
                            [](const Generator& g) { return g.symbol.size() == 1; });
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == ',') {
      ++pos;
      continue;
    }
    std::size_t end = single ? pos + 1 : text.find_first_of(" ,", pos);
    if (end == std::string_view::npos) end = text.size();
    out.push_back(index(text.substr(pos, end - pos)));
    pos = end;
  }
  return out;
}

std::string GeneratorSet::format_word(const std::vector<int>& word) const {
  bool single = std::all_of(generators.begin(), generators.end(),
                            [](const Generator& g) { return g.symbol.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0 && !single) out.push_back(' ');
    out += generators.at(word[i]).symbol;
  }
  return out;
}

GeneratorSet generators_from_json(const Json& j) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : j.at("allowed_pairs"))
    pairs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  auto alpha = std::make_shared<const SubshiftAlphabet>(
      j.at("alphabet").get<std::vector<std::string>>(), pairs);

  GeneratorSet set;
  set.name = j.value("name", std::string("custom"));
  set.alphabet = alpha;
  for (const auto& g : j.at("generators")) {
    Json one = j;
    one.erase("generators");
    one["initial"] = g.at("initial");
    Transducer t = Transducer::from_json(one);
    set.generators.push_back(
        Generator{g.at("symbol").get<std::string>(),
                  accessible(Transducer(alpha, t.states(), t.initial()))});
  }

  std::vector<std::string> keys;
  for (const auto& g : set.generators) keys.push_back(minimize(g.machine).key);
  set.symmetric = std::all_of(set.generators.begin(), set.generators.end(), [&](const Generator& g) {
    auto k = minimize(invert(g.machine)).key;
    return std::find(keys.begin(), keys.end(), k) != keys.end();
  });
  return set;
}

// Shared-state layout read by generators_from_json; state ids are prefixed
// with the generator symbol so machines cannot collide.
Json generators_to_json(const GeneratorSet& g) {
  Json j;
  j["name"] = g.name;
  j["alphabet"] = g.alphabet->letters();
  Json pairs = Json::array();
  for (const auto& [a, b] : g.alphabet->allowed_pairs()) pairs.push_back({a, b});
  j["allowed_pairs"] = pairs;
  Json states = Json::array();
  Json gens = Json::array();
  for (const auto& s : g.generators) {
    const std::string prefix = s.symbol + ":";
    Json t = s.machine.to_json();
    for (auto st : t.at("states")) {
      st["id"] = prefix + st["id"].get<std::string>();
      for (auto& tr : st["transitions"]) tr["next"] = prefix + tr["next"].get<std::string>();
      states.push_back(std::move(st));
    }
    gens.push_back({{"symbol", s.symbol}, {"initial", prefix + t.at("initial").get<std::string>()}});
  }
  j["states"] = states;
  j["generators"] = gens;
  return j;
}

namespace {

std::string oracle_key(const Transducer& t, Oracle oracle, int depth) {
  return oracle == Oracle::Minimize ? minimize(t).key : action_key(t, depth);
}

}  // namespace

std::vector<std::uint64_t> cayley_ball(const GeneratorSet& gens, int radius, Oracle oracle,
                                       std::size_t cap, int depth) {
  if (radius < 0) throw DomainError("radius must be nonnegative");
  const auto k = gens.size();
  std::vector<Transducer> frontier{Transducer::identity(gens.alphabet)};
  std::unordered_set<std::string> seen{oracle_key(frontier[0], oracle, depth)};
  std::vector<std::uint64_t> gamma{1};
  for (int r = 1; r <= radius; ++r) {
    const std::size_t m = frontier.size() * k;
    std::vector<Transducer> products(m, frontier[0]);
    std::vector<std::string> keys(m);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::size_t i = 0; i < m; ++i) {
      products[i] = compose(frontier[i / k], gens.generators[i % k].machine);
      keys[i] = oracle_key(products[i], oracle, depth);
    }
    std::vector<Transducer> next;
    for (std::size_t i = 0; i < m; ++i)
      if (seen.insert(keys[i]).second) {
        if (seen.size() > cap)
          throw ResourceLimit("ball of radius " + std::to_string(r) + " exceeds cap " +
                              std::to_string(cap));
        next.push_back(std::move(products[i]));
      }
    gamma.push_back(seen.size());
    frontier = std::move(next);
  }
  return gamma;
}

DualOracleReport dual_oracle_check(const GeneratorSet& gens, int radius, std::size_t cap,
                                   int depth) {
  if (radius < 0) throw DomainError("radius must be nonnegative");
  const auto k = gens.size();
  DualOracleReport rep;
  std::vector<Transducer> frontier{Transducer::identity(gens.alphabet)};
  std::vector<std::string> frontier_words{""};
  std::unordered_map<std::string, std::string> min_to_act, act_to_min;
  std::unordered_map<std::string, std::string> min_word;
  auto k0 = minimize(frontier[0]).key;
  auto a0 = action_key(frontier[0], depth);
  min_to_act[k0] = a0;
  act_to_min[a0] = k0;
  min_word[k0] = "";
  rep.by_minimize.push_back(1);
  rep.by_action.push_back(1);
  for (int r = 1; r <= radius; ++r) {
    const std::size_t m = frontier.size() * k;
    std::vector<Transducer> products(m, frontier[0]);
    std::vector<std::string> mk(m), ak(m);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::size_t i = 0; i < m; ++i) {
      products[i] = compose(frontier[i / k], gens.generators[i % k].machine);
      mk[i] = minimize(products[i]).key;
      ak[i] = action_key(products[i], depth);
    }
    std::vector<Transducer> next;
    std::vector<std::string> next_words;
    std::size_t fresh_act = 0;
    for (std::size_t i = 0; i < m; ++i) {
      ++rep.products_checked;
      std::string w = frontier_words[i / k] + (frontier_words[i / k].empty() ? "" : " ") +
                      gens.generators[i % k].symbol;
      auto [it_m, new_m] = min_to_act.emplace(mk[i], ak[i]);
      auto [it_a, new_a] = act_to_min.emplace(ak[i], mk[i]);
      if (new_a) ++fresh_act;
      if (it_m->second != ak[i] || it_a->second != mk[i]) {
        if (rep.disagreements++ == 0) {
          auto other = min_word.count(mk[i]) ? min_word[mk[i]] : std::string("?");
          rep.witness = "'" + w + "' vs '" + other + "'";
        }
      }
      if (new_m) {
        if (min_to_act.size() > cap)
          throw ResourceLimit("ball of radius " + std::to_string(r) + " exceeds cap");
        min_word[mk[i]] = w;
        next.push_back(std::move(products[i]));
        next_words.push_back(w);
      }
    }
    rep.by_minimize.push_back(min_to_act.size());
    rep.by_action.push_back(rep.by_action.back() + fresh_act);
    frontier = std::move(next);
    frontier_words = std::move(next_words);
  }
  return rep;
}

}  // namespace growthlab
