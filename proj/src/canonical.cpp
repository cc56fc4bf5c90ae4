#include "growthlab/canonical.hpp"

#include <map>
#include <unordered_map>

#include "growthlab/errors.hpp"

namespace growthlab {

bool CanonicalForm::is_identity() const {
  for (const auto& row : table)
    for (std::size_t x = 0; x < row.size(); ++x)
      if (row[x].target >= 0 && (row[x].out.size() != 1 || row[x].out[0] != x)) return false;
  return true;
}

CanonicalForm minimize(const Transducer& t, std::size_t cap) {
  const auto k = t.alphabet().size();

  // Subset construction over runner states.
  std::unordered_map<std::string, int> index;
  std::vector<Runner> states;
  std::vector<std::vector<CanonicalForm::Edge>> raw;
  states.emplace_back(t);
  index.emplace(states[0].key(), 0);
  for (std::size_t i = 0; i < states.size(); ++i) {
    std::vector<CanonicalForm::Edge> row(k);
    for (Letter x = 0; x < k; ++x) {
      Runner r = states[i];
      if (!r.try_feed(x)) continue;
      row[x].out = r.take_output();
      auto [it, fresh] = index.emplace(r.key(), static_cast<int>(states.size()));
      if (fresh) {
        if (states.size() >= cap) throw ResourceLimit("determinization exceeded cap");
        states.push_back(std::move(r));
      }
      row[x].target = it->second;
    }
    raw.push_back(std::move(row));
  }

  // Moore refinement on (readable, output, target class) per letter.
  const int n = static_cast<int>(raw.size());
  std::vector<int> cls(n, 0);
  int count = 1;
  for (;;) {
    std::map<std::pair<int, std::vector<std::pair<int, Word>>>, int> sigs;
    std::vector<int> next(n);
    for (int q = 0; q < n; ++q) {
      std::vector<std::pair<int, Word>> sig;
      for (const auto& e : raw[q]) sig.emplace_back(e.target < 0 ? -1 : cls[e.target], e.out);
      next[q] = sigs.emplace(std::make_pair(cls[q], std::move(sig)), static_cast<int>(sigs.size()))
                    .first->second;
    }
    cls = std::move(next);
    int new_count = static_cast<int>(sigs.size());
    if (new_count == count) break;
    count = new_count;
  }

  // BFS renumbering of the quotient.
  std::vector<int> rep(count, -1);
  for (int q = n - 1; q >= 0; --q) rep[cls[q]] = q;
  std::vector<int> number(count, -1);
  std::vector<int> order{cls[0]};
  number[cls[0]] = 0;
  CanonicalForm cf;
  cf.alphabet_size = k;
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<CanonicalForm::Edge> row(k);
    for (Letter x = 0; x < k; ++x) {
      const auto& e = raw[rep[order[i]]][x];
      if (e.target < 0) continue;
      int c = cls[e.target];
      if (number[c] < 0) {
        number[c] = static_cast<int>(order.size());
        order.push_back(c);
      }
      row[x] = CanonicalForm::Edge{number[c], e.out};
    }
    cf.table.push_back(std::move(row));
  }
  for (const auto& row : cf.table) {
    for (const auto& e : row) {
      cf.key += std::to_string(e.target);
      cf.key.push_back(':');
      for (Letter c : e.out) cf.key.push_back(static_cast<char>('a' + c));
      cf.key.push_back(',');
    }
    cf.key.push_back(';');
  }
  return cf;
}

namespace {

void action_dfs(const Runner& r, int depth, std::size_t k, std::string& key) {
  if (depth == 0) return;
  for (Letter x = 0; x < k; ++x) {
    Runner next = r;
    if (!next.try_feed(x)) continue;
    key.push_back('(');
    for (Letter c : next.take_output()) key.push_back(static_cast<char>('a' + c));
    action_dfs(next, depth - 1, k, key);
    key.push_back(')');
  }
}

}  // namespace

std::string action_key(const Transducer& t, int depth) {
  std::string key;
  action_dfs(Runner(t), depth, t.alphabet().size(), key);
  return key;
}

}  // namespace growthlab
