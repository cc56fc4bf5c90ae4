#include "growthlab/transducer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <tuple>

#include "growthlab/errors.hpp"

namespace growthlab {

Transducer::Transducer(AlphabetPtr alphabet, std::vector<StateSpec> states, int initial)
    : alphabet_(std::move(alphabet)), states_(std::move(states)), initial_(initial) {
  if (states_.empty() || initial_ < 0 || initial_ >= state_count())
    throw InvalidWord("transducer needs a valid initial state");
  for (const auto& s : states_)
    for (const auto& tr : s.transitions)
      if (tr.in >= alphabet_->size() || tr.out >= alphabet_->size() || tr.next < 0 ||
          tr.next >= state_count())
        throw InvalidWord("transition out of range in state " + s.id);
  materialize();
  compute_liveness();
}

Transducer Transducer::identity(AlphabetPtr alphabet) {
  return Transducer(std::move(alphabet), {StateSpec{"1", true, {}}}, 0);
}

void Transducer::materialize() {
  const auto k = alphabet_->size();
  int id_state = -1;
  bool need_identity = false;
  for (int q = 0; q < state_count(); ++q) {
    const auto& s = states_[q];
    if (s.identity_extended && s.transitions.empty() && id_state < 0) id_state = q;
    if (s.identity_extended && s.transitions.size() < k) need_identity = true;
  }
  if (need_identity && id_state < 0) {
    id_state = state_count();
    states_.push_back(StateSpec{"1", true, {}});
  }

  moves_.clear();
  offset_.assign(states_.size() * k + 1, 0);
  for (int q = 0; q < state_count(); ++q) {
    const auto& s = states_[q];
    for (Letter x = 0; x < k; ++x) {
      offset_[q * k + x] = moves_.size();
      bool defined = false;
      for (const auto& tr : s.transitions) {
        if (tr.in != x) continue;
        defined = true;
        Move m{tr.out, tr.next};
        bool dup = std::any_of(moves_.begin() + offset_[q * k + x], moves_.end(),
                               [&](const Move& o) { return o.out == m.out && o.next == m.next; });
        if (!dup) moves_.push_back(m);
      }
      if (!defined && s.identity_extended) moves_.push_back(Move{x, id_state});
    }
  }
  offset_.back() = moves_.size();
}

void Transducer::compute_liveness() {
  const int k = static_cast<int>(alphabet_->size());
  const int k1 = k + 1;
  live_.assign(states_.size() * k1 * k1, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (int q = 0; q < state_count(); ++q)
      for (int sigma = -1; sigma < k; ++sigma)
        for (int rho = -1; rho < k; ++rho) {
          auto& cell = live_[(q * k1 + sigma + 1) * k1 + rho + 1];
          if (!cell) continue;
          bool ok = false;
          for (int x = 0; x < k && !ok; ++x) {
            if (!alphabet_->allows(sigma, x)) continue;
            for (const auto& m : moves(q, static_cast<Letter>(x)))
              if (alphabet_->allows(rho, m.out) && live(m.next, x, m.out)) {
                ok = true;
                break;
              }
          }
          if (!ok) {
            cell = 0;
            changed = true;
          }
        }
  }
}

Json Transducer::to_json() const {
  Json j;
  j["alphabet"] = alphabet_->letters();
  Json pairs = Json::array();
  for (const auto& [a, b] : alphabet_->allowed_pairs()) pairs.push_back({a, b});
  j["allowed_pairs"] = pairs;
  Json states = Json::array();
  for (const auto& s : states_) {
    Json trs = Json::array();
    for (const auto& tr : s.transitions)
      trs.push_back({{"in", alphabet_->name(tr.in)},
                     {"out", alphabet_->name(tr.out)},
                     {"next", states_[tr.next].id}});
    states.push_back({{"id", s.id}, {"identity_extended", s.identity_extended}, {"transitions", trs}});
  }
  j["states"] = states;
  j["initial"] = states_[initial_].id;
  return j;
}

namespace {

std::vector<StateSpec> states_from_json(const Json& j, const SubshiftAlphabet& alpha,
                                        std::map<std::string, int>& ids) {
  std::vector<StateSpec> states;
  for (const auto& s : j.at("states")) {
    auto id = s.at("id").get<std::string>();
    if (!ids.emplace(id, static_cast<int>(ids.size())).second)
      throw InvalidWord("duplicate state id " + id);
  }
  for (const auto& s : j.at("states")) {
    StateSpec spec;
    spec.id = s.at("id").get<std::string>();
    spec.identity_extended = s.value("identity_extended", false);
    for (const auto& tr : s.at("transitions")) {
      auto next = tr.at("next").get<std::string>();
      if (!ids.count(next)) throw InvalidWord("unknown state " + next);
      spec.transitions.push_back(Transition{alpha.index(tr.at("in").get<std::string>()),
                                            alpha.index(tr.at("out").get<std::string>()),
                                            ids.at(next)});
    }
    states.push_back(std::move(spec));
  }
  return states;
}

}  // namespace

Transducer Transducer::from_json(const Json& j) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : j.at("allowed_pairs"))
    pairs.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  auto alpha = std::make_shared<const SubshiftAlphabet>(
      j.at("alphabet").get<std::vector<std::string>>(), pairs);
  std::map<std::string, int> ids;
  auto states = states_from_json(j, *alpha, ids);
  auto init = j.at("initial").get<std::string>();
  if (!ids.count(init)) throw InvalidWord("unknown initial state " + init);
  return Transducer(alpha, std::move(states), ids.at(init));
}

Transducer accessible(const Transducer& t) {
  const auto k = t.alphabet().size();
  std::vector<int> index(t.state_count(), -1);
  std::vector<int> order{t.initial()};
  index[t.initial()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Letter x = 0; x < k; ++x)
      for (const auto& m : t.moves(order[i], x))
        if (index[m.next] < 0) {
          index[m.next] = static_cast<int>(order.size());
          order.push_back(m.next);
        }
  std::vector<StateSpec> states;
  for (int q : order) {
    StateSpec s = t.states()[q];
    for (auto& tr : s.transitions) tr.next = index[tr.next];
    states.push_back(std::move(s));
  }
  return Transducer(t.alphabet_ptr(), std::move(states), 0);
}

Transducer trim(const Transducer& t) {
  const int k = static_cast<int>(t.alphabet().size());
  const auto& alpha = t.alphabet();
  auto cfg_id = [&](int q, int s, int r) { return (q * (k + 1) + s + 1) * (k + 1) + r + 1; };

  std::vector<int> index(t.state_count(), -1);
  std::vector<int> order;
  std::vector<char> seen(t.state_count() * (k + 1) * (k + 1), 0);
  std::vector<std::tuple<int, int, int>> queue;
  std::vector<std::vector<Transition>> used(t.state_count());

  if (t.live(t.initial(), -1, -1)) {
    queue.emplace_back(t.initial(), -1, -1);
    seen[cfg_id(t.initial(), -1, -1)] = 1;
    index[t.initial()] = 0;
    order.push_back(t.initial());
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    auto [q, sigma, rho] = queue[i];
    for (int x = 0; x < k; ++x) {
      if (!alpha.allows(sigma, x)) continue;
      for (const auto& m : t.moves(q, static_cast<Letter>(x))) {
        if (!alpha.allows(rho, m.out) || !t.live(m.next, x, m.out)) continue;
        Transition tr{static_cast<Letter>(x), m.out, m.next};
        auto& u = used[q];
        if (std::none_of(u.begin(), u.end(), [&](const Transition& o) {
              return o.in == tr.in && o.out == tr.out && o.next == tr.next;
            }))
          u.push_back(tr);
        if (index[m.next] < 0) {
          index[m.next] = static_cast<int>(order.size());
          order.push_back(m.next);
        }
        if (!seen[cfg_id(m.next, x, m.out)]) {
          seen[cfg_id(m.next, x, m.out)] = 1;
          queue.emplace_back(m.next, x, m.out);
        }
      }
    }
  }
  if (order.empty()) throw InvalidWord("transducer has no infinite admissible run");

  std::vector<StateSpec> states;
  for (int q : order) {
    StateSpec s{t.states()[q].id, false, {}};
    for (auto tr : used[q]) {
      tr.next = index[tr.next];
      s.transitions.push_back(tr);
    }
    std::sort(s.transitions.begin(), s.transitions.end(), [](const auto& a, const auto& b) {
      return std::tie(a.in, a.out, a.next) < std::tie(b.in, b.out, b.next);
    });
    states.push_back(std::move(s));
  }
  return Transducer(t.alphabet_ptr(), std::move(states), 0);
}

Transducer reduce(const Transducer& t) {
  const auto k = t.alphabet().size();
  const int n = t.state_count();
  std::vector<int> cls(n, 0);
  int count = 1;
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next(n);
    for (int q = 0; q < n; ++q) {
      std::vector<int> sig{cls[q]};
      std::vector<std::tuple<int, int, int>> arcs;
      for (Letter x = 0; x < k; ++x)
        for (const auto& m : t.moves(q, x)) arcs.emplace_back(x, m.out, cls[m.next]);
      std::sort(arcs.begin(), arcs.end());
      arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
      for (auto [a, b, c] : arcs) sig.insert(sig.end(), {a, b, c});
      next[q] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size())).first->second;
    }
    int new_count = static_cast<int>(sig_ids.size());
    cls = std::move(next);
    if (new_count == count) break;
    count = new_count;
  }

  // Renumber classes in order of first appearance, starting from the initial state.
  std::vector<int> rename(count, -1);
  std::vector<int> rep;
  auto visit = [&](int q) {
    if (rename[cls[q]] < 0) {
      rename[cls[q]] = static_cast<int>(rep.size());
      rep.push_back(q);
    }
  };
  visit(t.initial());
  for (int q = 0; q < n; ++q) visit(q);

  std::vector<StateSpec> states;
  for (int q : rep) {
    StateSpec s{t.states()[q].id, false, {}};
    for (Letter x = 0; x < k; ++x)
      for (const auto& m : t.moves(q, x)) {
        Transition tr{x, m.out, rename[cls[m.next]]};
        if (std::none_of(s.transitions.begin(), s.transitions.end(), [&](const Transition& o) {
              return o.in == tr.in && o.out == tr.out && o.next == tr.next;
            }))
          s.transitions.push_back(tr);
      }
    states.push_back(std::move(s));
  }
  return Transducer(t.alphabet_ptr(), std::move(states), 0);
}

Transducer compose(const Transducer& x, const Transducer& y) {
  if (x.alphabet_ptr() != y.alphabet_ptr() && !(x.alphabet() == y.alphabet()))
    throw AlphabetMismatch("cannot compose transducers over different subshifts");
  const auto& alpha = x.alphabet();
  const int k = static_cast<int>(alpha.size());
  // Product state (p, q, last intermediate letter).
  std::map<std::tuple<int, int, int>, int> index;
  std::vector<std::tuple<int, int, int>> order;
  auto intern = [&](int p, int q, int m) {
    auto [it, fresh] = index.emplace(std::make_tuple(p, q, m), static_cast<int>(order.size()));
    if (fresh) order.emplace_back(p, q, m);
    return it->second;
  };
  intern(x.initial(), y.initial(), -1);
  std::vector<StateSpec> states;
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto [p, q, mid] = order[i];
    StateSpec s{x.states()[p].id + "." + y.states()[q].id, false, {}};
    for (int a = 0; a < k; ++a)
      for (const auto& mx : x.moves(p, static_cast<Letter>(a))) {
        if (!alpha.allows(mid, mx.out)) continue;
        for (const auto& my : y.moves(q, mx.out))
          s.transitions.push_back(
              Transition{static_cast<Letter>(a), my.out, intern(mx.next, my.next, mx.out)});
      }
    states.push_back(std::move(s));
  }
  return reduce(trim(Transducer(x.alphabet_ptr(), std::move(states), 0)));
}

Transducer invert(const Transducer& x) {
  const auto k = x.alphabet().size();
  std::vector<StateSpec> states;
  for (int q = 0; q < x.state_count(); ++q) {
    StateSpec s{x.states()[q].id, false, {}};
    for (Letter a = 0; a < k; ++a)
      for (const auto& m : x.moves(q, a)) s.transitions.push_back(Transition{m.out, a, m.next});
    states.push_back(std::move(s));
  }
  return reduce(trim(Transducer(x.alphabet_ptr(), std::move(states), x.initial())));
}

bool Runner::Thread::operator<(const Thread& o) const {
  return std::tie(q, rho, pending) < std::tie(o.q, o.rho, o.pending);
}

Runner::Runner(const Transducer& t) : t_(&t) {
  if (t.live(t.initial(), -1, -1)) threads_.push_back(Thread{t.initial(), -1, {}});
}

bool Runner::try_feed(Letter x) {
  const auto& alpha = t_->alphabet();
  if (x >= alpha.size() || !alpha.allows(sigma_, x)) return false;
  std::vector<Thread> next;
  for (const auto& th : threads_)
    for (const auto& m : t_->moves(th.q, x)) {
      if (!alpha.allows(th.rho, m.out) || !t_->live(m.next, x, m.out)) continue;
      Thread nt{m.next, m.out, th.pending};
      nt.pending.push_back(m.out);
      next.push_back(std::move(nt));
    }
  if (next.empty()) return false;
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());

  std::size_t common = next[0].pending.size();
  for (std::size_t i = 1; i < next.size() && common > 0; ++i) {
    std::size_t c = 0;
    while (c < common && next[i].pending[c] == next[0].pending[c]) ++c;
    common = c;
  }
  if (common > 0) {
    committed_.insert(committed_.end(), next[0].pending.begin(), next[0].pending.begin() + common);
    for (auto& th : next) th.pending.erase(th.pending.begin(), th.pending.begin() + common);
  }
  threads_ = std::move(next);
  sigma_ = x;
  ++position_;
  return true;
}

void Runner::feed(Letter x) {
  if (try_feed(x)) return;
  const auto& alpha = t_->alphabet();
  if (x >= alpha.size() || !alpha.allows(sigma_, x))
    throw InvalidWord("forbidden letter at position " + std::to_string(position_));
  throw InvalidWord("no admissible run at position " + std::to_string(position_));
}

Word Runner::take_output() {
  Word out;
  out.swap(committed_);
  return out;
}

std::string Runner::key() const {
  std::string k;
  k.push_back(static_cast<char>(sigma_ + 1));
  for (const auto& th : threads_) {
    k.push_back('|');
    k += std::to_string(th.q);
    k.push_back(static_cast<char>(th.rho + 1));
    for (Letter c : th.pending) k.push_back(static_cast<char>(c + 'A'));
  }
  return k;
}

Word determined_image(const Transducer& t, const Word& w) {
  Runner r(t);
  for (Letter x : w) r.feed(x);
  return r.output();
}

Word apply(const Transducer& t, const Word& w) {
  t.alphabet().check(w);
  Word out = determined_image(t, w);
  if (out.size() < w.size())
    throw AmbiguousWord("image of " + t.alphabet().format(w) + " depends on later letters");
  return out;
}

}  // namespace growthlab
