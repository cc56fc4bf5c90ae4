#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "growthlab/alphabet.hpp"
#include "json.hpp"

namespace growthlab {

using Json = nlohmann::ordered_json;

struct Transition {
  Letter in;
  Letter out;
  int next;
};

struct StateSpec {
  std::string id;
  bool identity_extended = false;
  std::vector<Transition> transitions;
};

struct Move {
  Letter out;
  int next;
};

// Letter-to-letter transducer over a subshift. Several transitions may share
// (state, input letter): a run is admissible when both its input and its
// output are valid in the subshift, and the builtin machines have a unique
// admissible run on every infinite valid input. Finite words are read with
// bounded lookahead through Runner.
class Transducer {
 public:
  using AlphabetPtr = std::shared_ptr<const SubshiftAlphabet>;

  Transducer(AlphabetPtr alphabet, std::vector<StateSpec> states, int initial);
  static Transducer identity(AlphabetPtr alphabet);

  const SubshiftAlphabet& alphabet() const { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const { return alphabet_; }
  const std::vector<StateSpec>& states() const { return states_; }
  int state_count() const { return static_cast<int>(states_.size()); }
  int initial() const { return initial_; }

  // Transitions out of q on letter x, identity extension included.
  std::span<const Move> moves(int q, Letter x) const {
    const auto k = alphabet_->size();
    return {moves_.data() + offset_[q * k + x], moves_.data() + offset_[q * k + x + 1]};
  }

  // Whether configuration (q, last input, last output) extends to an
  // infinite admissible run; -1 means no letter read yet.
  bool live(int q, int sigma, int rho) const {
    const auto k1 = alphabet_->size() + 1;
    return live_[(q * k1 + (sigma + 1)) * k1 + (rho + 1)];
  }

  Json to_json() const;
  static Transducer from_json(const Json& j);

 private:
  void materialize();
  void compute_liveness();

  AlphabetPtr alphabet_;
  std::vector<StateSpec> states_;
  int initial_;
  std::vector<Move> moves_;
  std::vector<std::size_t> offset_;
  std::vector<char> live_;
};

// Restriction to states reachable from the initial state.
Transducer accessible(const Transducer& t);
// Keeps only the states and transitions used by some infinite admissible run
// from the initial state; transitions are written out explicitly.
Transducer trim(const Transducer& t);
// Merges bisimilar states.
Transducer reduce(const Transducer& t);
// Product machine acting as x then y.
Transducer compose(const Transducer& x, const Transducer& y);
Transducer invert(const Transducer& x);

// Simulates every admissible run in parallel and commits the output prefix
// shared by all runs still alive.
class Runner {
 public:
  explicit Runner(const Transducer& t);

  // Returns false (leaving the runner unchanged) when x breaks the subshift
  // or no run survives.
  bool try_feed(Letter x);
  void feed(Letter x);  // throws InvalidWord

  std::size_t position() const { return position_; }
  const Word& output() const { return committed_; }
  Word take_output();
  std::size_t pending() const { return threads_.empty() ? 0 : threads_[0].pending.size(); }
  int last_input() const { return sigma_; }

  // State of the simulation, independent of the committed output.
  std::string key() const;

 private:
  struct Thread {
    int q;
    int rho;
    Word pending;
    bool operator<(const Thread& o) const;
    bool operator==(const Thread& o) const = default;
  };

  const Transducer* t_;
  int sigma_ = -1;
  std::size_t position_ = 0;
  std::vector<Thread> threads_;
  Word committed_;
};

// Output determined by w alone; a prefix of the image of every valid
// infinite extension of w.
Word determined_image(const Transducer& t, const Word& w);
// Full image of w; throws AmbiguousWord when it depends on letters after w.
Word apply(const Transducer& t, const Word& w);

}  // namespace growthlab
