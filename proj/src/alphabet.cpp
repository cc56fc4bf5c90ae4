#include "growthlab/alphabet.hpp"

#include <algorithm>

#include "growthlab/errors.hpp"

namespace growthlab {

SubshiftAlphabet::SubshiftAlphabet(
    std::vector<std::string> letters,
    const std::vector<std::pair<std::string, std::string>>& allowed)
    : letters_(std::move(letters)) {
  if (letters_.empty() || letters_.size() > 16)
    throw InvalidWord("alphabet must have between 1 and 16 letters");
  allowed_.assign(letters_.size() * letters_.size(), 0);
  for (const auto& [a, b] : allowed) allowed_[index(a) * letters_.size() + index(b)] = 1;
  for (std::size_t x = 0; x < letters_.size(); ++x) {
    bool used = false;
    for (std::size_t y = 0; y < letters_.size(); ++y)
      used = used || allowed_[x * size() + y] || allowed_[y * size() + x];
    if (!used) throw InvalidWord("dead letter " + letters_[x]);
  }
}

Letter SubshiftAlphabet::index(std::string_view symbol) const {
  auto it = std::find(letters_.begin(), letters_.end(), symbol);
  if (it == letters_.end()) throw InvalidWord("unknown letter '" + std::string(symbol) + "'");
  return static_cast<Letter>(it - letters_.begin());
}

bool SubshiftAlphabet::valid(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= size()) return false;
    if (i > 0 && !allows(w[i - 1], w[i])) return false;
  }
  return true;
}

void SubshiftAlphabet::check(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= size()) throw InvalidWord("letter out of range at position " + std::to_string(i));
    if (i > 0 && !allows(w[i - 1], w[i]))
      throw InvalidWord("forbidden factor " + name(w[i - 1]) + name(w[i]) + " at position " +
                        std::to_string(i - 1));
  }
}

Word SubshiftAlphabet::parse(std::string_view text) const {
  Word w;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ' || text[pos] == ',') {
      ++pos;
      continue;
    }
    std::size_t best = 0;
    Letter which = 0;
    for (std::size_t x = 0; x < size(); ++x) {
      const auto& s = letters_[x];
      if (s.size() > best && text.substr(pos, s.size()) == s) {
        best = s.size();
        which = static_cast<Letter>(x);
      }
    }
    if (best == 0) throw InvalidWord("cannot parse '" + std::string(text.substr(pos)) + "'");
    w.push_back(which);
    pos += best;
  }
  return w;
}

std::string SubshiftAlphabet::format(const Word& w) const {
  std::string out;
  for (Letter x : w) out += letters_.at(x);
  return out;
}

std::vector<std::pair<std::string, std::string>> SubshiftAlphabet::allowed_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      if (allowed_[x * size() + y]) out.emplace_back(letters_[x], letters_[y]);
  return out;
}

bool SubshiftAlphabet::operator==(const SubshiftAlphabet& other) const {
  return letters_ == other.letters_ && allowed_ == other.allowed_;
}

}  // namespace growthlab
