#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace growthlab {

using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Letters of a one-step subshift of finite type with its allowed two-letter
// factors. Letter index -1 stands for "no previous letter" in allows().
class SubshiftAlphabet {
 public:
  SubshiftAlphabet(std::vector<std::string> letters,
                   const std::vector<std::pair<std::string, std::string>>& allowed);

  std::size_t size() const { return letters_.size(); }
  const std::vector<std::string>& letters() const { return letters_; }
  const std::string& name(Letter x) const { return letters_[x]; }
  Letter index(std::string_view symbol) const;

  bool allows(int prev, int next) const {
    return prev < 0 || allowed_[prev * letters_.size() + next];
  }
  bool valid(const Word& w) const;
  void check(const Word& w) const;  // throws InvalidWord

  // Greedy longest-match parse; spaces and commas are ignored.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

  std::vector<std::pair<std::string, std::string>> allowed_pairs() const;
  bool operator==(const SubshiftAlphabet& other) const;

 private:
  std::vector<std::string> letters_;
  std::vector<char> allowed_;
};

}  // namespace growthlab
