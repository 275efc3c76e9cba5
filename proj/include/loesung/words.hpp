#ifndef LOESUNG_WORDS_HPP
#define LOESUNG_WORDS_HPP

#include <string>
#include <vector>

#include "loesung/types.hpp"

namespace loesung {

/// A reduced word in the universal Coxeter group on n letters: no two
/// adjacent letters are equal. Reduced words are unique normal forms in the
/// free product of copies of Z/2Z, so equality of Words is group equality.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> raw) : letters_(reduce_letters(std::move(raw))) {}
  static Word letter(int i) { return Word(std::vector<int>{i}); }

  const std::vector<int>& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int operator[](int i) const { return letters_[i]; }

  Word reversed() const {
    return Word(std::vector<int>(letters_.rbegin(), letters_.rend()));
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }
  friend bool operator<(const Word& a, const Word& b) {
    if (a.letters_.size() != b.letters_.size())
      return a.letters_.size() < b.letters_.size();
    return a.letters_ < b.letters_;
  }

  /// Deletes adjacent equal pairs until none remain. The result does not
  /// depend on deletion order (free product of Z/2Z factors).
  static std::vector<int> reduce_letters(std::vector<int> raw);

 private:
  std::vector<int> letters_;
};

Word concatenate(const Word& a, const Word& b);

/// True iff the reduced word has odd length and is a palindrome.
bool is_reflection(const Word& w);

/// g s_i g^{-1}, reduced. Always a reflection word.
Word conjugate(const Word& g, int i);

/// The canonical g with w = g s_i g^{-1} for a reflection word: the first
/// (len-1)/2 letters. Throws InputError if w is not a reflection word.
Word palindromic_prefix(const Word& w);

/// CSV serialization, 1-based letters ("3,4,1,3"). Empty word is "".
std::string word_to_string(const Word& w);
Word word_from_string(const std::string& s, int n);

/// Compact digit form when all letters are single digits ("34133").
std::string word_to_digits(const Word& w);

}  // namespace loesung

#endif  // LOESUNG_WORDS_HPP
