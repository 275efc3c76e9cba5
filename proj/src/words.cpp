#include "loesung/words.hpp"

#include <sstream>

namespace loesung {

std::vector<int> Word::reduce_letters(std::vector<int> raw) {
  std::vector<int> out;
  out.reserve(raw.size());
  for (int x : raw) {
    if (x < 0) throw IndexOutOfRange("Word: negative letter");
    if (!out.empty() && out.back() == x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word concatenate(const Word& a, const Word& b) {
  std::vector<int> joined = a.letters();
  joined.insert(joined.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(joined));
}

bool is_reflection(const Word& w) {
  const auto& l = w.letters();
  if (l.size() % 2 == 0) return false;
  for (size_t j = 0; j < l.size() / 2; ++j)
    if (l[j] != l[l.size() - 1 - j]) return false;
  return true;
}

Word conjugate(const Word& g, int i) {
  std::vector<int> joined = g.letters();
  joined.push_back(i);
  joined.insert(joined.end(), g.letters().rbegin(), g.letters().rend());
  return Word(std::move(joined));
}

Word palindromic_prefix(const Word& w) {
  if (!is_reflection(w))
    throw InputError("palindromic_prefix: not a reflection word");
  const auto& l = w.letters();
  return Word(std::vector<int>(l.begin(), l.begin() + l.size() / 2));
}

std::string word_to_string(const Word& w) {
  std::ostringstream os;
  for (int i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << (w[i] + 1);
  }
  return os.str();
}

Word word_from_string(const std::string& s, int n) {
  std::vector<int> letters;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    int v;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      throw InputError("word_from_string: bad letter '" + tok + "'");
    }
    if (v < 1 || v > n)
      throw IndexOutOfRange("word_from_string: letter out of range 1.." +
                            std::to_string(n));
    letters.push_back(v - 1);
  }
  return Word(std::move(letters));
}

std::string word_to_digits(const Word& w) {
  std::string out;
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] > 8) throw InputError("word_to_digits: letter above 9");
    out.push_back(static_cast<char>('1' + w[i]));
  }
  return out;
}

}  // namespace loesung
