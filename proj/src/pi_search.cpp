#include "loesung/pi_search.hpp"

#include <algorithm>
#include <functional>

namespace loesung {

namespace {

bool same_matrix(const IntMatrix& a, const IntMatrix& b) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

std::vector<Word> search_pi_equivalent(const Word& target, const Gim& A,
                                       int max_len, std::size_t node_cap) {
  const int n = A.n();
  IntMatrix want = pi_word(target, A);

  std::vector<IntMatrix> letters;
  letters.reserve(n);
  for (int i = 0; i < n; ++i) letters.push_back(pi_letter(A, i));

  std::vector<Word> found;
  std::size_t visited = 0;

  // Depth-first over the reduced-word tree. stack[d] is the matrix of the
  // length-d prefix; appending a letter multiplies its matrix on the left
  // (letters act after the existing prefix). Equality against the target
  // early-exits on the first differing entry, which rejects almost every
  // node on entry (0,0) at this matrix size.
  std::vector<IntMatrix> stack;
  stack.push_back(IntMatrix::Identity(n, n));
  std::vector<int> word;

  std::function<void()> visit = [&]() {
    if (++visited > node_cap)
      throw SearchBudgetExceeded("search_pi_equivalent: node cap");
    if (same_matrix(stack.back(), want))
      found.push_back(Word(std::vector<int>(word)));
    if (static_cast<int>(word.size()) == max_len) return;
    for (int i = 0; i < n; ++i) {
      if (!word.empty() && word.back() == i) continue;
      word.push_back(i);
      stack.push_back(letters[i] * stack.back());
      visit();
      stack.pop_back();
      word.pop_back();
    }
  };
  visit();

  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace loesung
