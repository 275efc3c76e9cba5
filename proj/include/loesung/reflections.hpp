#ifndef LOESUNG_REFLECTIONS_HPP
#define LOESUNG_REFLECTIONS_HPP

#include <cstddef>
#include <vector>

#include "loesung/algebra.hpp"
#include "loesung/gim.hpp"
#include "loesung/matrix_core.hpp"
#include "loesung/words.hpp"

namespace loesung {

inline constexpr std::size_t kDefaultWordBudget = 10000;

/// Reflection words attached to a mutation sequence: r_i starts as the letter
/// i and is conjugated by r_k whenever the mutation at k has b[i][k] and the
/// sign of c_k agreeing. g_i is recovered from the reduced palindrome as its
/// first (len-1)/2 letters; that choice reproduces the l-vectors, whereas
/// accumulating r_k g_i as words can differ by a trailing s_i once
/// cancellation shortens the palindrome.
struct ReflectionState {
  Seed seed;
  std::vector<Word> r;

  std::vector<Word> g() const;
};

ReflectionState initial_reflections(const SkewMatrix& b);
ReflectionState advance_reflections(const ReflectionState& st, int k,
                                    std::size_t word_budget = kDefaultWordBudget);
ReflectionState reflection_state(const SkewMatrix& b, const MutationSeq& w,
                                 std::size_t word_budget = kDefaultWordBudget);

struct LMatrix {
  IntMatrix rows;
  Gim gim;
};

/// l_i = g_i(alpha_i) under pi.
LMatrix l_matrix(const ReflectionState& st, const Gim& A);

/// Per-row sign factor (+1 / -1), or 0 on mismatch.
std::vector<int> compare_L_up_to_row_sign(const LMatrix& x, const LMatrix& y);

/// Scan of Example-2.11 type: compares products of the r_i over every
/// permutation against every product s_{t(1)} ... s_{t(n)}, both as reduced
/// words and as pi-matrices for the given GIM.
struct FactorizationMatch {
  std::vector<int> sigma;        // order of the r factors
  std::vector<int> sigma_tilde;  // order of the s letters
  bool word_level = false;
  bool pi_level = false;
};

struct FactorizationReport {
  std::vector<FactorizationMatch> matches;
  bool any_word_equal = false;
  bool any_pi_equal = false;
};

FactorizationReport product_factorization_scan(const ReflectionState& st,
                                               const Gim& A);

}  // namespace loesung

#endif  // LOESUNG_REFLECTIONS_HPP
