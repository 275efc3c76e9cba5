#include "loesung/reflections.hpp"

#include <algorithm>
#include <numeric>

namespace loesung {

std::vector<Word> ReflectionState::g() const {
  std::vector<Word> out;
  out.reserve(r.size());
  for (const Word& w : r) out.push_back(palindromic_prefix(w));
  return out;
}

ReflectionState initial_reflections(const SkewMatrix& b) {
  ReflectionState st;
  st.seed = initial_seed(b);
  st.r.reserve(b.n);
  for (int i = 0; i < b.n; ++i) st.r.push_back(Word::letter(i));
  return st;
}

ReflectionState advance_reflections(const ReflectionState& st, int k,
                                    std::size_t word_budget) {
  const int n = st.seed.base.n;
  if (k < 0 || k >= n) throw IndexOutOfRange("advance_reflections: bad index");
  ReflectionState out;
  out.r = st.r;
  int ck_sign = row_sign(st.seed.cw.row(k));
  for (int i = 0; i < n; ++i) {
    int bik = st.seed.bw(i, k).sgn();
    if (bik != 0 && bik * ck_sign > 0) {
      out.r[i] = concatenate(concatenate(st.r[k], st.r[i]), st.r[k]);
      if (out.r[i].letters().size() > word_budget)
        throw SearchBudgetExceeded("advance_reflections: word length budget");
    }
  }
  out.seed = mutate_seed(st.seed, k);
  return out;
}

ReflectionState reflection_state(const SkewMatrix& b, const MutationSeq& w,
                                 std::size_t word_budget) {
  ReflectionState st = initial_reflections(b);
  for (int k : w) st = advance_reflections(st, k, word_budget);
  return st;
}

LMatrix l_matrix(const ReflectionState& st, const Gim& A) {
  const int n = st.seed.base.n;
  if (A.n() != n) throw LengthMismatch("l_matrix: rank mismatch");
  LMatrix lm;
  lm.gim = A;
  lm.rows = IntMatrix(n, n);
  std::vector<Word> gs = st.g();
  for (int i = 0; i < n; ++i)
    lm.rows.row(i) = act_word(gs[i], unit_row(n, i), A);
  return lm;
}

std::vector<int> compare_L_up_to_row_sign(const LMatrix& x, const LMatrix& y) {
  const int n = static_cast<int>(x.rows.rows());
  if (y.rows.rows() != n || x.rows.cols() != y.rows.cols())
    throw LengthMismatch("compare_L_up_to_row_sign: shape mismatch");
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i) {
    bool plus = true, minus = true;
    for (int j = 0; j < n; ++j) {
      if (x.rows(i, j) != y.rows(i, j)) plus = false;
      if (x.rows(i, j) != -y.rows(i, j)) minus = false;
    }
    out[i] = plus ? 1 : (minus ? -1 : 0);
  }
  return out;
}

FactorizationReport product_factorization_scan(const ReflectionState& st,
                                               const Gim& A) {
  const int n = st.seed.base.n;
  if (n > 6) throw RankTooLarge("product_factorization_scan: n > 6");
  FactorizationReport report;

  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::pair<std::vector<int>, Word>> r_products;
  do {
    Word prod;
    for (int i : sigma) prod = concatenate(prod, st.r[i]);
    r_products.emplace_back(sigma, prod);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  std::vector<std::pair<std::vector<int>, Word>> s_products;
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    s_products.emplace_back(sigma, Word(std::vector<int>(sigma)));
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  std::vector<IntMatrix> r_pi, s_pi;
  r_pi.reserve(r_products.size());
  s_pi.reserve(s_products.size());
  for (const auto& [p, w] : r_products) r_pi.push_back(pi_word(w, A));
  for (const auto& [p, w] : s_products) s_pi.push_back(pi_word(w, A));

  for (size_t a = 0; a < r_products.size(); ++a) {
    for (size_t b = 0; b < s_products.size(); ++b) {
      bool word_eq = r_products[a].second == s_products[b].second;
      bool pi_eq = (r_pi[a] == s_pi[b]);
      if (word_eq || pi_eq) {
        FactorizationMatch m;
        m.sigma = r_products[a].first;
        m.sigma_tilde = s_products[b].first;
        m.word_level = word_eq;
        m.pi_level = pi_eq;
        report.matches.push_back(std::move(m));
        report.any_word_equal = report.any_word_equal || word_eq;
        report.any_pi_equal = report.any_pi_equal || pi_eq;
      }
    }
  }
  return report;
}

}  // namespace loesung
