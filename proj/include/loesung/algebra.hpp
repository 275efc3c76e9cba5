#ifndef LOESUNG_ALGEBRA_HPP
#define LOESUNG_ALGEBRA_HPP

#include <string>
#include <utility>
#include <vector>

#include "loesung/gim.hpp"
#include "loesung/types.hpp"
#include "loesung/words.hpp"

namespace loesung {

/// Monomial of the algebra generated by s_i, e_i under
///   s_i^2 = 1,  sum_i e_i = 1,  s_i e_i = -e_i,
///   e_i s_j = s_i + e_i - 1 (i = j) or e_i (i != j),
///   e_i e_j = delta_ij e_i.
/// A monomial is a reduced word, optionally capped by one trailing
/// idempotent; the word never ends in the cap letter (u s_c e_c = -u e_c).
struct Monomial {
  Word word;
  int cap = -1;  // trailing idempotent index, -1 for none

  bool has_cap() const { return cap >= 0; }

  /// Total order: word length, then word letters, then cap (none first).
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.word.letters() != b.word.letters())
      return a.word.letters() < b.word.letters();
    return a.cap < b.cap;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.cap == b.cap && a.word == b.word;
  }
};

/// An element of the rank-n algebra as an integer combination of monomials in
/// canonical form. The monomials {u, u e_c} span but are not independent
/// (sum_c u e_c = u), so each element is canonicalized by eliminating, for
/// every word u, the coordinate at one designated cap (the largest index the
/// word does not end in). Equality and mod-2 comparison are then plain
/// coefficient comparisons.
///
/// Terms are stored as a flat vector sorted by an encoded key whose byte
/// order realizes the monomial total order; products accumulate by sort and
/// merge. Immutable value type.
class AlgebraElement {
 public:
  // key: 2 bytes big-endian word length, letters as (letter+1) bytes,
  // one trailing cap byte (0 for none, else cap+1)
  using Key = std::string;
  using TermVec = std::vector<std::pair<Key, Int>>;

  AlgebraElement() = default;  // zero; combines with any rank

  static AlgebraElement zero() { return {}; }
  static AlgebraElement one(int n);
  static AlgebraElement gen_s(int n, int i);
  static AlgebraElement gen_e(int n, int i);
  /// The group element of a reduced word as a single monomial.
  static AlgebraElement from_word(int n, const Word& w);
  static AlgebraElement monomial(int n, const Word& w, int cap,
                                 Int coeff = Int(1));

  int rank() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  /// Decoded terms in canonical order.
  std::vector<std::pair<Monomial, Int>> terms() const;
  const TermVec& raw_terms() const { return terms_; }

  static Key encode(const Word& w, int cap);
  static Monomial decode(const Key& k);

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Int& k, const AlgebraElement& a);
  AlgebraElement operator-() const { return Int(-1) * *this; }

  /// Product that aborts with SearchBudgetExceeded once the accumulating
  /// term count passes the budget (0 = unlimited). Elements can genuinely
  /// grow past any fixed budget within a few mutation steps, so long runs
  /// must bound each product rather than test sizes afterwards.
  friend AlgebraElement mul_budgeted(const AlgebraElement& a,
                                     const AlgebraElement& b,
                                     std::size_t term_budget);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
    return !(a == b);
  }

  /// Canonical text form from sorted monomials, e.g. "2*e1 + s2 - 2*s2*e1".
  std::string str() const;

 private:
  void canonicalize();
  int n_ = 0;
  TermVec terms_;
};

/// True iff every coefficient of x - y is even.
bool mod2_equal(const AlgebraElement& x, const AlgebraElement& y);

// --- the representation pi --------------------------------------------------
// Vectors are rows and matrices act by right multiplication. Products act by
// function composition, (xy)(v) = x(y(v)), so the matrix of a product is the
// factor matrices multiplied in reverse writing order:
//   evaluate_pi(x*y) == evaluate_pi(y) * evaluate_pi(x).

/// Matrix of s_i: row j is lambda_j - a[j][i] lambda_i.
IntMatrix pi_letter(const Gim& A, int i);
/// Matrix of e_i: row j is delta_ij lambda_i.
IntMatrix pi_idempotent(const Gim& A, int i);

IntMatrix pi_word(const Word& w, const Gim& A);
IntMatrix evaluate_pi(const AlgebraElement& x, const Gim& A);

/// v * pi(x) without materializing the matrix (letter action is a single
/// entry update, so this is O(word length * n) per monomial).
IntRowVec act(const AlgebraElement& x, const IntRowVec& v, const Gim& A);
IntRowVec act_word(const Word& w, const IntRowVec& v, const Gim& A);

}  // namespace loesung

#endif  // LOESUNG_ALGEBRA_HPP
