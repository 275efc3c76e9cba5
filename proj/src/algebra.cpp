#include "loesung/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <string_view>
#include <unordered_map>

namespace loesung {

namespace {

// --- encoded-key helpers ----------------------------------------------------
// key = [len_hi][len_lo][letter+1 ...][cap+1 or 0]

inline int key_word_len(const AlgebraElement::Key& k) {
  return (static_cast<unsigned char>(k[0]) << 8) |
         static_cast<unsigned char>(k[1]);
}

inline int key_letter(const AlgebraElement::Key& k, int t) {
  return static_cast<unsigned char>(k[2 + t]) - 1;
}

inline int key_cap(const AlgebraElement::Key& k) {
  return static_cast<int>(static_cast<unsigned char>(k.back())) - 1;
}

// body = letters region as raw bytes (letter+1 each)
AlgebraElement::Key make_key(const std::string& body, int cap) {
  if (body.size() > 0xffff)
    throw SearchBudgetExceeded("algebra monomial: word length over 65535");
  AlgebraElement::Key k;
  k.reserve(body.size() + 3);
  k.push_back(static_cast<char>((body.size() >> 8) & 0xff));
  k.push_back(static_cast<char>(body.size() & 0xff));
  k += body;
  k.push_back(static_cast<char>(cap + 1));
  return k;
}

// sign-normalizing construction: a trailing letter equal to the cap is
// absorbed (u s_c e_c = -u e_c); returns the sign
int normalize_body(std::string& body, int cap) {
  if (cap >= 0 && !body.empty() &&
      body.back() == static_cast<char>(cap + 1)) {
    body.pop_back();
    return -1;
  }
  return 1;
}

// Designated cap whose coordinate is eliminated for the word: the largest
// index the word does not end in (rank >= 2).
inline int banned_cap_body(const std::string& body, int n) {
  if (!body.empty() && body.back() == static_cast<char>(n)) return n - 2;
  return n - 1;
}

inline bool key_is_banned(const AlgebraElement::Key& k, int n) {
  int cap = key_cap(k);
  if (cap < 0) return false;
  int len = key_word_len(k);
  int banned = (len > 0 && k[2 + len - 1] == static_cast<char>(n)) ? n - 2 : n - 1;
  return cap == banned;
}

int rank_of(const AlgebraElement& a, const AlgebraElement& b) {
  int ra = a.rank(), rb = b.rank();
  if (ra == 0) return rb;
  if (rb == 0) return ra;
  if (ra != rb) throw LengthMismatch("AlgebraElement: rank mismatch");
  return ra;
}

using RawVec = std::vector<std::pair<AlgebraElement::Key, Int>>;

// sort + fold equal keys, dropping zeros
void fold_sorted(RawVec& raw) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  size_t out = 0;
  for (size_t i = 0; i < raw.size();) {
    size_t j = i + 1;
    Int sum = raw[i].second;
    while (j < raw.size() && raw[j].first == raw[i].first) {
      sum += raw[j].second;
      ++j;
    }
    if (!sum.is_zero()) {
      if (out != i) raw[out].first = std::move(raw[i].first);
      raw[out].second = std::move(sum);
      ++out;
    }
    i = j;
  }
  raw.resize(out);
}

}  // namespace

AlgebraElement::Key AlgebraElement::encode(const Word& w, int cap) {
  std::string body;
  body.reserve(w.size());
  for (int t = 0; t < w.size(); ++t)
    body.push_back(static_cast<char>(w[t] + 1));
  return make_key(body, cap);
}

Monomial AlgebraElement::decode(const Key& k) {
  Monomial m;
  int len = key_word_len(k);
  std::vector<int> letters(len);
  for (int t = 0; t < len; ++t) letters[t] = key_letter(k, t);
  m.word = Word(std::move(letters));
  m.cap = key_cap(k);
  return m;
}

AlgebraElement AlgebraElement::one(int n) { return monomial(n, Word(), -1); }

AlgebraElement AlgebraElement::gen_s(int n, int i) {
  return monomial(n, Word::letter(i), -1);
}

AlgebraElement AlgebraElement::gen_e(int n, int i) {
  return monomial(n, Word(), i);
}

AlgebraElement AlgebraElement::from_word(int n, const Word& w) {
  return monomial(n, w, -1);
}

AlgebraElement AlgebraElement::monomial(int n, const Word& w, int cap, Int coeff) {
  if (n <= 0) throw InputError("AlgebraElement: rank must be positive");
  if (n > 254) throw RankTooLarge("AlgebraElement: rank over 254");
  if (cap >= n || (!w.empty() && w[w.size() - 1] >= n))
    throw IndexOutOfRange("AlgebraElement: letter out of range");
  AlgebraElement out;
  out.n_ = n;
  if (coeff.is_zero()) return out;
  std::string body;
  for (int t = 0; t < w.size(); ++t)
    body.push_back(static_cast<char>(w[t] + 1));
  int sign = normalize_body(body, cap);
  out.terms_.emplace_back(make_key(body, cap), Int(sign) * coeff);
  out.canonicalize();
  return out;
}

std::vector<std::pair<Monomial, Int>> AlgebraElement::terms() const {
  std::vector<std::pair<Monomial, Int>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(decode(k), c);
  return out;
}

void AlgebraElement::canonicalize() {
  if (terms_.empty()) return;
  if (n_ == 1) {
    // e_1 = 1 and s_1 = -1, so the whole algebra is Z on the monomial 1
    Int total = 0;
    for (const auto& [k, c] : terms_) {
      Int sign = (key_word_len(k) % 2 == 0) ? Int(1) : Int(-1);
      total += sign * c;
    }
    terms_.clear();
    if (!total.is_zero()) terms_.emplace_back(encode(Word(), -1), total);
    return;
  }
  // rewrite banned coordinates u e_cap -> u - sum over the other caps,
  // longest words first (the rewrite only touches strictly shorter words
  // and same-length non-banned caps)
  bool any = false;
  for (const auto& [k, c] : terms_) {
    if (key_is_banned(k, n_)) {
      any = true;
      break;
    }
  }
  if (!any) return;

  RawVec work(terms_.begin(), terms_.end());
  terms_.clear();
  int max_len = 0;
  for (const auto& [k, c] : work) max_len = std::max(max_len, key_word_len(k));
  // done[l] collects finalized terms of word length l
  std::vector<RawVec> by_len(max_len + 1);
  for (auto& kv : work) by_len[key_word_len(kv.first)].push_back(std::move(kv));
  RawVec result;
  for (int len = max_len; len >= 0; --len) {
    RawVec& bucket = by_len[len];
    fold_sorted(bucket);
    for (auto& [k, q] : bucket) {
      std::string body = k.substr(2, len);
      int cap = key_cap(k);
      if (cap < 0 || cap != banned_cap_body(body, n_)) {
        result.emplace_back(std::move(k), std::move(q));
        continue;
      }
      // u e_cap = u - sum_{c != cap} u e_c (with trailing absorption)
      result.emplace_back(make_key(body, -1), q);
      for (int c = 0; c < n_; ++c) {
        if (c == cap) continue;
        if (!body.empty() && body.back() == static_cast<char>(c + 1)) {
          std::string shorter = body.substr(0, body.size() - 1);
          by_len[len - 1].emplace_back(make_key(shorter, c), q);
        } else {
          result.emplace_back(make_key(body, c), -q);
        }
      }
    }
  }
  fold_sorted(result);
  terms_ = std::move(result);
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement out;
  out.n_ = rank_of(a, b);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  // canonical coordinates are closed under addition: plain sorted merge
  size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[j];
    if (ta.first < tb.first) {
      out.terms_.push_back(ta);
      ++i;
    } else if (tb.first < ta.first) {
      out.terms_.push_back(tb);
      ++j;
    } else {
      Int sum = ta.second + tb.second;
      if (!sum.is_zero()) out.terms_.emplace_back(ta.first, std::move(sum));
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) out.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) out.terms_.push_back(b.terms_[j]);
  return out;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  return a + (Int(-1) * b);
}

AlgebraElement operator*(const Int& k, const AlgebraElement& a) {
  AlgebraElement out;
  out.n_ = a.n_;
  if (k.is_zero()) return out;
  out.terms_.reserve(a.terms_.size());
  for (const auto& [m, c] : a.terms_) out.terms_.emplace_back(m, k * c);
  return out;
}

namespace {

struct TransparentHash {
  using is_transparent = void;
  size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
  size_t operator()(const std::string& s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

using Accumulator =
    std::unordered_map<AlgebraElement::Key, Int, TransparentHash, std::equal_to<>>;

// emits prefix * (word bytes) * e_cap with trailing absorption into `acc`.
// `scratch` holds the full key layout (2 length bytes, body, cap byte) so a
// bucket hit costs no allocation.
void emit_term(std::string& scratch, std::string_view prefix,
               std::string_view tail, int cap, const Int& coeff,
               bool negate, Accumulator& acc) {
  scratch.resize(2);
  scratch += prefix;
  for (char ch : tail) {
    if (scratch.size() > 2 && scratch.back() == ch)
      scratch.pop_back();
    else
      scratch.push_back(ch);
  }
  int sign = negate ? -1 : 1;
  if (cap >= 0 && scratch.size() > 2 &&
      scratch.back() == static_cast<char>(cap + 1)) {
    scratch.pop_back();
    sign = -sign;
  }
  const size_t body_len = scratch.size() - 2;
  scratch[0] = static_cast<char>((body_len >> 8) & 0xff);
  scratch[1] = static_cast<char>(body_len & 0xff);
  scratch.push_back(static_cast<char>(cap + 1));
  auto it = acc.find(std::string_view(scratch));
  if (it == acc.end()) it = acc.emplace(scratch, Int(0)).first;
  if (sign < 0)
    it->second -= coeff;
  else
    it->second += coeff;
}

// e_c * (v[from:], cap): absorbs letters != c, expands e_c s_c = s_c + e_c - 1.
void cap_times_emit(std::string& scratch, int c, std::string_view v,
                    size_t from, int cap, const Int& coeff,
                    std::string_view prefix, Accumulator& acc) {
  const char cbyte = static_cast<char>(c + 1);
  size_t at = from;
  while (at < v.size() && v[at] != cbyte) ++at;  // e_c s_j = e_c absorbs
  if (at == v.size()) {
    if (cap < 0 || cap == c) emit_term(scratch, prefix, {}, c, coeff, false, acc);
    return;
  }
  // e_c s_c rest = (s_c + e_c - 1) rest
  emit_term(scratch, prefix, v.substr(at), cap, coeff, false, acc);
  cap_times_emit(scratch, c, v, at + 1, cap, coeff, prefix, acc);
  emit_term(scratch, prefix, v.substr(at + 1), cap, coeff, true, acc);
}

}  // namespace

AlgebraElement mul_budgeted(const AlgebraElement& a, const AlgebraElement& b,
                            std::size_t term_budget) {
  AlgebraElement out;
  out.n_ = rank_of(a, b);
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (term_budget && a.terms_.size() * b.terms_.size() > 64 * term_budget)
    throw SearchBudgetExceeded("algebra product: pair count over budget");

  // zero-copy views into the stored keys of both factors
  struct View {
    std::string_view body;
    int cap;
    const Int* coeff;
  };
  std::vector<View> left, right;
  left.reserve(a.terms_.size());
  right.reserve(b.terms_.size());
  for (const auto& [k, c] : a.terms_)
    left.push_back({std::string_view(k).substr(2, key_word_len(k)), key_cap(k), &c});
  for (const auto& [k, c] : b.terms_)
    right.push_back({std::string_view(k).substr(2, key_word_len(k)), key_cap(k), &c});

  Accumulator acc;
  acc.reserve(left.size() + right.size() + 64);
  std::string scratch;
  for (const View& r : right) {
    if (term_budget && acc.size() > 2 * term_budget)
      throw SearchBudgetExceeded("algebra product: term budget");
    for (const View& l : left) {
      Int coeff = *l.coeff * *r.coeff;
      if (l.cap < 0) {
        emit_term(scratch, l.body, r.body, r.cap, coeff, false, acc);
      } else {
        cap_times_emit(scratch, l.cap, r.body, 0, r.cap, coeff, l.body, acc);
      }
    }
  }
  RawVec raw;
  raw.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (!c.is_zero()) raw.emplace_back(k, std::move(c));
  fold_sorted(raw);
  out.terms_ = std::move(raw);
  out.canonicalize();
  if (term_budget && out.terms_.size() > term_budget)
    throw SearchBudgetExceeded("algebra product: term budget");
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  return mul_budgeted(a, b, 0);
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Int coeff = c;
    if (first) {
      if (coeff.sgn() < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff.sgn() < 0 ? " - " : " + ");
      if (coeff.sgn() < 0) coeff = -coeff;
    }
    first = false;
    std::string bodytext;
    int len = key_word_len(k);
    for (int t = 0; t < len; ++t) {
      if (!bodytext.empty()) bodytext += "*";
      bodytext += "s" + std::to_string(key_letter(k, t) + 1);
    }
    int cap = key_cap(k);
    if (cap >= 0) {
      if (!bodytext.empty()) bodytext += "*";
      bodytext += "e" + std::to_string(cap + 1);
    }
    if (bodytext.empty()) bodytext = "1";
    if (coeff == Int(1))
      os << bodytext;
    else
      os << coeff << "*" << bodytext;
  }
  return os.str();
}

bool mod2_equal(const AlgebraElement& x, const AlgebraElement& y) {
  // difference of canonical coordinate vectors, checked entrywise
  size_t i = 0, j = 0;
  const auto& a = x.raw_terms();
  const auto& b = y.raw_terms();
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      if (!a[i].second.is_even()) return false;
      ++i;
    } else if (b[j].first < a[i].first) {
      if (!b[j].second.is_even()) return false;
      ++j;
    } else {
      if (!(a[i].second - b[j].second).is_even()) return false;
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i)
    if (!a[i].second.is_even()) return false;
  for (; j < b.size(); ++j)
    if (!b[j].second.is_even()) return false;
  return true;
}

IntMatrix pi_letter(const Gim& A, int i) {
  const int n = A.n();
  if (i < 0 || i >= n) throw IndexOutOfRange("pi_letter: bad index");
  IntMatrix m = IntMatrix::Identity(n, n);
  for (int j = 0; j < n; ++j) m(j, i) -= A.a(j, i);
  return m;
}

IntMatrix pi_idempotent(const Gim& A, int i) {
  const int n = A.n();
  if (i < 0 || i >= n) throw IndexOutOfRange("pi_idempotent: bad index");
  IntMatrix m = IntMatrix::Zero(n, n);
  m(i, i) = 1;
  return m;
}

namespace {

// In-place v <- v * pi(s_i): only entry i changes.
void act_letter_inplace(const Gim& A, int i, IntRowVec& v) {
  Int acc = v(i);
  for (int j = 0; j < A.n(); ++j) acc -= v(j) * A.a(j, i);
  v(i) = acc;
}

IntRowVec act_key(const AlgebraElement::Key& k, IntRowVec v, const Gim& A) {
  int cap = key_cap(k);
  if (cap >= 0) {
    Int kept = v(cap);
    v = IntRowVec::Zero(v.size());
    v(cap) = kept;
  }
  int len = key_word_len(k);
  for (int t = len - 1; t >= 0; --t) act_letter_inplace(A, key_letter(k, t), v);
  return v;
}

}  // namespace

IntRowVec act_word(const Word& w, const IntRowVec& v, const Gim& A) {
  if (v.size() != A.n()) throw LengthMismatch("act_word: length mismatch");
  IntRowVec out = v;
  const auto& l = w.letters();
  for (auto it = l.rbegin(); it != l.rend(); ++it)
    act_letter_inplace(A, *it, out);
  return out;
}

IntRowVec act(const AlgebraElement& x, const IntRowVec& v, const Gim& A) {
  if (v.size() != A.n()) throw LengthMismatch("act: length mismatch");
  if (x.rank() != 0 && x.rank() != A.n())
    throw LengthMismatch("act: element rank disagrees with the GIM");
  IntRowVec out = IntRowVec::Zero(v.size());
  for (const auto& [k, c] : x.raw_terms()) {
    IntRowVec part = act_key(k, v, A);
    for (Eigen::Index t = 0; t < out.size(); ++t) out(t) += c * part(t);
  }
  return out;
}

IntMatrix pi_word(const Word& w, const Gim& A) {
  const int n = A.n();
  IntMatrix out(n, n);
  for (int j = 0; j < n; ++j)
    out.row(j) = act_word(w, unit_row(n, j), A);
  return out;
}

IntMatrix evaluate_pi(const AlgebraElement& x, const Gim& A) {
  const int n = A.n();
  IntMatrix out(n, n);
  for (int j = 0; j < n; ++j)
    out.row(j) = act(x, unit_row(n, j), A);
  return out;
}

}  // namespace loesung
