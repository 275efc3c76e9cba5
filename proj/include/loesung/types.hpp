#ifndef LOESUNG_TYPES_HPP
#define LOESUNG_TYPES_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

namespace loesung {

/// Arbitrary-precision signed integer scalar. Entries of mutated matrices grow
/// exponentially in the sequence length, so every matrix/vector in this
/// library uses this scalar. The wrapper keeps the operator set small enough
/// for Eigen's overload resolution (cpp_int's own converting constructors are
/// too greedy to be used as an Eigen scalar directly).
class Int {
 public:
  Int() : v_(0) {}
  Int(int v) : v_(v) {}
  Int(long v) : v_(v) {}
  Int(long long v) : v_(v) {}
  explicit Int(const std::string& decimal) : v_(decimal) {}

  friend Int operator+(const Int& a, const Int& b) { return Int(a.v_ + b.v_); }
  friend Int operator-(const Int& a, const Int& b) { return Int(a.v_ - b.v_); }
  friend Int operator*(const Int& a, const Int& b) { return Int(a.v_ * b.v_); }
  friend Int operator/(const Int& a, const Int& b) { return Int(a.v_ / b.v_); }
  friend Int operator%(const Int& a, const Int& b) { return Int(a.v_ % b.v_); }
  Int operator-() const { return Int(-v_); }
  Int& operator+=(const Int& o) { v_ += o.v_; return *this; }
  Int& operator-=(const Int& o) { v_ -= o.v_; return *this; }
  Int& operator*=(const Int& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Int& a, const Int& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Int& a, const Int& b) { return a.v_ != b.v_; }
  friend bool operator<(const Int& a, const Int& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Int& a, const Int& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Int& a, const Int& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Int& a, const Int& b) { return a.v_ >= b.v_; }

  int sgn() const { return v_.sign(); }
  bool is_zero() const { return v_.is_zero(); }
  bool is_even() const { return (v_ & 1) == 0; }
  Int abs() const { return Int(boost::multiprecision::abs(v_)); }

  bool fits_int64() const;
  long long as_int64() const;  // throws if out of range
  std::string str() const { return v_.str(); }

  friend Int gcd(const Int& a, const Int& b) {
    return Int(boost::multiprecision::gcd(a.v_, b.v_));
  }
  friend Int lcm(const Int& a, const Int& b) {
    return Int(boost::multiprecision::lcm(a.v_, b.v_));
  }
  friend std::ostream& operator<<(std::ostream& os, const Int& x);

 private:
  explicit Int(boost::multiprecision::cpp_int v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_int v_;
};

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntRowVec = Eigen::Matrix<Int, 1, Eigen::Dynamic>;

inline int sgn(const Int& x) { return x.sgn(); }
inline int sgn(long long x) { return (x > 0) - (x < 0); }

// --- error taxonomy -------------------------------------------------------
// InputError      -> bad user data / out-of-budget preconditions (CLI exit 4)
// InvariantViolation -> a proved statement failed; indicates a bug (exit 3)
// BudgetExceeded  -> a configured search/size cap was hit (exit 4)

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSymmetrizable : InputError {
  using InputError::InputError;
};
struct IndexOutOfRange : InputError {
  using InputError::InputError;
};
struct LengthMismatch : InputError {
  using InputError::InputError;
};
struct RankTooLarge : InputError {
  using InputError::InputError;
};

struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotSignCoherent : InvariantViolation {
  using InvariantViolation::InvariantViolation;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SearchBudgetExceeded : BudgetExceeded {
  using BudgetExceeded::BudgetExceeded;
};

// --- componentwise partial order on Z^n ------------------------------------

enum class VecOrder { Less, Greater, Equal, Incomparable };

const char* to_string(VecOrder o);

/// Componentwise comparison: Less iff v <= w entrywise with v != w, etc.
template <typename DerivedA, typename DerivedB>
VecOrder vec_cmp(const Eigen::MatrixBase<DerivedA>& v,
                 const Eigen::MatrixBase<DerivedB>& w) {
  if (v.size() != w.size()) throw LengthMismatch("vec_cmp: length mismatch");
  bool le = true, ge = true;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) < w(i)) ge = false;
    if (v(i) > w(i)) le = false;
  }
  if (le && ge) return VecOrder::Equal;
  if (le) return VecOrder::Less;
  if (ge) return VecOrder::Greater;
  return VecOrder::Incomparable;
}

/// Sign of a sign-coherent nonzero vector: +1 if all entries >= 0, -1 if all
/// <= 0. Mixed signs (or the zero vector) violate c-vector sign coherence.
template <typename Derived>
int row_sign(const Eigen::MatrixBase<Derived>& c) {
  bool pos = false, neg = false;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    int s = c(i).sgn();
    if (s > 0) pos = true;
    if (s < 0) neg = true;
  }
  if (pos && neg) throw NotSignCoherent("row_sign: mixed signs");
  if (!pos && !neg) throw NotSignCoherent("row_sign: zero vector");
  return pos ? 1 : -1;
}

IntRowVec unit_row(int n, int i);
bool is_zero_vec(const IntRowVec& v);
std::string format_vec(const IntRowVec& v);
std::string format_mat(const IntMatrix& m);

}  // namespace loesung

namespace Eigen {
template <>
struct NumTraits<loesung::Int> {
  using Real = loesung::Int;
  using NonInteger = loesung::Int;
  using Nested = loesung::Int;
  using Literal = long long;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 30,
    MulCost = 60
  };
  static inline Real epsilon() { return loesung::Int(0); }
  static inline Real dummy_precision() { return loesung::Int(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen

#endif  // LOESUNG_TYPES_HPP
