#include "loesung/types.hpp"

#include <limits>
#include <ostream>
#include <sstream>

namespace loesung {

bool Int::fits_int64() const {
  return v_ >= std::numeric_limits<long long>::min() &&
         v_ <= std::numeric_limits<long long>::max();
}

long long Int::as_int64() const {
  if (!fits_int64()) throw std::overflow_error("Int::as_int64: out of range");
  return static_cast<long long>(v_);
}

std::ostream& operator<<(std::ostream& os, const Int& x) { return os << x.v_; }

const char* to_string(VecOrder o) {
  switch (o) {
    case VecOrder::Less: return "less";
    case VecOrder::Greater: return "greater";
    case VecOrder::Equal: return "equal";
    case VecOrder::Incomparable: return "incomparable";
  }
  return "?";
}

IntRowVec unit_row(int n, int i) {
  IntRowVec v = IntRowVec::Zero(n);
  v(i) = 1;
  return v;
}

bool is_zero_vec(const IntRowVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

std::string format_vec(const IntRowVec& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v(i);
  }
  os << ")";
  return os.str();
}

std::string format_mat(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) os << " ";
      os << m(i, j);
    }
  }
  os << "]";
  return os.str();
}

}  // namespace loesung
