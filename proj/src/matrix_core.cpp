#include "loesung/matrix_core.hpp"

#include <sstream>
#include <vector>

namespace loesung {

namespace {

struct Frac {
  Int num = 0;
  Int den = 1;  // > 0

  static Frac of(Int n, Int d) {
    Frac f{std::move(n), std::move(d)};
    f.normalize();
    return f;
  }
  void normalize() {
    if (den.sgn() < 0) {
      num = -num;
      den = -den;
    }
    Int g = gcd(num.abs(), den);
    if (g > Int(1)) {
      num = num / g;
      den = den / g;
    }
  }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return Frac::of(a.num * b.num, a.den * b.den);
  }
  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num == b.num && a.den == b.den;
  }
};

}  // namespace

std::vector<Int> compute_symmetrizer(const IntMatrix& b) {
  const int n = static_cast<int>(b.rows());
  if (b.cols() != n) throw InputError("compute_symmetrizer: square matrix required");
  for (int i = 0; i < n; ++i) {
    if (!b(i, i).is_zero())
      throw NotSymmetrizable("compute_symmetrizer: nonzero diagonal");
    for (int j = 0; j < n; ++j) {
      bool zi = b(i, j).is_zero(), zj = b(j, i).is_zero();
      if (zi != zj || (!zi && b(i, j).sgn() == b(j, i).sgn()))
        throw NotSymmetrizable("compute_symmetrizer: sign pattern violation");
    }
  }

  // d_j / d_i = |b(j,i)| / |b(i,j)| along every edge; propagate ratios per
  // connected component, verify consistency, then scale to integers.
  std::vector<Frac> ratio(n);
  std::vector<int> comp(n, -1);
  std::vector<Int> d(n, Int(1));
  for (int start = 0, c = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    ratio[start] = Frac::of(1, 1);
    comp[start] = c;
    std::vector<int> stack{start}, members{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (b(i, j).is_zero()) continue;
        Frac rj = ratio[i] * Frac::of(b(j, i).abs(), b(i, j).abs());
        if (comp[j] == -1) {
          comp[j] = c;
          ratio[j] = rj;
          stack.push_back(j);
          members.push_back(j);
        } else if (!(ratio[j] == rj)) {
          throw NotSymmetrizable("compute_symmetrizer: inconsistent cycle");
        }
      }
    }
    // common denominator, then gcd-normalize within the component
    Int l = 1;
    for (int i : members) l = lcm(l, ratio[i].den);
    Int g = 0;
    for (int i : members) g = gcd(g, ratio[i].num * (l / ratio[i].den));
    for (int i : members) d[i] = ratio[i].num * (l / ratio[i].den) / g;
    ++c;
  }
  return d;
}

SkewMatrix SkewMatrix::make(IntMatrix b, std::vector<Int> d, std::string name) {
  SkewMatrix m;
  m.n = static_cast<int>(b.rows());
  if (b.cols() != m.n) throw InputError("SkewMatrix: square matrix required");
  m.b = std::move(b);
  m.name = std::move(name);
  if (d.empty()) {
    m.d = compute_symmetrizer(m.b);
  } else {
    if (static_cast<int>(d.size()) != m.n)
      throw LengthMismatch("SkewMatrix: symmetrizer length mismatch");
    for (const Int& x : d)
      if (x.sgn() <= 0) throw InputError("SkewMatrix: symmetrizer must be positive");
    m.d = std::move(d);
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j)
        if (m.b(i, j) * m.d[j] != -(m.b(j, i) * m.d[i]))
          throw NotSymmetrizable("SkewMatrix: BD not skew-symmetric");
  }
  return m;
}

Seed initial_seed(const SkewMatrix& base) {
  Seed s;
  s.base = base;
  s.bw = base.b;
  s.cw = IntMatrix::Identity(base.n, base.n);
  return s;
}

Seed mutate_seed(const Seed& s, int k) {
  const int n = s.base.n;
  if (k < 0 || k >= n) throw IndexOutOfRange("mutate_seed: bad index");
  IntMatrix ext(n, 2 * n);
  ext.block(0, 0, n, n) = s.bw;
  ext.block(0, n, n, n) = s.cw;
  IntMatrix mut = mutate_extended(ext, k);
  Seed out;
  out.base = s.base;
  out.w = s.w;
  out.w.push_back(k);
  out.bw = mut.block(0, 0, n, n);
  out.cw = mut.block(0, n, n, n);
  return out;
}

Seed apply_sequence(const SkewMatrix& base, const MutationSeq& w) {
  Seed s = initial_seed(base);
  for (int k : w) s = mutate_seed(s, k);
  return s;
}

bool seed_keeps_symmetrizer(const Seed& s) {
  const int n = s.base.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (s.bw(i, j) * s.base.d[j] != -(s.bw(j, i) * s.base.d[i])) return false;
  return true;
}

bool seed_sign_coherent(const Seed& s) {
  for (int i = 0; i < s.base.n; ++i) {
    try {
      row_sign(s.cw.row(i));
    } catch (const NotSignCoherent&) {
      return false;
    }
  }
  return true;
}

}  // namespace loesung
