#ifndef LOESUNG_MATRIX_CORE_HPP
#define LOESUNG_MATRIX_CORE_HPP

#include <string>
#include <vector>

#include "loesung/types.hpp"

namespace loesung {

/// Indices of consecutive mutations, 0-based. Consecutive repeats are legal
/// input (mutation is an involution); enumerators prune them as redundant.
using MutationSeq = std::vector<int>;

/// Minimal positive integer diagonal d with b[i][j]*d[j] = -b[j][i]*d[i],
/// normalized per connected component of the nonzero pattern and then to
/// global gcd 1. Throws NotSymmetrizable when no positive solution exists.
std::vector<Int> compute_symmetrizer(const IntMatrix& b);

/// A skew-symmetrizable integer matrix together with its symmetrizer.
struct SkewMatrix {
  int n = 0;
  IntMatrix b;
  std::vector<Int> d;
  std::string name;

  /// Validates skew-symmetrizability; computes d when not supplied.
  static SkewMatrix make(IntMatrix b, std::vector<Int> d = {},
                         std::string name = "");
};

/// One mutation step of an n x 2n extended matrix at index k (0-based):
/// negate row/column k, otherwise add sgn(m[i][k]) * max(m[i][k]*m[k][j], 0).
template <typename Derived>
IntMatrix mutate_extended(const Eigen::MatrixBase<Derived>& m, int k) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  if (k < 0 || k >= rows) throw IndexOutOfRange("mutate_extended: bad index");
  IntMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (i == k || j == k) {
        out(i, j) = -m(i, j);
      } else {
        Int prod = m(i, k) * m(k, j);
        out(i, j) = m(i, j);
        if (prod.sgn() > 0) out(i, j) += Int(m(i, k).sgn()) * prod;
      }
    }
  }
  return out;
}

/// The pair (B^w, C^w) reached from [B | I] by a mutation sequence.
struct Seed {
  SkewMatrix base;
  MutationSeq w;
  IntMatrix bw;
  IntMatrix cw;

  IntRowVec c_vector(int i) const { return cw.row(i); }
};

Seed initial_seed(const SkewMatrix& base);
Seed mutate_seed(const Seed& s, int k);
Seed apply_sequence(const SkewMatrix& base, const MutationSeq& w);

/// Checks bw[i][j]*d[j] = -bw[j][i]*d[i] for the seed's own symmetrizer.
bool seed_keeps_symmetrizer(const Seed& s);

/// Checks every row of C^w is nonzero and sign-coherent.
bool seed_sign_coherent(const Seed& s);

}  // namespace loesung

#endif  // LOESUNG_MATRIX_CORE_HPP
