// Shared fixture matrices used across the test suites.
#ifndef LOESUNG_TESTS_FIXTURES_HPP
#define LOESUNG_TESTS_FIXTURES_HPP

#include <vector>

#include "loesung/gim.hpp"
#include "loesung/matrix_core.hpp"

namespace fixtures {

using loesung::Int;
using loesung::IntMatrix;
using loesung::IntRowVec;
using loesung::MutationSeq;
using loesung::Ordering;
using loesung::SkewMatrix;

inline IntMatrix mat(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = Int(rows[i][j]);
  return m;
}

inline IntRowVec vec(const std::vector<long long>& entries) {
  IntRowVec v(static_cast<int>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i)
    v(static_cast<int>(i)) = Int(entries[i]);
  return v;
}

/// 1-based sequence literal -> internal 0-based.
inline MutationSeq seq(const std::vector<int>& one_based) {
  MutationSeq w;
  for (int k : one_based) w.push_back(k - 1);
  return w;
}

/// 1-based smallest-first ordering listing.
inline Ordering ord(const std::vector<int>& smallest_first) {
  std::vector<int> zero_based;
  for (int k : smallest_first) zero_based.push_back(k - 1);
  return Ordering::from_ranks(zero_based);
}

// rank 3, symmetrizer diag(3,2,2); mutation showcase [2,3,2,1,2]
inline SkewMatrix rank3_d322() {
  return SkewMatrix::make(mat({{0, 3, -3}, {-2, 0, 2}, {2, -2, 0}}), {}, "rank3_d322");
}

// rank 3, symmetrizer diag(1,2,1); the lambda-recursion walkthrough matrix
inline SkewMatrix rank3_d121() {
  return SkewMatrix::make(mat({{0, 1, -3}, {-2, 0, -2}, {3, 1, 0}}), {}, "rank3_d121");
}

// the dreaded torus (rank 4, skew-symmetric)
inline SkewMatrix dreaded_torus() {
  return SkewMatrix::make(
      mat({{0, -1, -1, 2}, {1, 0, 1, -1}, {1, -1, 0, -1}, {-2, 1, 1, 0}}), {},
      "dreaded_torus");
}

// rank 4 with a pi-kernel element (s3 s4)^3
inline SkewMatrix rank4_kernel() {
  return SkewMatrix::make(
      mat({{0, -2, -2, 3}, {2, 0, 4, 2}, {2, -4, 0, -1}, {-3, -2, 1, 0}}), {},
      "rank4_kernel");
}

// rank 5 spanning-tree example with oriented cycles {1,3,4} and {2,4,5}
inline SkewMatrix rank5_tree() {
  return SkewMatrix::make(mat({{0, -1, 1, -1, 0},
                               {1, 0, 0, -1, 1},
                               {-1, 0, 0, 1, 0},
                               {1, 1, -1, 0, -1},
                               {0, -1, 0, 1, 0}}),
                          {}, "rank5_tree");
}

// rank 4 whose c-vector (5,2,2,2) is never a Loesung
inline SkewMatrix rank4_no_loesung() {
  return SkewMatrix::make(
      mat({{0, -1, -1, -1}, {1, 0, 1, -1}, {1, -1, 0, 1}, {1, 1, -1, 0}}), {},
      "rank4_no_loesung");
}

// an A4 orientation; lambda_3 after [2,4,2] is a multi-term real Loesung
inline SkewMatrix rank4_a4() {
  return SkewMatrix::make(
      mat({{0, 1, 0, 0}, {-1, 0, -1, 0}, {0, 1, 0, 1}, {0, 0, -1, 0}}), {},
      "rank4_a4");
}

}  // namespace fixtures

#endif  // LOESUNG_TESTS_FIXTURES_HPP
