#ifndef LOESUNG_GIM_HPP
#define LOESUNG_GIM_HPP

#include <optional>
#include <string>
#include <vector>

#include "loesung/matrix_core.hpp"
#include "loesung/types.hpp"

namespace loesung {

/// A linear ordering on indices 0..n-1. pos[i] is the rank of i, so
/// i precedes j iff pos[i] < pos[j].
struct Ordering {
  std::vector<int> pos;

  int n() const { return static_cast<int>(pos.size()); }
  bool precedes(int i, int j) const { return pos[i] < pos[j]; }

  /// Indices listed smallest-first.
  std::vector<int> by_rank() const;

  static Ordering from_ranks(const std::vector<int>& smallest_first);
  /// Parses "4<3<1<5<2" or "1>2>3" (1-based indices).
  static Ordering from_chain(const std::string& chain, int n);
  /// One-line chain notation, smallest first ("4<3<1<5<2").
  std::string chain() const;

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.pos == b.pos;
  }
};

/// All n! orderings in lexicographic order of their smallest-first listing.
std::vector<Ordering> all_orderings(int n);

/// Generalized intersection matrix induced by an ordering:
/// a[i][i]=2, a[i][j]=b[i][j] if i precedes j, else -b[i][j].
struct Gim {
  IntMatrix a;
  Ordering ordering;
  SkewMatrix source;

  int n() const { return source.n; }
};

Gim gim_from_ordering(const SkewMatrix& b, const Ordering& o);

/// sum_{i,j} d_j a[i][j] m_i m_j, i.e. m (A D) m^T.
Int quadratic_form(const Gim& g, const IntRowVec& m);

struct LoesungCheck {
  std::optional<int> k;  // some k with q(m) = 2 d_k
  bool positive = false;
  Int value;             // q(m)
};

LoesungCheck is_loesung(const Gim& g, const IntRowVec& m);

/// A chordless cycle, stored as the vertex path (closing edge implicit).
/// Two cycles are the same iff they have the same vertex set; the stored
/// path starts at the smallest vertex and is direction-normalized.
struct ChordlessCycle {
  std::vector<int> vertices;
  bool oriented = false;
};

std::vector<ChordlessCycle> chordless_cycles(const SkewMatrix& b);

/// Conjecture 2.5(1) condition: every oriented chordless cycle has an odd
/// number of positive GIM entries along consecutive pairs.
bool ordering_satisfies_parity(const SkewMatrix& b, const Ordering& o);

/// Constructive search following the spanning-tree proof: find a spanning
/// forest covering every oriented chordless cycle, pick the reversal set by
/// the proof's two rules, topologically sort the reversed digraph and extend
/// to a linear order. Returns an ordering passing the parity check, or empty
/// when the search is exhausted. Deterministic: spanning forests are tried in
/// edge-lexicographic order and the topological sort is the lexicographically
/// smallest one.
std::optional<Ordering> find_admissible_ordering(const SkewMatrix& b);

/// Exhaustive oracle: all orderings passing the parity check. n <= 8.
std::vector<Ordering> brute_force_ordering_search(const SkewMatrix& b);

}  // namespace loesung

#endif  // LOESUNG_GIM_HPP
