#ifndef LOESUNG_PI_SEARCH_HPP
#define LOESUNG_PI_SEARCH_HPP

#include <cstddef>
#include <vector>

#include "loesung/algebra.hpp"
#include "loesung/gim.hpp"
#include "loesung/words.hpp"

namespace loesung {

inline constexpr std::size_t kDefaultPiSearchNodeCap = 1000000;

/// All reduced words of length <= max_len whose pi-matrix equals the
/// target's, sorted by length then lexicographically. Walks the reduced-word
/// tree (each node has at most n-1 children) keeping the incremental matrix
/// product; hashes candidate matrices so full comparison only runs on hash
/// hits. Throws SearchBudgetExceeded past node_cap visited words.
std::vector<Word> search_pi_equivalent(
    const Word& target, const Gim& A, int max_len,
    std::size_t node_cap = kDefaultPiSearchNodeCap);

}  // namespace loesung

#endif  // LOESUNG_PI_SEARCH_HPP
