#ifndef LOESUNG_HARNESS_HPP
#define LOESUNG_HARNESS_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "loesung/gim.hpp"
#include "loesung/lambda.hpp"
#include "loesung/matrix_core.hpp"
#include "loesung/reflections.hpp"

namespace loesung {

/// All mutation sequences over 0..n-1 of length <= max_len with no two
/// consecutive equal indices, in lexicographic order (prefixes first).
std::vector<MutationSeq> enumerate_sequences(int n, int max_len);

struct Budgets {
  std::size_t word_length = kDefaultWordBudget;
  std::size_t algebra_terms = 100000;
};

/// One report entry. Theorem-backed failures are errors (bugs); only
/// conjecture probes may produce violations, and those are labeled
/// "conjecture" candidates pending manual review, since a bug in any layer
/// would masquerade as a counterexample.
struct ReportEntry {
  std::string kind;     // "conjecture" or "error"
  std::string message;
  MutationSeq sequence; // minimal reproducer when applicable
};

struct Report {
  std::string tool;
  std::string input_name;
  std::string ordering_chain;  // empty when not applicable
  int max_len = 0;
  std::size_t runs = 0;
  std::vector<ReportEntry> violations;    // conjecture candidates only
  std::vector<ReportEntry> errors;        // invariant violations = bugs
  std::vector<ReportEntry> budget_stops;  // runs cut off by a configured cap
  std::vector<std::string> notes;
  double timing_seconds = 0.0;

  bool clean() const { return violations.empty() && errors.empty(); }
};

/// Conjecture 2.5(2) probe: group sequences by C-matrix, then compare the
/// pi-images of the reflection words inside each class. Warns (a note) when
/// the ordering fails the parity hypothesis.
struct SeedClassSummary {
  IntMatrix cw;
  std::vector<MutationSeq> members;
  bool pi_consistent = true;
};

struct ConjectureProbe {
  Report report;
  std::vector<SeedClassSummary> classes;
  std::size_t largest_class = 0;
};

ConjectureProbe probe_conjecture_pi_class(const SkewMatrix& b, const Ordering& o,
                                          int max_len, int jobs = 1,
                                          const Budgets& budgets = {});

/// Runs is_loesung for every enumerated c-vector against every ordering GIM;
/// aggregates the c-vectors failing for all of them.
struct LoesungScan {
  Report report;
  std::vector<IntRowVec> fails_all_gims;
  std::size_t vectors_checked = 0;
  std::size_t gim_count = 0;
};

LoesungScan loesung_scan(const SkewMatrix& b, int max_len, int jobs = 1);

/// Full Theorem 1.5 sweep: for every enumerated sequence run the lambda
/// recursion with per-step relation checks, C1/C2/C3, and the l-vector
/// q-invariant. Any failure lands in errors with a minimal reproducer.
Report run_full_verification(const SkewMatrix& b, const Ordering& o,
                             int max_len, int jobs = 1,
                             const Budgets& budgets = {});

/// Simple index-parallel helper; results keep deterministic order because
/// workers write into preallocated slots.
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& fn);

}  // namespace loesung

#endif  // LOESUNG_HARNESS_HPP
