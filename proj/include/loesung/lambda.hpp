#ifndef LOESUNG_LAMBDA_HPP
#define LOESUNG_LAMBDA_HPP

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "loesung/algebra.hpp"
#include "loesung/gim.hpp"
#include "loesung/matrix_core.hpp"
#include "loesung/reflections.hpp"

namespace loesung {

/// Index pairs steering the tau / s updates for one pending mutation step.
struct PairSets {
  std::set<std::pair<int, int>> p_s;
  std::set<std::pair<int, int>> p_tau;
};

/// Boundary state of the recursion: the vectors lambda_i^w, the algebra
/// elements s_i^w and e_i^w, the symbolic expression producing each lambda
/// (an element applied to the i-th unit vector), and the seed mutated in
/// lockstep. tau is materialized per step inside advance() since it depends
/// on the pending mutation index.
struct LambdaState {
  SkewMatrix B;
  Gim A;
  MutationSeq w;
  std::vector<IntRowVec> lambda;
  std::vector<AlgebraElement> s;
  std::vector<AlgebraElement> e;
  std::vector<AlgebraElement> lambda_expr;
  Seed seed;
};

LambdaState init_state(const SkewMatrix& b, const Ordering& o);

/// Membership by the branch conditions comparing lambda_i against
/// s_k(lambda_i) in the componentwise order. On the initial state this is the
/// first-step definition; the sign conditions on lambda_k make the two
/// definitions coincide (the initial lambda_k is a positive unit vector).
PairSets pair_sets(const LambdaState& st, int k);

/// First-step pair sets; requires an initial state (empty w).
PairSets first_step_pairs(const LambdaState& st, int k);

/// tau_i = s_i + 2 (1 - s_i) e_{tau,i}, with e_{tau,i} summing e_j over pairs
/// (i,j) or (j,i) in the given P_tau.
std::vector<AlgebraElement> make_tau(const LambdaState& st, const PairSets& p);

struct AdvanceOptions {
  bool check_relations = true;  // relations (3.2)-(3.7) after the step
  bool check_theorem = true;    // C1 and C2 after the step
  std::size_t term_budget = 100000;
};

/// One step of the recursion; throws InvariantViolation when a checked
/// proved statement fails (that is a bug detector, not a data error).
LambdaState advance(const LambdaState& st, int k, const AdvanceOptions& opt = {});

LambdaState run_lambda(const SkewMatrix& b, const Ordering& o,
                       const MutationSeq& w, const AdvanceOptions& opt = {});

bool check_C1(const LambdaState& st);
bool check_C2(const LambdaState& st);
bool check_C3(const LambdaState& st, const ReflectionState& refl);

/// Relations (3.2)-(3.7) for the boundary elements s, e; the tau overload
/// additionally checks the tau families for a materialized tau. Throws
/// InvariantViolation naming the first failed relation.
void check_relations_or_throw(const std::vector<AlgebraElement>& s,
                              const std::vector<AlgebraElement>& e);
void check_relations_or_throw(const std::vector<AlgebraElement>& s,
                              const std::vector<AlgebraElement>& e,
                              const std::vector<AlgebraElement>& tau);

/// The symbolic expression for lambda_i^w restricted to its action on the
/// i-th unit vector: an integer combination of plain words (cap terms with
/// cap == i keep their word, other caps act as zero).
AlgebraElement lambda_word_expression(const LambdaState& st, int i);

}  // namespace loesung

#endif  // LOESUNG_LAMBDA_HPP
