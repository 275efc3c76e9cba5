#include "loesung/lambda.hpp"

#include <sstream>

namespace loesung {

namespace {

std::string step_context(const LambdaState& st, int k) {
  std::ostringstream os;
  os << "B=" << (st.B.name.empty() ? format_mat(st.B.b) : st.B.name)
     << " ordering=" << st.A.ordering.chain() << " w=";
  for (size_t t = 0; t < st.w.size(); ++t) {
    if (t) os << ",";
    os << st.w[t] + 1;
  }
  os << " step=" << k + 1;
  return os.str();
}

void check_se_relations(const std::vector<AlgebraElement>& s,
                        const std::vector<AlgebraElement>& e,
                        std::size_t budget);
void check_tau_families(const std::vector<AlgebraElement>& e,
                        const std::vector<AlgebraElement>& tau,
                        std::size_t budget);

}  // namespace

LambdaState init_state(const SkewMatrix& b, const Ordering& o) {
  LambdaState st;
  st.B = b;
  st.A = gim_from_ordering(b, o);
  st.seed = initial_seed(b);
  for (int i = 0; i < b.n; ++i) {
    st.lambda.push_back(unit_row(b.n, i));
    st.s.push_back(AlgebraElement::gen_s(b.n, i));
    st.e.push_back(AlgebraElement::gen_e(b.n, i));
    st.lambda_expr.push_back(AlgebraElement::one(b.n));
  }
  return st;
}

PairSets pair_sets(const LambdaState& st, int k) {
  const int n = st.B.n;
  if (k < 0 || k >= n) throw IndexOutOfRange("pair_sets: bad index");
  const Ordering& ord = st.A.ordering;
  PairSets out;

  std::vector<VecOrder> cmp(n);
  for (int i = 0; i < n; ++i)
    cmp[i] = vec_cmp(st.lambda[i], act(st.s[k], st.lambda[i], st.A));
  int lk_sign = row_sign(st.lambda[k]);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      bool chain = (ord.precedes(k, i) && ord.precedes(i, j)) ||
                   (ord.precedes(i, j) && ord.precedes(j, k));
      if (chain && cmp[i] == VecOrder::Greater && cmp[j] == VecOrder::Less) {
        out.p_s.emplace(i, j);
        out.p_tau.emplace(i, j);
      }
      if (i == k) {
        if (ord.precedes(j, i) && lk_sign < 0 && cmp[j] == VecOrder::Greater)
          out.p_s.emplace(i, j);
        if (ord.precedes(i, j) && lk_sign > 0 && cmp[j] == VecOrder::Less)
          out.p_s.emplace(i, j);
        if (ord.precedes(j, i) && lk_sign > 0 && cmp[j] == VecOrder::Greater)
          out.p_tau.emplace(i, j);
        if (ord.precedes(i, j) && lk_sign < 0 && cmp[j] == VecOrder::Less)
          out.p_tau.emplace(i, j);
      }
    }
  }
  return out;
}

PairSets first_step_pairs(const LambdaState& st, int k) {
  if (!st.w.empty()) throw InputError("first_step_pairs: state is not initial");
  return pair_sets(st, k);
}

namespace {

std::vector<AlgebraElement> make_tau_budgeted(const LambdaState& st,
                                              const PairSets& p,
                                              std::size_t budget) {
  const int n = st.B.n;
  std::vector<AlgebraElement> tau;
  tau.reserve(n);
  AlgebraElement one = AlgebraElement::one(n);
  for (int i = 0; i < n; ++i) {
    AlgebraElement e_tau;
    for (int j = 0; j < n; ++j)
      if (p.p_tau.count({i, j}) || p.p_tau.count({j, i})) e_tau = e_tau + st.e[j];
    tau.push_back(st.s[i] +
                  Int(2) * mul_budgeted(one - st.s[i], e_tau, budget));
  }
  return tau;
}

}  // namespace

std::vector<AlgebraElement> make_tau(const LambdaState& st, const PairSets& p) {
  return make_tau_budgeted(st, p, 0);
}

LambdaState advance(const LambdaState& st, int k, const AdvanceOptions& opt) {
  const int n = st.B.n;
  if (k < 0 || k >= n) throw IndexOutOfRange("advance: bad index");
  const Ordering& ord = st.A.ordering;
  AlgebraElement one = AlgebraElement::one(n);

  const std::size_t budget = opt.term_budget;
  PairSets pairs = pair_sets(st, k);
  std::vector<AlgebraElement> tau = make_tau_budgeted(st, pairs, budget);
  // s/e families of this boundary were checked when it was created; the tau
  // for the pending step only exists now.
  if (opt.check_relations) check_tau_families(st.e, tau, budget);

  // branch (*): lambda_i < s_k(lambda_i) and k < i, or > and k > i
  std::vector<bool> conjugated(n, false);
  for (int i = 0; i < n; ++i) {
    VecOrder c = vec_cmp(st.lambda[i], act(st.s[k], st.lambda[i], st.A));
    conjugated[i] = (c == VecOrder::Less && ord.precedes(k, i)) ||
                    (c == VecOrder::Greater && ord.precedes(i, k));
  }

  LambdaState out;
  out.B = st.B;
  out.A = st.A;
  out.w = st.w;
  out.w.push_back(k);

  // lambda update (tau_k applied when (*) holds or i = k)
  out.lambda.resize(n);
  out.lambda_expr.resize(n);
  for (int i = 0; i < n; ++i) {
    if (conjugated[i] || i == k) {
      out.lambda[i] = act(tau[k], st.lambda[i], st.A);
      out.lambda_expr[i] = mul_budgeted(tau[k], st.lambda_expr[i], budget);
    } else {
      out.lambda[i] = st.lambda[i];
      out.lambda_expr[i] = st.lambda_expr[i];
    }
  }

  // e update: conjugate where (*) holds, then the k-th one absorbs the moved
  // idempotents: e_k <- e_k - e_k e_+ with e_+ over the changed lambdas.
  out.e.resize(n);
  for (int i = 0; i < n; ++i) {
    if (i == k) continue;
    out.e[i] = conjugated[i]
                   ? mul_budgeted(mul_budgeted(tau[k], st.e[i], budget), tau[k],
                                  budget)
                   : st.e[i];
  }
  AlgebraElement e_plus;
  for (int j = 0; j < n; ++j)
    if (j != k && vec_cmp(out.lambda[j], st.lambda[j]) != VecOrder::Equal)
      e_plus = e_plus + out.e[j];
  out.e[k] = st.e[k] - mul_budgeted(st.e[k], e_plus, budget);

  // s update from P_s of this step
  out.s.resize(n);
  for (int i = 0; i < n; ++i) {
    AlgebraElement e_s;
    for (int j = 0; j < n; ++j)
      if (pairs.p_s.count({i, j}) || pairs.p_s.count({j, i})) e_s = e_s + out.e[j];
    AlgebraElement core =
        conjugated[i]
            ? mul_budgeted(mul_budgeted(tau[k], tau[i], budget), tau[k], budget)
            : tau[i];
    out.s[i] = core + Int(2) * mul_budgeted(one - core, e_s, budget);
  }

  out.seed = mutate_seed(st.seed, k);

  if (opt.check_relations) check_se_relations(out.s, out.e, budget);
  if (opt.check_theorem) {
    if (!check_C1(out))
      throw InvariantViolation("advance: Lambda != C after step (" +
                               step_context(st, k) + ")");
    if (!check_C2(out))
      throw InvariantViolation("advance: C2 failed after step (" +
                               step_context(st, k) + ")");
  }
  return out;
}

LambdaState run_lambda(const SkewMatrix& b, const Ordering& o,
                       const MutationSeq& w, const AdvanceOptions& opt) {
  LambdaState st = init_state(b, o);
  for (int k : w) st = advance(st, k, opt);
  return st;
}

bool check_C1(const LambdaState& st) {
  for (int i = 0; i < st.B.n; ++i)
    for (int j = 0; j < st.B.n; ++j)
      if (st.lambda[i](j) != st.seed.cw(i, j)) return false;
  return true;
}

bool check_C2(const LambdaState& st) {
  const int n = st.B.n;
  const Ordering& ord = st.A.ordering;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      IntRowVec got = act(st.s[i], st.lambda[j], st.A);
      IntRowVec expect;
      if (i == j) {
        expect = -st.lambda[j];
      } else if (ord.precedes(i, j)) {
        expect = st.lambda[j] + st.seed.bw(j, i) * st.lambda[i];
      } else {
        expect = st.lambda[j] - st.seed.bw(j, i) * st.lambda[i];
      }
      if (vec_cmp(got, expect) != VecOrder::Equal) return false;
      IntRowVec egot = act(st.e[i], st.lambda[j], st.A);
      IntRowVec eexpect =
          (i == j) ? st.lambda[j] : IntRowVec(IntRowVec::Zero(n));
      if (vec_cmp(egot, eexpect) != VecOrder::Equal) return false;
    }
  }
  return true;
}

bool check_C3(const LambdaState& st, const ReflectionState& refl) {
  if (st.w != refl.seed.w)
    throw InputError("check_C3: states follow different sequences");
  for (int i = 0; i < st.B.n; ++i)
    if (!mod2_equal(st.s[i], AlgebraElement::from_word(st.B.n, refl.r[i])))
      return false;
  return true;
}

namespace {

void check_se_relations(const std::vector<AlgebraElement>& s,
                        const std::vector<AlgebraElement>& e,
                        std::size_t budget) {
  const int n = static_cast<int>(s.size());
  AlgebraElement one = AlgebraElement::one(n);
  auto fail = [](const std::string& which) {
    throw InvariantViolation("relation failed: " + which);
  };

  AlgebraElement esum;
  for (int i = 0; i < n; ++i) esum = esum + e[i];
  if (esum != one) fail("sum e_i = 1");

  for (int i = 0; i < n; ++i) {
    if (mul_budgeted(s[i], s[i], budget) != one)
      fail("s_i s_i = 1 (i=" + std::to_string(i + 1) + ")");
    if (mul_budgeted(s[i], e[i], budget) != -e[i])
      fail("s_i e_i = -e_i (i=" + std::to_string(i + 1) + ")");
    for (int j = 0; j < n; ++j) {
      AlgebraElement ee = mul_budgeted(e[i], e[j], budget);
      if (i == j ? (ee != e[i]) : !ee.is_zero()) fail("e_i e_j = delta e_i");
      AlgebraElement es = mul_budgeted(e[i], s[j], budget);
      AlgebraElement es_expect = (i == j) ? s[i] + e[i] - one : e[i];
      if (es != es_expect) fail("e_i s_j relation");
    }
  }
}

void check_tau_families(const std::vector<AlgebraElement>& e,
                        const std::vector<AlgebraElement>& tau,
                        std::size_t budget) {
  const int n = static_cast<int>(e.size());
  AlgebraElement one = AlgebraElement::one(n);
  auto fail = [](const std::string& which) {
    throw InvariantViolation("relation failed: " + which);
  };
  for (int i = 0; i < n; ++i) {
    if (mul_budgeted(tau[i], tau[i], budget) != one)
      fail("tau_i tau_i = 1 (i=" + std::to_string(i + 1) + ")");
    if (mul_budgeted(tau[i], e[i], budget) != -e[i])
      fail("tau_i e_i = -e_i (i=" + std::to_string(i + 1) + ")");
    for (int j = 0; j < n; ++j) {
      AlgebraElement et = mul_budgeted(e[i], tau[j], budget);
      AlgebraElement et_expect = (i == j) ? tau[i] + e[i] - one : e[i];
      if (et != et_expect) fail("e_i tau_j relation");
    }
  }
}

}  // namespace

void check_relations_or_throw(const std::vector<AlgebraElement>& s,
                              const std::vector<AlgebraElement>& e) {
  check_se_relations(s, e, 0);
}

void check_relations_or_throw(const std::vector<AlgebraElement>& s,
                              const std::vector<AlgebraElement>& e,
                              const std::vector<AlgebraElement>& tau) {
  check_se_relations(s, e, 0);
  check_tau_families(e, tau, 0);
}

AlgebraElement lambda_word_expression(const LambdaState& st, int i) {
  // Restriction to the action on lambda_i: cap-free words and cap-i terms
  // contribute their word, everything else acts as zero. A trailing s_i is
  // absorbed with a sign flip (s_i(lambda_i) = -lambda_i), which makes the
  // result independent of the stored representation of the element.
  AlgebraElement out;
  for (const auto& [m, c] : st.lambda_expr[i].terms()) {
    if (m.has_cap() && m.cap != i) continue;
    Word u = m.word;
    Int coeff = c;
    if (!u.empty() && u[u.size() - 1] == i) {
      u = Word(std::vector<int>(u.letters().begin(), u.letters().end() - 1));
      coeff = -coeff;
    }
    out = out + AlgebraElement::monomial(st.B.n, u, -1, coeff);
  }
  return out;
}

}  // namespace loesung
