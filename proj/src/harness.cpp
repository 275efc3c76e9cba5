#include "loesung/harness.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

namespace loesung {

namespace {

std::string seq_string(const MutationSeq& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i] + 1;
  }
  return os.str();
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string matrix_key(const IntMatrix& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << m(i, j) << ",";
  return os.str();
}

}  // namespace

std::vector<MutationSeq> enumerate_sequences(int n, int max_len) {
  if (max_len < 0) throw InputError("enumerate_sequences: negative max_len");
  std::vector<MutationSeq> out;
  out.push_back({});
  MutationSeq cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int k = 0; k < n; ++k) {
      if (!cur.empty() && cur.back() == k) continue;
      cur.push_back(k);
      out.push_back(cur);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
      fn(i);
  };
  std::vector<std::thread> pool;
  int threads = static_cast<int>(std::min<std::size_t>(jobs, count));
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

ConjectureProbe probe_conjecture_pi_class(const SkewMatrix& b, const Ordering& o,
                                          int max_len, int jobs,
                                          const Budgets& budgets) {
  Timer timer;
  ConjectureProbe probe;
  probe.report.tool = "verify-conj";
  probe.report.input_name = b.name;
  probe.report.ordering_chain = o.chain();
  probe.report.max_len = max_len;

  if (!ordering_satisfies_parity(b, o))
    probe.report.notes.push_back(
        "ordering fails the oriented-cycle parity condition; the conjecture's "
        "hypothesis does not hold for this GIM");

  Gim A = gim_from_ordering(b, o);
  std::vector<MutationSeq> seqs = enumerate_sequences(b.n, max_len);
  probe.report.runs = seqs.size();

  struct PerSeq {
    MutationSeq w;
    IntMatrix cw;
    std::vector<IntMatrix> pi_r;
  };
  std::vector<PerSeq> rows(seqs.size());
  std::vector<std::string> worker_errors(seqs.size());
  parallel_for(seqs.size(), jobs, [&](std::size_t idx) {
    try {
      ReflectionState st = reflection_state(b, seqs[idx], budgets.word_length);
      rows[idx].w = seqs[idx];
      rows[idx].cw = st.seed.cw;
      for (int i = 0; i < b.n; ++i)
        rows[idx].pi_r.push_back(pi_word(st.r[i], A));
    } catch (const std::exception& ex) {
      worker_errors[idx] = ex.what();
    }
  });
  for (std::size_t idx = 0; idx < seqs.size(); ++idx)
    if (!worker_errors[idx].empty())
      probe.report.errors.push_back(
          {"error", worker_errors[idx], seqs[idx]});

  std::map<std::string, std::size_t> class_of;
  std::vector<std::size_t> rep_of_class;
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    const PerSeq& row = rows[idx];
    std::string key = matrix_key(row.cw);
    auto it = class_of.find(key);
    if (it == class_of.end()) {
      class_of.emplace(key, probe.classes.size());
      rep_of_class.push_back(idx);
      probe.classes.push_back({row.cw, {row.w}, true});
      continue;
    }
    SeedClassSummary& cls = probe.classes[it->second];
    cls.members.push_back(row.w);
    const PerSeq& rep = rows[rep_of_class[it->second]];
    for (int i = 0; i < b.n; ++i) {
      if (!(row.pi_r[i] == rep.pi_r[i])) {
        cls.pi_consistent = false;
        std::ostringstream msg;
        msg << "conjecture 2.5(2) candidate: C^w = C^v but pi(r_" << (i + 1)
            << ") differs for w=[" << seq_string(rep.w) << "] vs v=["
            << seq_string(row.w) << "]";
        probe.report.violations.push_back({"conjecture", msg.str(), row.w});
      }
    }
  }
  for (const SeedClassSummary& cls : probe.classes)
    probe.largest_class = std::max(probe.largest_class, cls.members.size());
  std::ostringstream stats;
  stats << probe.classes.size() << " seed classes over " << seqs.size()
        << " sequences; largest class has " << probe.largest_class
        << " members";
  probe.report.notes.push_back(stats.str());
  probe.report.timing_seconds = timer.seconds();
  return probe;
}

LoesungScan loesung_scan(const SkewMatrix& b, int max_len, int jobs) {
  Timer timer;
  if (b.n > 8) throw RankTooLarge("loesung_scan: n > 8");
  LoesungScan scan;
  scan.report.tool = "loesung";
  scan.report.input_name = b.name;
  scan.report.max_len = max_len;

  std::vector<Gim> gims;
  for (const Ordering& o : all_orderings(b.n))
    gims.push_back(gim_from_ordering(b, o));
  scan.gim_count = gims.size();

  std::vector<MutationSeq> seqs = enumerate_sequences(b.n, max_len);
  scan.report.runs = seqs.size();

  // dedupe c-vectors across seeds
  std::map<std::string, IntRowVec> seen;
  for (const MutationSeq& w : seqs) {
    Seed s = apply_sequence(b, w);
    for (int i = 0; i < b.n; ++i) {
      IntRowVec c = s.cw.row(i);
      seen.emplace(format_vec(c), c);
    }
  }
  scan.vectors_checked = seen.size();

  std::vector<IntRowVec> vecs;
  for (auto& [k, v] : seen) vecs.push_back(v);
  std::vector<char> fails(vecs.size(), 0);
  parallel_for(vecs.size(), jobs, [&](std::size_t idx) {
    bool any = false;
    for (const Gim& g : gims)
      if (is_loesung(g, vecs[idx]).k.has_value()) {
        any = true;
        break;
      }
    fails[idx] = any ? 0 : 1;
  });
  for (std::size_t i = 0; i < vecs.size(); ++i)
    if (fails[i]) scan.fails_all_gims.push_back(vecs[i]);

  std::ostringstream note;
  note << scan.fails_all_gims.size() << " of " << scan.vectors_checked
       << " distinct c-vectors are not Loesungen for any of " << scan.gim_count
       << " ordering GIMs";
  scan.report.notes.push_back(note.str());
  scan.report.timing_seconds = timer.seconds();
  return scan;
}

Report run_full_verification(const SkewMatrix& b, const Ordering& o,
                             int max_len, int jobs, const Budgets& budgets) {
  Timer timer;
  Report report;
  report.tool = "verify-theorem";
  report.input_name = b.name;
  report.ordering_chain = o.chain();
  report.max_len = max_len;

  Gim A = gim_from_ordering(b, o);
  std::vector<MutationSeq> seqs = enumerate_sequences(b.n, max_len);
  report.runs = seqs.size();

  AdvanceOptions opt;
  opt.check_relations = true;
  opt.check_theorem = true;
  opt.term_budget = budgets.algebra_terms;

  std::vector<std::string> failures(seqs.size()), stops(seqs.size());
  parallel_for(seqs.size(), jobs, [&](std::size_t idx) {
    const MutationSeq& w = seqs[idx];
    try {
      LambdaState st = run_lambda(b, o, w, opt);
      ReflectionState refl = reflection_state(b, w, budgets.word_length);
      if (!check_C3(st, refl)) {
        failures[idx] = "C3 failed";
        return;
      }
      // reflection words are odd palindromes and their l-vectors keep the
      // quadratic form value 2 d_i
      LMatrix lm = l_matrix(refl, A);
      for (int i = 0; i < b.n; ++i) {
        if (!is_reflection(refl.r[i])) {
          failures[idx] = "r_i is not a reflection word";
          return;
        }
        if (quadratic_form(A, lm.rows.row(i)) != Int(2) * b.d[i]) {
          failures[idx] = "q(l_i) != 2 d_i";
          return;
        }
      }
    } catch (const BudgetExceeded& ex) {
      stops[idx] = ex.what();
    } catch (const std::exception& ex) {
      failures[idx] = ex.what();
    }
  });
  for (std::size_t idx = 0; idx < seqs.size(); ++idx) {
    if (!failures[idx].empty())
      report.errors.push_back({"error", failures[idx], seqs[idx]});
    if (!stops[idx].empty())
      report.budget_stops.push_back({"budget", stops[idx], seqs[idx]});
  }

  report.timing_seconds = timer.seconds();
  return report;
}

}  // namespace loesung
