// Command-line surface for the mutation / reflection / Loesung toolkit.
//
// Exit codes: 0 clean, 2 conjecture counterexample candidate found,
// 3 invariant violation (a proved statement failed -- a bug), 4 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "loesung/algebra.hpp"
#include "loesung/harness.hpp"
#include "loesung/json_io.hpp"
#include "loesung/lambda.hpp"
#include "loesung/pi_search.hpp"
#include "loesung/reflections.hpp"

namespace {

using namespace loesung;

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot open output file: " + out_path);
    out << j.dump(2) << "\n";
  }
}

struct CommonArgs {
  std::string input;
  std::string seq;
  std::string ordering;
  std::string out;
  int max_len = 7;
  int jobs = 1;
};

Ordering ordering_or_default(const CommonArgs& args, const SkewMatrix& b) {
  if (!args.ordering.empty()) return Ordering::from_chain(args.ordering, b.n);
  std::vector<int> natural(b.n);
  for (int i = 0; i < b.n; ++i) natural[i] = i;
  return Ordering::from_ranks(natural);
}

int run_verify_theorem(const CommonArgs& args, bool all_seqs) {
  SkewMatrix b = load_skew_matrix(args.input);
  Ordering ord = ordering_or_default(args, b);
  if (all_seqs) {
    Report rep = run_full_verification(b, ord, args.max_len, args.jobs);
    emit(report_to_json(rep), args.out);
    return rep.errors.empty() ? 0 : 3;
  }
  MutationSeq w = seq_from_string(args.seq, b.n);
  Json j;
  j["tool"] = "verify-theorem";
  j["ordering"] = ord.chain();
  j["w"] = seq_to_string(w);
  Json steps = Json::array();
  bool ok = true;
  std::string failure;
  LambdaState st = init_state(b, ord);
  try {
    for (int k : w) {
      st = advance(st, k);
      steps.push_back(true);
    }
  } catch (const InvariantViolation& ex) {
    steps.push_back(false);
    ok = false;
    failure = ex.what();
  }
  j["perStepRelations"] = std::move(steps);
  if (ok) {
    ReflectionState refl = reflection_state(b, w);
    j["C1"] = check_C1(st);
    j["C2"] = check_C2(st);
    j["C3"] = check_C3(st, refl);
    j["Lambda"] = matrix_to_json(st.seed.cw);
    ok = j["C1"].get<bool>() && j["C2"].get<bool>() && j["C3"].get<bool>();
  } else {
    j["error"] = failure;
  }
  emit(j, args.out);
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tools for matrix mutation, reflection words and Loesungen"};
  app.require_subcommand(1);

  CommonArgs args;

  auto add_common = [&](CLI::App* cmd, bool need_input) {
    auto* opt = cmd->add_option("--input", args.input, "input JSON file with B");
    if (need_input) opt->required();
    cmd->add_option("--out", args.out, "write the JSON result to this file");
    return cmd;
  };

  auto* mutate = add_common(app.add_subcommand("mutate", "apply a mutation sequence to [B|I]"), true);
  mutate->add_option("--seq", args.seq, "mutation sequence, e.g. 2,3,2,1,2");

  auto* cvec = add_common(app.add_subcommand("cvec", "c-vectors and their signs"), true);
  cvec->add_option("--seq", args.seq, "mutation sequence");

  auto* rwords = add_common(app.add_subcommand("rwords", "reflection words r_i for a sequence"), true);
  rwords->add_option("--seq", args.seq, "mutation sequence");

  auto* lmat = add_common(app.add_subcommand("lmat", "L-matrix for a sequence and ordering"), true);
  lmat->add_option("--seq", args.seq, "mutation sequence");
  lmat->add_option("--ordering", args.ordering, "linear ordering chain, e.g. \"1>2>3\"");

  auto* gimsearch = add_common(app.add_subcommand("gim-search", "search for a parity-admissible ordering"), true);
  bool brute = false;
  gimsearch->add_flag("--brute-force", brute, "enumerate all orderings instead (n <= 8)");

  auto* loes = add_common(app.add_subcommand("loesung", "Loesung scan of enumerated c-vectors"), true);
  loes->add_option("--max-len", args.max_len, "maximum sequence length");
  loes->add_option("--jobs", args.jobs, "worker threads");

  auto* vthm = add_common(app.add_subcommand("verify-theorem", "check C1/C2/C3 and the boundary relations"), true);
  vthm->add_option("--seq", args.seq, "single mutation sequence");
  vthm->add_option("--ordering", args.ordering, "linear ordering chain");
  int all_seqs_len = -1;
  vthm->add_option("--all-seqs", all_seqs_len, "verify every sequence up to this length");
  vthm->add_option("--jobs", args.jobs, "worker threads");

  auto* vconj = add_common(app.add_subcommand("verify-conj", "probe conjecture 2.5(2) over seed classes"), true);
  vconj->add_option("--ordering", args.ordering, "linear ordering chain");
  vconj->add_option("--max-len", args.max_len, "maximum sequence length");
  vconj->add_option("--jobs", args.jobs, "worker threads");

  auto* words_cmd = app.add_subcommand("words", "reduced-word utilities");
  words_cmd->require_subcommand(1);
  std::string word_arg, target_arg;
  int word_rank = 9;
  auto* wreduce = words_cmd->add_subcommand("reduce", "reduce a word");
  wreduce->add_option("--word", word_arg, "letters, e.g. 3,4,4,3,1")->required();
  wreduce->add_option("--n", word_rank, "alphabet size");
  auto* wreflect = words_cmd->add_subcommand("reflect", "test whether a word is a reflection");
  wreflect->add_option("--word", word_arg, "letters")->required();
  wreflect->add_option("--n", word_rank, "alphabet size");
  auto* wpisearch = words_cmd->add_subcommand("pi-search", "find pi-equivalent words");
  wpisearch->add_option("--input", args.input, "input JSON file with B")->required();
  wpisearch->add_option("--ordering", args.ordering, "linear ordering chain");
  wpisearch->add_option("--target", target_arg, "target word")->required();
  wpisearch->add_option("--max-len", args.max_len, "maximum word length");
  wpisearch->add_option("--out", args.out, "write the JSON result to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*mutate) {
      SkewMatrix b = load_skew_matrix(args.input);
      Seed s = apply_sequence(b, seq_from_string(args.seq, b.n));
      emit(seed_to_json(s), args.out);
      return 0;
    }
    if (*cvec) {
      SkewMatrix b = load_skew_matrix(args.input);
      Seed s = apply_sequence(b, seq_from_string(args.seq, b.n));
      Json j;
      j["w"] = seq_to_string(s.w);
      j["Cw"] = matrix_to_json(s.cw);
      Json signs = Json::array();
      for (int i = 0; i < b.n; ++i) signs.push_back(row_sign(s.cw.row(i)));
      j["signs"] = std::move(signs);
      emit(j, args.out);
      return 0;
    }
    if (*rwords) {
      SkewMatrix b = load_skew_matrix(args.input);
      ReflectionState st = reflection_state(b, seq_from_string(args.seq, b.n));
      Json j;
      j["w"] = seq_to_string(st.seed.w);
      Json r = Json::array(), g = Json::array();
      for (int i = 0; i < b.n; ++i) {
        r.push_back(word_to_string(st.r[i]));
        g.push_back(word_to_string(palindromic_prefix(st.r[i])));
      }
      j["r"] = std::move(r);
      j["g"] = std::move(g);
      emit(j, args.out);
      return 0;
    }
    if (*lmat) {
      SkewMatrix b = load_skew_matrix(args.input);
      Ordering ord = ordering_or_default(args, b);
      ReflectionState st = reflection_state(b, seq_from_string(args.seq, b.n));
      Gim A = gim_from_ordering(b, ord);
      LMatrix lm = l_matrix(st, A);
      Json j;
      j["w"] = seq_to_string(st.seed.w);
      j["ordering"] = ord.chain();
      j["L"] = matrix_to_json(lm.rows);
      emit(j, args.out);
      return 0;
    }
    if (*gimsearch) {
      SkewMatrix b = load_skew_matrix(args.input);
      Json j;
      if (brute) {
        Json list = Json::array();
        for (const Ordering& o : brute_force_ordering_search(b)) {
          Json item;
          item["ordering"] = o.chain();
          item["gim"] = gim_to_json(gim_from_ordering(b, o));
          list.push_back(std::move(item));
          std::cout << o.chain() << "\n";
        }
        j["orderings"] = std::move(list);
      } else {
        std::optional<Ordering> o = find_admissible_ordering(b);
        if (o) {
          std::cout << o->chain() << "\n";
          j["ordering"] = o->chain();
          j["gim"] = gim_to_json(gim_from_ordering(b, *o));
        } else {
          std::cout << "no admissible ordering found\n";
          j["ordering"] = nullptr;
        }
      }
      emit(j, args.out);
      return 0;
    }
    if (*loes) {
      SkewMatrix b = load_skew_matrix(args.input);
      LoesungScan scan = loesung_scan(b, args.max_len, args.jobs);
      emit(loesung_scan_to_json(scan), args.out);
      return 0;
    }
    if (*vthm) {
      if (all_seqs_len >= 0) args.max_len = all_seqs_len;
      return run_verify_theorem(args, all_seqs_len >= 0);
    }
    if (*vconj) {
      SkewMatrix b = load_skew_matrix(args.input);
      Ordering ord = ordering_or_default(args, b);
      ConjectureProbe probe = probe_conjecture_pi_class(b, ord, args.max_len, args.jobs);
      emit(probe_to_json(probe), args.out);
      if (!probe.report.errors.empty()) return 3;
      return probe.report.violations.empty() ? 0 : 2;
    }
    if (*wreduce) {
      Word w = word_from_string(word_arg, word_rank);
      std::cout << word_to_string(w) << "\n";
      return 0;
    }
    if (*wreflect) {
      Word w = word_from_string(word_arg, word_rank);
      std::cout << (is_reflection(w) ? "reflection" : "not a reflection") << "\n";
      return 0;
    }
    if (*wpisearch) {
      SkewMatrix b = load_skew_matrix(args.input);
      Ordering ord = ordering_or_default(args, b);
      Gim A = gim_from_ordering(b, ord);
      Word target = word_from_string(target_arg, b.n);
      std::vector<Word> hits = search_pi_equivalent(target, A, args.max_len);
      Json j;
      j["target"] = word_to_string(target);
      j["ordering"] = ord.chain();
      j["maxLen"] = args.max_len;
      Json list = Json::array();
      for (const Word& w : hits) list.push_back(word_to_string(w));
      j["matches"] = std::move(list);
      emit(j, args.out);
      return 0;
    }
  } catch (const InvariantViolation& ex) {
    std::cerr << "invariant violation (bug): " << ex.what() << "\n";
    return 3;
  } catch (const InputError& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return 4;
  } catch (const BudgetExceeded& ex) {
    std::cerr << "budget exceeded: " << ex.what() << "\n";
    return 4;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 4;
  }
  return 0;
}
