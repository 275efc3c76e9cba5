#include "loesung/json_io.hpp"

#include <fstream>
#include <sstream>

namespace loesung {

namespace {

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw InputError("expected integer (number or decimal string)");
}

Json int_to_json(const Int& x) {
  if (x.fits_int64()) return Json(x.as_int64());
  return Json(x.str());
}

}  // namespace

SkewMatrix skew_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("input must be a JSON object");
  if (!j.contains("B")) throw InputError("input missing \"B\"");
  IntMatrix b = matrix_from_json(j.at("B"));
  if (j.contains("n")) {
    int n = j.at("n").get<int>();
    if (n != b.rows()) throw InputError("\"n\" disagrees with the shape of \"B\"");
  }
  std::vector<Int> d;
  if (j.contains("D")) {
    for (const Json& x : j.at("D")) d.push_back(int_from_json(x));
  }
  std::string name = j.value("name", std::string());
  return SkewMatrix::make(std::move(b), std::move(d), std::move(name));
}

SkewMatrix load_skew_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw InputError("bad JSON in " + path + ": " + ex.what());
  }
  return skew_from_json(j);
}

Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_to_json(const IntRowVec& v) {
  Json row = Json::array();
  for (Eigen::Index j = 0; j < v.size(); ++j) row.push_back(int_to_json(v(j)));
  return row;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty array");
  const int rows = static_cast<int>(j.size());
  const int cols = static_cast<int>(j.at(0).size());
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw InputError("matrix rows must have equal lengths");
    for (int c = 0; c < cols; ++c) m(i, c) = int_from_json(row.at(c));
  }
  return m;
}

Json seed_to_json(const Seed& s) {
  Json j;
  Json w = Json::array();
  for (int k : s.w) w.push_back(k + 1);
  j["w"] = std::move(w);
  j["Bw"] = matrix_to_json(s.bw);
  j["Cw"] = matrix_to_json(s.cw);
  return j;
}

Json gim_to_json(const Gim& g) {
  Json j;
  j["ordering"] = g.ordering.chain();
  j["A"] = matrix_to_json(g.a);
  Json d = Json::array();
  for (const Int& x : g.source.d) d.push_back(int_to_json(x));
  j["D"] = std::move(d);
  return j;
}

namespace {

Json entries_to_json(const std::vector<ReportEntry>& entries) {
  Json out = Json::array();
  for (const ReportEntry& e : entries) {
    Json j;
    j["kind"] = e.kind;
    j["message"] = e.message;
    j["sequence"] = seq_to_string(e.sequence);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

Json report_to_json(const Report& r) {
  Json j;
  j["tool"] = r.tool;
  if (!r.input_name.empty()) j["input"] = r.input_name;
  if (!r.ordering_chain.empty()) j["ordering"] = r.ordering_chain;
  j["maxLen"] = r.max_len;
  j["runs"] = r.runs;
  j["violations"] = entries_to_json(r.violations);
  j["errors"] = entries_to_json(r.errors);
  j["budgetStops"] = entries_to_json(r.budget_stops);
  j["notes"] = r.notes;
  j["timingSeconds"] = r.timing_seconds;
  return j;
}

Json probe_to_json(const ConjectureProbe& p) {
  Json j = report_to_json(p.report);
  Json classes = Json::array();
  for (const SeedClassSummary& c : p.classes) {
    Json cj;
    cj["Cw"] = matrix_to_json(c.cw);
    Json members = Json::array();
    for (const MutationSeq& w : c.members) members.push_back(seq_to_string(w));
    cj["members"] = std::move(members);
    cj["piConsistent"] = c.pi_consistent;
    classes.push_back(std::move(cj));
  }
  j["classes"] = std::move(classes);
  j["largestClass"] = p.largest_class;
  return j;
}

Json loesung_scan_to_json(const LoesungScan& s) {
  Json j = report_to_json(s.report);
  j["vectorsChecked"] = s.vectors_checked;
  j["gimCount"] = s.gim_count;
  Json fails = Json::array();
  for (const IntRowVec& v : s.fails_all_gims) fails.push_back(vector_to_json(v));
  j["failsAllGims"] = std::move(fails);
  return j;
}

MutationSeq seq_from_string(const std::string& csv, int n) {
  MutationSeq w;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    int v;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      throw InputError("bad sequence element '" + tok + "'");
    }
    if (v < 1 || v > n)
      throw IndexOutOfRange("sequence index out of range 1.." + std::to_string(n));
    w.push_back(v - 1);
  }
  return w;
}

std::string seq_to_string(const MutationSeq& w) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << w[i] + 1;
  }
  return os.str();
}

}  // namespace loesung
