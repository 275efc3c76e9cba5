#ifndef LOESUNG_JSON_IO_HPP
#define LOESUNG_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "loesung/gim.hpp"
#include "loesung/harness.hpp"
#include "loesung/matrix_core.hpp"

namespace loesung {

using Json = nlohmann::ordered_json;

/// {"n": int, "B": [[int]], "D": [int] (optional), "name": string}
SkewMatrix skew_from_json(const Json& j);
SkewMatrix load_skew_matrix(const std::string& path);

/// {"w": [int 1-based], "Bw": [[int]], "Cw": [[int]]}
Json seed_to_json(const Seed& s);

Json matrix_to_json(const IntMatrix& m);
Json vector_to_json(const IntRowVec& v);
IntMatrix matrix_from_json(const Json& j);

Json gim_to_json(const Gim& g);
Json report_to_json(const Report& r);
Json probe_to_json(const ConjectureProbe& p);
Json loesung_scan_to_json(const LoesungScan& s);

MutationSeq seq_from_string(const std::string& csv, int n);
std::string seq_to_string(const MutationSeq& w);

}  // namespace loesung

#endif  // LOESUNG_JSON_IO_HPP
