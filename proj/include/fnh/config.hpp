// JSON (de)serialization for coordinate-sequence and mapping-class
// configuration files, with bit-exact round-trips for every double.
//
// Surface family:
//   {"lengths": {"A":4,"p":0,"q":1} | {"const":1} | {"A":1,"rho":0.5}
//              | {"terms":[{...},...]},
//    "twists":  same forms,
//    "overrides": [[m, length, twist], ...],
//    "peripheral": same forms | [l1, l2, ...]}        (optional)
//
// Mapping class:
//   {"generators": [
//      {"kind":"multitwist", "counts": <rate form> | {"map":[[m,n],...]}},
//      {"kind":"shift", "offset": 1},
//      {"kind":"perm", "map": [[from,to],...]} ]}
#pragma once

#include <string>

#include "vendor_json.hpp"

#include "fnh/coordseq.hpp"
#include "fnh/mcg.hpp"

namespace fnh {

using json = nlohmann::ordered_json;

json to_json(const RateExpr& e);
RateExpr rate_expr_from_json(const json& j);

json to_json(const CoordSeq& s);
CoordSeq coordseq_from_json(const json& j);

json to_json(const MappingClass& mc);
MappingClass mapping_class_from_json(const json& j);

// Shorthand specs used by the CLI: "twist-power:0.5", "twist-const:3",
// or a path to a JSON file.
MappingClass parse_mapping_class_spec(const std::string& spec);

// "full" | "geod" | "metr" | "systole:EPS" | "dr:R" with R like 2 or 1/3.
SubspaceDesc parse_subspace_spec(const std::string& spec);

CoordSeq load_coordseq(const std::string& path);
MappingClass load_mapping_class(const std::string& path);

// 17-significant-digit decimal, enough to round-trip any double.
std::string format_double(double v);

}  // namespace fnh
