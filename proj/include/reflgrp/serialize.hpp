#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "reflgrp/reflection.hpp"
#include "reflgrp/sodcalc.hpp"

namespace reflgrp {

using Json = nlohmann::json;

// Field element as {"N": conductor, "c": [[num, den], ...]} with one
// coefficient pair per power-basis coordinate at conductor N.
Json cyc_to_json(const CycNumber& a);
CycNumber cyc_from_json(const Json& j);  // ParseError

Json matrix_to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const Json& j, int rank);  // ParseError

// Group input file: {"rank": r, "generators": [matrix, ...]}.
struct GroupFile {
  int rank = 0;
  std::vector<SquareMatrix> generators;
};

Json group_file_to_json(const GroupFile& gf);
GroupFile group_file_from_json(const Json& j);
GroupFile parse_group_file(const std::string& text);  // ParseError with position
GroupFile load_group_file(const std::string& path);   // ParseError if unreadable

// Report payloads.  All are plain JSON objects; parse(emit(x)) round-trips.
Json shape_to_json(const SodShape& s);
SodShape shape_from_json(const Json& j);  // ParseError

Json report_to_json(const ReflectionReport& r);
Json verdict_to_json(const FamilyVerdict& v);

}  // namespace reflgrp
