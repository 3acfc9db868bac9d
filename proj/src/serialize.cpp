#include "reflgrp/serialize.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "reflgrp/errors.hpp"

namespace reflgrp {

namespace {

long long to_i64(const Int& x) {
  static const Int lo(std::numeric_limits<long long>::min());
  static const Int hi(std::numeric_limits<long long>::max());
  if (x < lo || x > hi) throw BadParameter("integer too large to serialize");
  return x.convert_to<long long>();
}

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int require_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Json cyc_to_json(const CycNumber& a) {
  Json c = Json::array();
  for (int i = 0; i < a.degree(); ++i) {
    Rational q = a.coeff(i);
    c.push_back({to_i64(numerator(q)), to_i64(denominator(q))});
  }
  return Json{{"N", a.conductor()}, {"c", std::move(c)}};
}

CycNumber cyc_from_json(const Json& j) {
  int n = require_int(require_field(j, "N"), "conductor");
  if (n < 1) throw ParseError("conductor must be positive");
  const Json& c = require_field(j, "c");
  if (!c.is_array()) throw ParseError("coefficient list must be an array");
  std::vector<Rational> coeffs;
  coeffs.reserve(c.size());
  for (const Json& pair : c) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw ParseError("coefficient must be a [numerator, denominator] integer pair");
    long long den = pair[1].get<long long>();
    if (den == 0) throw ParseError("coefficient denominator is zero");
    coeffs.emplace_back(Int(pair[0].get<long long>()), Int(den));
  }
  try {
    return CycNumber::from_coeffs(n, coeffs);
  } catch (const BadParameter& e) {
    throw ParseError(e.what());
  }
}

Json matrix_to_json(const SquareMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rank(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.rank(); ++j) row.push_back(cyc_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

SquareMatrix matrix_from_json(const Json& j, int rank) {
  if (!j.is_array() || static_cast<int>(j.size()) != rank)
    throw ParseError("matrix must have exactly " + std::to_string(rank) + " rows");
  SquareMatrix m(rank);
  for (int i = 0; i < rank; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != rank)
      throw ParseError("matrix row must have exactly " + std::to_string(rank) + " entries");
    for (int k = 0; k < rank; ++k) m.at(i, k) = cyc_from_json(row[k]);
  }
  return m;
}

Json group_file_to_json(const GroupFile& gf) {
  Json gens = Json::array();
  for (const SquareMatrix& g : gf.generators) gens.push_back(matrix_to_json(g));
  return Json{{"rank", gf.rank}, {"generators", std::move(gens)}};
}

GroupFile group_file_from_json(const Json& j) {
  GroupFile gf;
  gf.rank = require_int(require_field(j, "rank"), "rank");
  if (gf.rank < 1 || gf.rank > 3) throw ParseError("rank must be 1, 2, or 3");
  const Json& gens = require_field(j, "generators");
  if (!gens.is_array()) throw ParseError("generators must be an array");
  for (const Json& g : gens) gf.generators.push_back(matrix_from_json(g, gf.rank));
  return gf;
}

GroupFile parse_group_file(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  return group_file_from_json(j);
}

GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str());
}

Json shape_to_json(const SodShape& s) {
  Json j = Json::object();
  j["Ambient"] = s.ambient_rank();
  for (const auto& [l, c] : s.counts) {
    if (l.kind == SpaceKind::Ambient) continue;
    j[l.str()] = c;
  }
  return j;
}

SodShape shape_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("shape must be an object");
  SodShape s = SodShape::ambient(require_int(require_field(j, "Ambient"), "ambient rank"));
  for (const auto& [key, val] : j.items()) {
    if (key == "Ambient") continue;
    int count = require_int(val, "component count");
    if (count < 0) throw ParseError("component count must be non-negative");
    if (key == "Point") {
      s.add(SpaceLabel::point(), count);
    } else if (key == "Line") {
      s.add(SpaceLabel::line(), count);
    } else if (key == "Plane") {
      s.add(SpaceLabel::plane(), count);
    } else if (key.rfind("BlownPlane(", 0) == 0 && key.back() == ')') {
      int k = 0;
      try {
        k = std::stoi(key.substr(11, key.size() - 12));
      } catch (const std::exception&) {
        throw ParseError("malformed component label: " + key);
      }
      s.add(SpaceLabel::blown_plane(k), count);
    } else {
      throw ParseError("unknown component label: " + key);
    }
  }
  return s;
}

Json report_to_json(const ReflectionReport& r) {
  Json j{{"order", r.group_order},
         {"is_reflection_group", r.is_reflection_group},
         {"reflection_count", r.reflection_count},
         {"reflection_class_count", r.reflection_class_count},
         {"discriminant_component_count", r.discriminant_component_count},
         {"hyperplane_multiplicities", r.hyperplane_multiplicities},
         {"invariant_degrees", r.invariant_degrees},
         {"fixed_dim_profile", r.fixed_dim_profile},
         {"class_count", 0},
         {"family", nullptr}};
  int classes = 0;
  for (int c : r.fixed_dim_profile) classes += c;
  j["class_count"] = classes;
  if (r.family) {
    j["family"] = family_name(r.family->family);
    if (family_takes_n(r.family->family)) j["n"] = r.family->n;
  }
  return j;
}

Json verdict_to_json(const FamilyVerdict& v) {
  Json j{{"family", family_name(v.spec.family)},
         {"constructed", shape_to_json(v.constructed)},
         {"predicted", shape_to_json(v.predicted)},
         {"match", v.match},
         {"total_classes", v.class_count}};
  if (family_takes_n(v.spec.family)) j["n"] = v.spec.n;
  if (v.sl_junior_classes) {
    j["junior_comparison"] = Json{{"sl_junior_classes", *v.sl_junior_classes},
                                  {"blowup_line_components", v.blowup_line_components},
                                  {"equal", *v.junior_equals_blowups}};
  }
  return j;
}

}  // namespace reflgrp
