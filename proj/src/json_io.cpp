#include "solang/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace solang {

json polytope_to_json(const Polytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) {
    json row = json::array();
    for (const auto& c : v) row.push_back(rational_to_string(c));
    verts.push_back(std::move(row));
  }
  return json{{"vertices", std::move(verts)}};
}

Polytope polytope_from_json(const json& j) {
  if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
    throw ValidationError("polytope JSON: missing \"vertices\" array");
  std::vector<RVec> pts;
  for (const auto& row : j["vertices"]) {
    RVec v;
    for (const auto& c : row) {
      if (c.is_string())
        v.push_back(parse_rational(c.get<std::string>()));
      else if (c.is_number_integer())
        v.push_back(Rational(c.get<long>()));
      else
        throw ValidationError("polytope JSON: coordinates must be rational strings");
    }
    pts.push_back(std::move(v));
  }
  return Polytope::from_points(std::move(pts));
}

Polytope read_polytope_file(const std::string& path) {
  json j;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    j = json::parse(ss.str());
  } else {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    in >> j;
  }
  return polytope_from_json(j);
}

json angle_to_json(const AngleValue& a) {
  json j{{"value", a.value}, {"method", method_name(a.method)}, {"abs_error", a.abs_error}};
  if (a.seed) j["seed"] = *a.seed;
  if (a.sample_count) j["n"] = *a.sample_count;
  return j;
}

json numerator_to_json(const NumeratorVector& nv) {
  json j;
  j["entries"] = nv.entries;
  j["errors"] = nv.errors;
  j["denominator_exponent"] = nv.denominator_exponent;
  json ex = json::array();
  for (const auto& e : nv.exact)
    ex.push_back(e ? json(rational_to_string(*e)) : json(nullptr));
  j["exact"] = std::move(ex);
  j["provenance"] = nv.provenance;
  j["violations"] = nv.violations;
  return j;
}

}  // namespace solang
