#pragma once

#include <string>

#include "json.hpp"

#include "solang/angle.hpp"
#include "solang/numerator.hpp"
#include "solang/polytope.hpp"

namespace solang {

using json = nlohmann::json;

// {"vertices": [["0","0","0"], ...]} with rational strings; dimension is
// inferred from the coordinate count.
json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const json& j);
Polytope read_polytope_file(const std::string& path);  // "-" reads stdin

json angle_to_json(const AngleValue& a);
json numerator_to_json(const NumeratorVector& nv);

}  // namespace solang
