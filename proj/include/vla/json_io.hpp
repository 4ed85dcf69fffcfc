#ifndef VLA_JSON_IO_HPP
#define VLA_JSON_IO_HPP

#include <json.hpp>

#include "vla/identify.hpp"
#include "vla/liealg.hpp"
#include "vla/lsmodule.hpp"
#include "vla/matrix.hpp"
#include "vla/tcalc.hpp"

namespace vla {

using nlohmann::json;

// Scalars travel as "p/q" strings so no numeric coercion can occur; lattice
// vectors as [r1, r2]; matrices as row-major nested arrays of scalar strings.

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(LatticeVec v);
LatticeVec lattice_from_json(const json& j);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json to_json(const LieElement& e);
LieElement lie_element_from_json(const json& j);

json to_json(const Sl2Triple& t);
Sl2Triple triple_from_json(const json& j);

json to_json(const ModuleVector& m);
ModuleVector module_vector_from_json(const json& j);

json params_to_json(const ModuleParams& p);
ModuleParams params_from_json(const json& j);

json to_json(const TExpression& e);
TExpression t_expression_from_json(const json& j);

json to_json(const DeltaDescriptor& d);
DeltaDescriptor delta_descriptor_from_json(const json& j);

/// {"dim": n, "samples": [{"r": [r1,r2], "matrix": ...}]}
json realization_to_json(const TRealization& real);
TRealization realization_from_json(const json& j);

json to_json(const IdentificationResult& r);

}  // namespace vla

#endif
