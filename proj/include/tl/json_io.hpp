#pragma once

#include <json.hpp>

#include "tl/morphism.hpp"

namespace tl {

using Json = nlohmann::json;

// Wire formats:
//   Scalar      {"num": [[exp,"p/q"],...], "den": [[exp,"p/q"],...]}  (exponents ascending)
//   CycloScalar {"ell": L, "coeffs": ["p/q",...]}
//   Diagram     {"top": m, "bot": n, "match": [...]}
//   Morphism    {"dom": m, "cod": n, "ring": "generic"|{"cyclo": L},
//                "terms": [{"diagram": ..., "coeff": ...}, ...]}       (enumeration order)

Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json cyclo_to_json(const CycloScalar& s);
CycloScalar cyclo_from_json(const Json& j);

Json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

Json morphism_to_json(const Morphism<GenericRing>& m);
Json morphism_to_json(const Morphism<CycloRing>& m);
Morphism<GenericRing> generic_morphism_from_json(const Json& j);
Morphism<CycloRing> cyclo_morphism_from_json(const Json& j);

// "generic" or {"cyclo": L}; throws BadParameter on anything else.
bool json_ring_is_generic(const Json& j);
int json_ring_ell(const Json& j);

}  // namespace tl
