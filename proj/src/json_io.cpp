#include "tl/json_io.hpp"

namespace tl {

namespace {

Json term_list(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({e, rational_str(c)}));
  return arr;
}

LaurentPoly term_list_parse(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::BadParameter, "expected a term array");
  LaurentPoly::TermMap terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2)
      throw Error(ErrorCode::BadParameter, "expected [exponent, coefficient] pairs");
    int e = t[0].get<int>();
    Rational c = parse_rational(t[1].get<std::string>());
    if (terms.count(e))
      throw Error(ErrorCode::BadParameter, "duplicate exponent in term list");
    terms[e] = c;
  }
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace

Json laurent_to_json(const LaurentPoly& p) { return term_list(p); }
LaurentPoly laurent_from_json(const Json& j) { return term_list_parse(j); }

Json scalar_to_json(const Scalar& s) {
  return Json{{"num", term_list(s.num())}, {"den", term_list(s.den())}};
}

Scalar scalar_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw Error(ErrorCode::BadParameter, "scalar JSON needs num and den");
  return Scalar::ratio(term_list_parse(j["num"]), term_list_parse(j["den"]));
}

Json cyclo_to_json(const CycloScalar& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(rational_str(c));
  return Json{{"ell", s.ell()}, {"coeffs", coeffs}};
}

CycloScalar cyclo_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ell") || !j.contains("coeffs"))
    throw Error(ErrorCode::BadParameter, "cyclotomic scalar JSON needs ell and coeffs");
  int ell = j["ell"].get<int>();
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(parse_rational(c.get<std::string>()));
  return CycloScalar(ell, std::move(coeffs));
}

Json diagram_to_json(const Diagram& d) {
  return Json{{"top", d.top}, {"bot", d.bot}, {"match", d.match}};
}

Diagram diagram_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("top") || !j.contains("bot") || !j.contains("match"))
    throw Error(ErrorCode::BadParameter, "diagram JSON needs top, bot, match");
  Diagram d;
  d.top = j["top"].get<int>();
  d.bot = j["bot"].get<int>();
  d.match = j["match"].get<std::vector<int>>();
  if (!is_valid_diagram(d))
    throw Error(ErrorCode::BadParameter, "not a planar pairing");
  return d;
}

namespace {

template <class Ring, class CoeffWriter>
Json morphism_terms(const Morphism<Ring>& m, CoeffWriter write_coeff) {
  Json terms = Json::array();
  const HomBasis& basis = m.basis();
  for (const auto& [rank, coeff] : m.terms())
    terms.push_back(Json{{"diagram", diagram_to_json(basis.diagram(rank))},
                         {"coeff", write_coeff(coeff)}});
  return terms;
}

}  // namespace

Json morphism_to_json(const Morphism<GenericRing>& m) {
  return Json{{"dom", m.dom()},
              {"cod", m.cod()},
              {"ring", "generic"},
              {"terms", morphism_terms(m, scalar_to_json)}};
}

Json morphism_to_json(const Morphism<CycloRing>& m) {
  return Json{{"dom", m.dom()},
              {"cod", m.cod()},
              {"ring", Json{{"cyclo", m.ring().ell}}},
              {"terms", morphism_terms(m, cyclo_to_json)}};
}

bool json_ring_is_generic(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "generic") return true;
  if (j.is_object() && j.contains("cyclo")) return false;
  throw Error(ErrorCode::BadParameter, "ring tag must be \"generic\" or {\"cyclo\": L}");
}

int json_ring_ell(const Json& j) {
  if (!j.is_object() || !j.contains("cyclo"))
    throw Error(ErrorCode::BadParameter, "expected a cyclotomic ring tag");
  return j["cyclo"].get<int>();
}

namespace {

template <class Ring, class CoeffReader>
Morphism<Ring> morphism_from_json_impl(const Json& j, Ring ring, CoeffReader read_coeff) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("terms"))
    throw Error(ErrorCode::BadParameter, "morphism JSON needs dom, cod, ring, terms");
  Morphism<Ring> m(ring, j["dom"].get<int>(), j["cod"].get<int>());
  for (const auto& t : j["terms"])
    m.add_term(diagram_from_json(t["diagram"]), read_coeff(t["coeff"]));
  return m;
}

}  // namespace

Morphism<GenericRing> generic_morphism_from_json(const Json& j) {
  if (j.contains("ring") && !json_ring_is_generic(j["ring"]))
    throw Error(ErrorCode::RingMismatch, "expected a generic-ring morphism");
  return morphism_from_json_impl(j, GenericRing{}, scalar_from_json);
}

Morphism<CycloRing> cyclo_morphism_from_json(const Json& j) {
  if (!j.contains("ring") || json_ring_is_generic(j["ring"]))
    throw Error(ErrorCode::RingMismatch, "expected a cyclotomic-ring morphism");
  int ell = json_ring_ell(j["ring"]);
  return morphism_from_json_impl(j, CycloRing(ell), cyclo_from_json);
}

}  // namespace tl
