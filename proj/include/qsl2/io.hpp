#pragma once

// Text and JSON forms of the algebra objects.
//
// Text prints scalars as polynomials in q with rational coefficients
// (a single power q^k is preferred when the scalar is r*q^k), terms in the
// canonical graded-lex order.  The text form of a quantum element parses
// back to the same element.

#include <string>

#include <json.hpp>

#include "qsl2/basis.hpp"

namespace qsl2 {

using Json = nlohmann::json;

std::string format_scalar(const Cyclotomic& x, const RootSpec& spec);
std::string format_element(const QElement& x);
std::string format_classical(const ClassicalElement& x);
std::string format_tensor(const TensorElement& t);
std::string format_module(const ModuleElement& m);
std::string format_decomposition(const Decomposition& d);
std::string format_localized(const LocalizedElement& loc);
std::string format_closure(const ClosureReport& report);
std::string format_basis_index(const BasisIndex& index);
std::string format_monomial(const QMonomial& m);

const char* side_name(Side side);
Side parse_side(const std::string& text);

Json spec_to_json(const RootSpec& spec);
RootSpec spec_from_json(const Json& j);

Json cyclotomic_to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const Json& j, const CycloField& field);

Json monomial_to_json(const QMonomial& m);
QMonomial monomial_from_json(const Json& j);

Json element_to_json(const QElement& x);
QElement element_from_json(const Json& j);

Json classical_to_json(const ClassicalElement& x);
ClassicalElement classical_from_json(const Json& j, const QRing& ring);

Json tensor_to_json(const TensorElement& t);
Json module_to_json(const ModuleElement& m);

Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j, const QRing& ring);

Json localized_to_json(const LocalizedElement& loc);
Json closure_to_json(const ClosureReport& report);
Json freeness_to_json(const FreenessReport& report);

}  // namespace qsl2
