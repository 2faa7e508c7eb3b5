#ifndef SPINFERMION_IO_JSON_HPP
#define SPINFERMION_IO_JSON_HPP

#include "spinfermion/expansion.hpp"
#include "spinfermion/fermion_to_spin.hpp"
#include "spinfermion/matrix.hpp"

#include <json.hpp>

namespace spinfermion {

using Json = nlohmann::ordered_json;

/// Scalar text: bare ExactReal grammar when the value is real, "(re, im)"
/// otherwise.
std::string scalar_str(const ExactComplex& z);
ExactComplex scalar_parse(std::string_view text);

/// {"rows":r,"cols":c,"entries":[["re","im"],...]} row-major.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"L":2,"basis":"fermionic","terms":[{"coeff":"2*sqrt(3)","word":"n1 c2+"},...]}
/// or {"two_s":3,"basis":"spin","outer_power":2,"terms":[...]}.
Json expansion_to_json(const OperatorExpansion& e);
OperatorExpansion expansion_from_json(const Json& j);

/// {"two_s":3,"coeffs":["1/2","13/12","0","-1/3"]}.
Json spin_poly_to_json(const SpinPolynomial& p);
SpinPolynomial spin_poly_from_json(const Json& j);

/// Coefficient list, lowest degree first.
Json char_poly_to_json(const PolyCoeffs& p);

} // namespace spinfermion

#endif
