#pragma once

// Versioned JSON interchange for every artifact. Exact values are strings:
// rationals "3/4", Gaussian rationals "1/2+5/2i", polynomials in the text
// grammar of mpoly.hpp, radicals {"coeff": "1/2", "radicand": "2"} (a plain
// string when the radicand is 1). Every document carries "schema": 1 and a
// "type" tag; the readers raise kParse on malformed input.

#include <optional>
#include <string>

#include <json.hpp>

#include "specrep/certify.hpp"
#include "specrep/curvedata.hpp"
#include "specrep/hvpipeline.hpp"
#include "specrep/ideallat.hpp"
#include "specrep/represent.hpp"

namespace specrep::io {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

Json rad_json(const RadScalar& v);
RadScalar rad_from_json(const Json& j);
Json radpoly_json(const RadPoly& v);
RadPoly radpoly_from_json(const Json& j);
Json poly_matrix_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const Json& j);

Json certificate_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json curve_json(const CurveData& cd);
CurveData curve_from_json(const Json& j);

Json lattice_json(const IdealLattice& lattice);
IdealLattice lattice_from_json(const Json& j, const AlgebraPtr& alg);

/// float_digits adds an approximate "M_float" view (not read back).
Json representation_json(const SpectralRep& rep, std::optional<int> float_digits = std::nullopt);
SpectralRep representation_from_json(const Json& j);

/// float_digits adds "A_float", "B_float", "C_float" (not read back).
Json pencil_json(const Pencil& p, std::optional<int> float_digits = std::nullopt);
Pencil pencil_from_json(const Json& j);

Json error_json(const Error& e, int exit_code);

/// Parses text as JSON, raising kParse on failure.
Json parse_json(const std::string& text);
/// Checks "schema" and returns "type"; raises kParse when either is off.
std::string document_type(const Json& j);

}  // namespace specrep::io
