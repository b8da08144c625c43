#pragma once

#include <json.hpp>

#include "periodrel/gfun.hpp"
#include "periodrel/matrix.hpp"
#include "periodrel/multipoly.hpp"
#include "periodrel/place.hpp"
#include "periodrel/polymatrix.hpp"
#include "periodrel/relations.hpp"
#include "periodrel/series.hpp"
#include "periodrel/symplectic.hpp"
#include "periodrel/trivial_ideal.hpp"

namespace periodrel::json_io {

using json = nlohmann::json;

// Rational: "num/den" (integers and "n" accepted on input).
json to_json(const Rational& r);
Rational rational_from_json(const json& j);

// Scalar: a rational string, or {"d": int, "a": "num/den", "b": "num/den"}.
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

// Place: {"kind": "arch"} (optional "embedding": "sigma" | "tau") or
// {"kind": "finite", "p": int}.
json to_json(const Place& v);
Place place_from_json(const json& j);

// Matrix: row-major list of rows of scalars.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// Series: {"order": N, "coeffs": [scalar, ...]} with N + 1 coefficients.
json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

// Polynomial: [{"coeff": scalar, "monomial": [["Y", i, j, exp], ...]}, ...]
// in decreasing monomial order; a fifth entry in a factor is its copy index.
json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j);

// PolyMatrix: {"rows": r, "cols": c, "entries": [[poly, ...], ...]}.
json to_json(const PolyMatrix& m);
PolyMatrix poly_matrix_from_json(const json& j);

// Action: {"g": g, "A": matrix, "B": matrix, "D": matrix}.
json to_json(const EndomorphismAction& a);
EndomorphismAction action_from_json(const json& j);

// Period data: {"g": g, "M": matrix, "F": matrix, "G": matrix}.
json to_json(const SyntheticPeriodData& d);
SyntheticPeriodData period_data_from_json(const json& j);

// GFunMatrix: {"g": g, "entries": [[series, ...], ...], "integral": [[bool, ...], ...]}.
json to_json(const GFunMatrix& m);
GFunMatrix gfun_matrix_from_json(const json& j);

// Coefficients: {"g": g, "N": N, "integral_asserted": bool, "a": [i][k][l] of series}.
json to_json(const GaussManinCoefficients& a);
GaussManinCoefficients coefficients_from_json(const json& j);

// Reports (output only).
json to_json(const SymplecticSample& s);
json to_json(const IsotropicFrame& f);
json to_json(const RadiusReport& r);
json to_json(const GloballyBoundedReport& r);
json to_json(const SeriesEvaluation& e);
json to_json(const Witness& w);
json to_json(const MembershipVerdict& v);
json to_json(const RadicalityReport& r);
json to_json(const NontrivialEntry& e);
json to_json(const RelationCertificate& c);
json to_json(const Case3Result& r);
json to_json(const PlaceRadius& r);
json to_json(const PeriodCheckReport& r);

/// Finite doubles as numbers; infinities and NaN as strings.
json real(double x);

}  // namespace periodrel::json_io
