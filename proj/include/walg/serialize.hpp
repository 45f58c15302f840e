// JSON encodings of the public file formats. All scalars are exact: rational
// coefficients are [numerator-string, denominator-string] pairs.
#pragma once

#include <json.hpp>

#include "walg/algebra.hpp"
#include "walg/smap.hpp"
#include "walg/uea.hpp"

namespace walg {

inline constexpr const char* kToolkitVersion = "0.1.0";

using Json = nlohmann::json;

Json rational_to_json(const Rational& r);

// {"n":, "l":, "epsilon":"+"/"-", "phi":"+"/"-"}
Json config_to_json(const Config& cfg);

// {"n", "l", "epsilon", "phi", "boxes": [[row, col, label], ...]}
Json pyramid_to_json(const Pyramid& pyr);

// [{"monomial": [[a, b], ...], "coeff": [num, den]}, ...]
Json uea_to_json(const UEAElement& x);

Json lie_to_json(const LieElement& x);

// [{"power": k, "coeff": <element>}, ...] for polynomials in u.
Json ueapoly_to_json(const UEAPoly& x);

// One generator-export row: {"config":, "i":, "j":, "r":, "element":}.
Json generator_row_to_json(const Config& cfg, int i, int j, int r, const UEAElement& element);

}  // namespace walg
