#pragma once

#include <filesystem>
#include <variant>

#include "json.hpp"
#include "zetadiv/curves.hpp"
#include "zetadiv/finite_field.hpp"
#include "zetadiv/intpoly.hpp"
#include "zetadiv/rational_map.hpp"
#include "zetadiv/zeta.hpp"

namespace zetadiv::io {

using json = nlohmann::ordered_json;

// {"p": 2, "m": 4, "modulus": [1,1,0,0,1]}
FiniteField field_from_json(const json& j);
json to_json(const FiniteField& f);

// {"num": [...], "den": [...]}, ascending over GF(p)
RationalMap rational_map_from_json(const json& j, std::uint32_t p);
json to_json(const RationalMap& f);

// {"coeffs": ["1","1","0","2","4"]}
IntPolynomial poly_from_json(const json& j);
json to_json(const IntPolynomial& f);

// {"model":"as2","f_num":[...],"f_den":[...]} or
// {"model":"hyper_odd","p":3,"h":[...],"f":[...]}
CurveModel curve_from_json(const json& j);
json to_json(const CurveModel& c);

// {"q": 2, "g": 2, "coeffs": ["1","1","0","2","4"]}
LPolynomial lpoly_from_json(const json& j);
json to_json(const LPolynomial& L);

/// A file holding either a curve or an L-polynomial.
using CurveOrLpoly = std::variant<CurveModel, LPolynomial>;
CurveOrLpoly curve_or_lpoly_from_json(const json& j);

/// Parses a file; throws InvalidInput naming the path on failure.
json load_json_file(const std::filesystem::path& path);

}  // namespace zetadiv::io
