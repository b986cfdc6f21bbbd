#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "hardyr/fourier_poly.hpp"
#include "hardyr/rational.hpp"

namespace hardyr {

using Json = nlohmann::ordered_json;

/// {"coeffs": [[n, re, im], ...]} with indices ascending.
Json poly_to_json(const FourierPoly& f);
FourierPoly poly_from_json(const nlohmann::json& j,
                           double drop_tol = kDefaultDropTol);

Json rational_to_json(const RationalDiskFunction& f);
RationalDiskFunction rational_from_json(const nlohmann::json& j);

Json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

/// Deterministic serialization: insertion-ordered fields, every floating
/// point number rendered with 17 significant digits.
std::string dump_json17(const Json& j, int indent = 2);

}  // namespace hardyr
