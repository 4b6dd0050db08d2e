#pragma once

#include <string>
#include <vector>

#include "ermc/essrank.hpp"
#include "ermc/galois.hpp"
#include "ermc/linalg.hpp"
#include "ermc/polyring.hpp"

#include <nlohmann/json_fwd.hpp>

namespace ermc {

/// Field specification: "p" or "p^m:c0,c1,...,cm" (modulus low degree first).
BaseField parse_field(const std::string& spec);

/// Extension specification: "n:c0,...,cn[:s]" over the given base, or a bare
/// "n" to pick the smallest irreducible modulus deterministically.
ExtField parse_ext(const BaseField& base, const std::string& spec);

/// Basis specification: "power" (default) or a semicolon-separated list of
/// elements, each a comma-separated coordinate vector "c0,c1,...,c{n-1}".
LBasis parse_basis(const ExtField& ext, const std::string& spec);

/// Polynomial text: terms "c*x1^a1*x2^a2" joined by '+'; exponent 1 may be
/// omitted, coefficients are integers reduced into F.
FPoly parse_poly(const BaseField& f, uint32_t n, uint32_t d, const std::string& text);
std::string poly_to_string(const FPoly& poly);

nlohmann::json poly_to_json(const FPoly& poly);
FPoly poly_from_json(const BaseField& f, const nlohmann::json& j);

nlohmann::json matrix_to_json(const Mat<Fq>& m);
std::string matrix_to_csv(const Mat<Fq>& m);

std::vector<Fq> parse_message(const BaseField& f, const std::string& text);

} // namespace ermc
