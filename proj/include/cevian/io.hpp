#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cevian/area_preserving.hpp"

namespace cevian {

/// Parses "a", "bi", "a+bi", "a-bi" (also "i", "-i"). Each coefficient is a
/// decimal or a rational "n/d". Whitespace is ignored. Throws ParseError
/// naming the offending position.
Complex parse_complex(std::string_view text);

/// Decimal or rational "n/d" real literal.
double parse_real(std::string_view text);

/// "re_a,im_a,re_b,im_b,re_c,im_c". The triple is validated.
TriangleTriple parse_triangle_csv(std::string_view text);

/// Same record with 17 significant digits per field.
std::string format_triangle_csv(const TriangleTriple& t);

/// "%.17g"
std::string format_real(double x);

nlohmann::json complex_json(Complex z);
nlohmann::json sphere_json(const SphereValue& s);
nlohmann::json chart_json(const ChartComponent& c);

/// {"p", "q", "eta", "etap", "xi", "t", "regular", "normal",
/// "area_preserving", "identity", "cyclic", "collapses_moduli"}.
nlohmann::json classification_json(const Classification& c, const PqChart& params);

}  // namespace cevian
