#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lcdring/code.hpp"
#include "lcdring/distance.hpp"
#include "lcdring/poly.hpp"

namespace lcdring {

/// Parses "Zk", "GR(p^s,m)[;modulus=poly]", "Rm(m)", "Fq(p,m)[;modulus=poly]"
/// and "CRT[spec | spec ...]". GR and Fq rings without a modulus get the
/// lexicographically first primitive polynomial over F_p, lifted to a
/// divisor of X^(p^m-1) - 1.
Ring make_ring(std::string_view spec);
/// Default modulus used by make_ring (ascending integer coefficients).
std::vector<Elem> default_modulus(std::uint64_t p, int s, int m);

// Elements: integers for Z_N, "[c0,c1,...]" coordinate lists for GR and
// Rm, "(e1|e2|...)" for other composites. GR elements also accept
// expressions in w such as "3w+2".
std::string format_element(const Ring& ring, Elem a);
Elem parse_element(const Ring& ring, std::string_view text);
nlohmann::json element_json(const Ring& ring, Elem a);
Elem element_from_json(const Ring& ring, const nlohmann::json& j);

std::string format_vector(const Ring& ring, std::span<const Elem> v);
RingVector parse_vector(const Ring& ring, std::string_view text);
nlohmann::json vector_json(const Ring& ring, std::span<const Elem> v);
RingVector vector_from_json(const Ring& ring, const nlohmann::json& j);

/// Rows separated by ';', entries by ','.
std::string format_matrix(const RingMatrix& m);
RingMatrix parse_matrix(const Ring& ring, std::string_view text);
nlohmann::json matrix_json(const RingMatrix& m);
RingMatrix matrix_from_json(const Ring& ring, const nlohmann::json& rows, std::size_t n);

/// "X^3+2*X^2+X+3"; coefficients in element syntax, parenthesized when
/// they are not plain integers.
std::string format_poly(const RingPoly& f);
/// Also accepts products of parenthesized factors, "(X-1)*(X^2+X+1)".
RingPoly parse_poly(const Ring& ring, std::string_view text);

nlohmann::json code_json(const LinearCode& c);
/// Accepts {"ring", "n", "generators"} or {"ring", "n", "rows"}.
LinearCode code_from_json(const nlohmann::json& j);

std::string big_to_string(const BigInt& v);

/// {"metric", "status", "value", "witness", "strategy", "examined"}; value is
/// [lower, upper] for Bounds.
nlohmann::ordered_json distance_json(const Ring& ring, const DistanceReport& r);

} // namespace lcdring
