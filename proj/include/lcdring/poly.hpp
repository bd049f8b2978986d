#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lcdring/ring.hpp"

namespace lcdring {

/// Polynomial over a Ring, coefficients ascending (constant term first).
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class RingPoly {
public:
    RingPoly() = default;
    RingPoly(Ring ring, std::vector<Elem> coeffs);
    static RingPoly constant(Ring ring, Elem c);
    static RingPoly monomial(Ring ring, std::size_t degree, Elem c);
    /// X^n - gamma.
    static RingPoly x_pow_minus(Ring ring, std::size_t n, Elem gamma);

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Elem lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == ring_.one(); }

    friend bool operator==(const RingPoly& a, const RingPoly& b) {
        return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }

private:
    Ring ring_;
    std::vector<Elem> coeffs_;
};

RingPoly poly_add(const RingPoly& f, const RingPoly& g);
RingPoly poly_sub(const RingPoly& f, const RingPoly& g);
RingPoly poly_mul(const RingPoly& f, const RingPoly& g);
RingPoly poly_scale(const RingPoly& f, Elem c);
/// (q, r) with f = q·g + r, deg r < deg g; g's leading coefficient must be a unit.
std::pair<RingPoly, RingPoly> poly_divmod(const RingPoly& f, const RingPoly& g);
RingPoly poly_mod(const RingPoly& f, const RingPoly& g);
/// Scales by the inverse of the leading coefficient.
RingPoly make_monic(const RingPoly& f);
/// Coefficientwise image under the residue projection of a local ring.
RingPoly residue_poly(const RingPoly& f);
/// Coefficientwise canonical lift from the residue field into `ring`.
RingPoly embed_poly(const Ring& ring, const RingPoly& f);

// Field-only helpers (the ring must be a field).
RingPoly poly_gcd(RingPoly f, RingPoly g);
/// (d, s, t) with s·f + t·g = d, d monic.
struct Bezout {
    RingPoly d, s, t;
};
Bezout poly_xgcd(const RingPoly& f, const RingPoly& g);
RingPoly poly_powmod(RingPoly base, std::uint64_t e, const RingPoly& mod);

/// Monic irreducible factors of X^n - alpha over the field, sorted by
/// (degree, ascending coefficients). Requires gcd(n, q) = 1 and alpha != 0.
std::vector<RingPoly> factor_constacyclic_modulus(const Ring& field, std::size_t n, Elem alpha);
/// Rabin irreducibility test over a finite field.
bool is_irreducible(const RingPoly& f);

/// The basic-irreducible factorization of X^n - gamma over a chain ring.
/// Divisors are addressed as bitmasks over `factors`.
struct FactorSet {
    Ring ring;
    std::size_t n = 0;
    Elem gamma = 0;
    std::vector<RingPoly> factors;
    /// pairing[i] = j when reciprocal(factors[i]) = factors[j]; empty unless gamma^2 = 1.
    std::vector<std::size_t> pairing;
    /// The same involution computed on the residue factors; empty unless pi(gamma)^2 = 1.
    std::vector<std::size_t> residue_pairing;

    std::uint64_t full_mask() const { return factors.size() == 64 ? ~0ULL : (1ULL << factors.size()) - 1; }
};

using DivisorMask = std::uint64_t;

/// Lifts field factors of X^n - pi(gamma) to monic factors of X^n - gamma,
/// returned in canonical (degree, coefficients) order.
FactorSet hensel_lift_factors(const std::vector<RingPoly>& field_factors, const Ring& ring, std::size_t n,
                              Elem gamma);
/// Factorization over the residue field followed by lifting.
FactorSet factor_set(const Ring& ring, std::size_t n, Elem gamma);

RingPoly divisor_poly(const FactorSet& fs, DivisorMask mask);
/// The subset of factors whose product is g; throws NotDivisor otherwise.
DivisorMask divisor_mask(const FactorSet& fs, const RingPoly& g);
DivisorMask reciprocal_mask(const FactorSet& fs, DivisorMask mask);

RingPoly reciprocal(const RingPoly& g);
bool is_self_reciprocal(const RingPoly& g);
RingPoly complement_divisor(const RingPoly& g, const FactorSet& fs);
RingPoly hensel_lcm(const RingPoly& g1, const RingPoly& g2, const FactorSet& fs);
/// Monic normalization of g(gamma·X).
RingPoly substitute_unit(const RingPoly& g, Elem gamma);

} // namespace lcdring
