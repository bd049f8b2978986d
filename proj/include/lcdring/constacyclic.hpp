#pragma once

#include <memory>
#include <vector>

#include "lcdring/code.hpp"
#include "lcdring/poly.hpp"

namespace lcdring {

/// The free gamma-constacyclic code P(R; n; g) generated by a monic divisor g
/// of X^n - gamma over a chain ring.
struct ConstacyclicCode {
    std::shared_ptr<const FactorSet> factors;
    DivisorMask mask = 0;
    RingPoly gen;
    LinearCode code;

    const Ring& ring() const { return factors->ring; }
    std::size_t length() const { return factors->n; }
    Elem gamma() const { return factors->gamma; }
};

/// Rows are the coefficient vectors of X^i·f, i < n - deg f.
RingMatrix circulant_generator(const RingPoly& f, std::size_t n);

ConstacyclicCode consta_code(std::shared_ptr<const FactorSet> fs, DivisorMask mask);
ConstacyclicCode consta_code(std::shared_ptr<const FactorSet> fs, const RingPoly& g);
ConstacyclicCode consta_code(const Ring& ring, std::size_t n, Elem gamma, const RingPoly& g);

/// (gamma·c_{n-1}, c_0, ..., c_{n-2}).
RingVector constacyclic_shift(const Ring& ring, std::span<const Elem> c, Elem gamma);

/// The coordinate-reversed code; it is gamma^{-1}-constacyclic with
/// generator reciprocal(gen).
ConstacyclicCode reverse_code(const ConstacyclicCode& c);
bool is_reversible(const ConstacyclicCode& c);
/// Monic generator of the dual, which is gamma^{-1}-constacyclic.
RingPoly dual_generator(const ConstacyclicCode& c);
ConstacyclicCode dual_code(const ConstacyclicCode& c);
bool is_lcd_constacyclic(const ConstacyclicCode& c);
ConstacyclicCode intersect_constacyclic(const ConstacyclicCode& a, const ConstacyclicCode& b);

/// Masks of the nontrivial LCD divisors, sorted by (degree, coefficients).
std::vector<DivisorMask> lcd_divisor_masks(const FactorSet& fs);
std::vector<ConstacyclicCode> enumerate_lcd_constacyclic(const Ring& ring, std::size_t n, Elem gamma);
std::vector<ConstacyclicCode> enumerate_lcd_constacyclic(std::shared_ptr<const FactorSet> fs);

/// pi(P(R; n; g)) = P(F_q; n; pi(g)).
ConstacyclicCode residue_code(const ConstacyclicCode& c);

} // namespace lcdring
