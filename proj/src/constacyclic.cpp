#include "lcdring/constacyclic.hpp"

#include <algorithm>

namespace lcdring {

RingMatrix circulant_generator(const RingPoly& f, std::size_t n) {
    if (f.is_zero() || f.degree() >= static_cast<long>(n)) fail(ErrorCode::ShapeMismatch, "circulant needs 0 <= deg f < n");
    const auto k = static_cast<std::size_t>(f.degree());
    RingMatrix out(f.ring(), n - k, n);
    for (std::size_t i = 0; i < n - k; ++i)
        for (std::size_t j = 0; j <= k; ++j) out(i, i + j) = f.coeffs()[j];
    return out;
}

ConstacyclicCode consta_code(std::shared_ptr<const FactorSet> fs, DivisorMask mask) {
    ConstacyclicCode c;
    c.gen = divisor_poly(*fs, mask);
    c.mask = mask;
    if (c.gen.degree() >= static_cast<long>(fs->n)) c.code = LinearCode::zero(fs->ring, fs->n);
    else c.code = LinearCode(fs->ring, fs->n, circulant_generator(c.gen, fs->n));
    c.factors = std::move(fs);
    return c;
}

ConstacyclicCode consta_code(std::shared_ptr<const FactorSet> fs, const RingPoly& g) {
    const DivisorMask mask = divisor_mask(*fs, g);
    return consta_code(std::move(fs), mask);
}

ConstacyclicCode consta_code(const Ring& ring, std::size_t n, Elem gamma, const RingPoly& g) {
    return consta_code(std::make_shared<const FactorSet>(factor_set(ring, n, gamma)), g);
}

RingVector constacyclic_shift(const Ring& ring, std::span<const Elem> c, Elem gamma) {
    RingVector out(c.size());
    if (c.empty()) return out;
    out[0] = ring.mul(gamma, c.back());
    std::copy(c.begin(), c.end() - 1, out.begin() + 1);
    return out;
}

namespace {

std::shared_ptr<const FactorSet> inverse_family(const std::shared_ptr<const FactorSet>& fs) {
    const Elem inv = fs->ring.inverse(fs->gamma);
    if (inv == fs->gamma) return fs;
    return std::make_shared<const FactorSet>(factor_set(fs->ring, fs->n, inv));
}

} // namespace

ConstacyclicCode reverse_code(const ConstacyclicCode& c) {
    return consta_code(inverse_family(c.factors), reciprocal(c.gen));
}

bool is_reversible(const ConstacyclicCode& c) { return is_self_reciprocal(c.gen); }

RingPoly dual_generator(const ConstacyclicCode& c) { return reciprocal(complement_divisor(c.gen, *c.factors)); }

ConstacyclicCode dual_code(const ConstacyclicCode& c) {
    return consta_code(inverse_family(c.factors), dual_generator(c));
}

bool is_lcd_constacyclic(const ConstacyclicCode& c) {
    const Ring& r = c.ring();
    const Elem g2 = r.mul(c.gamma(), c.gamma());
    if (g2 == r.one()) return is_self_reciprocal(c.gen);
    const Ring field = r.residue_field();
    if (r.residue(g2) != field.one()) return true;
    return is_self_reciprocal(residue_poly(c.gen));
}

ConstacyclicCode intersect_constacyclic(const ConstacyclicCode& a, const ConstacyclicCode& b) {
    if (a.ring() != b.ring() || a.length() != b.length() || a.gamma() != b.gamma())
        fail(ErrorCode::RingMismatch, "constacyclic codes have different parameters");
    return consta_code(a.factors, a.mask | b.mask);
}

std::vector<DivisorMask> lcd_divisor_masks(const FactorSet& fs) {
    const Ring& r = fs.ring;
    const Elem g2 = r.mul(fs.gamma, fs.gamma);
    const bool ring_level = g2 == r.one();
    const bool always = !ring_level && r.residue(g2) != r.residue_field().one();
    const std::size_t k = fs.factors.size();
    auto closed = [&](DivisorMask m, const std::vector<std::size_t>& pairing) {
        for (std::size_t i = 0; i < k; ++i)
            if (((m >> i) & 1U) != ((m >> pairing[i]) & 1U)) return false;
        return true;
    };
    std::vector<DivisorMask> out;
    const DivisorMask full = fs.full_mask();
    for (DivisorMask m = 1; m < full; ++m) {
        if (ring_level ? closed(m, fs.pairing) : (always || closed(m, fs.residue_pairing))) out.push_back(m);
    }
    std::vector<std::pair<RingPoly, DivisorMask>> keyed;
    for (auto m : out) keyed.emplace_back(divisor_poly(fs, m), m);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.coeffs() < b.first.coeffs();
    });
    out.clear();
    for (const auto& [_, m] : keyed) out.push_back(m);
    return out;
}

std::vector<ConstacyclicCode> enumerate_lcd_constacyclic(std::shared_ptr<const FactorSet> fs) {
    std::vector<ConstacyclicCode> out;
    for (auto m : lcd_divisor_masks(*fs)) out.push_back(consta_code(fs, m));
    return out;
}

std::vector<ConstacyclicCode> enumerate_lcd_constacyclic(const Ring& ring, std::size_t n, Elem gamma) {
    return enumerate_lcd_constacyclic(std::make_shared<const FactorSet>(factor_set(ring, n, gamma)));
}

ConstacyclicCode residue_code(const ConstacyclicCode& c) {
    const Ring field = c.ring().residue_field();
    auto fs = std::make_shared<const FactorSet>(factor_set(field, c.length(), c.ring().residue(c.gamma())));
    return consta_code(std::move(fs), residue_poly(c.gen));
}

} // namespace lcdring
