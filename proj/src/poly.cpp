#include "lcdring/poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace lcdring {

namespace {

void trim(std::vector<Elem>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

void require_same(const RingPoly& f, const RingPoly& g) {
    if (f.ring() != g.ring()) fail(ErrorCode::RingMismatch, "polynomials over different rings");
}

void require_field(const Ring& r) {
    if (!r.is_field()) fail(ErrorCode::Unsupported, "operation requires a finite field");
}

} // namespace

RingPoly::RingPoly(Ring ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    for (auto c : coeffs_)
        if (c >= ring_.cardinality()) fail(ErrorCode::RingMismatch, "coefficient outside the ring");
    trim(coeffs_);
}

RingPoly RingPoly::constant(Ring ring, Elem c) { return RingPoly(std::move(ring), {c}); }

RingPoly RingPoly::monomial(Ring ring, std::size_t degree, Elem c) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return RingPoly(std::move(ring), std::move(v));
}

RingPoly RingPoly::x_pow_minus(Ring ring, std::size_t n, Elem gamma) {
    std::vector<Elem> v(n + 1, 0);
    v[0] = ring.neg(gamma);
    v[n] = ring.one();
    return RingPoly(std::move(ring), std::move(v));
}

RingPoly poly_add(const RingPoly& f, const RingPoly& g) {
    require_same(f, g);
    const Ring& r = f.ring();
    std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.add(f.coeff(i), g.coeff(i));
    return RingPoly(r, std::move(out));
}

RingPoly poly_sub(const RingPoly& f, const RingPoly& g) {
    require_same(f, g);
    const Ring& r = f.ring();
    std::vector<Elem> out(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = r.sub(f.coeff(i), g.coeff(i));
    return RingPoly(r, std::move(out));
}

RingPoly poly_mul(const RingPoly& f, const RingPoly& g) {
    require_same(f, g);
    const Ring& r = f.ring();
    if (f.is_zero() || g.is_zero()) return RingPoly(r, {});
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<Elem> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) out[i + j] = r.add(out[i + j], r.mul(a[i], b[j]));
    }
    return RingPoly(r, std::move(out));
}

RingPoly poly_scale(const RingPoly& f, Elem c) {
    std::vector<Elem> out(f.coeffs());
    for (auto& x : out) x = f.ring().mul(c, x);
    return RingPoly(f.ring(), std::move(out));
}

std::pair<RingPoly, RingPoly> poly_divmod(const RingPoly& f, const RingPoly& g) {
    require_same(f, g);
    const Ring& r = f.ring();
    if (g.is_zero() || !r.is_unit(g.lead())) fail(ErrorCode::NotUnit, "divisor's leading coefficient is not a unit");
    std::vector<Elem> rem(f.coeffs());
    const std::size_t dg = g.coeffs().size() - 1;
    if (rem.size() <= dg) return {RingPoly(r, {}), f};
    const Elem inv = r.inverse(g.lead());
    std::vector<Elem> quo(rem.size() - dg, 0);
    for (std::size_t i = rem.size(); i-- > dg;) {
        const Elem c = r.mul(rem[i], inv);
        quo[i - dg] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] = r.sub(rem[i - dg + j], r.mul(c, g.coeffs()[j]));
    }
    rem.resize(dg);
    return {RingPoly(r, std::move(quo)), RingPoly(r, std::move(rem))};
}

RingPoly poly_mod(const RingPoly& f, const RingPoly& g) { return poly_divmod(f, g).second; }

RingPoly make_monic(const RingPoly& f) {
    if (f.is_zero()) return f;
    return poly_scale(f, f.ring().inverse(f.lead()));
}

RingPoly residue_poly(const RingPoly& f) {
    std::vector<Elem> out(f.coeffs());
    for (auto& x : out) x = f.ring().residue(x);
    return RingPoly(f.ring().residue_field(), std::move(out));
}

RingPoly embed_poly(const Ring& ring, const RingPoly& f) {
    std::vector<Elem> out(f.coeffs());
    for (auto& x : out) x = ring.embed_residue(x);
    return RingPoly(ring, std::move(out));
}

// ---------------------------------------------------------------------------
// Field helpers

RingPoly poly_gcd(RingPoly f, RingPoly g) {
    require_same(f, g);
    require_field(f.ring());
    while (!g.is_zero()) {
        RingPoly r = poly_mod(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return make_monic(f);
}

Bezout poly_xgcd(const RingPoly& f, const RingPoly& g) {
    require_same(f, g);
    const Ring& r = f.ring();
    require_field(r);
    RingPoly r0 = f, r1 = g;
    RingPoly s0 = RingPoly::constant(r, r.one()), s1(r, {});
    RingPoly t0(r, {}), t1 = RingPoly::constant(r, r.one());
    while (!r1.is_zero()) {
        auto [q, rem] = poly_divmod(r0, r1);
        RingPoly s2 = poly_sub(s0, poly_mul(q, s1));
        RingPoly t2 = poly_sub(t0, poly_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Elem inv = r.inverse(r0.lead());
    return {poly_scale(r0, inv), poly_scale(s0, inv), poly_scale(t0, inv)};
}

RingPoly poly_powmod(RingPoly base, std::uint64_t e, const RingPoly& mod) {
    const Ring& r = mod.ring();
    RingPoly acc = poly_mod(RingPoly::constant(r, r.one()), mod);
    base = poly_mod(base, mod);
    while (e) {
        if (e & 1U) acc = poly_mod(poly_mul(acc, base), mod);
        e >>= 1U;
        if (e) base = poly_mod(poly_mul(base, base), mod);
    }
    return acc;
}

namespace {

RingPoly x_poly(const Ring& r) { return RingPoly::monomial(r, 1, r.one()); }

bool coeff_less(const RingPoly& a, const RingPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
}

RingPoly random_poly(const Ring& r, std::size_t below_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, r.cardinality() - 1);
    std::vector<Elem> c(below_degree);
    for (auto& x : c) x = dist(rng);
    return RingPoly(r, std::move(c));
}

// Equal-degree splitting of a squarefree product of degree-d irreducibles.
void split_equal_degree(const RingPoly& g, std::size_t d, std::mt19937_64& rng, std::vector<RingPoly>& out) {
    const std::size_t deg = static_cast<std::size_t>(g.degree());
    if (deg == d) {
        out.push_back(g);
        return;
    }
    const Ring& r = g.ring();
    const std::uint64_t q = r.cardinality();
    const Elem one = r.one();
    for (;;) {
        const RingPoly a = random_poly(r, deg, rng);
        if (a.degree() < 1) continue;
        RingPoly probe;
        if (r.p() == 2) {
            // Absolute trace to F2: sum of a^(2^i), i < m·d.
            const std::size_t steps = static_cast<std::size_t>(r.m()) * d;
            RingPoly cur = a;
            probe = a;
            for (std::size_t i = 1; i < steps; ++i) {
                cur = poly_mod(poly_mul(cur, cur), g);
                probe = poly_add(probe, cur);
            }
        } else {
            // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q - 1)/2).
            RingPoly norm = a, cur = a;
            for (std::size_t i = 1; i < d; ++i) {
                cur = poly_powmod(cur, q, g);
                norm = poly_mod(poly_mul(norm, cur), g);
            }
            probe = poly_sub(poly_powmod(norm, (q - 1) / 2, g), RingPoly::constant(r, one));
        }
        RingPoly u = poly_gcd(g, probe);
        if (u.degree() > 0 && u.degree() < g.degree()) {
            split_equal_degree(u, d, rng, out);
            split_equal_degree(poly_divmod(g, u).first, d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<RingPoly> factor_constacyclic_modulus(const Ring& field, std::size_t n, Elem alpha) {
    require_field(field);
    if (n == 0) fail(ErrorCode::Unsupported, "length must be positive");
    if (std::gcd(static_cast<std::uint64_t>(n), field.p()) != 1)
        fail(ErrorCode::RepeatedRoot, "gcd(n, q) != 1: repeated-root case is not supported");
    if (alpha == 0) fail(ErrorCode::NotUnit, "X^n - alpha needs alpha != 0");
    const std::uint64_t q = field.cardinality();
    std::mt19937_64 rng(0x5eed1cd5ULL);

    std::vector<RingPoly> out;
    RingPoly f = RingPoly::x_pow_minus(field, n, alpha);
    const RingPoly x = x_poly(field);
    RingPoly h = poly_mod(x, f);
    for (std::size_t d = 1; f.degree() >= static_cast<long>(2 * d); ++d) {
        h = poly_powmod(h, q, f);
        RingPoly g = poly_gcd(f, poly_sub(h, x));
        if (g.degree() > 0) {
            split_equal_degree(g, d, rng, out);
            f = poly_divmod(f, g).first;
            h = poly_mod(h, f);
        }
    }
    if (f.degree() > 0) out.push_back(make_monic(f));
    std::sort(out.begin(), out.end(), coeff_less);
    return out;
}

bool is_irreducible(const RingPoly& f) {
    const Ring& r = f.ring();
    require_field(r);
    if (f.degree() < 1) return false;
    const auto d = static_cast<std::uint64_t>(f.degree());
    const std::uint64_t q = r.cardinality();
    const RingPoly x = x_poly(r);
    auto frob = [&](std::uint64_t k) {
        RingPoly h = poly_mod(x, f);
        for (std::uint64_t i = 0; i < k; ++i) h = poly_powmod(h, q, f);
        return h;
    };
    if (!(frob(d) == poly_mod(x, f))) return false;
    for (const auto& [prime, _] : factor_integer(d))
        if (poly_gcd(f, poly_sub(frob(d / prime), x)).degree() != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Hensel lifting

namespace {

// One factor against the cofactor: f ≡ g·h (mod theta), h monic, returns
// exact (g, h) over the ring.
std::pair<RingPoly, RingPoly> lift_pair(const RingPoly& f, const RingPoly& g_bar, const RingPoly& h_bar) {
    const Ring& r = f.ring();
    const auto bz = poly_xgcd(g_bar, h_bar);
    if (bz.d.degree() != 0) fail(ErrorCode::NonCoprime, "residue factors are not coprime");
    RingPoly g = embed_poly(r, g_bar), h = embed_poly(r, h_bar);
    RingPoly s = embed_poly(r, bz.s), t = embed_poly(r, bz.t);
    const RingPoly one = RingPoly::constant(r, r.one());
    for (int precision = 1; precision < r.s(); precision *= 2) {
        const RingPoly e = poly_sub(f, poly_mul(g, h));
        auto [q, rr] = poly_divmod(poly_mul(s, e), h);
        const RingPoly g2 = poly_add(poly_add(g, poly_mul(t, e)), poly_mul(q, g));
        const RingPoly h2 = poly_add(h, rr);
        const RingPoly b = poly_sub(poly_add(poly_mul(s, g2), poly_mul(t, h2)), one);
        auto [c, dd] = poly_divmod(poly_mul(s, b), h2);
        s = poly_sub(s, dd);
        t = poly_sub(poly_sub(t, poly_mul(t, b)), poly_mul(c, g2));
        g = g2;
        h = h2;
    }
    // With h monic and g·h = f exact, g is the exact monic quotient.
    auto [quo, rem] = poly_divmod(f, h);
    if (!rem.is_zero() || !(poly_mul(quo, h) == f)) fail(ErrorCode::NotDivisor, "Hensel lifting did not converge");
    return {quo, h};
}

} // namespace

FactorSet hensel_lift_factors(const std::vector<RingPoly>& field_factors, const Ring& ring, std::size_t n,
                              Elem gamma) {
    if (!ring.is_chain()) fail(ErrorCode::Unsupported, "Hensel lifting requires a chain ring");
    if (!ring.is_unit(gamma)) fail(ErrorCode::NotUnit, "gamma must be a unit");
    const Ring field = ring.residue_field();
    const RingPoly target = RingPoly::x_pow_minus(ring, n, gamma);
    RingPoly prod = RingPoly::constant(field, field.one());
    for (const auto& f : field_factors) {
        if (f.ring() != field || !f.is_monic()) fail(ErrorCode::RingMismatch, "field factors must be monic over the residue field");
        prod = poly_mul(prod, f);
    }
    if (!(prod == residue_poly(target))) fail(ErrorCode::NotDivisor, "field factors do not multiply to X^n - pi(gamma)");

    FactorSet fs;
    fs.ring = ring;
    fs.n = n;
    fs.gamma = gamma;
    RingPoly rest = target;
    for (std::size_t i = 0; i < field_factors.size(); ++i) {
        if (i + 1 == field_factors.size()) {
            fs.factors.push_back(rest);
            break;
        }
        RingPoly co = RingPoly::constant(field, field.one());
        for (std::size_t j = i + 1; j < field_factors.size(); ++j) co = poly_mul(co, field_factors[j]);
        auto [g, h] = lift_pair(rest, co, field_factors[i]);
        fs.factors.push_back(h);
        rest = g;
    }
    std::sort(fs.factors.begin(), fs.factors.end(), coeff_less);
    if (fs.factors.size() > 64) fail(ErrorCode::Unsupported, "more than 64 factors");

    RingPoly check = RingPoly::constant(ring, ring.one());
    for (const auto& f : fs.factors) check = poly_mul(check, f);
    if (!(check == target)) fail(ErrorCode::NotDivisor, "lifted factors do not multiply to X^n - gamma");

    auto find = [](const std::vector<RingPoly>& list, const RingPoly& g) -> std::optional<std::size_t> {
        for (std::size_t j = 0; j < list.size(); ++j)
            if (list[j] == g) return j;
        return std::nullopt;
    };
    // Pairings are only meaningful when the factors are irreducible; a
    // partial factor list simply leaves them empty.
    auto pair_up = [&](const std::vector<RingPoly>& list) {
        std::vector<std::size_t> out;
        for (const auto& f : list) {
            auto j = find(list, reciprocal(f));
            if (!j) return std::vector<std::size_t>{};
            out.push_back(*j);
        }
        return out;
    };
    if (ring.mul(gamma, gamma) == ring.one()) fs.pairing = pair_up(fs.factors);
    const Elem pg = ring.residue(gamma);
    if (field.mul(pg, pg) == field.one()) {
        std::vector<RingPoly> res;
        for (const auto& f : fs.factors) res.push_back(residue_poly(f));
        fs.residue_pairing = pair_up(res);
    }
    return fs;
}

FactorSet factor_set(const Ring& ring, std::size_t n, Elem gamma) {
    if (!ring.is_chain()) fail(ErrorCode::Unsupported, "factorization requires a chain ring");
    if (!ring.is_unit(gamma)) fail(ErrorCode::NotUnit, "gamma must be a unit");
    const Ring field = ring.residue_field();
    return hensel_lift_factors(factor_constacyclic_modulus(field, n, ring.residue(gamma)), ring, n, gamma);
}

// ---------------------------------------------------------------------------
// Divisor bookkeeping

RingPoly divisor_poly(const FactorSet& fs, DivisorMask mask) {
    if (mask & ~fs.full_mask()) fail(ErrorCode::NotDivisor, "mask refers to missing factors");
    RingPoly out = RingPoly::constant(fs.ring, fs.ring.one());
    for (std::size_t i = 0; i < fs.factors.size(); ++i)
        if ((mask >> i) & 1U) out = poly_mul(out, fs.factors[i]);
    return out;
}

DivisorMask divisor_mask(const FactorSet& fs, const RingPoly& g) {
    if (g.ring() != fs.ring) fail(ErrorCode::RingMismatch, "divisor is over a different ring");
    if (g.is_zero() || !g.is_monic()) fail(ErrorCode::NotDivisor, "divisor must be monic");
    DivisorMask mask = 0;
    for (std::size_t i = 0; i < fs.factors.size(); ++i)
        if (poly_mod(g, fs.factors[i]).is_zero()) mask |= DivisorMask{1} << i;
    if (!(divisor_poly(fs, mask) == g)) fail(ErrorCode::NotDivisor, "polynomial does not divide X^n - gamma");
    return mask;
}

DivisorMask reciprocal_mask(const FactorSet& fs, DivisorMask mask) {
    if (fs.pairing.empty()) fail(ErrorCode::Unsupported, "reciprocal pairing needs gamma^2 = 1");
    DivisorMask out = 0;
    for (std::size_t i = 0; i < fs.factors.size(); ++i)
        if ((mask >> i) & 1U) out |= DivisorMask{1} << fs.pairing[i];
    return out;
}

RingPoly reciprocal(const RingPoly& g) {
    const Ring& r = g.ring();
    if (g.is_zero() || !r.is_unit(g.coeff(0))) fail(ErrorCode::NotUnit, "reciprocal needs a unit constant term");
    std::vector<Elem> c(g.coeffs().rbegin(), g.coeffs().rend());
    return make_monic(RingPoly(r, std::move(c)));
}

bool is_self_reciprocal(const RingPoly& g) { return reciprocal(g) == g; }

RingPoly complement_divisor(const RingPoly& g, const FactorSet& fs) {
    return divisor_poly(fs, fs.full_mask() & ~divisor_mask(fs, g));
}

RingPoly hensel_lcm(const RingPoly& g1, const RingPoly& g2, const FactorSet& fs) {
    return divisor_poly(fs, divisor_mask(fs, g1) | divisor_mask(fs, g2));
}

RingPoly substitute_unit(const RingPoly& g, Elem gamma) {
    const Ring& r = g.ring();
    if (!r.is_unit(gamma)) fail(ErrorCode::NotUnit, "substitution needs a unit");
    std::vector<Elem> c(g.coeffs());
    Elem pw = r.one();
    for (auto& x : c) {
        x = r.mul(x, pw);
        pw = r.mul(pw, gamma);
    }
    return make_monic(RingPoly(r, std::move(c)));
}

} // namespace lcdring
