#include "properties.hpp"

#include <algorithm>
#include <memory>
#include <random>

#include "lcdring/constacyclic.hpp"
#include "lcdring/io.hpp"

namespace lcdring::props {

namespace {

using Rng = std::mt19937_64;

Elem random_element(const Ring& ring, Rng& rng) { return rng() % ring.cardinality(); }

RingMatrix random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, Rng& rng) {
    RingMatrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_element(ring, rng);
    return m;
}

LinearCode random_code(const Ring& ring, Rng& rng, std::size_t max_n = 6) {
    const std::size_t n = 1 + rng() % max_n;
    const std::size_t k = 1 + rng() % (n + 1);
    return LinearCode(ring, n, random_matrix(ring, k, n, rng));
}

const std::vector<Ring>& local_rings() {
    static const std::vector<Ring> rings = [] {
        std::vector<Ring> out;
        for (const char* s : {"Z2", "Z3", "Z4", "Z8", "Z9", "Z25", "GR(4,2)", "Fq(2,2)", "Rm(1)", "Rm(2)"})
            out.push_back(make_ring(s));
        return out;
    }();
    return rings;
}

const std::vector<Ring>& composite_rings() {
    static const std::vector<Ring> rings = [] {
        std::vector<Ring> out;
        for (const char* s : {"Z6", "Z12", "Z15", "Z36", "CRT[Rm(1) | Z3]", "CRT[GR(4,2) | Z5]"})
            out.push_back(make_ring(s));
        return out;
    }();
    return rings;
}

BigInt power(const BigInt& base, std::size_t e) {
    BigInt out = 1;
    for (std::size_t i = 0; i < e; ++i) out *= base;
    return out;
}

RingMatrix reverse_columns(const RingMatrix& g) {
    RingMatrix out(g.ring(), g.rows(), g.cols());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) out(i, j) = g(i, g.cols() - 1 - j);
    return out;
}

RingPoly random_unit_poly(const Ring& ring, Rng& rng) {
    const std::size_t deg = 1 + rng() % 6;
    std::vector<Elem> c(deg + 1);
    for (auto& x : c) x = random_element(ring, rng);
    do c[0] = random_element(ring, rng);
    while (!ring.is_unit(c[0]));
    c[deg] = ring.one();
    return RingPoly(ring, c);
}

} // namespace

Outcome cardinality_duality(std::size_t cases) {
    Outcome out{"|C|*|dual C| = |R|^n", cases, 0, {}};
    Rng rng(11);
    for (std::size_t i = 0; i < cases; ++i) {
        const Ring& ring = i % 3 == 2 ? composite_rings()[rng() % composite_rings().size()]
                                      : local_rings()[rng() % local_rings().size()];
        const LinearCode c = random_code(ring, rng);
        if (c.cardinality() * dual(c).cardinality() != power(BigInt(ring.cardinality()), c.length()))
            ++out.failures;
    }
    return out;
}

Outcome dual_crt_commutes(std::size_t cases) {
    Outcome out{"dual commutes with the CRT split", cases, 0, {}};
    Rng rng(12);
    for (std::size_t i = 0; i < cases; ++i) {
        const Ring& ring = composite_rings()[rng() % composite_rings().size()];
        const LinearCode c = random_code(ring, rng);
        const auto parts = crt_split_code(c);
        const auto dual_parts = crt_split_code(dual(c));
        bool ok = parts.size() == dual_parts.size();
        for (std::size_t j = 0; ok && j < parts.size(); ++j) ok = code_equals(dual_parts[j], dual(parts[j]));
        ok = ok && code_equals(crt_compose_codes(dual_parts), dual(c));
        if (!ok) ++out.failures;
    }
    return out;
}

Outcome lcd_iff_components_lcd(std::size_t cases) {
    Outcome out{"LCD iff every CRT component is LCD", cases, 0, {}};
    Rng rng(13);
    std::size_t lcd = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        const Ring& ring = composite_rings()[rng() % composite_rings().size()];
        const LinearCode c = random_code(ring, rng);
        const auto parts = crt_split_code(c);
        const bool all = std::all_of(parts.begin(), parts.end(), [](const LinearCode& p) { return is_lcd(p); });
        const bool whole = is_lcd(c);
        lcd += whole;
        if (whole != all) ++out.failures;
    }
    out.note = std::to_string(lcd) + " LCD";
    return out;
}

Outcome lcd_implies_free(std::size_t cases) {
    Outcome out{"LCD implies free over local rings", cases, 0, {}};
    Rng rng(14);
    std::size_t lcd = 0;
    for (std::size_t i = 0; i < cases; ++i) {
        const Ring& ring = local_rings()[rng() % local_rings().size()];
        const LinearCode c = random_code(ring, rng);
        if (!is_lcd(c)) continue;
        ++lcd;
        if (!c.is_free()) ++out.failures;
    }
    out.note = std::to_string(lcd) + " LCD";
    return out;
}

Outcome projector_splits(std::size_t cases) {
    Outcome out{"LCD projector is idempotent and splits R^n", cases, 0, {}};
    Rng rng(15);
    std::size_t found = 0;
    while (found < cases) {
        const bool composite = rng() % 4 == 0;
        const Ring& ring = composite ? composite_rings()[rng() % composite_rings().size()]
                                     : local_rings()[rng() % local_rings().size()];
        const LinearCode c = random_code(ring, rng);
        if (!is_lcd(c)) continue;
        ++found;
        const RingMatrix p = lcd_projector(c);
        const LinearCode d = dual(c);
        bool ok = mat_mul(p, p) == p;
        for (int t = 0; ok && t < 4; ++t) {
            RingVector v(c.length());
            for (auto& x : v) x = random_element(ring, rng);
            const RingVector in = vec_mat(v, p);
            RingVector rest(v.size());
            for (std::size_t j = 0; j < v.size(); ++j) rest[j] = ring.sub(v[j], in[j]);
            ok = c.contains(in) && d.contains(rest);
        }
        if (!ok) ++out.failures;
    }
    return out;
}

Outcome reciprocal_laws(std::size_t cases) {
    Outcome out{"reciprocal is an involution and multiplicative", cases, 0, {}};
    Rng rng(16);
    std::vector<Ring> chains;
    for (const auto& r : local_rings())
        if (r.is_chain()) chains.push_back(r);
    for (std::size_t i = 0; i < cases; ++i) {
        const Ring& ring = chains[rng() % chains.size()];
        const RingPoly f = random_unit_poly(ring, rng);
        const RingPoly g = random_unit_poly(ring, rng);
        const bool involution = reciprocal(reciprocal(f)) == f;
        const bool product = reciprocal(poly_mul(f, g)) == make_monic(poly_mul(reciprocal(f), reciprocal(g)));
        const bool degree = reciprocal(f).degree() == f.degree();
        if (!(involution && product && degree)) ++out.failures;
    }
    return out;
}

Outcome lcm_is_intersection() {
    Outcome out{"Hensel lcm generates the intersection (Z4, n = 7, all divisor pairs)", 0, 0, {}};
    const Ring z4 = make_ring("Z4");
    auto fs = std::make_shared<const FactorSet>(factor_set(z4, 7, z4.one()));
    for (DivisorMask a = 0; a <= fs->full_mask(); ++a) {
        const ConstacyclicCode ca = consta_code(fs, a);
        const auto words = enumerate_codewords(ca.code);
        for (DivisorMask b = 0; b <= fs->full_mask(); ++b) {
            ++out.cases;
            const ConstacyclicCode cb = consta_code(fs, b);
            const ConstacyclicCode cl = consta_code(fs, hensel_lcm(ca.gen, cb.gen, *fs));
            BigInt common = 0;
            bool ok = true;
            for (const auto& w : words) {
                if (!cb.code.contains(w)) continue;
                ++common;
                ok = ok && cl.code.contains(w);
            }
            if (!ok || common != cl.code.cardinality()) ++out.failures;
        }
    }
    return out;
}

Outcome reversible_agreement() {
    Outcome out{"self-reciprocal generator iff LCD iff reversible (Z4, n = 15, all divisors)", 0, 0, {}};
    const Ring z4 = make_ring("Z4");
    auto fs = std::make_shared<const FactorSet>(factor_set(z4, 15, z4.one()));
    for (DivisorMask m = 0; m <= fs->full_mask(); ++m) {
        ++out.cases;
        const ConstacyclicCode c = consta_code(fs, m);
        const bool poly_level = is_lcd_constacyclic(c);
        const bool matrix_level = is_lcd(c.code);
        const LinearCode reversed(z4, 15, reverse_columns(c.code.generators()));
        const bool reversible = code_equals(reversed, c.code);
        if (poly_level != matrix_level || poly_level != reversible || is_reversible(c) != reversible)
            ++out.failures;
    }
    return out;
}

Outcome unit_square_families() {
    Outcome out{"constacyclic LCD test agrees with the hull check; free codes are LCD when pi(gamma^2) != 1", 0, 0,
                {}};
    // Every unit gamma of each ring; Z9 with gamma = 2 is among them.
    const std::vector<std::pair<const char*, std::vector<std::size_t>>> families = {
        {"Z9", {2, 4, 5, 7, 8, 10}},
        {"Z25", {2, 3, 4, 6, 8}},
        {"Z49", {2, 3, 4, 5, 6}},
        {"GR(9,2)", {2, 4, 5, 8}},
    };
    std::size_t forced = 0;
    for (const auto& [spec, lengths] : families) {
        const Ring ring = make_ring(spec);
        for (Elem gamma = 0; gamma < ring.cardinality(); ++gamma) {
            if (!ring.is_unit(gamma)) continue;
            const Elem g2 = ring.residue(ring.mul(gamma, gamma));
            const bool always_lcd = g2 != ring.residue_field().one();
            for (auto n : lengths) {
                auto fs = std::make_shared<const FactorSet>(factor_set(ring, n, gamma));
                for (DivisorMask m = 1; m < fs->full_mask(); ++m) {
                    ++out.cases;
                    const ConstacyclicCode c = consta_code(fs, m);
                    const bool hull = is_lcd(c.code);
                    bool ok = hull == is_lcd_constacyclic(c);
                    if (always_lcd) {
                        ++forced;
                        ok = ok && hull;
                    }
                    if (!ok) ++out.failures;
                }
            }
        }
    }
    out.note = std::to_string(forced) + " codes with pi(gamma^2) != 1";
    return out;
}

Outcome gray_isometry() {
    Outcome out{"Gray map carries Lee weight to Hamming weight (all Z4 words, n <= 8)", 0, 0, {}};
    const Ring z4 = make_ring("Z4");
    for (std::size_t n = 1; n <= 8; ++n) {
        RingVector v(n, 0);
        const std::uint64_t total = std::uint64_t{1} << (2 * n);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            for (std::size_t j = 0; j < n; ++j) v[j] = (idx >> (2 * j)) & 3U;
            ++out.cases;
            const BitWord b = gray_map(z4, v);
            const auto hamming = static_cast<std::size_t>(std::count(b.begin(), b.end(), 1));
            if (b.size() != 2 * n || hamming != weight(z4, v, Metric::Lee)) ++out.failures;
        }
    }
    // Distances between pairs, exhaustively for n <= 3.
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (2 * n);
        RingVector u(n), v(n), diff(n);
        for (std::uint64_t a = 0; a < total; ++a)
            for (std::uint64_t b = 0; b < total; ++b) {
                for (std::size_t j = 0; j < n; ++j) {
                    u[j] = (a >> (2 * j)) & 3U;
                    v[j] = (b >> (2 * j)) & 3U;
                    diff[j] = z4.sub(u[j], v[j]);
                }
                ++out.cases;
                const BitWord gu = gray_map(z4, u), gv = gray_map(z4, v);
                std::size_t d = 0;
                for (std::size_t j = 0; j < gu.size(); ++j) d += gu[j] != gv[j];
                if (d != weight(z4, diff, Metric::Lee)) ++out.failures;
            }
    }
    return out;
}

std::vector<Outcome> all_suites(std::size_t cases) {
    return {cardinality_duality(cases), dual_crt_commutes(cases), lcd_iff_components_lcd(cases),
            lcd_implies_free(cases),    projector_splits(cases),  reciprocal_laws(cases),
            lcm_is_intersection(),      reversible_agreement(),   unit_square_families(),
            gray_isometry()};
}

} // namespace lcdring::props
