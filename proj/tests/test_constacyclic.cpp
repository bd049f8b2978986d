#include <doctest.h>

#include <random>

#include "lcdring/constacyclic.hpp"
#include "lcdring/io.hpp"

using namespace lcdring;

namespace {

RingVector random_codeword(const LinearCode& c, std::mt19937_64& rng) {
    const RingMatrix& g = c.generators();
    RingVector y(g.rows());
    for (auto& x : y) x = rng() % c.ring().cardinality();
    return vec_mat(y, g);
}

} // namespace

TEST_CASE("circulant generator rows are shifts") {
    const Ring z4 = make_ring("Z4");
    const RingMatrix m = circulant_generator(parse_poly(z4, "X^2+2X+3"), 5);
    CHECK(m == parse_matrix(z4, "3,2,1,0,0;0,3,2,1,0;0,0,3,2,1"));
    CHECK_THROWS_AS(circulant_generator(parse_poly(z4, "X^5+1"), 5), Error);
}

TEST_CASE("constacyclic codes are closed under the gamma shift") {
    std::mt19937_64 rng(51);
    struct Case {
        const char* ring;
        std::size_t n;
        const char* gamma;
    };
    for (const Case& k : {Case{"Z4", 7, "1"}, Case{"Z4", 7, "3"}, Case{"Z8", 15, "5"}, Case{"Z9", 8, "2"},
                          Case{"GR(4,2)", 5, "w"}, Case{"GR(9,2)", 4, "w+1"}}) {
        const Ring r = make_ring(k.ring);
        const Elem gamma = parse_element(r, k.gamma);
        auto fs = std::make_shared<const FactorSet>(factor_set(r, k.n, gamma));
        for (DivisorMask m = 0; m <= fs->full_mask(); ++m) {
            const ConstacyclicCode c = consta_code(fs, m);
            CHECK(c.code.is_free());
            CHECK(c.code.rank() == k.n - static_cast<std::size_t>(std::min<long>(c.gen.degree(), k.n)));
            for (int t = 0; t < 5; ++t) CHECK(c.code.contains(constacyclic_shift(r, random_codeword(c.code, rng), gamma)));
        }
    }
}

TEST_CASE("dual of a constacyclic code") {
    for (const char* gamma_text : {"1", "3"}) {
        const Ring z4 = make_ring("Z4");
        auto fs = std::make_shared<const FactorSet>(factor_set(z4, 15, parse_element(z4, gamma_text)));
        for (DivisorMask m = 0; m <= fs->full_mask(); ++m) {
            const ConstacyclicCode c = consta_code(fs, m);
            const ConstacyclicCode d = dual_code(c);
            CHECK(code_equals(d.code, dual(c.code)));
            CHECK(d.gamma() == z4.inverse(c.gamma()));
            CHECK(d.gen == dual_generator(c));
        }
    }
    const Ring z9 = make_ring("Z9");
    auto f9 = std::make_shared<const FactorSet>(factor_set(z9, 4, 2));
    const ConstacyclicCode c = consta_code(f9, DivisorMask{1});
    CHECK(dual_code(c).gamma() == 5);
    CHECK(code_equals(dual_code(c).code, dual(c.code)));
}

TEST_CASE("reversal of a constacyclic code") {
    const Ring z8 = make_ring("Z8");
    auto fs = std::make_shared<const FactorSet>(factor_set(z8, 15, 3));
    for (DivisorMask m = 0; m <= fs->full_mask(); ++m) {
        const ConstacyclicCode c = consta_code(fs, m);
        const ConstacyclicCode rev = reverse_code(c);
        RingMatrix flipped(z8, c.code.generators().rows(), 15);
        for (std::size_t i = 0; i < flipped.rows(); ++i)
            for (std::size_t j = 0; j < 15; ++j) flipped(i, j) = c.code.generators()(i, 14 - j);
        CHECK(code_equals(rev.code, LinearCode(z8, 15, flipped)));
    }
}

TEST_CASE("LCD decision on Z4 of length 7") {
    const Ring z4 = make_ring("Z4");
    auto fs = std::make_shared<const FactorSet>(factor_set(z4, 7, z4.one()));
    const RingPoly f = parse_poly(z4, "X^3+2X^2+X+3"), g = parse_poly(z4, "X^3+3X^2+2X+3");
    CHECK(is_lcd_constacyclic(consta_code(fs, parse_poly(z4, "X-1"))));
    CHECK_FALSE(is_lcd_constacyclic(consta_code(fs, f)));
    CHECK_FALSE(is_lcd_constacyclic(consta_code(fs, g)));
    CHECK(is_lcd_constacyclic(consta_code(fs, poly_mul(f, g))));
    CHECK(lcd_divisor_masks(*fs).size() == 2);
}

TEST_CASE("number of LCD divisors") {
    struct Case {
        const char* ring;
        std::size_t n;
        Elem gamma;
        std::size_t expected;
    };
    // Counts from the reciprocal orbit structure of the residue factors.
    for (const Case& k : {Case{"Z4", 15, 1, 14}, Case{"Z4", 31, 1, 14}, Case{"Z4", 9, 1, 6}, Case{"Z4", 17, 1, 6},
                          Case{"Z8", 15, 1, 14}, Case{"Z8", 15, 7, 14}, Case{"Z4", 63, 1, 254}}) {
        const Ring r = make_ring(k.ring);
        CAPTURE(k.ring);
        CAPTURE(k.n);
        CHECK(lcd_divisor_masks(factor_set(r, k.n, k.gamma)).size() == k.expected);
    }
}

TEST_CASE("enumeration output is sorted and deterministic") {
    const Ring z4 = make_ring("Z4");
    const auto a = enumerate_lcd_constacyclic(z4, 15, z4.one());
    const auto b = enumerate_lcd_constacyclic(z4, 15, z4.one());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].gen == b[i].gen);
        if (i > 0) CHECK(a[i - 1].gen.degree() <= a[i].gen.degree());
    }
}

TEST_CASE("intersection of constacyclic codes") {
    const Ring z4 = make_ring("Z4");
    auto fs = std::make_shared<const FactorSet>(factor_set(z4, 15, z4.one()));
    const ConstacyclicCode a = consta_code(fs, DivisorMask{0b00101});
    const ConstacyclicCode b = consta_code(fs, DivisorMask{0b10011});
    const ConstacyclicCode both = intersect_constacyclic(a, b);
    CHECK(both.mask == 0b10111);
    for (const auto& w : enumerate_codewords(both.code)) CHECK((a.code.contains(w) && b.code.contains(w)));
}

TEST_CASE("residue code") {
    const Ring z8 = make_ring("Z8");
    const ConstacyclicCode c = consta_code(z8, 9, z8.one(), parse_poly(z8, "X^2+X+1"));
    const ConstacyclicCode r = residue_code(c);
    CHECK(r.ring() == z8.residue_field());
    CHECK(code_equals(r.code, project_code(c.code, Epimorphism::residue_projection(z8))));
    CHECK(is_lcd(r.code) == is_lcd(c.code));
}
