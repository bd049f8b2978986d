#include <doctest.h>

#include "lcdring/io.hpp"

using namespace lcdring;

namespace {

void check_axioms(const Ring& r) {
    const Elem n = r.cardinality();
    std::size_t bad = 0;
    for (Elem a = 0; a < n; ++a) {
        if (r.add(a, r.neg(a)) != 0 || r.mul(a, r.one()) != a || r.add(a, 0) != a) ++bad;
        for (Elem b = 0; b < n; ++b) {
            if (r.add(a, b) != r.add(b, a) || r.mul(a, b) != r.mul(b, a)) ++bad;
            if (r.sub(r.add(a, b), b) != a) ++bad;
            for (Elem c = 0; c < n; ++c) {
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) ++bad;
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) ++bad;
            }
        }
    }
    CHECK(bad == 0);
}

std::size_t count_units(const Ring& r) {
    std::size_t units = 0;
    for (Elem a = 0; a < r.cardinality(); ++a)
        if (r.is_unit(a)) {
            ++units;
            CHECK(r.mul(a, r.inverse(a)) == r.one());
        }
    return units;
}

} // namespace

TEST_CASE("ring axioms hold on every small ring") {
    for (const char* spec : {"Z4", "Z9", "Z12", "GR(4,2)", "Fq(2,2)", "Rm(1)", "Rm(2)", "CRT[Rm(1) | Z3]"}) {
        CAPTURE(spec);
        check_axioms(make_ring(spec));
    }
}

TEST_CASE("unit groups have the expected size") {
    CHECK(count_units(make_ring("Z4")) == 2);
    CHECK(count_units(make_ring("Z9")) == 6);
    CHECK(count_units(make_ring("Z12")) == 4);
    CHECK(count_units(make_ring("GR(4,2)")) == 12);
    CHECK(count_units(make_ring("GR(8,2)")) == 48);
    CHECK(count_units(make_ring("Rm(2)")) == 8);
    CHECK(count_units(make_ring("Fq(3,2)")) == 8);
}

TEST_CASE("Galois ring GR(4,2) with w^2 + w + 1 = 0") {
    const Ring r = make_ring("GR(4,2)");
    CHECK(r.cardinality() == 16);
    CHECK(r.characteristic() == 4);
    CHECK(r.residue_size() == 4);
    const Elem w = parse_element(r, "w");
    CHECK(r.mul(w, w) == parse_element(r, "3w+3"));
    CHECK(r.pow(w, 3) == r.one());
    CHECK(r.valuation(parse_element(r, "2w")) == 1);
    CHECK(r.valuation(r.one()) == 0);
    CHECK(r.divide_theta(parse_element(r, "2w+2"), 1) == parse_element(r, "w+1"));
}

TEST_CASE("integer rings and their composites") {
    const Ring z15 = make_ring("Z15");
    CHECK(z15.kind() == RingKind::Composite);
    CHECK(z15.is_integer_residue());
    CHECK(z15.component_count() == 2);
    const Elem seven = z15.from_integer(7);
    CHECK(z15.to_integer(z15.inverse(seven)) == 13);
    CHECK(z15.to_integer(z15.mul(seven, z15.from_integer(11))) == 2);
    CHECK_FALSE(z15.is_unit(z15.from_integer(5)));
    for (std::int64_t v = 0; v < 15; ++v) CHECK(z15.to_integer(z15.from_integer(v)) == static_cast<std::uint64_t>(v));

    const Ring z9 = make_ring("Z9");
    CHECK(z9.is_chain());
    CHECK(z9.valuation(3) == 1);
    CHECK(z9.valuation(6) == 1);
    CHECK(z9.valuation(4) == 0);
}

TEST_CASE("local algebra R_2 = F2[u1,u2]/(u1^2, u2^2)") {
    const Ring r = make_ring("Rm(2)");
    CHECK(r.cardinality() == 16);
    const Elem one_u1 = parse_element(r, "1+u1");
    const Elem u1 = parse_element(r, "u1"), u2 = parse_element(r, "u2");
    CHECK(r.mul(one_u1, one_u1) == r.one());
    CHECK(r.mul(u1, u1) == 0);
    CHECK(r.mul(u1, u2) == parse_element(r, "u1u2"));
    CHECK(r.mul(r.add(u1, u2), r.add(u1, u2)) == 0);
    CHECK(r.residue(parse_element(r, "1+u1u2")) == 1);
    CHECK(r.residue(u2) == 0);
}

TEST_CASE("constructor errors carry their codes") {
    auto code_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::Unsupported;
    };
    CHECK(code_of([] { Ring::chain(6, 1, 1, {}); }) == ErrorCode::NotPrime);
    CHECK(code_of([] { make_ring("CRT[Z4 | Z8]"); }) == ErrorCode::NonCoprime);
    CHECK(code_of([] { make_ring("Z4").inverse(2); }) == ErrorCode::NotUnit);
    CHECK(code_of([] { make_ring("GR(4,2);modulus=X^2+1"); }) == ErrorCode::ReducibleModulus);
    CHECK(code_of([] { make_ring("Q"); }) == ErrorCode::Parse);
}

TEST_CASE("epimorphisms are ring homomorphisms") {
    const std::vector<Epimorphism> maps = {
        Epimorphism::nilpotency_reduction(make_ring("Z8"), 2),
        Epimorphism::nilpotency_reduction(make_ring("GR(8,2)"), 1),
        Epimorphism::residue_projection(make_ring("GR(4,2)")),
        Epimorphism::algebra_projection(make_ring("Rm(2)")),
        Epimorphism::component_projection(make_ring("Z15"), 1),
    };
    for (const auto& f : maps) {
        const Ring& s = f.source();
        const Ring& t = f.target();
        CAPTURE(s.spec());
        CHECK(f.apply(s.one()) == t.one());
        std::size_t bad = 0;
        for (Elem a = 0; a < s.cardinality(); ++a)
            for (Elem b = 0; b < s.cardinality(); ++b)
                if (f.apply(s.add(a, b)) != t.add(f.apply(a), f.apply(b)) ||
                    f.apply(s.mul(a, b)) != t.mul(f.apply(a), f.apply(b)))
                    ++bad;
        CHECK(bad == 0);
        for (Elem b = 0; b < t.cardinality(); ++b) CHECK(f.apply(f.preimage(b)) == b);
    }
    const auto z8 = Epimorphism::nilpotency_reduction(make_ring("Z8"), 2);
    CHECK(z8.apply(5) == 1);
    CHECK(z8.preimage(3) == 3);
    const Ring z15 = make_ring("Z15");
    CHECK(Epimorphism::component_projection(z15, 1).apply(z15.from_integer(7)) == 2);
}

TEST_CASE("units map onto units") {
    const auto f = Epimorphism::nilpotency_reduction(make_ring("GR(8,2)"), 2);
    for (Elem a = 0; a < f.source().cardinality(); ++a)
        CHECK(f.source().is_unit(a) == f.target().is_unit(f.apply(a)));
}

TEST_CASE("integer helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    const auto f = factor_integer(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::uint64_t, int>{2, 3});
    CHECK(f[1] == std::pair<std::uint64_t, int>{3, 2});
    CHECK(f[2] == std::pair<std::uint64_t, int>{5, 1});
}
