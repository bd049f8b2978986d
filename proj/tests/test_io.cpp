#include <doctest.h>

#include <random>

#include "lcdring/io.hpp"
#include "support.hpp"

using namespace lcdring;
using lcdring::testing::random_matrix;

namespace {

std::uint64_t multiplicative_order(const Ring& r, Elem a) {
    Elem x = a;
    for (std::uint64_t k = 1; k <= r.cardinality(); ++k) {
        if (x == r.one()) return k;
        x = r.mul(x, a);
    }
    return 0;
}

} // namespace

TEST_CASE("ring specs round-trip") {
    for (const char* spec : {"Z4", "Z15", "Z60", "GR(4,2)", "GR(9,2)", "GR(8,3)", "Fq(2,4)", "Rm(2)",
                             "CRT[Rm(1) | Z3]", "CRT[GR(4,2) | Z5]"}) {
        const Ring r = make_ring(spec);
        const Ring again = make_ring(r.spec());
        CAPTURE(spec);
        CHECK(r == again);
        CHECK(r.cardinality() == again.cardinality());
    }
    CHECK(make_ring("GR(2^2,2)") == make_ring("GR(4,2)"));
    CHECK(make_ring("GR(3,2)").is_field());
}

TEST_CASE("default moduli are primitive lifts") {
    struct Case {
        std::uint64_t p;
        int s, m;
    };
    for (const Case& k : {Case{2, 2, 2}, Case{2, 3, 2}, Case{3, 2, 2}, Case{2, 2, 3}, Case{2, 1, 4}, Case{5, 1, 2}}) {
        const auto mod = default_modulus(k.p, k.s, k.m);
        REQUIRE(mod.size() == static_cast<std::size_t>(k.m) + 1);
        CHECK(mod.back() == 1);
        std::uint64_t q = 1, pm = 1;
        for (int i = 0; i < k.s; ++i) q *= k.p;
        for (int i = 0; i < k.m; ++i) pm *= k.p;
        const Ring r = make_ring("GR(" + std::to_string(q) + "," + std::to_string(k.m) + ")");
        const Elem w = parse_element(r, "w");
        CAPTURE(q);
        CHECK(r.pow(w, pm - 1) == r.one());
        CHECK(multiplicative_order(r.residue_field(), r.residue(w)) == pm - 1);
    }
    CHECK(default_modulus(2, 2, 2) == std::vector<Elem>{1, 1, 1});
}

TEST_CASE("element and vector text round-trips") {
    for (const char* spec : {"Z9", "Z15", "GR(4,2)", "Rm(2)", "CRT[Rm(1) | Z3]"}) {
        const Ring r = make_ring(spec);
        for (Elem a = 0; a < r.cardinality(); ++a) {
            CHECK(parse_element(r, format_element(r, a)) == a);
            CHECK(element_from_json(r, element_json(r, a)) == a);
        }
    }
    const Ring gr = make_ring("GR(4,2)");
    CHECK(parse_element(gr, "3w+2") == parse_element(gr, "[2,3]"));
    CHECK(format_element(make_ring("Z8"), 5) == "5");
    CHECK(parse_element(make_ring("Z8"), "-1") == 7);
    CHECK_THROWS_AS(parse_element(make_ring("Z4"), "x"), Error);
    CHECK_THROWS_AS(parse_element(gr, "[1,2,3]"), Error);
}

TEST_CASE("polynomial text round-trips") {
    const Ring gr = make_ring("GR(4,2)");
    const RingPoly g = parse_poly(gr, "X^2+(3w+2)X+1");
    CHECK(format_poly(g) == "X^2+(3w+2)*X+1");
    CHECK(parse_poly(gr, format_poly(g)) == g);
    const Ring z4 = make_ring("Z4");
    CHECK(parse_poly(z4, "X^3-X+1") == RingPoly(z4, {1, 3, 0, 1}));
    CHECK(parse_poly(z4, "(X+1)*(X+3)") == parse_poly(z4, "X^2+3"));
    CHECK(parse_poly(z4, "(X+1)(X^2+1)") == parse_poly(z4, "X^3+X^2+X+1"));
    CHECK(format_poly(RingPoly(z4, {})) == "0");
    std::mt19937_64 rng(71);
    for (int t = 0; t < 100; ++t) {
        std::vector<Elem> c(1 + rng() % 6);
        for (auto& x : c) x = rng() % 16;
        const RingPoly f(gr, c);
        CHECK(parse_poly(gr, format_poly(f)) == f);
    }
    CHECK_THROWS_AS(parse_poly(z4, "X^^2"), Error);
}

TEST_CASE("matrix and code JSON round-trips") {
    std::mt19937_64 rng(72);
    for (const char* spec : {"Z4", "Z15", "GR(4,2)", "Rm(2)", "CRT[Rm(1) | Z3]"}) {
        const Ring r = make_ring(spec);
        for (int t = 0; t < 10; ++t) {
            const RingMatrix m = random_matrix(r, 1 + rng() % 3, 4, rng);
            CHECK(parse_matrix(r, format_matrix(m)) == m);
            CHECK(matrix_from_json(r, matrix_json(m), 4) == m);
            const LinearCode c(r, 4, m);
            const nlohmann::json j = code_json(c);
            const LinearCode back = code_from_json(nlohmann::json::parse(j.dump()));
            CHECK(code_equals(back, c));
            CHECK(j.at("cardinality").get<std::string>() == big_to_string(c.cardinality()));
        }
    }
    const auto rows = nlohmann::json::parse(R"({"ring":"Z4","n":3,"rows":[[1,2,3],[0,2,2]]})");
    const LinearCode c = code_from_json(rows);
    CHECK(c.cardinality() == 8);
    CHECK_THROWS_AS(code_from_json(nlohmann::json::parse(R"({"ring":"Z4","n":2,"rows":[[1,2,3]]})")), Error);
}

TEST_CASE("distance JSON") {
    const Ring z4 = make_ring("Z4");
    const LinearCode c(parse_matrix(z4, "1,1,1"));
    const auto j = distance_json(z4, min_distance(c, Metric::Lee));
    CHECK(j.at("metric") == "lee");
    CHECK(j.at("status") == "exact");
    CHECK(j.at("value") == 3);
    CHECK(j.at("strategy") == "FullEnumeration");
}
