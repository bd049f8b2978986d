#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "lcdring/io.hpp"
#include "support.hpp"

using namespace lcdring;
using lcdring::testing::random_matrix;

namespace {

// Leibniz formula, summing over every permutation.
Elem leibniz_det(const RingMatrix& a) {
    const Ring& r = a.ring();
    std::vector<std::size_t> perm(a.rows());
    std::iota(perm.begin(), perm.end(), 0);
    Elem total = 0;
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
        Elem term = r.one();
        for (std::size_t i = 0; i < perm.size(); ++i) term = r.mul(term, a(i, perm[i]));
        total = inversions % 2 ? r.sub(total, term) : r.add(total, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace

TEST_CASE("determinant agrees with the Leibniz formula") {
    std::mt19937_64 rng(21);
    for (const char* spec : {"Z4", "Z9", "Z15", "GR(4,2)", "Rm(2)"}) {
        const Ring r = make_ring(spec);
        for (std::size_t k = 1; k <= 7; ++k)
            for (int t = 0; t < 6; ++t) {
                const RingMatrix a = random_matrix(r, k, k, rng);
                CAPTURE(spec);
                CAPTURE(k);
                CHECK(det(a) == leibniz_det(a));
            }
    }
    const Ring z4 = make_ring("Z4");
    CHECK(det(parse_matrix(z4, "1,2;3,1")) == 3);
}

TEST_CASE("determinant is multiplicative beyond the cofactor range") {
    std::mt19937_64 rng(22);
    const Ring r = make_ring("Z8");
    for (int t = 0; t < 20; ++t) {
        const RingMatrix a = random_matrix(r, 9, 9, rng), b = random_matrix(r, 9, 9, rng);
        CHECK(det(mat_mul(a, b)) == r.mul(det(a), det(b)));
    }
}

TEST_CASE("nonsingular matrices have two-sided inverses") {
    std::mt19937_64 rng(23);
    for (const char* spec : {"Z4", "Z12", "GR(9,2)", "Rm(1)", "CRT[Rm(1) | Z3]"}) {
        const Ring r = make_ring(spec);
        std::size_t invertible = 0;
        for (int t = 0; t < 60; ++t) {
            const std::size_t k = 1 + rng() % 5;
            const RingMatrix a = random_matrix(r, k, k, rng);
            const bool ns = is_nonsingular(a);
            CHECK(ns == r.is_unit(det(a)));
            const auto inv = inverse(a);
            CHECK(inv.has_value() == ns);
            if (!inv) continue;
            ++invertible;
            CHECK(mat_mul(a, *inv) == RingMatrix::identity(r, k));
            CHECK(mat_mul(*inv, a) == RingMatrix::identity(r, k));
        }
        CAPTURE(spec);
        CHECK(invertible > 0);
    }
}

TEST_CASE("kernels contain exactly the annihilated vectors") {
    std::mt19937_64 rng(24);
    for (const char* spec : {"Z4", "Z6", "Z9", "Rm(1)", "Fq(2,2)"}) {
        const Ring r = make_ring(spec);
        for (int t = 0; t < 25; ++t) {
            const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
            const RingMatrix a = random_matrix(r, rows, cols, rng);
            const auto ker = lcdring::testing::span_by_brute_force(kernel(a));
            std::size_t expected = 0;
            for (const auto& x : lcdring::testing::all_vectors(r, cols)) {
                bool zero = true;
                for (std::size_t i = 0; i < rows; ++i) zero = zero && dot(r, a.row(i), x) == 0;
                if (!zero) continue;
                ++expected;
                CHECK(ker.count(x) == 1);
            }
            CAPTURE(spec);
            CHECK(ker.size() == expected);
        }
    }
}

TEST_CASE("left kernel and solve_left") {
    std::mt19937_64 rng(25);
    for (const char* spec : {"Z8", "Z12", "GR(4,2)", "Rm(2)"}) {
        const Ring r = make_ring(spec);
        for (int t = 0; t < 40; ++t) {
            const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
            const RingMatrix m = random_matrix(r, rows, cols, rng);
            const RingMatrix lk = left_kernel(m);
            CHECK(mat_mul(lk, m).is_zero());
            RingVector y(rows);
            for (auto& x : y) x = rng() % r.cardinality();
            const RingVector target = vec_mat(y, m);
            const auto sol = solve_left(m, target);
            REQUIRE(sol.has_value());
            CHECK(vec_mat(*sol, m) == target);
        }
    }
    const Ring z4 = make_ring("Z4");
    const RingVector odd = {1, 0};
    CHECK_FALSE(solve_left(parse_matrix(z4, "2,0;0,2"), odd).has_value());
}

TEST_CASE("right inverse exists exactly for full-row-rank matrices") {
    std::mt19937_64 rng(26);
    const Ring r = make_ring("Z4");
    for (int t = 0; t < 60; ++t) {
        const std::size_t k = 1 + rng() % 3, n = k + rng() % 3;
        const RingMatrix a = random_matrix(r, k, n, rng);
        const auto b = right_inverse(a);
        const bool full = standard_form(a).type_profile.at(0) == k;
        CHECK(b.has_value() == full);
        if (b) CHECK(mat_mul(a, *b) == RingMatrix::identity(r, k));
    }
}

TEST_CASE("standard form over chain rings") {
    const Ring z4 = make_ring("Z4");
    const StandardForm sf = standard_form(parse_matrix(z4, "2,0,2;0,1,1;2,1,3"));
    REQUIRE(sf.type_profile.size() == 2);
    CHECK(sf.type_profile[0] == 1);
    CHECK(sf.type_profile[1] == 1);
    REQUIRE(sf.pivots.size() == 2);
    CHECK(sf.pivots[0].valuation == 0);
    CHECK(sf.pivots[1].valuation == 1);
    CHECK(sf.reduced.rows() == 2);

    const Ring z8 = make_ring("Z8");
    const StandardForm s8 = standard_form(parse_matrix(z8, "4,0,0;0,2,0;0,0,1;4,2,1"));
    CHECK(s8.type_profile == std::vector<std::size_t>{1, 1, 1});

    std::mt19937_64 rng(27);
    for (int t = 0; t < 50; ++t) {
        const RingMatrix g = random_matrix(z8, 1 + rng() % 4, 1 + rng() % 4, rng);
        const StandardForm s = standard_form(g);
        CHECK(lcdring::testing::span_by_brute_force(s.reduced) == lcdring::testing::span_by_brute_force(g));
        for (std::size_t i = 1; i < s.pivots.size(); ++i) CHECK(s.pivots[i - 1].valuation <= s.pivots[i].valuation);
    }
}

TEST_CASE("standard form over composite and local-algebra rings spans the same module") {
    std::mt19937_64 rng(28);
    for (const char* spec : {"Z12", "Rm(1)", "Rm(2)", "CRT[Rm(1) | Z3]"}) {
        const Ring r = make_ring(spec);
        for (int t = 0; t < 20; ++t) {
            const RingMatrix g = random_matrix(r, 1 + rng() % 3, 1 + rng() % 2, rng);
            CAPTURE(spec);
            CHECK(lcdring::testing::span_by_brute_force(standard_form(g).reduced) ==
                  lcdring::testing::span_by_brute_force(g));
        }
    }
}

TEST_CASE("component matrices round-trip through compose") {
    std::mt19937_64 rng(29);
    const Ring r = make_ring("Z60");
    const RingMatrix a = random_matrix(r, 3, 4, rng);
    std::vector<RingMatrix> parts;
    for (std::size_t j = 0; j < r.component_count(); ++j) parts.push_back(component_matrix(a, j));
    CHECK(compose_matrices(r, parts) == a);
}

TEST_CASE("shape errors") {
    const Ring z4 = make_ring("Z4");
    CHECK_THROWS_AS(mat_mul(RingMatrix(z4, 2, 3), RingMatrix(z4, 2, 3)), Error);
    CHECK_THROWS_AS(det(RingMatrix(z4, 2, 3)), Error);
    CHECK_THROWS_AS(mat_mul(RingMatrix(z4, 1, 1), RingMatrix(make_ring("Z8"), 1, 1)), Error);
}
