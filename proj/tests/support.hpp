#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "lcdring/code.hpp"

namespace lcdring::testing {

/// Every R-combination y·G of the rows, deduplicated. Only for tiny codes.
inline std::set<RingVector> span_by_brute_force(const RingMatrix& g) {
    const Ring& r = g.ring();
    std::set<RingVector> out;
    std::vector<Elem> y(g.rows(), 0);
    while (true) {
        out.insert(vec_mat(y, g));
        std::size_t i = 0;
        while (i < y.size() && ++y[i] == r.cardinality()) y[i++] = 0;
        if (i == y.size()) break;
    }
    return out;
}

/// Every vector of R^n (tiny n only).
inline std::vector<RingVector> all_vectors(const Ring& r, std::size_t n) {
    std::vector<RingVector> out;
    RingVector v(n, 0);
    while (true) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < n && ++v[i] == r.cardinality()) v[i++] = 0;
        if (i == n) break;
    }
    return out;
}

inline RingMatrix random_matrix(const Ring& r, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    RingMatrix m(r, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng() % r.cardinality();
    return m;
}

} // namespace lcdring::testing
