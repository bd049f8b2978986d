#pragma once

// Elimination back ends shared by the matrix, row-module and code layers.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcdring/matrix.hpp"

namespace lcdring::engine {

// ---------------------------------------------------------------------------
// Chain rings: theta-adic echelon.
//
// After elimination the first rank() rows of `reduced` carry pivots
// theta^{v_i} at `pivot_cols[i]`, with v nondecreasing; row i is zero in
// every earlier pivot column and all its entries lie in theta^{v_i}R. The
// remaining rows are zero. With tracking, transform·M = reduced.

struct ChainEchelon {
    RingMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::vector<int> valuations;
    std::optional<RingMatrix> transform;

    std::size_t rank() const { return pivot_cols.size(); }
};

ChainEchelon chain_echelon(const RingMatrix& m, bool track);

/// Forward substitution against an echelon; returns the coefficients on its
/// pivot rows, or nullopt when `target` is outside the row span.
std::optional<RingVector> chain_solve(const ChainEchelon& e, std::span<const Elem> target);

// ---------------------------------------------------------------------------
// GF(2) vectors and incremental elimination.

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const noexcept { return bits_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    BitVec& operator^=(const BitVec& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }
    bool is_zero() const;
    /// Index of the lowest set bit, or size() when zero.
    std::size_t lowest() const;

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Echelon basis built by insertion. Optionally records, for every stored
/// row, which inserted inputs were combined into it.
class F2Eliminator {
public:
    explicit F2Eliminator(std::size_t bits, std::size_t tracked_inputs = 0)
        : bits_(bits), tracked_(tracked_inputs) {}

    /// Returns true when v was independent. When dependent and tracking is
    /// on, `relation` receives the input combination that sums to zero.
    bool insert(BitVec v, std::size_t input_index, BitVec* relation = nullptr);
    /// Residual of v after reduction; `combo` (if given) receives the stored
    /// inputs used.
    BitVec reduce(BitVec v, BitVec* combo = nullptr) const;
    bool contains(const BitVec& v) const { return reduce(v).is_zero(); }

    std::size_t dimension() const noexcept { return basis_.size(); }
    const std::vector<BitVec>& basis() const noexcept { return basis_; }
    std::size_t bits() const noexcept { return bits_; }

private:
    std::size_t bits_;
    std::size_t tracked_;
    std::vector<BitVec> basis_;
    std::vector<std::size_t> pivots_;
    std::vector<BitVec> combos_;
};

// ---------------------------------------------------------------------------
// LocalAlgebra rings: linearization over F2. Coordinate j, monomial A maps
// to bit j·2^m + A.

BitVec linearize(const Ring& ring, std::span<const Elem> v);
RingVector delinearize(const Ring& ring, const BitVec& bits, std::size_t n);
/// Scalar multiple a·v.
RingVector scale(const Ring& ring, Elem a, std::span<const Elem> v);

/// An R_m-submodule of R_m^n held as an F2 subspace.
struct AlgebraSpan {
    Ring ring;
    std::size_t n = 0;
    F2Eliminator space{0};
    std::vector<RingVector> minimal_generators;
};

/// Span of the given module generators.
AlgebraSpan algebra_span(const Ring& ring, std::size_t n, const std::vector<RingVector>& gens);
/// Minimal generating set of the module whose F2 basis is given (Nakayama:
/// a basis of K/mK lifts to generators of K).
std::vector<RingVector> algebra_minimal_generators(const Ring& ring, std::size_t n,
                                                   const std::vector<RingVector>& f2_basis);

RingMatrix algebra_left_kernel(const RingMatrix& m);
std::optional<RingVector> algebra_solve_left(const RingMatrix& m, std::span<const Elem> target);

} // namespace lcdring::engine
