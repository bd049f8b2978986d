#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcdring/matrix.hpp"

namespace lcdring {

using BigInt = boost::multiprecision::cpp_int;

/// One additive generator of a code together with its additive order.
struct AdditiveGenerator {
    RingVector vector;
    std::uint64_t order;
};

/// An R-submodule of R^n given by generating rows. The standard form, rank,
/// cardinality and freeness are computed once at construction.
class LinearCode {
public:
    LinearCode() = default;
    LinearCode(Ring ring, std::size_t n, RingMatrix generators);
    explicit LinearCode(RingMatrix generators);
    static LinearCode zero(Ring ring, std::size_t n);
    static LinearCode full(Ring ring, std::size_t n);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t length() const noexcept { return n_; }
    const RingMatrix& generators() const noexcept { return generators_; }
    const StandardForm& standard() const noexcept { return standard_; }
    /// Reduced generator with exactly rank() rows when the code is free.
    const RingMatrix& reduced() const noexcept { return standard_.reduced; }

    std::size_t rank() const noexcept { return rank_; }
    bool is_free() const noexcept { return free_; }
    const BigInt& cardinality() const noexcept { return cardinality_; }

    bool contains(std::span<const Elem> v) const;
    /// Direct-sum decomposition of (C, +) into cyclic groups.
    std::vector<AdditiveGenerator> additive_basis() const;

private:
    void build();

    Ring ring_;
    std::size_t n_ = 0;
    RingMatrix generators_;
    StandardForm standard_;
    std::size_t rank_ = 0;
    bool free_ = true;
    BigInt cardinality_ = 1;
};

Elem inner_product(const Ring& ring, std::span<const Elem> v, std::span<const Elem> w);

LinearCode dual(const LinearCode& c);
bool is_lcd(const LinearCode& c);
/// A nonzero vector of C ∩ C^⊥, or nullopt when the hull is trivial.
std::optional<RingVector> hull_witness(const LinearCode& c);
/// Π = G^T(GG^T)^{-1}G for an LCD code; composite codes are handled per
/// component.
RingMatrix lcd_projector(const LinearCode& c);

LinearCode crt_compose_codes(const std::vector<LinearCode>& parts);
std::vector<LinearCode> crt_split_code(const LinearCode& c);

bool code_equals(const LinearCode& a, const LinearCode& b);
bool membership(const LinearCode& c, std::span<const Elem> v);

LinearCode project_code(const LinearCode& c, const Epimorphism& f);
/// Free code over f.source() whose generator reduces to the reduced
/// generator of `c`, entries lifted by f.preimage.
LinearCode lift_code(const LinearCode& c, const Epimorphism& f);

} // namespace lcdring
