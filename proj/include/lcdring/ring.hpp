#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lcdring/error.hpp"

namespace lcdring {

/// Canonical element code. Every ring element is identified with an integer
/// in [0, |R|) obtained from its coordinate sequence by mixed-radix packing,
/// so two elements are equal iff their codes are equal.
using Elem = std::uint64_t;

enum class RingKind {
    Chain,        // GR(p^s, m); Z_{p^s} when m = 1, F_{p^m} when s = 1
    LocalAlgebra, // F2[u_1..u_m]/(u_1^2, ..., u_m^2)
    Composite,    // CRT product of local rings
};

namespace detail {
struct RingData;
}

/// A finite commutative Frobenius ring. Immutable; copies share state.
///
/// Coordinates per kind:
///   Chain: m coefficients in Z_{p^s} of a polynomial in w, where w is a root
///     of the stored monic modulus of degree m. Code = sum c_i (p^s)^i.
///   LocalAlgebra: 2^m bits, bit A is the coefficient of prod_{i in A} u_i.
///   Composite: one element per component, mixed radix over the component
///     cardinalities (component 0 least significant).
class Ring {
public:
    Ring() = default;

    static Ring chain(std::uint64_t p, int s, int m, std::vector<Elem> modulus);
    static Ring integers_mod(std::uint64_t p, int s) { return chain(p, s, 1, {}); }
    static Ring local_algebra(int m);
    /// Components are sorted by characteristic; characteristics must be
    /// pairwise coprime and every component must be local.
    static Ring composite(std::vector<Ring> components);

    bool valid() const noexcept { return d_ != nullptr; }
    RingKind kind() const;
    bool is_local() const { return kind() != RingKind::Composite; }
    bool is_chain() const { return kind() == RingKind::Chain; }
    bool is_field() const;
    /// Z_N: a chain ring with m = 1 or a composite of such rings.
    bool is_integer_residue() const;

    std::uint64_t cardinality() const;
    std::uint64_t characteristic() const;

    // Chain parameters.
    std::uint64_t p() const;
    int s() const;
    int m() const;
    std::uint64_t p_pow_s() const;
    const std::vector<Elem>& modulus() const;

    /// Nilpotent generator count of a LocalAlgebra.
    int algebra_generators() const;

    std::size_t component_count() const;
    const Ring& component(std::size_t j) const;
    const std::vector<Ring>& components() const;

    /// Residue field size q (local rings only).
    std::uint64_t residue_size() const;

    Elem zero() const noexcept { return 0; }
    Elem one() const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const;
    /// n·a for a nonnegative integer n.
    Elem times(Elem a, std::uint64_t n) const;

    bool is_unit(Elem a) const;
    Elem inverse(Elem a) const;

    /// Residue field of a local ring; projection onto it and the canonical
    /// preimage (same coordinates, lifted).
    Ring residue_field() const;
    Elem residue(Elem a) const;
    Elem embed_residue(Elem a) const;

    // Chain-ring helpers; theta = p generates the maximal ideal.
    int valuation(Elem a) const;
    Elem theta_pow(int v) const;
    Elem divide_theta(Elem a, int v) const;
    Elem reduce_theta(Elem a, int v) const;
    std::vector<Elem> coordinates(Elem a) const;
    Elem from_coordinates(std::span<const std::uint64_t> coords) const;

    std::vector<Elem> split(Elem a) const;
    Elem compose(std::span<const Elem> parts) const;

    /// Integer view for Z_N rings (CRT-combined for composites).
    Elem from_integer(std::int64_t v) const;
    std::uint64_t to_integer(Elem a) const;

    std::string spec() const;

    bool operator==(const Ring& other) const;
    bool operator!=(const Ring& other) const { return !(*this == other); }

private:
    explicit Ring(std::shared_ptr<const detail::RingData> d) : d_(std::move(d)) {}
    const detail::RingData& data() const;

    std::shared_ptr<const detail::RingData> d_;
};

/// Element bound to its ring; arithmetic checks ring agreement.
class RingElement {
public:
    RingElement(Ring ring, Elem code) : ring_(std::move(ring)), code_(code) {}
    static RingElement from_integer(const Ring& ring, std::int64_t v) {
        return {ring, ring.from_integer(v)};
    }

    const Ring& ring() const noexcept { return ring_; }
    Elem code() const noexcept { return code_; }

    bool is_unit() const { return ring_.is_unit(code_); }
    RingElement inverse() const { return {ring_, ring_.inverse(code_)}; }

    friend RingElement operator+(const RingElement& a, const RingElement& b);
    friend RingElement operator-(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    RingElement operator-() const { return {ring_, ring_.neg(code_)}; }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ring_ == b.ring_ && a.code_ == b.code_;
    }

private:
    Ring ring_;
    Elem code_;
};

/// Ring epimorphisms between supported rings.
class Epimorphism {
public:
    enum class Rule { ResidueProjection, NilpotencyReduction, AlgebraProjection, ComponentProjection };

    static Epimorphism residue_projection(const Ring& source);
    /// Z_{p^s} -> Z_{p^t} and GR(p^s,m) -> GR(p^t,m), 1 <= t <= s.
    static Epimorphism nilpotency_reduction(const Ring& source, int t);
    /// R_m -> F_2, keeps the coefficient of the empty monomial.
    static Epimorphism algebra_projection(const Ring& source);
    static Epimorphism component_projection(const Ring& source, std::size_t j);

    Rule rule() const noexcept { return rule_; }
    const Ring& source() const noexcept { return source_; }
    const Ring& target() const noexcept { return target_; }

    Elem apply(Elem a) const;
    /// Smallest preimage in the source's canonical order (the integer order
    /// for Z_N rings, the code order otherwise).
    Elem preimage(Elem b) const;

private:
    Epimorphism(Rule rule, Ring source, Ring target, std::size_t component)
        : rule_(rule), source_(std::move(source)), target_(std::move(target)), component_(component) {}

    Rule rule_;
    Ring source_;
    Ring target_;
    std::size_t component_ = 0;
};

bool is_prime(std::uint64_t n);
std::vector<std::pair<std::uint64_t, int>> factor_integer(std::uint64_t n);

} // namespace lcdring
