#include "lcdring/code.hpp"

#include <algorithm>

#include "engine.hpp"

namespace lcdring {

LinearCode::LinearCode(Ring ring, std::size_t n, RingMatrix generators)
    : ring_(std::move(ring)), n_(n), generators_(std::move(generators)) {
    if (generators_.ring() != ring_) fail(ErrorCode::RingMismatch, "generator matrix is over a different ring");
    if (generators_.cols() != n_) fail(ErrorCode::ShapeMismatch, "generator width does not match the code length");
    build();
}

LinearCode::LinearCode(RingMatrix generators) : LinearCode(generators.ring(), generators.cols(), generators) {}

LinearCode LinearCode::zero(Ring ring, std::size_t n) {
    RingMatrix g(ring, 0, n);
    return LinearCode(std::move(ring), n, std::move(g));
}

LinearCode LinearCode::full(Ring ring, std::size_t n) {
    RingMatrix g = RingMatrix::identity(ring, n);
    return LinearCode(std::move(ring), n, std::move(g));
}

void LinearCode::build() {
    standard_ = standard_form(generators_);
    switch (ring_.kind()) {
    case RingKind::Chain: {
        rank_ = standard_.pivots.size();
        free_ = std::all_of(standard_.pivots.begin(), standard_.pivots.end(),
                            [](const Pivot& p) { return p.valuation == 0; });
        cardinality_ = 1;
        const BigInt q = ring_.residue_size();
        for (const auto& p : standard_.pivots)
            for (int e = p.valuation; e < ring_.s(); ++e) cardinality_ *= q;
        break;
    }
    case RingKind::LocalAlgebra: {
        rank_ = standard_.reduced.rows();
        const auto span = engine::algebra_span(ring_, n_, standard_.reduced.row_vectors());
        const std::size_t dim = span.space.dimension();
        free_ = dim == rank_ * (std::size_t{1} << ring_.algebra_generators());
        cardinality_ = BigInt(1) << dim;
        break;
    }
    case RingKind::Composite: {
        rank_ = 0;
        free_ = true;
        cardinality_ = 1;
        std::optional<std::size_t> common;
        for (const auto& part : crt_split_code(*this)) {
            rank_ = std::max(rank_, part.rank());
            free_ = free_ && part.is_free() && (!common || *common == part.rank());
            common = part.rank();
            cardinality_ *= part.cardinality();
        }
        break;
    }
    }
}

bool LinearCode::contains(std::span<const Elem> v) const {
    if (v.size() != n_) fail(ErrorCode::ShapeMismatch, "vector length does not match the code length");
    return solve_left(standard_.reduced, v).has_value();
}

std::vector<AdditiveGenerator> LinearCode::additive_basis() const {
    std::vector<AdditiveGenerator> out;
    switch (ring_.kind()) {
    case RingKind::Chain: {
        const int m = ring_.m();
        std::vector<std::uint64_t> coords(static_cast<std::size_t>(m), 0);
        for (const auto& p : standard_.pivots) {
            std::uint64_t order = 1;
            for (int e = p.valuation; e < ring_.s(); ++e) order *= ring_.p();
            for (int t = 0; t < m; ++t) {
                std::fill(coords.begin(), coords.end(), 0);
                coords[static_cast<std::size_t>(t)] = 1;
                out.push_back({engine::scale(ring_, ring_.from_coordinates(coords), standard_.reduced.row(p.row)), order});
            }
        }
        break;
    }
    case RingKind::LocalAlgebra: {
        const auto span = engine::algebra_span(ring_, n_, standard_.reduced.row_vectors());
        for (const auto& b : span.space.basis()) out.push_back({engine::delinearize(ring_, b, n_), 2});
        break;
    }
    case RingKind::Composite: {
        const auto parts = crt_split_code(*this);
        std::vector<Elem> buf(parts.size());
        for (std::size_t j = 0; j < parts.size(); ++j) {
            for (const auto& g : parts[j].additive_basis()) {
                RingVector v(n_);
                for (std::size_t c = 0; c < n_; ++c) {
                    std::fill(buf.begin(), buf.end(), 0);
                    buf[j] = g.vector[c];
                    v[c] = ring_.compose(buf);
                }
                out.push_back({std::move(v), g.order});
            }
        }
        break;
    }
    }
    return out;
}

// ---------------------------------------------------------------------------

Elem inner_product(const Ring& ring, std::span<const Elem> v, std::span<const Elem> w) { return dot(ring, v, w); }

LinearCode dual(const LinearCode& c) { return LinearCode(c.ring(), c.length(), kernel(c.reduced())); }

bool is_lcd(const LinearCode& c) {
    const Ring& ring = c.ring();
    if (!ring.is_local()) {
        for (const auto& part : crt_split_code(c))
            if (!is_lcd(part)) return false;
        return true;
    }
    if (!c.is_free()) return false;
    const RingMatrix& g = c.reduced();
    return is_nonsingular(mat_mul(g, transpose(g)));
}

std::optional<RingVector> hull_witness(const LinearCode& c) {
    // Hull = { yG : y·GG^T = 0 } for any generating G.
    const RingMatrix& g = c.reduced();
    const RingMatrix ker = left_kernel(mat_mul(g, transpose(g)));
    std::optional<RingVector> best;
    std::size_t best_weight = 0;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        RingVector x = vec_mat(ker.row(i), g);
        if (is_zero_vector(x)) continue;
        const auto w = static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](Elem e) { return e != 0; }));
        if (!best || w < best_weight || (w == best_weight && x < *best)) {
            best = std::move(x);
            best_weight = w;
        }
    }
    return best;
}

RingMatrix lcd_projector(const LinearCode& c) {
    const Ring& ring = c.ring();
    const std::size_t n = c.length();
    if (!ring.is_local()) {
        std::vector<RingMatrix> parts;
        for (const auto& part : crt_split_code(c)) parts.push_back(lcd_projector(part));
        return compose_matrices(ring, parts);
    }
    if (!is_lcd(c)) fail(ErrorCode::NotLcd, "projector requires an LCD code");
    const RingMatrix& g = c.reduced();
    if (g.rows() == 0) return RingMatrix(ring, n, n);
    const auto inv = inverse(mat_mul(g, transpose(g)));
    if (!inv) fail(ErrorCode::NotLcd, "G·G^T is singular");
    return mat_mul(mat_mul(transpose(g), *inv), g);
}

LinearCode crt_compose_codes(const std::vector<LinearCode>& parts) {
    if (parts.empty()) fail(ErrorCode::ShapeMismatch, "no component codes given");
    std::vector<Ring> rings;
    for (const auto& p : parts) {
        if (p.length() != parts[0].length()) fail(ErrorCode::ShapeMismatch, "component codes differ in length");
        rings.push_back(p.ring());
    }
    const Ring composite = Ring::composite(rings);
    std::vector<RingMatrix> mats(parts.size());
    for (const auto& p : parts) {
        std::size_t j = 0;
        while (composite.component(j) != p.ring()) ++j;
        mats[j] = p.generators();
    }
    return LinearCode(composite, parts[0].length(), compose_matrices(composite, mats));
}

std::vector<LinearCode> crt_split_code(const LinearCode& c) {
    const Ring& ring = c.ring();
    if (ring.is_local()) return {c};
    std::vector<LinearCode> out;
    for (std::size_t j = 0; j < ring.component_count(); ++j)
        out.emplace_back(ring.component(j), c.length(), component_matrix(c.generators(), j));
    return out;
}

bool membership(const LinearCode& c, std::span<const Elem> v) { return c.contains(v); }

bool code_equals(const LinearCode& a, const LinearCode& b) {
    if (a.ring() != b.ring()) fail(ErrorCode::RingMismatch, "codes are over different rings");
    if (a.length() != b.length()) fail(ErrorCode::ShapeMismatch, "codes have different lengths");
    if (a.cardinality() != b.cardinality()) return false;
    for (std::size_t i = 0; i < a.reduced().rows(); ++i)
        if (!b.contains(a.reduced().row(i))) return false;
    return true;
}

LinearCode project_code(const LinearCode& c, const Epimorphism& f) {
    return LinearCode(f.target(), c.length(), map_entries(c.generators(), f));
}

LinearCode lift_code(const LinearCode& c, const Epimorphism& f) {
    if (!c.is_free()) fail(ErrorCode::NotFree, "only free codes can be lifted");
    return LinearCode(f.source(), c.length(), lift_entries(c.reduced(), f));
}

} // namespace lcdring
