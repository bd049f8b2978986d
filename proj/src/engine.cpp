#include "engine.hpp"

#include <bit>

namespace lcdring::engine {

namespace {

void row_axpy(const Ring& ring, std::span<Elem> dst, Elem t, std::span<const Elem> src) {
    // dst -= t·src
    for (std::size_t c = 0; c < dst.size(); ++c)
        if (src[c] != 0) dst[c] = ring.sub(dst[c], ring.mul(t, src[c]));
}

void row_scale(const Ring& ring, std::span<Elem> row, Elem t) {
    for (auto& x : row) x = ring.mul(t, x);
}

} // namespace

ChainEchelon chain_echelon(const RingMatrix& m, bool track) {
    const Ring& ring = m.ring();
    const std::size_t k = m.rows();
    const std::size_t n = m.cols();
    const int s = ring.s();

    ChainEchelon out;
    out.reduced = m;
    if (track) out.transform = RingMatrix::identity(ring, k);
    RingMatrix& work = out.reduced;

    std::vector<bool> used(n, false);
    std::size_t r = 0;
    while (r < k) {
        int best = s;
        std::size_t bi = 0, bj = 0;
        for (std::size_t j = 0; j < n && best > 0; ++j) {
            if (used[j]) continue;
            for (std::size_t i = r; i < k; ++i) {
                const Elem e = work(i, j);
                if (e == 0) continue;
                const int v = ring.valuation(e);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                    if (v == 0) break;
                }
            }
        }
        if (best == s) break;

        work.swap_rows(bi, r);
        if (track) out.transform->swap_rows(bi, r);

        const Elem unit = ring.divide_theta(work(r, bj), best);
        const Elem uinv = ring.inverse(unit);
        row_scale(ring, work.row(r), uinv);
        if (track) row_scale(ring, out.transform->row(r), uinv);

        for (std::size_t i = 0; i < k; ++i) {
            if (i == r) continue;
            const Elem e = work(i, bj);
            if (e == 0) continue;
            Elem t;
            if (ring.valuation(e) >= best) {
                t = ring.divide_theta(e, best);
            } else {
                // Only rows above the pivot can hold smaller valuations; keep
                // the canonical remainder modulo theta^best.
                t = ring.divide_theta(ring.sub(e, ring.reduce_theta(e, best)), best);
            }
            if (t == 0) continue;
            row_axpy(ring, work.row(i), t, work.row(r));
            if (track) row_axpy(ring, out.transform->row(i), t, out.transform->row(r));
        }
        used[bj] = true;
        out.pivot_cols.push_back(bj);
        out.valuations.push_back(best);
        ++r;
    }
    return out;
}

std::optional<RingVector> chain_solve(const ChainEchelon& e, std::span<const Elem> target) {
    const Ring& ring = e.reduced.ring();
    RingVector residual(target.begin(), target.end());
    RingVector coeffs(e.rank(), 0);
    for (std::size_t i = 0; i < e.rank(); ++i) {
        const Elem x = residual[e.pivot_cols[i]];
        if (x == 0) continue;
        if (ring.valuation(x) < e.valuations[i]) return std::nullopt;
        const Elem t = ring.divide_theta(x, e.valuations[i]);
        coeffs[i] = t;
        row_axpy(ring, residual, t, e.reduced.row(i));
    }
    if (!is_zero_vector(residual)) return std::nullopt;
    return coeffs;
}

// ---------------------------------------------------------------------------

bool BitVec::is_zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t BitVec::lowest() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return bits_;
}

bool F2Eliminator::insert(BitVec v, std::size_t input_index, BitVec* relation) {
    BitVec combo(tracked_);
    if (tracked_) combo.set(input_index);
    for (std::size_t idx = 0; idx < basis_.size(); ++idx) {
        if (v.get(pivots_[idx])) {
            v ^= basis_[idx];
            if (tracked_) combo ^= combos_[idx];
        }
    }
    if (v.is_zero()) {
        if (relation && tracked_) *relation = std::move(combo);
        return false;
    }
    pivots_.push_back(v.lowest());
    basis_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    return true;
}

BitVec F2Eliminator::reduce(BitVec v, BitVec* combo) const {
    if (combo) *combo = BitVec(tracked_);
    for (std::size_t idx = 0; idx < basis_.size(); ++idx) {
        if (v.get(pivots_[idx])) {
            v ^= basis_[idx];
            if (combo && tracked_) *combo ^= combos_[idx];
        }
    }
    return v;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t algebra_dim(const Ring& ring) { return std::size_t{1} << ring.algebra_generators(); }

Elem monomial(std::size_t a) { return Elem{1} << a; }

} // namespace

BitVec linearize(const Ring& ring, std::span<const Elem> v) {
    const std::size_t d = algebra_dim(ring);
    BitVec out(v.size() * d);
    for (std::size_t j = 0; j < v.size(); ++j)
        for (std::size_t a = 0; a < d; ++a)
            if ((v[j] >> a) & 1U) out.set(j * d + a);
    return out;
}

RingVector delinearize(const Ring& ring, const BitVec& bits, std::size_t n) {
    const std::size_t d = algebra_dim(ring);
    RingVector out(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < d; ++a)
            if (bits.get(j * d + a)) out[j] |= Elem{1} << a;
    return out;
}

RingVector scale(const Ring& ring, Elem a, std::span<const Elem> v) {
    RingVector out(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) out[j] = ring.mul(a, v[j]);
    return out;
}

std::vector<RingVector> algebra_minimal_generators(const Ring& ring, std::size_t n,
                                                   const std::vector<RingVector>& f2_basis) {
    const std::size_t d = algebra_dim(ring);
    F2Eliminator span(n * d);
    for (const auto& b : f2_basis)
        for (int i = 0; i < ring.algebra_generators(); ++i)
            span.insert(linearize(ring, scale(ring, monomial(std::size_t{1} << i), b)), 0);
    std::vector<RingVector> chosen;
    for (const auto& b : f2_basis)
        if (span.insert(linearize(ring, b), 0)) chosen.push_back(b);
    return chosen;
}

AlgebraSpan algebra_span(const Ring& ring, std::size_t n, const std::vector<RingVector>& gens) {
    const std::size_t d = algebra_dim(ring);
    AlgebraSpan out{ring, n, F2Eliminator(n * d), {}};
    for (const auto& g : gens)
        for (std::size_t a = 0; a < d; ++a) out.space.insert(linearize(ring, scale(ring, monomial(a), g)), 0);
    std::vector<RingVector> basis;
    basis.reserve(out.space.dimension());
    for (const auto& b : out.space.basis()) basis.push_back(delinearize(ring, b, n));
    out.minimal_generators = algebra_minimal_generators(ring, n, basis);
    return out;
}

RingMatrix algebra_left_kernel(const RingMatrix& m) {
    const Ring& ring = m.ring();
    const std::size_t d = algebra_dim(ring);
    const std::size_t k = m.rows();
    const std::size_t n = m.cols();
    F2Eliminator elim(n * d, k * d);
    std::vector<RingVector> relations;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t a = 0; a < d; ++a) {
            BitVec rel;
            if (!elim.insert(linearize(ring, scale(ring, monomial(a), m.row(i))), i * d + a, &rel))
                relations.push_back(delinearize(ring, rel, k));
        }
    }
    return RingMatrix::from_rows(ring, k, algebra_minimal_generators(ring, k, relations));
}

std::optional<RingVector> algebra_solve_left(const RingMatrix& m, std::span<const Elem> target) {
    const Ring& ring = m.ring();
    const std::size_t d = algebra_dim(ring);
    const std::size_t k = m.rows();
    const std::size_t n = m.cols();
    F2Eliminator elim(n * d, k * d);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t a = 0; a < d; ++a) elim.insert(linearize(ring, scale(ring, monomial(a), m.row(i))), i * d + a);
    BitVec combo;
    if (!elim.reduce(linearize(ring, target), &combo).is_zero()) return std::nullopt;
    return delinearize(ring, combo, k);
}

} // namespace lcdring::engine
