#include "lcdring/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "engine.hpp"

namespace lcdring {

namespace {

void require_same_ring(const Ring& a, const Ring& b) {
    if (a != b) fail(ErrorCode::RingMismatch, "matrices belong to different rings");
}

void require_square(const RingMatrix& a) {
    if (a.rows() != a.cols()) fail(ErrorCode::ShapeMismatch, "square matrix required");
}

} // namespace

RingMatrix::RingMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) fail(ErrorCode::ShapeMismatch, "matrix data does not match its shape");
    for (auto x : data_)
        if (x >= ring_.cardinality()) fail(ErrorCode::RingMismatch, "matrix entry outside the ring");
}

RingMatrix RingMatrix::from_rows(Ring ring, std::size_t cols, const std::vector<RingVector>& rows) {
    std::vector<Elem> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) fail(ErrorCode::ShapeMismatch, "row width does not match the column count");
        data.insert(data.end(), r.begin(), r.end());
    }
    return RingMatrix(std::move(ring), rows.size(), cols, std::move(data));
}

RingMatrix RingMatrix::identity(Ring ring, std::size_t k) {
    RingMatrix out(ring, k, k);
    const Elem one = ring.one();
    for (std::size_t i = 0; i < k; ++i) out(i, i) = one;
    return out;
}

std::vector<RingVector> RingMatrix::row_vectors() const {
    std::vector<RingVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
    return out;
}

void RingMatrix::append_row(std::span<const Elem> r) {
    if (r.size() != cols_) fail(ErrorCode::ShapeMismatch, "appended row has the wrong width");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

void RingMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

bool RingMatrix::is_zero() const { return is_zero_vector(data_); }

// ---------------------------------------------------------------------------

RingMatrix transpose(const RingMatrix& a) {
    RingMatrix out(a.ring(), a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
    return out;
}

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.cols() != b.rows()) fail(ErrorCode::ShapeMismatch, "inner dimensions differ");
    const Ring& ring = a.ring();
    RingMatrix out(ring, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const Elem x = a(i, t);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(t, j) != 0) out(i, j) = ring.add(out(i, j), ring.mul(x, b(t, j)));
        }
    return out;
}

RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::ShapeMismatch, "shapes differ");
    RingMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.ring().add(a(i, j), b(i, j));
    return out;
}

RingMatrix mat_sub(const RingMatrix& a, const RingMatrix& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::ShapeMismatch, "shapes differ");
    RingMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.ring().sub(a(i, j), b(i, j));
    return out;
}

RingMatrix map_entries(const RingMatrix& a, const Epimorphism& f) {
    require_same_ring(a.ring(), f.source());
    RingMatrix out(f.target(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.apply(a(i, j));
    return out;
}

RingMatrix lift_entries(const RingMatrix& a, const Epimorphism& f) {
    require_same_ring(a.ring(), f.target());
    RingMatrix out(f.source(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = f.preimage(a(i, j));
    return out;
}

RingMatrix residue_matrix(const RingMatrix& a) {
    RingMatrix out(a.ring().residue_field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a.ring().residue(a(i, j));
    return out;
}

RingVector vec_mat(std::span<const Elem> v, const RingMatrix& m) {
    if (v.size() != m.rows()) fail(ErrorCode::ShapeMismatch, "vector length does not match the matrix");
    const Ring& ring = m.ring();
    RingVector out(m.cols(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) out[j] = ring.add(out[j], ring.mul(v[i], m(i, j)));
    }
    return out;
}

Elem dot(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b) {
    if (a.size() != b.size()) fail(ErrorCode::ShapeMismatch, "vectors have different lengths");
    Elem acc = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] != 0 && b[j] != 0) acc = ring.add(acc, ring.mul(a[j], b[j]));
    return acc;
}

bool is_zero_vector(std::span<const Elem> v) {
    return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

RingMatrix component_matrix(const RingMatrix& a, std::size_t j) {
    return map_entries(a, Epimorphism::component_projection(a.ring(), j));
}

RingMatrix compose_matrices(const Ring& composite, const std::vector<RingMatrix>& parts) {
    if (parts.size() != composite.component_count())
        fail(ErrorCode::ShapeMismatch, "component count does not match the composite ring");
    if (composite.is_local()) {
        require_same_ring(parts[0].ring(), composite);
        return parts[0];
    }
    std::size_t rows = 0;
    const std::size_t cols = parts.empty() ? 0 : parts[0].cols();
    for (std::size_t j = 0; j < parts.size(); ++j) {
        require_same_ring(parts[j].ring(), composite.component(j));
        if (parts[j].cols() != cols) fail(ErrorCode::ShapeMismatch, "component matrices differ in width");
        rows = std::max(rows, parts[j].rows());
    }
    RingMatrix out(composite, rows, cols);
    std::vector<Elem> buf(parts.size());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            for (std::size_t j = 0; j < parts.size(); ++j) buf[j] = r < parts[j].rows() ? parts[j](r, c) : 0;
            out(r, c) = composite.compose(buf);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Determinants

namespace {

Elem cofactor_det(const Ring& ring, const std::vector<Elem>& a, std::size_t k) {
    if (k == 0) return ring.one();
    if (k == 1) return a[0];
    if (k == 2) return ring.sub(ring.mul(a[0], a[3]), ring.mul(a[1], a[2]));
    Elem acc = 0;
    std::vector<Elem> minor((k - 1) * (k - 1));
    for (std::size_t c = 0; c < k; ++c) {
        if (a[c] == 0) continue;
        std::size_t t = 0;
        for (std::size_t r = 1; r < k; ++r)
            for (std::size_t cc = 0; cc < k; ++cc)
                if (cc != c) minor[t++] = a[r * k + cc];
        const Elem term = ring.mul(a[c], cofactor_det(ring, minor, k - 1));
        acc = (c % 2 == 0) ? ring.add(acc, term) : ring.sub(acc, term);
    }
    return acc;
}

// Berkowitz: characteristic polynomial without divisions; det = (-1)^k c_k.
Elem berkowitz_det(const RingMatrix& a) {
    const Ring& ring = a.ring();
    const std::size_t n = a.rows();
    std::vector<Elem> poly{ring.one(), ring.neg(a(0, 0))};
    for (std::size_t r = 1; r < n; ++r) {
        // Leading principal block of size r, column/row vectors.
        std::vector<Elem> col(r), rowv(r);
        for (std::size_t i = 0; i < r; ++i) {
            col[i] = a(i, r);
            rowv[i] = a(r, i);
        }
        // Toeplitz column: 1, -a_rr, -R·C, -R·A·C, ...
        std::vector<Elem> t(r + 2);
        t[0] = ring.one();
        t[1] = ring.neg(a(r, r));
        std::vector<Elem> v = col;
        for (std::size_t k = 2; k < r + 2; ++k) {
            Elem s = 0;
            for (std::size_t i = 0; i < r; ++i) s = ring.add(s, ring.mul(rowv[i], v[i]));
            t[k] = ring.neg(s);
            std::vector<Elem> nv(r, 0);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j)
                    if (a(i, j) != 0 && v[j] != 0) nv[i] = ring.add(nv[i], ring.mul(a(i, j), v[j]));
            v = std::move(nv);
        }
        std::vector<Elem> next(r + 2, 0);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j)
                next[i] = ring.add(next[i], ring.mul(t[i - j], poly[j]));
        poly = std::move(next);
    }
    const Elem cn = poly[n];
    return n % 2 == 0 ? cn : ring.neg(cn);
}

} // namespace

Elem det(const RingMatrix& a) {
    require_square(a);
    if (a.rows() <= 6) return cofactor_det(a.ring(), a.data(), a.rows());
    return berkowitz_det(a);
}

bool is_nonsingular(const RingMatrix& a) {
    require_square(a);
    const Ring& ring = a.ring();
    if (ring.kind() == RingKind::Composite) {
        for (std::size_t j = 0; j < ring.component_count(); ++j)
            if (!is_nonsingular(component_matrix(a, j))) return false;
        return true;
    }
    return engine::chain_echelon(residue_matrix(a), false).rank() == a.rows();
}

// ---------------------------------------------------------------------------
// Kernels and solving

namespace {

RingMatrix chain_left_kernel(const RingMatrix& m) {
    const Ring& ring = m.ring();
    const auto e = engine::chain_echelon(m, true);
    const RingMatrix& t = *e.transform;
    RingMatrix out(ring, 0, m.rows());
    for (std::size_t i = 0; i < e.rank(); ++i) {
        if (e.valuations[i] == 0) continue;
        const Elem f = ring.theta_pow(ring.s() - e.valuations[i]);
        out.append_row(engine::scale(ring, f, t.row(i)));
    }
    for (std::size_t i = e.rank(); i < m.rows(); ++i) out.append_row(t.row(i));
    return out;
}

std::optional<RingVector> chain_solve_left(const RingMatrix& m, std::span<const Elem> target) {
    const Ring& ring = m.ring();
    const auto e = engine::chain_echelon(m, true);
    const auto z = engine::chain_solve(e, target);
    if (!z) return std::nullopt;
    RingVector y(m.rows(), 0);
    for (std::size_t i = 0; i < z->size(); ++i) {
        if ((*z)[i] == 0) continue;
        for (std::size_t c = 0; c < m.rows(); ++c)
            y[c] = ring.add(y[c], ring.mul((*z)[i], (*e.transform)(i, c)));
    }
    return y;
}

} // namespace

RingMatrix left_kernel(const RingMatrix& m) {
    const Ring& ring = m.ring();
    switch (ring.kind()) {
    case RingKind::Chain: return chain_left_kernel(m);
    case RingKind::LocalAlgebra: return engine::algebra_left_kernel(m);
    case RingKind::Composite: {
        std::vector<RingMatrix> parts;
        for (std::size_t j = 0; j < ring.component_count(); ++j) parts.push_back(left_kernel(component_matrix(m, j)));
        return compose_matrices(ring, parts);
    }
    }
    return {};
}

RingMatrix kernel(const RingMatrix& a) { return left_kernel(transpose(a)); }

std::optional<RingVector> solve_left(const RingMatrix& m, std::span<const Elem> target) {
    if (target.size() != m.cols()) fail(ErrorCode::ShapeMismatch, "target length does not match the matrix");
    const Ring& ring = m.ring();
    if (m.rows() == 0) {
        if (!is_zero_vector(target)) return std::nullopt;
        return RingVector{};
    }
    switch (ring.kind()) {
    case RingKind::Chain: return chain_solve_left(m, target);
    case RingKind::LocalAlgebra: return engine::algebra_solve_left(m, target);
    case RingKind::Composite: {
        const std::size_t u = ring.component_count();
        std::vector<RingVector> parts;
        for (std::size_t j = 0; j < u; ++j) {
            const auto f = Epimorphism::component_projection(ring, j);
            RingVector t(target.size());
            for (std::size_t c = 0; c < t.size(); ++c) t[c] = f.apply(target[c]);
            auto y = solve_left(component_matrix(m, j), t);
            if (!y) return std::nullopt;
            parts.push_back(std::move(*y));
        }
        RingVector y(m.rows());
        std::vector<Elem> buf(u);
        for (std::size_t i = 0; i < y.size(); ++i) {
            for (std::size_t j = 0; j < u; ++j) buf[j] = parts[j][i];
            y[i] = ring.compose(buf);
        }
        return y;
    }
    }
    return std::nullopt;
}

std::optional<RingMatrix> right_inverse(const RingMatrix& a) {
    if (a.rows() > a.cols()) return std::nullopt;
    const Ring& ring = a.ring();
    const RingMatrix at = transpose(a);
    RingMatrix out(ring, a.cols(), a.rows());
    RingVector e(a.rows(), 0);
    for (std::size_t j = 0; j < a.rows(); ++j) {
        std::fill(e.begin(), e.end(), 0);
        e[j] = ring.one();
        const auto b = solve_left(at, e);
        if (!b) return std::nullopt;
        for (std::size_t i = 0; i < a.cols(); ++i) out(i, j) = (*b)[i];
    }
    return out;
}

std::optional<RingMatrix> inverse(const RingMatrix& a) {
    require_square(a);
    return right_inverse(a);
}

// ---------------------------------------------------------------------------
// Standard form

StandardForm standard_form(const RingMatrix& g) {
    const Ring& ring = g.ring();
    StandardForm out;
    switch (ring.kind()) {
    case RingKind::Chain: {
        const auto e = engine::chain_echelon(g, false);
        out.reduced = RingMatrix(ring, 0, g.cols());
        out.type_profile.assign(static_cast<std::size_t>(ring.s()), 0);
        for (std::size_t i = 0; i < e.rank(); ++i) {
            out.reduced.append_row(e.reduced.row(i));
            out.pivots.push_back({i, e.pivot_cols[i], e.valuations[i]});
            ++out.type_profile[static_cast<std::size_t>(e.valuations[i])];
        }
        std::vector<bool> seen(g.cols(), false);
        for (auto c : e.pivot_cols) {
            out.permutation.push_back(c);
            seen[c] = true;
        }
        for (std::size_t c = 0; c < g.cols(); ++c)
            if (!seen[c]) out.permutation.push_back(c);
        break;
    }
    case RingKind::LocalAlgebra: {
        const auto span = engine::algebra_span(ring, g.cols(), g.row_vectors());
        out.reduced = RingMatrix::from_rows(ring, g.cols(), span.minimal_generators);
        for (std::size_t i = 0; i < out.reduced.rows(); ++i) {
            const auto r = out.reduced.row(i);
            const auto it = std::find_if(r.begin(), r.end(), [](Elem x) { return x != 0; });
            out.pivots.push_back({i, static_cast<std::size_t>(it - r.begin()), 0});
        }
        out.permutation.resize(g.cols());
        std::iota(out.permutation.begin(), out.permutation.end(), std::size_t{0});
        break;
    }
    case RingKind::Composite: {
        std::vector<RingMatrix> parts;
        for (std::size_t j = 0; j < ring.component_count(); ++j) {
            out.components.push_back(standard_form(component_matrix(g, j)));
            parts.push_back(out.components.back().reduced);
        }
        out.reduced = compose_matrices(ring, parts);
        out.permutation.resize(g.cols());
        std::iota(out.permutation.begin(), out.permutation.end(), std::size_t{0});
        break;
    }
    }
    return out;
}

} // namespace lcdring
