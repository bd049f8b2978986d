#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lcdring/ring.hpp"

namespace lcdring {

using RingVector = std::vector<Elem>;

/// Dense row-major matrix over a Ring.
class RingMatrix {
public:
    RingMatrix() = default;
    RingMatrix(Ring ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    RingMatrix(Ring ring, std::size_t rows, std::size_t cols, std::vector<Elem> data);
    /// Builds from rows; every row must have `cols` entries.
    static RingMatrix from_rows(Ring ring, std::size_t cols, const std::vector<RingVector>& rows);
    static RingMatrix identity(Ring ring, std::size_t k);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    RingVector row_vector(std::size_t r) const { return {row(r).begin(), row(r).end()}; }
    std::vector<RingVector> row_vectors() const;

    const std::vector<Elem>& data() const noexcept { return data_; }

    void append_row(std::span<const Elem> r);
    void swap_rows(std::size_t a, std::size_t b);
    bool is_zero() const;

    friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
        return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    Ring ring_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

RingMatrix transpose(const RingMatrix& a);
RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_add(const RingMatrix& a, const RingMatrix& b);
RingMatrix mat_sub(const RingMatrix& a, const RingMatrix& b);
RingMatrix map_entries(const RingMatrix& a, const Epimorphism& f);
/// Entrywise canonical preimage along f (target -> source).
RingMatrix lift_entries(const RingMatrix& a, const Epimorphism& f);
/// Entrywise projection onto the residue field of a local ring.
RingMatrix residue_matrix(const RingMatrix& a);

/// v·M for a row vector v.
RingVector vec_mat(std::span<const Elem> v, const RingMatrix& m);
Elem dot(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b);
bool is_zero_vector(std::span<const Elem> v);

/// Component matrices under the CRT split, and the inverse operation. Rows of
/// shorter parts are padded with zeros when composing.
RingMatrix component_matrix(const RingMatrix& a, std::size_t j);
RingMatrix compose_matrices(const Ring& composite, const std::vector<RingMatrix>& parts);

/// Cofactor expansion for k <= 6, division-free Berkowitz above.
Elem det(const RingMatrix& a);
/// det(a) is a unit. Local rings decide through the residue field.
bool is_nonsingular(const RingMatrix& a);

/// Rows generate {x : A·x^T = 0}.
RingMatrix kernel(const RingMatrix& a);
/// Rows generate {y : y·M = 0}.
RingMatrix left_kernel(const RingMatrix& m);
/// Some y with y·M = target, or nullopt. Free parameters are set to zero.
std::optional<RingVector> solve_left(const RingMatrix& m, std::span<const Elem> target);
/// B with A·B = I when A is full-row-rank.
std::optional<RingMatrix> right_inverse(const RingMatrix& a);
std::optional<RingMatrix> inverse(const RingMatrix& a);

struct Pivot {
    std::size_t row;
    std::size_t col;
    int valuation;
};

/// Row-equivalent reduced generator. For chain rings the pivots carry
/// theta-adic valuations in nondecreasing order and `type_profile[v]` counts
/// pivots of valuation v. Composite inputs are reduced per component.
struct StandardForm {
    std::vector<Pivot> pivots;
    RingMatrix reduced;
    std::vector<std::size_t> permutation;
    std::vector<std::size_t> type_profile;
    std::vector<StandardForm> components;
};

StandardForm standard_form(const RingMatrix& g);

} // namespace lcdring
