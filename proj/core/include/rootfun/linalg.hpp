#pragma once

#include "rootfun/scalar.hpp"

#include <optional>
#include <span>
#include <vector>

namespace rootfun {

using KVector = std::vector<Scalar>;

/// Dense row-major matrix over a field.
class KMatrix {
public:
    KMatrix(std::size_t rows, std::size_t cols, const Field& field);
    /// Every row must have length `cols`.
    static KMatrix from_rows(std::span<const KVector> rows, std::size_t cols, const Field& field);
    static KMatrix identity(std::size_t n, const Field& field);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const Field& field() const noexcept { return field_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    [[nodiscard]] std::span<const Scalar> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    [[nodiscard]] KVector row_vector(std::size_t r) const;
    [[nodiscard]] KVector col_vector(std::size_t c) const;

    /// m * v (v has length cols).
    [[nodiscard]] KVector apply(std::span<const Scalar> v) const;
    /// v^T * m (v has length rows).
    [[nodiscard]] KVector apply_left(std::span<const Scalar> v) const;

    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const KMatrix&, const KMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    Field field_;
    std::vector<Scalar> entries_;
};

/// Reduced row echelon form: only the nonzero rows are kept, every pivot is 1
/// and pivot columns are zero outside their pivot row.
struct EchelonBasis {
    KMatrix matrix;
    std::vector<std::size_t> pivot_cols;

    [[nodiscard]] std::size_t rank() const noexcept { return pivot_cols.size(); }
    [[nodiscard]] std::size_t ambient_dim() const noexcept { return matrix.cols(); }
    [[nodiscard]] std::vector<KVector> rows() const;

    friend bool operator==(const EchelonBasis&, const EchelonBasis&) = default;
};

[[nodiscard]] EchelonBasis row_reduce(const KMatrix& m);
[[nodiscard]] EchelonBasis row_reduce(std::span<const KVector> rows, std::size_t cols, const Field& field);

/// Basis of {v : m v = 0}; one vector per non-pivot column c with v[c] = 1,
/// ordered by c.
[[nodiscard]] std::vector<KVector> null_space(const KMatrix& m);

/// Functionals (coordinate vectors in the dual basis) vanishing on rowspace(sub).
[[nodiscard]] std::vector<KVector> annihilator_in_dual(const EchelonBasis& sub, std::size_t ambient_dim);

/// Coefficients c with sum c_i * columns[i] == target, or nullopt when target is
/// outside the span. Free coefficients are set to zero.
[[nodiscard]] std::optional<KVector> solve_affine(std::span<const KVector> columns, std::span<const Scalar> target,
                                                  const Field& field);

/// True iff v lies in rowspace(sub).
[[nodiscard]] bool member(const EchelonBasis& sub, std::span<const Scalar> v);

/// Reduces v against sub in place; the result is zero iff v was a member.
void reduce_against(const EchelonBasis& sub, KVector& v);

[[nodiscard]] Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
[[nodiscard]] bool is_zero_vector(std::span<const Scalar> v);

/// Both bases span the same subspace (reduced echelon forms are unique).
[[nodiscard]] bool same_span(const EchelonBasis& a, const EchelonBasis& b);

}  // namespace rootfun
