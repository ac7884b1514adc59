#include "rootfun/linalg.hpp"

#include <stdexcept>

namespace rootfun {

KMatrix::KMatrix(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field), entries_(rows * cols, field.zero()) {}

KMatrix KMatrix::from_rows(std::span<const KVector> rows, std::size_t cols, const Field& field) {
    KMatrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("matrix: ragged rows");
        std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + static_cast<std::ptrdiff_t>(r * cols));
    }
    return m;
}

KMatrix KMatrix::identity(std::size_t n, const Field& field) {
    KMatrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

KVector KMatrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

KVector KMatrix::col_vector(std::size_t c) const {
    KVector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

KVector KMatrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix: apply length mismatch");
    KVector out(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
        }
    return out;
}

KVector KMatrix::apply_left(std::span<const Scalar> v) const {
    if (v.size() != rows_) throw std::invalid_argument("matrix: apply_left length mismatch");
    KVector out(cols_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r) {
        if (v[r].is_zero()) continue;
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& a = (*this)(r, c);
            if (!a.is_zero()) out[c] += v[r] * a;
        }
    }
    return out;
}

bool KMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

std::vector<KVector> EchelonBasis::rows() const {
    std::vector<KVector> out;
    out.reserve(matrix.rows());
    for (std::size_t r = 0; r < matrix.rows(); ++r) out.push_back(matrix.row_vector(r));
    return out;
}

EchelonBasis row_reduce(const KMatrix& input) {
    KMatrix m = input;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t p = lead;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != lead)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(lead, k));
        const Scalar inv = m(lead, c).inverse();
        for (std::size_t k = c; k < cols; ++k)
            if (!m(lead, k).is_zero()) m(lead, k) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m(r, c).is_zero()) continue;
            const Scalar factor = m(r, c);
            for (std::size_t k = c; k < cols; ++k)
                if (!m(lead, k).is_zero()) m(r, k) -= factor * m(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    KMatrix reduced(pivots.size(), cols, m.field());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t k = 0; k < cols; ++k) reduced(r, k) = m(r, k);
    return EchelonBasis{std::move(reduced), std::move(pivots)};
}

EchelonBasis row_reduce(std::span<const KVector> rows, std::size_t cols, const Field& field) {
    return row_reduce(KMatrix::from_rows(rows, cols, field));
}

std::vector<KVector> null_space(const KMatrix& m) {
    const EchelonBasis e = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivot_cols) is_pivot[p] = true;
    std::vector<KVector> out;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        KVector v(cols, m.field().zero());
        v[c] = m.field().one();
        for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivot_cols[r]] = -e.matrix(r, c);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<KVector> annihilator_in_dual(const EchelonBasis& sub, std::size_t ambient_dim) {
    if (sub.ambient_dim() != ambient_dim) throw std::invalid_argument("annihilator: ambient dimension mismatch");
    return null_space(sub.matrix);
}

std::optional<KVector> solve_affine(std::span<const KVector> columns, std::span<const Scalar> target,
                                    const Field& field) {
    const std::size_t len = target.size();
    const std::size_t k = columns.size();
    KMatrix aug(len, k + 1, field);
    for (std::size_t j = 0; j < k; ++j) {
        if (columns[j].size() != len) throw std::invalid_argument("solve_affine: length mismatch");
        for (std::size_t i = 0; i < len; ++i) aug(i, j) = columns[j][i];
    }
    for (std::size_t i = 0; i < len; ++i) aug(i, k) = target[i];
    const EchelonBasis e = row_reduce(aug);
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == k) return std::nullopt;
    KVector coeffs(k, field.zero());
    for (std::size_t r = 0; r < e.rank(); ++r) coeffs[e.pivot_cols[r]] = e.matrix(r, k);
    return coeffs;
}

void reduce_against(const EchelonBasis& sub, KVector& v) {
    if (v.size() != sub.ambient_dim()) throw std::invalid_argument("member: length mismatch");
    for (std::size_t r = 0; r < sub.rank(); ++r) {
        const Scalar factor = v[sub.pivot_cols[r]];
        if (factor.is_zero()) continue;
        const auto row = sub.matrix.row(r);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!row[k].is_zero()) v[k] -= factor * row[k];
    }
}

bool member(const EchelonBasis& sub, std::span<const Scalar> v) {
    KVector w(v.begin(), v.end());
    reduce_against(sub, w);
    return is_zero_vector(w);
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    if (a.empty()) return Scalar();
    Scalar acc = a[0].field().zero();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
    return acc;
}

bool is_zero_vector(std::span<const Scalar> v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

bool same_span(const EchelonBasis& a, const EchelonBasis& b) {
    return a.ambient_dim() == b.ambient_dim() && a.pivot_cols == b.pivot_cols && a.matrix == b.matrix;
}

}  // namespace rootfun
