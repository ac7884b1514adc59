#pragma once

#include "rootfun/poly.hpp"
#include "rootfun/system.hpp"

#include <vector>

namespace rootfun {

/// n x n grid of divided differences; entry (j, i) = nabla_j f_i
/// (row = substitution step j, column = polynomial i).
class BezoutMatrix {
public:
    BezoutMatrix(std::size_t n, std::vector<DoublePoly> entries);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] const DoublePoly& operator()(std::size_t j, std::size_t i) const { return entries_[j * n_ + i]; }

private:
    std::size_t n_;
    std::vector<DoublePoly> entries_;
};

/// nabla_j h(x, y) = [h(y_1..y_{j-1}, x_j..x_n) - h(y_1..y_j, x_{j+1}..x_n)] / (x_j - y_j),
/// with j zero-based. The quotient is computed by synthetic division in x_j;
/// a nonzero remainder throws std::logic_error.
[[nodiscard]] DoublePoly divided_difference(const Poly& h, std::size_t j);

[[nodiscard]] BezoutMatrix bezout_matrix(const PolySystem& sys);

/// det of the Bezout matrix, total degree <= delta_f.
[[nodiscard]] DoublePoly bezout_det(const PolySystem& sys);

/// det of the (n+1) x (n+1) bordered matrix
///   | nabla f(x,y)   nabla g(x,y) |
///   | f(x)           g(x)         |
/// Linear in g; bordered_det(sys, 1) == bezout_det(sys).
[[nodiscard]] DoublePoly bordered_det(const PolySystem& sys, const Poly& g);

/// Determinant of a square matrix of DoublePoly entries by Laplace expansion
/// along rows with minors memoized over column subsets (division free).
[[nodiscard]] DoublePoly determinant(const std::vector<std::vector<DoublePoly>>& rows);

/// det(d f_i / d x_j), the Jacobian determinant.
[[nodiscard]] Poly jacobian_det(const PolySystem& sys);

/// Bordered Bezoutian with det(nabla f) and the n cofactors of the bordering
/// column computed once, so bordered(g) costs n + 1 polynomial products.
class BorderedBezoutian {
public:
    explicit BorderedBezoutian(const PolySystem& sys);

    [[nodiscard]] const BezoutMatrix& matrix() const noexcept { return matrix_; }
    [[nodiscard]] const DoublePoly& det() const noexcept { return det_; }
    /// Signed cofactor of the bordering-column entry in row j (j < n).
    [[nodiscard]] const DoublePoly& cofactor(std::size_t j) const { return cofactors_[j]; }

    [[nodiscard]] DoublePoly bordered(const Poly& g) const;
    /// Same as truncate_xy(bordered(g), max_x, max_y) without forming the
    /// discarded terms.
    [[nodiscard]] DoublePoly bordered_bounded(const Poly& g, std::uint32_t max_x, std::uint32_t max_y) const;

private:
    std::size_t n_;
    BezoutMatrix matrix_;
    DoublePoly det_;
    std::vector<DoublePoly> cofactors_;
};

}  // namespace rootfun
