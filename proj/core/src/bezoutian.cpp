#include "rootfun/bezoutian.hpp"

#include <bit>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace rootfun {

BezoutMatrix::BezoutMatrix(std::size_t n, std::vector<DoublePoly> entries) : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_) throw std::invalid_argument("bezout matrix: wrong entry count");
}

namespace {

// Doubled-ring image of h with variables 0..last_y taken from the y-block and
// the rest from the x-block.
Poly mixed_substitution(const Poly& h, std::size_t y_count) {
    const std::size_t n = h.nvars();
    Poly out(2 * n);
    std::vector<std::uint32_t> e(2 * n);
    for (const auto& [m, c] : h.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t k = 0; k < n; ++k) (k < y_count ? e[n + k] : e[k]) = m[k];
        out.add_term(Monomial(e), c);
    }
    return out;
}

Monomial with_exponent(const Monomial& m, std::size_t slot, std::uint32_t value) {
    std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
    e[slot] = value;
    return Monomial(std::move(e));
}

Monomial shifted(const Monomial& m, std::size_t slot) {
    std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
    ++e[slot];
    return Monomial(std::move(e));
}

// Divides num by (x_j - y_j) treating x_j as the main variable:
// q_{e-1} = c_e + y_j * q_e from the top down, remainder c_0 + y_j * q_0.
Poly divide_by_difference(const Poly& num, std::size_t n, std::size_t j) {
    const std::size_t xs = j;
    const std::size_t ys = n + j;
    std::map<std::uint32_t, Poly, std::greater<>> by_power;
    for (const auto& [m, c] : num.terms()) {
        auto [it, _] = by_power.try_emplace(m[xs], Poly(2 * n));
        it->second.add_term(with_exponent(m, xs, 0), c);
    }
    Poly quotient(2 * n);
    if (by_power.empty()) return quotient;
    const std::uint32_t top = by_power.begin()->first;
    Poly carry(2 * n);  // q_e for the current e
    for (std::uint32_t e = top; e >= 1; --e) {
        Poly next(2 * n);
        for (const auto& [m, c] : carry.terms()) next.add_term(shifted(m, ys), c);
        if (auto it = by_power.find(e); it != by_power.end()) next += it->second;
        for (const auto& [m, c] : next.terms()) quotient.add_term(with_exponent(m, xs, e - 1), c);
        carry = std::move(next);
    }
    Poly remainder(2 * n);
    for (const auto& [m, c] : carry.terms()) remainder.add_term(shifted(m, ys), c);
    if (auto it = by_power.find(0); it != by_power.end()) remainder += it->second;
    if (!remainder.is_zero()) throw std::logic_error("divided difference: nonzero remainder");
    return quotient;
}

}  // namespace

DoublePoly divided_difference(const Poly& h, std::size_t j) {
    const std::size_t n = h.nvars();
    if (j >= n) throw std::out_of_range("divided difference: variable index out of range");
    const Poly num = mixed_substitution(h, j) - mixed_substitution(h, j + 1);
    return DoublePoly(n, divide_by_difference(num, n, j));
}

BezoutMatrix bezout_matrix(const PolySystem& sys) {
    const std::size_t n = sys.nvars();
    std::vector<DoublePoly> entries;
    entries.reserve(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) entries.push_back(divided_difference(sys[i], j));
    return BezoutMatrix(n, std::move(entries));
}

DoublePoly determinant(const std::vector<std::vector<DoublePoly>>& rows) {
    const std::size_t n = rows.size();
    if (n == 0) throw std::invalid_argument("determinant: empty matrix");
    if (n > 20) throw std::invalid_argument("determinant: matrix too large for subset memoization");
    for (const auto& r : rows)
        if (r.size() != n) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t half = rows[0][0].n();

    // Unit of the doubled ring over the entry field; an all-zero matrix has
    // determinant zero and never needs it.
    DoublePoly unit(half);
    for (const auto& r : rows)
        for (const auto& e : r)
            if (unit.is_zero() && !e.is_zero())
                unit = substitute_xy(Poly::constant(half, e.body().terms().begin()->second.field().one()), Side::x);

    // minor[S] = det of the last |S| rows restricted to the columns in S.
    std::unordered_map<std::uint32_t, DoublePoly> memo;
    auto minor = [&](auto&& self, std::uint32_t cols) -> DoublePoly {
        const auto k = static_cast<std::size_t>(std::popcount(cols));
        if (k == 0) return unit;
        if (auto it = memo.find(cols); it != memo.end()) return it->second;
        const std::size_t row = n - k;
        DoublePoly acc(half);
        std::size_t position = 0;
        for (std::size_t c = 0; c < n; ++c) {
            if ((cols & (1U << c)) == 0) continue;
            const auto& entry = rows[row][c];
            if (!entry.is_zero()) {
                DoublePoly term = entry * self(self, cols & ~(1U << c));
                if (position % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ++position;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return minor(minor, (1U << n) - 1U);
}

DoublePoly bezout_det(const PolySystem& sys) {
    const auto m = bezout_matrix(sys);
    const std::size_t n = sys.nvars();
    std::vector<std::vector<DoublePoly>> rows(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) rows[j].push_back(m(j, i));
    return determinant(rows);
}

DoublePoly bordered_det(const PolySystem& sys, const Poly& g) { return BorderedBezoutian(sys).bordered(g); }

Poly jacobian_det(const PolySystem& sys) {
    const std::size_t n = sys.nvars();
    std::vector<std::vector<DoublePoly>> rows(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) rows[j].push_back(substitute_xy(derivative(sys[i], j), Side::x));
    // The determinant lives in the x-block only; map it back to n variables.
    const DoublePoly d = determinant(rows);
    Poly out(n);
    for (const auto& [m, c] : d.body().terms()) {
        std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().begin() + static_cast<std::ptrdiff_t>(n));
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

BorderedBezoutian::BorderedBezoutian(const PolySystem& sys)
    : n_(sys.nvars()), matrix_(bezout_matrix(sys)), det_(sys.nvars()) {
    const std::size_t n = n_;
    std::vector<std::vector<DoublePoly>> top(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) top[j].push_back(matrix_(j, i));
    det_ = determinant(top);

    std::vector<DoublePoly> f_row;
    for (std::size_t i = 0; i < n; ++i) f_row.push_back(substitute_xy(sys[i], Side::x));
    // Cofactor of entry (j, n) in the bordered matrix: delete row j and the
    // bordering column; the remaining rows keep their order with f(x) last.
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<DoublePoly>> rows;
        for (std::size_t r = 0; r < n; ++r)
            if (r != j) rows.push_back(top[r]);
        rows.push_back(f_row);
        DoublePoly minor = determinant(rows);
        cofactors_.push_back((j + n) % 2 == 0 ? std::move(minor) : DoublePoly(n) - minor);
    }
}

DoublePoly BorderedBezoutian::bordered(const Poly& g) const {
    DoublePoly acc = substitute_xy(g, Side::x) * det_;
    for (std::size_t j = 0; j < n_; ++j) acc += divided_difference(g, j) * cofactors_[j];
    return acc;
}

DoublePoly BorderedBezoutian::bordered_bounded(const Poly& g, std::uint32_t max_x, std::uint32_t max_y) const {
    DoublePoly acc = mul_bounded(substitute_xy(g, Side::x), det_, max_x, max_y);
    for (std::size_t j = 0; j < n_; ++j) acc += mul_bounded(divided_difference(g, j), cofactors_[j], max_x, max_y);
    return acc;
}

}  // namespace rootfun
