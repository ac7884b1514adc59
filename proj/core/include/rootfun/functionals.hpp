#pragma once

#include "rootfun/bezoutian.hpp"
#include "rootfun/linalg.hpp"
#include "rootfun/system.hpp"

#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace rootfun {

/// Coefficients of the terms of p with degree <= basis.bound(), in basis order.
/// Higher-degree terms are dropped.
[[nodiscard]] KVector coordinates(const Poly& p, const MonomialBasis& basis, const Field& field);
/// Inverse of coordinates().
[[nodiscard]] Poly from_coordinates(std::span<const Scalar> coords, const MonomialBasis& basis);

/// A linear functional on polynomials of degree <= basis.bound(), stored as its
/// values on the basis monomials. Outside that space it acts as zero.
struct BoundedFunctional {
    BasisPtr basis;
    KVector values;

    [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
    [[nodiscard]] bool is_zero() const { return is_zero_vector(values); }
    [[nodiscard]] const Scalar& operator[](const Monomial& m) const { return values.at(basis->index(m)); }

    static BoundedFunctional zero(BasisPtr basis, const Field& field);
    /// 1 at m, 0 elsewhere.
    static BoundedFunctional coordinate(BasisPtr basis, const Monomial& m, const Field& field);

    friend bool operator==(const BoundedFunctional& a, const BoundedFunctional& b) {
        return *a.basis == *b.basis && a.values == b.values;
    }
};

[[nodiscard]] BoundedFunctional operator+(const BoundedFunctional& a, const BoundedFunctional& b);
[[nodiscard]] BoundedFunctional operator*(const Scalar& c, const BoundedFunctional& l);

/// l(p), with terms of p above the basis bound contributing zero.
[[nodiscard]] Scalar apply(const BoundedFunctional& l, const Poly& p);

/// Writes q = sum_beta y^beta c_beta(x) and returns sum_beta l(x^beta) c_beta(x);
/// y-monomials above the basis bound contribute zero.
[[nodiscard]] Poly apply_y(const BoundedFunctional& l, const DoublePoly& q);

/// l annihilates the truncated ideal (f)^{<= bound} iff
/// l(f_i x^alpha) == 0 for all i and |alpha| <= bound - deg f_i.
[[nodiscard]] bool annihilates_truncated_ideal(const BoundedFunctional& l, const PolySystem& sys);

/// D x D matrix of the restricted operator [l]. Column alpha holds the
/// coordinates of truncate(apply_y(l, bordered_det(f, x^alpha)), delta_f).
struct ExtensionOperator {
    KMatrix matrix;
    friend bool operator==(const ExtensionOperator&, const ExtensionOperator&) = default;
};

/// Per-system data shared by every extension operator: the bordered Bezoutian
/// and, for each basis monomial x^alpha, the terms of bordered_det(f, x^alpha)
/// with x- and y-degree <= delta_f. Operators are cached by functional values;
/// the cache is safe for concurrent use.
class ExtensionContext {
public:
    explicit ExtensionContext(const PolySystem& sys, unsigned threads = 1);

    [[nodiscard]] const PolySystem& system() const noexcept { return sys_; }
    [[nodiscard]] const BasisPtr& basis() const noexcept { return sys_.basis(); }
    [[nodiscard]] const BorderedBezoutian& bezoutian() const noexcept { return bezoutian_; }

    /// Builds [l] without consulting the cache.
    [[nodiscard]] ExtensionOperator build_operator(const BoundedFunctional& l) const;
    /// Cached [l].
    [[nodiscard]] std::shared_ptr<const ExtensionOperator> operator_of(const BoundedFunctional& l) const;
    [[nodiscard]] std::size_t cache_size() const;

private:
    struct Entry {
        std::size_t x_index;
        std::size_t y_index;
        Scalar coeff;
    };

    PolySystem sys_;
    BorderedBezoutian bezoutian_;
    std::vector<std::vector<Entry>> columns_;
    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<std::string, std::shared_ptr<const ExtensionOperator>> cache_;
};

[[nodiscard]] ExtensionOperator extension_operator(const BoundedFunctional& l, const PolySystem& sys);

/// l1 * l2 given [l2]: the row vector of l1 times the operator matrix.
[[nodiscard]] BoundedFunctional extend(const BoundedFunctional& l1, const ExtensionOperator& op2);

/// l1 * l2 with [l2] taken from the context cache.
[[nodiscard]] BoundedFunctional product(const BoundedFunctional& l1, const BoundedFunctional& l2,
                                        const ExtensionContext& ctx);

/// l^k by repeated extension with [l]; k >= 1.
[[nodiscard]] BoundedFunctional power(const BoundedFunctional& l, std::uint32_t k, const ExtensionContext& ctx);
[[nodiscard]] BoundedFunctional power(const BoundedFunctional& l, std::uint32_t k, const PolySystem& sys);

}  // namespace rootfun
