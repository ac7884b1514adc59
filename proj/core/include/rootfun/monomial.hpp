#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace rootfun {

/// x^alpha for a fixed number of variables; total degree is cached.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents);
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }
    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

    [[nodiscard]] std::size_t nvars() const noexcept { return exps_.size(); }
    [[nodiscard]] std::uint32_t degree() const noexcept { return degree_; }
    [[nodiscard]] std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    [[nodiscard]] std::span<const std::uint32_t> exponents() const noexcept { return exps_; }

    /// Degree restricted to variables [first, first + count).
    [[nodiscard]] std::uint32_t partial_degree(std::size_t first, std::size_t count) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

    /// Product notation over the given names, e.g. "x1^2*x2"; "1" for the constant.
    [[nodiscard]] std::string to_string(std::span<const std::string> names) const;

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Graded lexicographic order with x1 > x2 > ... > xn.
/// Returns true when a is strictly greater than b.
[[nodiscard]] bool grlex_greater(const Monomial& a, const Monomial& b) noexcept;

/// Map ordering for polynomial terms: leading (grlex-largest) monomial first.
struct DescendingGrlex {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grlex_greater(a, b); }
};

/// All monomials of total degree <= bound, listed by ascending degree and, within
/// a degree, with x1 > x2 > ... > xn lexicographically (1, x1, x2, x1^2, x1*x2, x2^2, ...).
class MonomialBasis {
public:
    MonomialBasis(std::size_t nvars, std::uint32_t bound);

    [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
    [[nodiscard]] std::uint32_t bound() const noexcept { return bound_; }
    [[nodiscard]] std::size_t size() const noexcept { return monomials_.size(); }
    [[nodiscard]] const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
    [[nodiscard]] const std::vector<Monomial>& monomials() const& noexcept { return monomials_; }
    void monomials() && = delete;

    /// Position of m, or npos when deg(m) > bound.
    [[nodiscard]] std::size_t index(const Monomial& m) const;
    [[nodiscard]] bool contains(const Monomial& m) const { return index(m) != npos; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    friend bool operator==(const MonomialBasis& a, const MonomialBasis& b) {
        return a.nvars_ == b.nvars_ && a.bound_ == b.bound_;
    }

private:
    std::size_t nvars_;
    std::uint32_t bound_;
    std::vector<Monomial> monomials_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

using BasisPtr = std::shared_ptr<const MonomialBasis>;

[[nodiscard]] BasisPtr monomial_basis(std::size_t nvars, std::uint32_t bound);

/// C(n + k, n), the number of monomials of degree <= k in n variables.
[[nodiscard]] std::uint64_t bounded_monomial_count(std::size_t nvars, std::uint32_t bound);

}  // namespace rootfun
