#pragma once

#include "rootfun/monomial.hpp"
#include "rootfun/scalar.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rootfun {

/// Sparse multivariate polynomial with exact coefficients. No stored term has a
/// zero coefficient; terms iterate leading monomial first (graded lex).
class Poly {
public:
    using Terms = std::map<Monomial, Scalar, DescendingGrlex>;

    explicit Poly(std::size_t nvars = 1) : nvars_(nvars) {}
    static Poly constant(std::size_t nvars, const Scalar& c);
    static Poly variable(std::size_t nvars, std::size_t index, const Field& field);
    static Poly monomial(const Monomial& m, const Scalar& c);

    [[nodiscard]] std::size_t nvars() const noexcept { return nvars_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    /// Total degree; empty for the zero polynomial.
    [[nodiscard]] std::optional<std::uint32_t> degree() const noexcept;
    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    /// Coefficient of m, or nullopt if m is absent.
    [[nodiscard]] std::optional<Scalar> coefficient(const Monomial& m) const;

    /// Adds c*m in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const Scalar& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& c, const Poly& p);
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

    /// Throws std::invalid_argument when the point has the wrong arity.
    [[nodiscard]] Scalar evaluate(std::span<const Scalar> point) const;

    /// Human-readable form, leading term first: "x1^2*x2 - 3*x1 + 1".
    [[nodiscard]] std::string to_string(std::span<const std::string> names) const;

private:
    std::size_t nvars_;
    Terms terms_;
};

[[nodiscard]] Poly add(const Poly& p, const Poly& q);
[[nodiscard]] Poly scale(const Scalar& c, const Poly& p);
[[nodiscard]] Poly mul(const Poly& p, const Poly& q);
[[nodiscard]] Poly pow(const Poly& p, std::uint32_t k);

/// d p / d x_i.
[[nodiscard]] Poly derivative(const Poly& p, std::size_t i);

/// Keeps exactly the terms of total degree <= d.
[[nodiscard]] Poly truncate(const Poly& p, std::uint32_t d);

/// Generic names x1..xn (or "x" when n == 1).
[[nodiscard]] std::vector<std::string> default_names(std::size_t nvars);

/// Polynomial in doubled variables (x1..xn, y1..yn). Stored as a 2n-variable
/// Poly whose first n slots are the x-block.
class DoublePoly {
public:
    explicit DoublePoly(std::size_t n = 1) : n_(n), body_(2 * n) {}
    DoublePoly(std::size_t n, Poly body);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] const Poly& body() const noexcept { return body_; }
    [[nodiscard]] bool is_zero() const noexcept { return body_.is_zero(); }
    [[nodiscard]] std::optional<std::uint32_t> degree() const noexcept { return body_.degree(); }
    /// Largest x-block (resp. y-block) degree over the terms; 0 for zero.
    [[nodiscard]] std::uint32_t x_degree() const;
    [[nodiscard]] std::uint32_t y_degree() const;

    DoublePoly& operator+=(const DoublePoly& o);
    DoublePoly& operator-=(const DoublePoly& o);
    friend DoublePoly operator+(DoublePoly a, const DoublePoly& b) { return a += b; }
    friend DoublePoly operator-(DoublePoly a, const DoublePoly& b) { return a -= b; }
    friend DoublePoly operator*(const DoublePoly& a, const DoublePoly& b);
    friend DoublePoly operator*(const Scalar& c, const DoublePoly& p);
    friend bool operator==(const DoublePoly& a, const DoublePoly& b) = default;

    /// Restriction to the diagonal y := x.
    [[nodiscard]] Poly diagonal() const;
    [[nodiscard]] Scalar evaluate(std::span<const Scalar> x, std::span<const Scalar> y) const;

    [[nodiscard]] std::string to_string(std::span<const std::string> x_names) const;

private:
    std::size_t n_;
    Poly body_;
};

enum class Side { x, y };

/// Embeds p(x) into the doubled ring as p(x) or p(y).
[[nodiscard]] DoublePoly substitute_xy(const Poly& p, Side side);

/// Product that drops every term whose x-block degree exceeds max_x or whose
/// y-block degree exceeds max_y. Both degrees only grow under multiplication,
/// so this equals truncating the full product.
[[nodiscard]] DoublePoly mul_bounded(const DoublePoly& a, const DoublePoly& b, std::uint32_t max_x,
                                     std::uint32_t max_y);

/// Drops terms with x-degree > max_x or y-degree > max_y.
[[nodiscard]] DoublePoly truncate_xy(const DoublePoly& p, std::uint32_t max_x, std::uint32_t max_y);

}  // namespace rootfun
