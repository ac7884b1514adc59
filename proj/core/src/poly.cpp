#include "rootfun/poly.hpp"

#include <stdexcept>

namespace rootfun {

namespace {

void require_same_nvars(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("poly: variable count mismatch");
}

Scalar monomial_value(const Monomial& m, std::span<const Scalar> point) {
    Scalar v = point[0].field().one();
    for (std::size_t i = 0; i < m.nvars(); ++i)
        for (std::uint32_t k = 0; k < m[i]; ++k) v *= point[i];
    return v;
}

}  // namespace

Poly Poly::constant(std::size_t nvars, const Scalar& c) { return monomial(Monomial::one(nvars), c); }

Poly Poly::variable(std::size_t nvars, std::size_t index, const Field& field) {
    return monomial(Monomial::variable(nvars, index), field.one());
}

Poly Poly::monomial(const Monomial& m, const Scalar& c) {
    Poly p(m.nvars());
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

std::optional<std::uint32_t> Poly::degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.degree();
}

std::optional<Scalar> Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    require_same_nvars(nvars_, m.nvars());
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_nvars(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_nvars(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_nvars(a.nvars_, b.nvars_);
    Poly r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly operator*(const Scalar& c, const Poly& p) {
    Poly r(p.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : p.terms_) r.terms_.emplace_hint(r.terms_.end(), m, c * v);
    return r;
}

Poly Poly::operator-() const {
    Poly r(nvars_);
    for (const auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -v);
    return r;
}

Scalar Poly::evaluate(std::span<const Scalar> point) const {
    if (point.size() != nvars_)
        throw std::invalid_argument("poly: evaluation point has arity " + std::to_string(point.size()) +
                                    ", expected " + std::to_string(nvars_));
    if (terms_.empty()) return point.empty() ? Scalar() : point[0].field().zero();
    Scalar acc = terms_.begin()->second.field().zero();
    for (const auto& [m, c] : terms_) acc += c * monomial_value(m, point);
    return acc;
}

std::string Poly::to_string(std::span<const std::string> names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool negative = c.is_rational() && sgn(c.as_rational()) < 0;
        const Scalar mag = negative ? -c : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool is_const = m.degree() == 0;
        if (is_const) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += m.to_string(names);
        } else {
            out += mag.to_string() + "*" + m.to_string(names);
        }
    }
    return out;
}

Poly add(const Poly& p, const Poly& q) { return p + q; }
Poly scale(const Scalar& c, const Poly& p) { return c * p; }
Poly mul(const Poly& p, const Poly& q) { return p * q; }

Poly pow(const Poly& p, std::uint32_t k) {
    if (k == 0) {
        if (p.is_zero()) throw std::domain_error("poly: 0^0");
        return Poly::constant(p.nvars(), p.terms().begin()->second.field().one());
    }
    Poly r = p;
    for (std::uint32_t i = 1; i < k; ++i) r = r * p;
    return r;
}

Poly derivative(const Poly& p, std::size_t i) {
    Poly r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m[i] == 0) continue;
        std::vector<std::uint32_t> e(m.exponents().begin(), m.exponents().end());
        --e[i];
        r.add_term(Monomial(std::move(e)), c * c.field().from_int(m[i]));
    }
    return r;
}

Poly truncate(const Poly& p, std::uint32_t d) {
    Poly r(p.nvars());
    for (const auto& [m, c] : p.terms())
        if (m.degree() <= d) r.add_term(m, c);
    return r;
}

std::vector<std::string> default_names(std::size_t nvars) {
    if (nvars == 1) return {"x"};
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= nvars; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

DoublePoly::DoublePoly(std::size_t n, Poly body) : n_(n), body_(std::move(body)) {
    require_same_nvars(2 * n_, body_.nvars());
}

std::uint32_t DoublePoly::x_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : body_.terms()) d = std::max(d, m.partial_degree(0, n_));
    return d;
}

std::uint32_t DoublePoly::y_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : body_.terms()) d = std::max(d, m.partial_degree(n_, n_));
    return d;
}

DoublePoly& DoublePoly::operator+=(const DoublePoly& o) {
    require_same_nvars(n_, o.n_);
    body_ += o.body_;
    return *this;
}

DoublePoly& DoublePoly::operator-=(const DoublePoly& o) {
    require_same_nvars(n_, o.n_);
    body_ -= o.body_;
    return *this;
}

DoublePoly operator*(const DoublePoly& a, const DoublePoly& b) {
    require_same_nvars(a.n_, b.n_);
    return DoublePoly(a.n_, a.body_ * b.body_);
}

DoublePoly operator*(const Scalar& c, const DoublePoly& p) { return DoublePoly(p.n_, c * p.body_); }

Poly DoublePoly::diagonal() const {
    Poly r(n_);
    std::vector<std::uint32_t> e(n_);
    for (const auto& [m, c] : body_.terms()) {
        for (std::size_t i = 0; i < n_; ++i) e[i] = m[i] + m[n_ + i];
        r.add_term(Monomial(e), c);
    }
    return r;
}

Scalar DoublePoly::evaluate(std::span<const Scalar> x, std::span<const Scalar> y) const {
    if (x.size() != n_ || y.size() != n_) throw std::invalid_argument("double poly: evaluation arity mismatch");
    std::vector<Scalar> point(x.begin(), x.end());
    point.insert(point.end(), y.begin(), y.end());
    return body_.evaluate(point);
}

std::string DoublePoly::to_string(std::span<const std::string> x_names) const {
    std::vector<std::string> names(x_names.begin(), x_names.end());
    for (const auto& nm : x_names) {
        // y-names mirror x-names: x1 -> y1, x -> y, u -> u'.
        names.push_back(!nm.empty() && nm[0] == 'x' ? "y" + nm.substr(1) : nm + "'");
    }
    return body_.to_string(names);
}

DoublePoly substitute_xy(const Poly& p, Side side) {
    const std::size_t n = p.nvars();
    Poly body(2 * n);
    std::vector<std::uint32_t> e(2 * n);
    const std::size_t offset = side == Side::x ? 0 : n;
    for (const auto& [m, c] : p.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (std::size_t i = 0; i < n; ++i) e[offset + i] = m[i];
        body.add_term(Monomial(e), c);
    }
    return DoublePoly(n, std::move(body));
}

DoublePoly mul_bounded(const DoublePoly& a, const DoublePoly& b, std::uint32_t max_x, std::uint32_t max_y) {
    require_same_nvars(a.n(), b.n());
    const std::size_t n = a.n();
    Poly r(2 * n);
    for (const auto& [ma, ca] : a.body().terms()) {
        const auto ax = ma.partial_degree(0, n);
        const auto ay = ma.partial_degree(n, n);
        if (ax > max_x || ay > max_y) continue;
        for (const auto& [mb, cb] : b.body().terms()) {
            if (ax + mb.partial_degree(0, n) > max_x || ay + mb.partial_degree(n, n) > max_y) continue;
            r.add_term(ma * mb, ca * cb);
        }
    }
    return DoublePoly(n, std::move(r));
}

DoublePoly truncate_xy(const DoublePoly& p, std::uint32_t max_x, std::uint32_t max_y) {
    const std::size_t n = p.n();
    Poly r(2 * n);
    for (const auto& [m, c] : p.body().terms())
        if (m.partial_degree(0, n) <= max_x && m.partial_degree(n, n) <= max_y) r.add_term(m, c);
    return DoublePoly(n, std::move(r));
}

}  // namespace rootfun
