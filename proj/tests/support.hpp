#pragma once

#include "rootfun/bezoutian.hpp"
#include "rootfun/functionals.hpp"
#include "rootfun/io.hpp"
#include "rootfun/oracle.hpp"
#include "rootfun/solver.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace rftest {

using namespace rootfun;

inline std::string fixture_dir() { return ROOTFUN_FIXTURE_DIR; }

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline ParsedSystem load_fixture(const std::string& name) {
    return parse_system(slurp(std::filesystem::path(fixture_dir()) / name));
}

inline PolySystem make_system(const std::vector<std::string>& polys, const Field& field = Field::rationals()) {
    const auto names = default_names(polys.size());
    std::vector<Poly> ps;
    for (const auto& p : polys) ps.push_back(parse_polynomial(p, names, field));
    return PolySystem(field, std::move(ps));
}

inline Poly P(const std::string& text, std::size_t nvars = 1, const Field& field = Field::rationals()) {
    return parse_polynomial(text, default_names(nvars), field);
}

inline Scalar q(long long num, long long den = 1) { return Field::rationals().from_int(num) / Field::rationals().from_int(den); }

inline KVector qv(std::initializer_list<long long> xs) {
    KVector v;
    for (auto x : xs) v.push_back(q(x));
    return v;
}

// Doubled-ring polynomial from text over x1..xn, y1..yn (or x, y when n = 1).
inline DoublePoly DP(const std::string& text, std::size_t n) {
    std::vector<std::string> names;
    if (n == 1) {
        names = {"x", "y"};
    } else {
        for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
        for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
    }
    return DoublePoly(n, parse_polynomial(text, names, Field::rationals()));
}

/// The six fixtures with their expected root-functional counts.
struct NamedFixture {
    std::string file;
    std::size_t roots;
};

inline const std::vector<NamedFixture>& core_fixtures() {
    static const std::vector<NamedFixture> list = {
        {"x2_minus_1.sys", 2}, {"x2.sys", 2},           {"x3.sys", 3},
        {"x1sq_x2sq.sys", 4},  {"four_points.sys", 4}, {"hyperbola_line.sys", 1},
    };
    return list;
}

inline const std::vector<std::string>& all_good_fixtures() {
    static const std::vector<std::string> list = {"x2_minus_1.sys",   "x2.sys",           "x3.sys",
                                                  "x1sq_x2sq.sys",    "four_points.sys",  "hyperbola_line.sys",
                                                  "circle_hyperbola.sys", "four_points_gf7.sys"};
    return list;
}

/// Random scalar with small numerator and denominator (or a random residue).
inline Scalar random_scalar(std::mt19937& rng, const Field& field, bool allow_zero = true) {
    while (true) {
        Scalar s;
        if (field.kind() == Field::Kind::prime) {
            s = field.from_int(std::uniform_int_distribution<long long>(0, field.prime() - 1)(rng));
        } else {
            const auto num = std::uniform_int_distribution<long long>(-9, 9)(rng);
            const auto den = std::uniform_int_distribution<long long>(1, 5)(rng);
            s = field.from_int(num) / field.from_int(den);
        }
        if (allow_zero || !s.is_zero()) return s;
    }
}

inline Poly random_poly(std::mt19937& rng, std::size_t nvars, std::uint32_t max_degree, const Field& field,
                        std::size_t max_terms = 6) {
    const MonomialBasis basis(nvars, max_degree);
    Poly p(nvars);
    const auto terms = std::uniform_int_distribution<std::size_t>(0, max_terms)(rng);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (std::size_t t = 0; t < terms; ++t) p.add_term(basis[pick(rng)], random_scalar(rng, field, false));
    return p;
}

inline BoundedFunctional random_combination(std::mt19937& rng, const std::vector<BoundedFunctional>& basis,
                                            const Field& field) {
    auto l = BoundedFunctional::zero(basis.front().basis, field);
    for (const auto& b : basis) l = l + random_scalar(rng, field) * b;
    return l;
}

// ---------------------------------------------------------------- oracles

/// Jacobian determinant built from partial derivatives by cofactor expansion
/// (n <= 3), independent of the Bezoutian code.
inline Poly jacobian_oracle(const PolySystem& sys) {
    const std::size_t n = sys.nvars();
    std::vector<std::vector<Poly>> J(n, std::vector<Poly>(n, Poly(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) J[i][j] = derivative(sys[i], j);
    if (n == 1) return J[0][0];
    if (n == 2) return J[0][0] * J[1][1] - J[0][1] * J[1][0];
    if (n == 3)
        return J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) - J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
               J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
    throw std::invalid_argument("jacobian_oracle: n > 3");
}

/// Unit functional for a system with only simple roots, all listed:
/// E(x^alpha) = sum over roots of xi^alpha / Jac(xi).
inline BoundedFunctional euler_jacobi_unit(const RootFixture& fx) {
    const auto& sys = fx.system;
    const Poly jac = jacobian_oracle(sys);
    auto e = BoundedFunctional::zero(sys.basis(), sys.field());
    for (const auto& r : fx.roots) {
        const Scalar inv = jac.evaluate(r.point).inverse();
        const auto ev = evaluation_functional(sys.basis(), r.point);
        e = e + inv * ev;
    }
    return e;
}

/// Unit functional of a monomial system (x1^a1, ..., xn^an): the residue
/// picks out x^(a-1).
inline BoundedFunctional monomial_system_unit(const PolySystem& sys) {
    std::vector<std::uint32_t> top;
    for (auto d : sys.degrees()) top.push_back(d - 1);
    return BoundedFunctional::coordinate(sys.basis(), Monomial(top), sys.field());
}

inline bool simple_roots_only(const RootFixture& fx) {
    for (const auto& r : fx.roots) {
        if (r.derivatives.size() != 1) return false;
        for (auto e : r.derivatives[0])
            if (e != 0) return false;
    }
    return true;
}

/// Literal n = 1 operator: column alpha = truncate(apply_y(l, f'(x,y) x^alpha - nabla(x^alpha) f(x)), delta_f),
/// with nabla(x^k) = sum_{a<k} x^a y^(k-1-a) written out directly.
inline KMatrix univariate_operator_oracle(const PolySystem& sys, const BoundedFunctional& l) {
    const auto& basis = *sys.basis();
    const Field field = sys.field();
    auto nabla_power = [&](std::uint32_t k) {
        Poly out(2);
        for (std::uint32_t a = 0; a < k; ++a) out.add_term(Monomial({a, k - 1 - a}), field.one());
        return out;
    };
    Poly nabla_f(2);
    for (const auto& [m, c] : sys[0].terms()) nabla_f += c * nabla_power(m[0]);
    const Poly f_x = [&] {
        Poly p(2);
        for (const auto& [m, c] : sys[0].terms()) p.add_term(Monomial({m[0], 0}), c);
        return p;
    }();
    KMatrix op(basis.size(), basis.size(), field);
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const std::uint32_t k = basis[col][0];
        const Poly bordered = nabla_f * Poly::monomial(Monomial({k, 0}), field.one()) - nabla_power(k) * f_x;
        // apply_y by hand: sum over y^b of l(x^b) * coefficient(x)
        Poly image(1);
        for (const auto& [m, c] : bordered.terms())
            if (m[1] <= basis.bound()) image.add_term(Monomial({m[0]}), c * l.values[m[1]]);
        for (const auto& [m, c] : image.terms())
            if (m[0] <= basis.bound()) op(m[0], col) = c;
    }
    return op;
}

}  // namespace rftest
