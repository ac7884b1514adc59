#include "rootfun/oracle.hpp"

#include "rootfun/solver.hpp"

#include <stdexcept>

namespace rootfun {

std::size_t RootFixture::multiplicity() const {
    std::size_t total = 0;
    for (const auto& r : roots) total += r.derivatives.size();
    return total;
}

EchelonBasis truncated_ideal_at(const PolySystem& sys, std::uint32_t m) {
    const MonomialBasis basis(sys.nvars(), m);
    std::vector<KVector> rows;
    for (std::size_t i = 0; i < sys.nvars(); ++i) {
        if (sys.degrees()[i] > m) continue;
        const MonomialBasis shifts(sys.nvars(), m - sys.degrees()[i]);
        for (const auto& shift : shifts.monomials()) {
            KVector row(basis.size(), sys.field().zero());
            for (const auto& [mono, c] : sys[i].terms()) row[basis.index(mono * shift)] = c;
            rows.push_back(std::move(row));
        }
    }
    return row_reduce(rows, basis.size(), sys.field());
}

namespace {

// span(rows of ideal) cap span{x^alpha : |alpha| <= m}, as reduced rows over
// MonomialBasis(m). MonomialBasis(M) lists MonomialBasis(m) as its prefix.
EchelonBasis low_degree_part(const EchelonBasis& ideal, std::size_t low_dim, const Field& field) {
    const std::size_t total = ideal.ambient_dim();
    const std::size_t high_dim = total - low_dim;
    // Columns of degree > m first, so rows pivoting in the low block are
    // exactly the members supported in degree <= m.
    KMatrix permuted(ideal.rank(), total, field);
    for (std::size_t r = 0; r < ideal.rank(); ++r)
        for (std::size_t c = 0; c < total; ++c) {
            const std::size_t dest = c >= low_dim ? c - low_dim : c + high_dim;
            permuted(r, dest) = ideal.matrix(r, c);
        }
    const auto reduced = row_reduce(permuted);
    std::vector<KVector> low_rows;
    for (std::size_t r = 0; r < reduced.rank(); ++r) {
        if (reduced.pivot_cols[r] < high_dim) continue;
        const auto row = reduced.matrix.row(r);
        low_rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(high_dim), row.end());
    }
    return row_reduce(low_rows, low_dim, field);
}

}  // namespace

EchelonBasis saturated_ideal_slice(const PolySystem& sys, std::uint32_t m, std::uint32_t slack) {
    const std::size_t low_dim = MonomialBasis(sys.nvars(), m).size();
    std::optional<EchelonBasis> previous;
    for (std::uint32_t s = 0; s <= slack; ++s) {
        auto current = low_degree_part(truncated_ideal_at(sys, m + s), low_dim, sys.field());
        if (previous && same_span(*previous, current)) return current;
        previous = std::move(current);
    }
    throw NotStabilized("saturation at degree " + std::to_string(m) + " did not stabilize within slack " +
                        std::to_string(slack));
}

BoundedFunctional evaluation_functional(const BasisPtr& basis, std::span<const Scalar> point) {
    const std::vector<std::uint32_t> zero(basis->nvars(), 0);
    return derivative_functional(basis, point, zero);
}

BoundedFunctional derivative_functional(const BasisPtr& basis, std::span<const Scalar> point,
                                        std::span<const std::uint32_t> beta) {
    const std::size_t n = basis->nvars();
    if (point.size() != n || beta.size() != n) throw std::invalid_argument("derivative functional: arity mismatch");
    const Field field = point[0].field();
    KVector values;
    values.reserve(basis->size());
    for (const auto& alpha : basis->monomials()) {
        Scalar v = field.one();
        for (std::size_t i = 0; i < n && !v.is_zero(); ++i) {
            if (beta[i] > alpha[i]) {
                v = field.zero();
                break;
            }
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), alpha[i], beta[i]);
            v *= field.from_mpz(binom);
            for (std::uint32_t k = 0; k < alpha[i] - beta[i]; ++k) v *= point[i];
        }
        values.push_back(std::move(v));
    }
    return {basis, std::move(values)};
}

std::vector<BoundedFunctional> fixture_functionals(const RootFixture& fixture) {
    std::vector<BoundedFunctional> out;
    for (const auto& root : fixture.roots)
        for (const auto& beta : root.derivatives)
            out.push_back(derivative_functional(fixture.system.basis(), root.point, beta));
    return out;
}

bool slice_growth_check(const PolySystem& sys, const std::vector<Poly>& ideal_slice, std::uint32_t delta,
                    std::uint32_t slack) {
    const std::uint32_t top = sys.delta_f() + delta;
    const auto lhs = saturated_ideal_slice(sys, top, slack);

    const MonomialBasis basis(sys.nvars(), top);
    std::vector<KVector> rows = truncated_ideal_at(sys, top).rows();
    const MonomialBasis shifts(sys.nvars(), delta);
    for (const auto& h : ideal_slice)
        for (const auto& shift : shifts.monomials()) {
            KVector row(basis.size(), sys.field().zero());
            for (const auto& [mono, c] : h.terms()) row[basis.index(mono * shift)] = c;
            rows.push_back(std::move(row));
        }
    const auto rhs = row_reduce(rows, basis.size(), sys.field());
    return same_span(lhs, rhs);
}

bool slice_growth_check(const PolySystem& sys, std::uint32_t delta, std::uint32_t slack) {
    return slice_growth_check(sys, solve(sys).ideal_slice, delta, slack);
}

EchelonBasis functional_span(const std::vector<BoundedFunctional>& functionals, const PolySystem& sys) {
    std::vector<KVector> rows;
    for (const auto& l : functionals) rows.push_back(l.values);
    return row_reduce(rows, sys.dimension(), sys.field());
}

EchelonBasis poly_span(const std::vector<Poly>& polys, const PolySystem& sys) {
    std::vector<KVector> rows;
    for (const auto& h : polys) rows.push_back(coordinates(h, *sys.basis(), sys.field()));
    return row_reduce(rows, sys.dimension(), sys.field());
}

std::vector<OracleCheck> oracle_checks(const RootFixture& fixture, std::uint32_t delta_max, std::uint32_t slack,
                                       bool fast_path) {
    const auto& sys = fixture.system;
    std::vector<OracleCheck> out;
    SolveResult result;
    try {
        SolveOptions opts;
        opts.fast_path = fast_path;
        result = solve(sys, opts);
    } catch (const Error& e) {
        out.push_back({"solve", false, e.what()});
        return out;
    }
    out.push_back({"solve", true, {}});

    const auto expected = fixture.multiplicity();
    out.push_back({"root_count", result.root_basis.size() == expected,
                   std::to_string(result.root_basis.size()) + " root functionals, fixture lists " +
                       std::to_string(expected)});
    out.push_back({"duality_dimension", result.root_basis.size() + result.ideal_slice.size() == sys.dimension(),
                   std::to_string(result.root_basis.size()) + " + " + std::to_string(result.ideal_slice.size()) +
                       " vs D = " + std::to_string(sys.dimension())});

    {
        // Fixture functionals must vanish on the ideal well beyond delta_f.
        const std::uint32_t top = sys.delta_f() + slack;
        const auto wide = monomial_basis(sys.nvars(), top);
        const auto ideal = truncated_ideal_at(sys, top);
        bool vanish = true;
        std::string bad;
        for (const auto& root : fixture.roots)
            for (const auto& beta : root.derivatives) {
                const auto l = derivative_functional(wide, root.point, beta);
                for (std::size_t r = 0; r < ideal.rank() && vanish; ++r)
                    if (!dot(l.values, ideal.matrix.row(r)).is_zero()) {
                        vanish = false;
                        for (const auto& c : root.point) bad += (bad.empty() ? "at " : " ") + c.to_string();
                    }
            }
        out.push_back({"fixture_functionals_annihilate_ideal", vanish, bad});
    }

    bool fixture_ok = true;
    try {
        fixture_ok = same_span(functional_span(result.root_basis, sys),
                               functional_span(fixture_functionals(fixture), sys));
    } catch (const std::exception&) {
        fixture_ok = false;
    }
    out.push_back({"fixture_functional_span", fixture_ok, {}});

    try {
        const bool ok = same_span(saturated_ideal_slice(sys, sys.delta_f(), slack), poly_span(result.ideal_slice, sys));
        out.push_back({"saturated_ideal_slice", ok, "slack " + std::to_string(slack)});
    } catch (const NotStabilized& e) {
        out.push_back({"saturated_ideal_slice", false, e.what()});
    }

    for (std::uint32_t delta = 0; delta <= delta_max; ++delta) {
        const std::string name = "slice_growth_delta_" + std::to_string(delta);
        try {
            out.push_back({name, slice_growth_check(sys, result.ideal_slice, delta, slack), {}});
        } catch (const NotStabilized& e) {
            out.push_back({name, false, e.what()});
        }
    }
    return out;
}

}  // namespace rootfun
