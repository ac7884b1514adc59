#include "rootfun/solver.hpp"

#include "rootfun/parallel.hpp"

#include <stdexcept>

namespace rootfun {

namespace {

using Clock = std::chrono::steady_clock;

// Rows of span{f_i x^alpha : deg(f_i x^alpha) <= bound} over MonomialBasis(bound).
std::vector<KVector> ideal_generators(const PolySystem& sys, const MonomialBasis& basis) {
    std::vector<KVector> rows;
    const auto bound = basis.bound();
    for (std::size_t i = 0; i < sys.nvars(); ++i) {
        const auto d = sys.degrees()[i];
        if (d > bound) continue;
        const MonomialBasis multipliers(sys.nvars(), bound - d);
        for (const auto& m : multipliers.monomials())
            rows.push_back(coordinates(sys[i] * Poly::monomial(m, sys.field().one()), basis, sys.field()));
    }
    return rows;
}

std::vector<BoundedFunctional> as_functionals(const EchelonBasis& e, const BasisPtr& basis) {
    std::vector<BoundedFunctional> out;
    for (std::size_t r = 0; r < e.rank(); ++r) out.push_back({basis, e.matrix.row_vector(r)});
    return out;
}

std::vector<KVector> values_of(const std::vector<BoundedFunctional>& ls) {
    std::vector<KVector> out;
    out.reserve(ls.size());
    for (const auto& l : ls) out.push_back(l.values);
    return out;
}

EchelonBasis span_of(const std::vector<BoundedFunctional>& ls, const PolySystem& sys) {
    return row_reduce(values_of(ls), sys.dimension(), sys.field());
}

// 1 in span{f_i x^alpha} at some degree bound delta_f + s, s <= slack.
bool one_in_truncated_ideal(const PolySystem& sys, std::uint32_t slack) {
    for (std::uint32_t s = 0; s <= slack; ++s) {
        const MonomialBasis basis(sys.nvars(), sys.delta_f() + s);
        const auto ideal = row_reduce(ideal_generators(sys, basis), basis.size(), sys.field());
        if (member(ideal, coordinates(Poly::constant(sys.nvars(), sys.field().one()), basis, sys.field())))
            return true;
    }
    return false;
}

class StepTimer {
public:
    explicit StepTimer(std::vector<StepRecord>& log) : log_(log), start_(Clock::now()) {}
    void done(std::string step, std::size_t dim) {
        const auto now = Clock::now();
        log_.push_back({std::move(step), dim, std::chrono::duration_cast<std::chrono::microseconds>(now - start_)});
        start_ = now;
    }

private:
    std::vector<StepRecord>& log_;
    Clock::time_point start_;
};

}  // namespace

bool VerificationReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

EchelonBasis truncated_ideal_basis(const PolySystem& sys) {
    const auto& basis = *sys.basis();
    return row_reduce(ideal_generators(sys, basis), basis.size(), sys.field());
}

std::vector<BoundedFunctional> annihilator_functionals(const PolySystem& sys, const EchelonBasis& ideal) {
    std::vector<BoundedFunctional> out;
    for (auto& v : annihilator_in_dual(ideal, sys.dimension())) out.push_back({sys.basis(), std::move(v)});
    return out;
}

std::vector<BoundedFunctional> root_functional_basis(const std::vector<BoundedFunctional>& ann,
                                                     const ExtensionContext& ctx, unsigned threads) {
    const std::size_t d = ann.size();
    const auto& sys = ctx.system();
    if (d == 0) return {};

    // Step 3: the operators [L_p].
    std::vector<std::shared_ptr<const ExtensionOperator>> ops(d);
    parallel_for(d, threads, [&](std::size_t p) { ops[p] = ctx.operator_of(ann[p]); });

    // Step 4: (L_p)^d by d - 1 compositions with [L_p].
    std::vector<BoundedFunctional> powers(ann);
    parallel_for(d, threads, [&](std::size_t p) {
        for (std::size_t k = 2; k <= d; ++k) powers[p] = extend(powers[p], *ops[p]);
    });

    // Step 5: generators (L_p)^d * L_q, stored in (p, q) order.
    std::vector<KVector> generators(d * d);
    parallel_for(d, threads, [&](std::size_t p) {
        for (std::size_t q = 0; q < d; ++q) generators[p * d + q] = extend(powers[p], *ops[q]).values;
    });

    // Step 6.
    return as_functionals(row_reduce(generators, sys.dimension(), sys.field()), sys.basis());
}

std::vector<BoundedFunctional> root_functional_basis(const PolySystem& sys,
                                                     const std::vector<BoundedFunctional>& ann) {
    return root_functional_basis(ann, ExtensionContext(sys));
}

std::vector<EchelonBasis> power_span_chain(const std::vector<BoundedFunctional>& ann, const ExtensionContext& ctx,
                                           std::size_t max_power, unsigned threads) {
    const auto& sys = ctx.system();
    std::vector<EchelonBasis> chain;
    chain.push_back(span_of(ann, sys));
    const std::size_t d = ann.size();
    std::vector<std::shared_ptr<const ExtensionOperator>> ops(d);
    parallel_for(d, threads, [&](std::size_t q) { ops[q] = ctx.operator_of(ann[q]); });

    while (chain.size() < max_power) {
        const EchelonBasis& current = chain.back();
        const std::size_t r = current.rank();
        std::vector<KVector> generators(r * d);
        parallel_for(r, threads, [&](std::size_t s) {
            const BoundedFunctional elem{sys.basis(), current.matrix.row_vector(s)};
            for (std::size_t q = 0; q < d; ++q) generators[s * d + q] = extend(elem, *ops[q]).values;
        });
        chain.push_back(row_reduce(generators, sys.dimension(), sys.field()));
        if (same_span(chain[chain.size() - 2], chain.back())) break;
    }
    return chain;
}

std::vector<Poly> ideal_slice_basis(const PolySystem& sys, const std::vector<BoundedFunctional>& root_basis) {
    const std::size_t dim = sys.dimension();
    const KMatrix constraints = KMatrix::from_rows(values_of(root_basis), dim, sys.field());
    const auto null = null_space(constraints);
    const auto reduced = row_reduce(null, dim, sys.field());
    std::vector<Poly> out;
    for (std::size_t r = 0; r < reduced.rank(); ++r) out.push_back(from_coordinates(reduced.matrix.row(r), *sys.basis()));
    return out;
}

UnitFunctional unit_root_functional(const PolySystem& sys, const std::vector<BoundedFunctional>& root_basis,
                                    const std::vector<Poly>& ideal_slice, const DoublePoly& bezout_determinant) {
    const auto& basis = *sys.basis();
    const auto& field = sys.field();
    std::vector<KVector> columns;
    for (const auto& l : root_basis) columns.push_back(coordinates(apply_y(l, bezout_determinant), basis, field));
    for (const auto& h : ideal_slice) columns.push_back(coordinates(h, basis, field));
    const KVector target = coordinates(Poly::constant(sys.nvars(), field.one()), basis, field);

    const auto coeffs = solve_affine(columns, target, field);
    if (!coeffs) {
        const auto rank = row_reduce(columns, basis.size(), field).rank();
        throw NotZeroDimensional("step 8: 1 is not in the span of l_p(y).det(nabla f) and the ideal slice (rank " +
                                     std::to_string(rank) + " of " + std::to_string(basis.size()) + ")",
                                 basis.size() - rank);
    }
    UnitFunctional out{BoundedFunctional::zero(sys.basis(), field), {}, {}};
    const std::size_t np = root_basis.size();
    out.a.assign(coeffs->begin(), coeffs->begin() + static_cast<std::ptrdiff_t>(np));
    out.b.assign(coeffs->begin() + static_cast<std::ptrdiff_t>(np), coeffs->end());
    for (std::size_t p = 0; p < np; ++p)
        if (!out.a[p].is_zero()) out.unit = out.unit + out.a[p] * root_basis[p];
    return out;
}

SolveResult solve(const PolySystem& sys, const SolveOptions& options) {
    SolveResult result;
    result.delta_f = sys.delta_f();
    result.dimension = sys.dimension();
    StepTimer timer(result.steps);

    const ExtensionContext ctx(sys, options.threads);
    timer.done("bordered bezoutian", ctx.bezoutian().det().body().size());

    const auto ideal = truncated_ideal_basis(sys);
    timer.done("1 truncated ideal", ideal.rank());

    const auto ann = annihilator_functionals(sys, ideal);
    result.ann_dim = ann.size();
    timer.done("2 annihilator", ann.size());

    if (options.fast_path) {
        const auto chain = power_span_chain(ann, ctx, ann.size() + 2, options.threads);
        result.power_iterations = chain.size();
        result.root_basis = as_functionals(chain.back(), sys.basis());
    } else {
        result.root_basis = root_functional_basis(ann, ctx, options.threads);
    }
    timer.done("3-6 root functionals", result.root_basis.size());

    result.ideal_slice = ideal_slice_basis(sys, result.root_basis);
    timer.done("7 ideal slice", result.ideal_slice.size());

    if (result.root_basis.empty()) {
        // With no surviving functional the slice is everything and step 8 is
        // vacuous; only an explicit 1 in the ideal certifies an empty variety.
        if (!one_in_truncated_ideal(sys, options.empty_variety_slack))
            throw NotZeroDimensional("no root functional survives and 1 was not found in the truncated ideal up to degree " +
                                         std::to_string(sys.delta_f() + options.empty_variety_slack),
                                     0);
        result.no_roots = true;
    }
    result.unit = unit_root_functional(sys, result.root_basis, result.ideal_slice, ctx.bezoutian().det());
    timer.done("8 unit functional", result.root_basis.size());

    if (options.verify) {
        result.verification = verify(sys, result, ctx);
        timer.done("verification", result.verification.checks.size());
    }
    return result;
}

bool unit_certificate_holds(const PolySystem& sys, const BoundedFunctional& unit, const std::vector<Poly>& ideal_slice) {
    const auto& basis = *sys.basis();
    const auto& field = sys.field();
    const Poly residual = apply_y(unit, bezout_det(sys)) - Poly::constant(sys.nvars(), field.one());
    if (auto deg = residual.degree(); deg && *deg > basis.bound()) return false;
    std::vector<KVector> rows;
    for (const auto& h : ideal_slice) rows.push_back(coordinates(h, basis, field));
    return member(row_reduce(rows, basis.size(), field), coordinates(residual, basis, field));
}

VerificationReport verify(const PolySystem& sys, const SolveResult& result, const ExtensionContext& ctx) {
    VerificationReport report;
    auto check = [&](std::string name, bool ok, std::string detail = {}) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    const auto& basis = *sys.basis();
    const auto& field = sys.field();

    check("duality_dimension", result.root_basis.size() + result.ideal_slice.size() == sys.dimension(),
          std::to_string(result.root_basis.size()) + " + " + std::to_string(result.ideal_slice.size()) +
              " vs D = " + std::to_string(sys.dimension()));

    bool annihilates = true;
    for (const auto& l : result.root_basis)
        for (const auto& h : result.ideal_slice) annihilates = annihilates && apply(l, h).is_zero();
    check("root_basis_annihilates_ideal_slice", annihilates);

    bool in_ann = true;
    for (const auto& l : result.root_basis) in_ann = in_ann && annihilates_truncated_ideal(l, sys);
    check("root_basis_in_annihilator", in_ann);

    std::vector<KVector> slice_rows;
    for (const auto& h : result.ideal_slice) slice_rows.push_back(coordinates(h, basis, field));
    const auto slice_span = row_reduce(slice_rows, basis.size(), field);
    check("ideal_slice_reduced_echelon", slice_span.rows() == slice_rows);

    check("unit_certificate", unit_certificate_holds(sys, result.unit.unit, result.ideal_slice));

    const auto& unit = result.unit.unit;
    const auto unit_op = ctx.operator_of(unit);
    check("unit_idempotent", extend(unit, *unit_op) == unit);

    bool action = true;
    for (const auto& l : result.root_basis) action = action && extend(l, *unit_op) == l;
    check("unit_action", action);

    const auto ann = annihilator_functionals(sys, truncated_ideal_basis(sys));
    const auto chain = power_span_chain(ann, ctx, ann.size() + 2);
    const auto root_span = span_of(result.root_basis, sys);
    const std::size_t stable_at = chain.size() - 1;
    check("power_chain_stabilizes",
          stable_at <= ann.size() + 1 && same_span(chain.back(), chain[stable_at - 1]) &&
              same_span(chain.back(), root_span),
          "stable at k = " + std::to_string(stable_at) + ", ann_dim = " + std::to_string(ann.size()));

    check("reference_path_agrees", same_span(span_of(root_functional_basis(ann, ctx), sys), root_span));
    return report;
}

}  // namespace rootfun
