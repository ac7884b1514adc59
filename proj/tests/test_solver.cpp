#include "support.hpp"

#include <doctest.h>

using namespace rftest;

namespace {

EchelonBasis span_of(const std::vector<BoundedFunctional>& ls, const PolySystem& sys) { return functional_span(ls, sys); }

Poly dense_poly(std::mt19937& rng, std::size_t n, std::uint32_t degree, const Field& field) {
    Poly p(n);
    const MonomialBasis basis(n, degree);
    for (const auto& m : basis.monomials()) p.add_term(m, random_scalar(rng, field, false));
    return p;
}

}  // namespace

TEST_CASE("step 1 and step 2") {
    auto sys = make_system({"x^2 - 1"});
    auto ideal = truncated_ideal_basis(sys);
    CHECK(ideal.rank() == 0);
    CHECK(annihilator_functionals(sys, ideal).size() == 2);

    sys = make_system({"x1^2", "x2^2"});
    ideal = truncated_ideal_basis(sys);
    CHECK(ideal.rank() == 2);
    const auto ann = annihilator_functionals(sys, ideal);
    REQUIRE(ann.size() == 4);
    for (const auto& l : ann) {
        CHECK(l[Monomial({2, 0})].is_zero());
        CHECK(l[Monomial({0, 2})].is_zero());
    }

    sys = make_system({"x1^2 - 1", "x2^2 - 1"});
    ideal = truncated_ideal_basis(sys);
    CHECK(ideal.rank() == 2);
    CHECK(same_span(ideal, poly_span({P("x1^2 - 1", 2), P("x2^2 - 1", 2)}, sys)));
    CHECK(annihilator_functionals(sys, ideal).size() == 4);
}

TEST_CASE("root functional basis examples") {
    for (const auto& [file, count] : core_fixtures()) {
        CAPTURE(file);
        const auto fx = to_fixture(load_fixture(file));
        const auto& sys = fx.system;
        const auto ann = annihilator_functionals(sys, truncated_ideal_basis(sys));
        const auto roots = root_functional_basis(sys, ann);
        CHECK(roots.size() == count);
        CHECK(same_span(span_of(roots, sys), span_of(fixture_functionals(fx), sys)));
    }
}

TEST_CASE("ideal slice examples") {
    auto sys = make_system({"x^2 - 1"});
    CHECK(solve(sys).ideal_slice.empty());

    sys = make_system({"x1^2", "x2^2"});
    CHECK(same_span(poly_span(solve(sys).ideal_slice, sys), poly_span({P("x1^2", 2), P("x2^2", 2)}, sys)));

    sys = make_system({"x1^2 - 1", "x2^2 - 1"});
    CHECK(same_span(poly_span(solve(sys).ideal_slice, sys), poly_span({P("x1^2 - 1", 2), P("x2^2 - 1", 2)}, sys)));
}

TEST_CASE("solve summaries") {
    auto r = solve(make_system({"x^2 - 1"}));
    CHECK(r.delta_f == 1);
    CHECK(r.dimension == 2);
    CHECK(r.ann_dim == 2);
    CHECK(r.root_basis.size() == 2);
    CHECK(r.ideal_slice.empty());
    CHECK(r.unit.unit.values == qv({0, 1}));
    CHECK(apply_y(r.unit.unit, DP("x + y", 1)) == P("1"));

    const auto s2 = make_system({"x1^2", "x2^2"});
    r = solve(s2);
    CHECK(r.delta_f == 2);
    CHECK(r.dimension == 6);
    CHECK(r.ann_dim == 4);
    CHECK(r.root_basis.size() == 4);
    CHECK(r.ideal_slice.size() == 2);
    CHECK(r.unit.unit == BoundedFunctional::coordinate(s2.basis(), Monomial({1, 1}), s2.field()));

    CHECK_THROWS_AS((void)solve(make_system({"7"})), InvalidSystem);
}

TEST_CASE("unit functional against independent oracles") {
    for (const auto& name : all_good_fixtures()) {
        CAPTURE(name);
        const auto fx = to_fixture(load_fixture(name));
        const auto r = solve(fx.system);
        CHECK(unit_certificate_holds(fx.system, r.unit.unit, r.ideal_slice));
        if (simple_roots_only(fx)) CHECK(r.unit.unit == euler_jacobi_unit(fx));
    }
    for (const auto& polys : std::vector<std::vector<std::string>>{{"x^2"}, {"x^3"}, {"x^6"}, {"x1^2", "x2^2"}, {"x1^3", "x2^2"}, {"x1^2", "x2", "x3^3"}}) {
        const auto sys = make_system(polys);
        CHECK(solve(sys).unit.unit == monomial_system_unit(sys));
    }
    const auto hyper = make_system({"x1*x2 - 1", "x1 - 1"});
    CHECK(solve(hyper).unit.unit.values == qv({-1, -1, -1}));
}

TEST_CASE("solver invariants on fixtures, both paths") {
    for (const auto& name : all_good_fixtures()) {
        CAPTURE(name);
        const auto sys = load_fixture(name).system;
        for (bool fast : {true, false}) {
            SolveOptions opts;
            opts.fast_path = fast;
            opts.verify = true;
            const auto r = solve(sys, opts);
            CHECK(r.root_basis.size() + r.ideal_slice.size() == r.dimension);
            for (const auto& l : r.root_basis) {
                CHECK(annihilates_truncated_ideal(l, sys));
                for (const auto& h : r.ideal_slice) CHECK(apply(l, h).is_zero());
            }
            for (const auto& c : r.verification.checks) {
                CAPTURE(c.name);
                CAPTURE(c.detail);
                CHECK(c.passed);
            }
        }
    }
}

TEST_CASE("power span chain is non-increasing and stabilizes on the root span") {
    for (const auto& name : all_good_fixtures()) {
        CAPTURE(name);
        const auto sys = load_fixture(name).system;
        const auto ann = annihilator_functionals(sys, truncated_ideal_basis(sys));
        const ExtensionContext ctx(sys);
        const auto chain = power_span_chain(ann, ctx, ann.size() + 2);
        REQUIRE_FALSE(chain.empty());
        CHECK(chain.size() <= ann.size() + 1);
        for (std::size_t k = 1; k < chain.size(); ++k) {
            CHECK(chain[k].rank() <= chain[k - 1].rank());
            for (const auto& row : chain[k].rows()) CHECK(member(chain[k - 1], row));
        }
        CHECK(same_span(chain.back(), span_of(solve(sys).root_basis, sys)));
    }
}

TEST_CASE("threaded solves are identical") {
    for (const auto& name : all_good_fixtures()) {
        CAPTURE(name);
        const auto sys = load_fixture(name).system;
        for (bool fast : {true, false}) {
            SolveOptions one;
            one.fast_path = fast;
            SolveOptions many = one;
            many.threads = 4;
            const auto a = solve(sys, one);
            const auto b = solve(sys, many);
            CHECK(a.root_basis == b.root_basis);
            CHECK(a.ideal_slice == b.ideal_slice);
            CHECK(a.unit.unit == b.unit.unit);
        }
    }
}

TEST_CASE("random dense systems over a prime field") {
    std::mt19937 rng(4242);
    const auto F = Field::prime_field(32003);
    for (int t = 0; t < 6; ++t) {
        const std::uint32_t d1 = 1 + t % 3, d2 = 1 + (t / 3) % 2 + 1;
        const PolySystem sys(F, {dense_poly(rng, 2, d1, F), dense_poly(rng, 2, d2, F)});
        SolveOptions opts;
        opts.verify = true;
        const auto r = solve(sys, opts);
        CHECK(r.root_basis.size() == d1 * d2);
        CHECK(r.root_basis.size() + r.ideal_slice.size() == r.dimension);
        CHECK(r.verification.all_passed());
    }
}

TEST_CASE("non-zero-dimensional and empty varieties") {
    const auto line = make_system({"x1*x2", "x1*x2"});
    for (int rep = 0; rep < 3; ++rep) CHECK_THROWS_AS((void)solve(line), NotZeroDimensional);

    const auto plane_curve = make_system({"x1^2 - x2", "x1^2 - x2"});
    CHECK_THROWS_AS((void)solve(plane_curve), NotZeroDimensional);

    const auto empty = make_system({"x1", "x1 + 1"});
    const auto r = solve(empty);
    CHECK(r.no_roots);
    CHECK(r.root_basis.empty());
    CHECK(r.unit.unit.is_zero());

    const auto empty2 = make_system({"x1*x2 - 1", "x1*x2 - 2"});
    const auto r2 = solve(empty2);
    CHECK(r2.no_roots);
}
