#include "support.hpp"

#include <doctest.h>

using namespace rftest;

TEST_CASE("truncated ideal at a given degree") {
    const auto sys = make_system({"x^2 - 1"});
    CHECK(truncated_ideal_at(sys, 1).rank() == 0);
    const auto e = truncated_ideal_at(sys, 3);
    CHECK(e.rank() == 2);
    CHECK(same_span(e, row_reduce(std::vector<KVector>{qv({-1, 0, 1, 0}), qv({0, -1, 0, 1})}, 4, sys.field())));
    CHECK(truncated_ideal_at(make_system({"x1^2", "x2 - 1"}), 0).rank() == 0);
}

TEST_CASE("saturated ideal slices") {
    auto sys = make_system({"x1^2", "x2^2"});
    CHECK(same_span(saturated_ideal_slice(sys, 2, 3), poly_span({P("x1^2", 2), P("x2^2", 2)}, sys)));

    sys = make_system({"x1^2 - 1", "x2^2 - 1"});
    CHECK(same_span(saturated_ideal_slice(sys, 2, 4), poly_span(solve(sys).ideal_slice, sys)));

    sys = make_system({"x^2 - 1"});
    CHECK(saturated_ideal_slice(sys, 1, 4).rank() == 0);

    sys = make_system({"x1^2 + x2^2 - 5", "x1*x2 - 2"});
    CHECK(truncated_ideal_at(sys, 2).rank() == 2);
    CHECK(saturated_ideal_slice(sys, 2, 4).rank() == 2);
}

TEST_CASE("saturation without agreement reports NotStabilized") {
    // Slack 0 leaves no second value to agree with.
    const auto sys = make_system({"x1*x2", "x1*x2"});
    CHECK_THROWS_AS((void)saturated_ideal_slice(sys, 1, 0), NotStabilized);
}

TEST_CASE("evaluation and derivative functionals") {
    const auto b1 = monomial_basis(1, 1);
    CHECK(evaluation_functional(b1, std::vector{q(1)}).values == qv({1, 1}));
    CHECK(evaluation_functional(b1, std::vector{q(-1)}).values == qv({1, -1}));

    const auto b2 = monomial_basis(2, 2);
    CHECK(evaluation_functional(b2, std::vector{q(1), q(-1)}).values == qv({1, 1, -1, 1, -1, 1}));
    CHECK(evaluation_functional(b2, std::vector{q(0), q(0)}) ==
          BoundedFunctional::coordinate(b2, Monomial({0, 0}), Field::rationals()));

    const std::vector<std::uint32_t> zero{0, 0};
    const std::vector pt{q(2), q(3)};
    CHECK(derivative_functional(b2, pt, zero) == evaluation_functional(b2, pt));

    // d/dx1 at (2, 3): [0, 1, 0, 4, 3, 0]
    const std::vector<std::uint32_t> dx1{1, 0};
    CHECK(derivative_functional(b2, pt, dx1).values == qv({0, 1, 0, 4, 3, 0}));
    // (1/2) d^2/dx1^2 at the origin picks out x1^2
    const std::vector<std::uint32_t> dxx{2, 0};
    CHECK(derivative_functional(b2, std::vector{q(0), q(0)}, dxx) ==
          BoundedFunctional::coordinate(b2, Monomial({2, 0}), Field::rationals()));
}

TEST_CASE("slice growth identity") {
    CHECK(slice_growth_check(make_system({"x1^2", "x2^2"}), 1, 4));
    CHECK(slice_growth_check(make_system({"x^2 - 1"}), 1, 4));
    CHECK(slice_growth_check(make_system({"x1^2 - 1", "x2^2 - 1"}), 2, 4));
    for (const auto& name : all_good_fixtures())
        for (std::uint32_t delta = 0; delta <= 2; ++delta) {
            CAPTURE(name);
            CAPTURE(delta);
            CHECK(slice_growth_check(load_fixture(name).system, delta, 4));
        }
}

TEST_CASE("oracle checks on fixtures") {
    for (const auto& name : all_good_fixtures()) {
        CAPTURE(name);
        for (const auto& c : oracle_checks(to_fixture(load_fixture(name)), 2, 4)) {
            CAPTURE(c.name);
            CHECK(c.passed);
        }
    }
    bool any_failed = false;
    for (const auto& c : oracle_checks(to_fixture(load_fixture("wrong_root.sys")), 2, 4)) any_failed |= !c.passed;
    CHECK(any_failed);
}
