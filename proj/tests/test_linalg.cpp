#include "support.hpp"

#include <doctest.h>

using namespace rftest;

namespace {

KMatrix qm(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<KVector> rs;
    for (auto r : rows) rs.push_back(qv(r));
    return KMatrix::from_rows(rs, rs.empty() ? 0 : rs[0].size(), Field::rationals());
}

KMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, const Field& field) {
    KMatrix m(rows, cols, field);
    std::bernoulli_distribution sparse(0.4);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (!sparse(rng)) m(r, c) = random_scalar(rng, field);
    // Duplicate a row now and then to force rank loss.
    if (rows > 1 && sparse(rng))
        for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c);
    return m;
}

}  // namespace

TEST_CASE("row_reduce examples") {
    auto e = row_reduce(qm({{2, 0}, {0, 0}}));
    CHECK(e.pivot_cols == std::vector<std::size_t>{0});
    CHECK(e.rows() == std::vector<KVector>{qv({1, 0})});

    const auto id = KMatrix::identity(4, Field::rationals());
    e = row_reduce(id);
    CHECK(e.rank() == 4);
    CHECK(e.matrix == id);

    // f = x^2 - 1 times {1, x} over {1, x, x^2, x^3}
    e = row_reduce(qm({{-1, 0, 1, 0}, {0, -1, 0, 1}}));
    CHECK(e.rank() == 2);
    CHECK(e.rows() == std::vector<KVector>{qv({1, 0, -1, 0}), qv({0, 1, 0, -1})});
}

TEST_CASE("null_space examples") {
    auto ns = null_space(KMatrix(1, 3, Field::rationals()));
    CHECK(ns == std::vector<KVector>{qv({1, 0, 0}), qv({0, 1, 0}), qv({0, 0, 1})});

    ns = null_space(qm({{1, 1}}));
    CHECK(ns == std::vector<KVector>{qv({-1, 1})});

    // Annihilator of span{x1^2, x2^2} over [1, x1, x2, x1^2, x1*x2, x2^2]
    ns = null_space(qm({{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 1}}));
    CHECK(ns == std::vector<KVector>{qv({1, 0, 0, 0, 0, 0}), qv({0, 1, 0, 0, 0, 0}), qv({0, 0, 1, 0, 0, 0}),
                                     qv({0, 0, 0, 0, 1, 0})});
}

TEST_CASE("annihilator_in_dual edge cases") {
    const auto full = row_reduce(KMatrix::identity(3, Field::rationals()));
    CHECK(annihilator_in_dual(full, 3).empty());
    const auto none = row_reduce(KMatrix(0, 3, Field::rationals()));
    CHECK(annihilator_in_dual(none, 3).size() == 3);
}

TEST_CASE("solve_affine and member") {
    const std::vector cols{qv({1, 0}), qv({0, 1})};
    auto sol = solve_affine(cols, qv({1, 2}), Field::rationals());
    REQUIRE(sol);
    CHECK(*sol == qv({1, 2}));
    CHECK_FALSE(solve_affine(std::vector<KVector>{qv({1, 0})}, qv({0, 1}), Field::rationals()));

    const auto sub = row_reduce(qm({{1, 0}}));
    CHECK(member(sub, qv({0, 0})));
    CHECK_FALSE(member(sub, qv({0, 1})));

    const auto sys = make_system({"x1^2", "x2^2"});
    const auto step1 = truncated_ideal_basis(sys);
    CHECK(member(step1, coordinates(P("x1^2", 2), *sys.basis(), sys.field())));
    CHECK_FALSE(member(step1, coordinates(P("x1*x2", 2), *sys.basis(), sys.field())));
}

TEST_CASE("random linear algebra properties") {
    std::mt19937 rng(2024);
    for (const auto& field : {Field::rationals(), Field::prime_field(13)}) {
        for (int t = 0; t < 60; ++t) {
            const auto rows = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
            const auto cols = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
            const auto m = random_matrix(rng, rows, cols, field);
            const auto e = row_reduce(m);

            // Pivots are strictly increasing, equal to one, and clear their column.
            for (std::size_t r = 0; r < e.rank(); ++r) {
                if (r > 0) CHECK(e.pivot_cols[r] > e.pivot_cols[r - 1]);
                CHECK(e.matrix(r, e.pivot_cols[r]).is_one());
                for (std::size_t s = 0; s < e.rank(); ++s)
                    if (s != r) CHECK(e.matrix(s, e.pivot_cols[r]).is_zero());
            }
            CHECK(row_reduce(e.matrix) == e);

            const auto ns = null_space(m);
            CHECK(ns.size() == cols - e.rank());
            for (const auto& v : ns) CHECK(is_zero_vector(m.apply(v)));

            CHECK(e.rank() + annihilator_in_dual(e, cols).size() == cols);

            // Re-substitution of an in-span target.
            std::vector<KVector> columns;
            for (std::size_t c = 0; c < cols; ++c) columns.push_back(m.col_vector(c));
            KVector coeffs;
            for (std::size_t c = 0; c < cols; ++c) coeffs.push_back(random_scalar(rng, field));
            const auto target = m.apply(coeffs);
            const auto sol = solve_affine(columns, target, field);
            REQUIRE(sol);
            CHECK(m.apply(*sol) == target);

            // Every original row is a member of its own row space.
            for (std::size_t r = 0; r < rows; ++r) CHECK(member(e, m.row(r)));
        }
    }
}
