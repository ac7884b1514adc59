#include "support.hpp"

#include <doctest.h>

#include <filesystem>

using namespace rftest;

TEST_CASE("parse_system examples") {
    auto ps = parse_system("field: Q\nvars: x\npoly: x^2 - 1\n");
    CHECK(ps.system.nvars() == 1);
    CHECK(ps.system[0] == P("x^2 - 1"));

    ps = parse_system("field: Fp 7\nvars: x y\npoly: x^2\npoly: y^2\n");
    CHECK(ps.system.field() == Field::prime_field(7));
    CHECK(ps.file.variables == std::vector<std::string>{"x", "y"});

    CHECK_THROWS_AS((void)parse_system("vars: x\npoly: x^2\n"), SyntaxError);
    CHECK_THROWS_AS((void)parse_system("field: Q\npoly: x^2\n"), SyntaxError);
    CHECK_THROWS_AS((void)parse_system("field: Q\nvars: x y\npoly: x^2\n"), ArityMismatch);
    CHECK_THROWS_AS((void)parse_system("field: Fp 8\nvars: x\npoly: x^2\n"), NotPrime);
    CHECK_THROWS_AS((void)parse_system("field: Q\nvars: x x\npoly: x\npoly: x\n"), SyntaxError);
    CHECK_THROWS_AS((void)parse_system("field: Q\nvars: x\npoly: 4\n"), InvalidSystem);
}

TEST_CASE("expression grammar") {
    const auto F = Field::rationals();
    const std::vector<std::string> v{"a", "b"};
    CHECK(parse_polynomial("-a^2", v, F) == -(P("x1^2", 2)));
    CHECK(parse_polynomial("(a + b)^2", v, F) == P("x1^2 + 2*x1*x2 + x2^2", 2));
    CHECK(parse_polynomial("2*a*b - (a - 1)*(b + 1)", v, F) == P("x1*x2 - x1 + x2 + 1", 2));
    CHECK(parse_polynomial("a^0 + b^1", v, F) == P("1 + x2", 2));
    CHECK(parse_polynomial("--a", v, F) == P("x1", 2));
    CHECK(parse_polynomial("2^3*a", v, F) == P("8*x1", 2));

    const auto bad = [&](const char* text) { CHECK_THROWS_AS((void)parse_polynomial(text, v, F), SyntaxError); };
    bad("2a");
    bad("a b");
    bad("a +");
    bad("(a");
    bad("a)");
    bad("a^b");
    bad("a^-1");
    bad("c");
    bad("");
    bad("a $ b");
    bad("a^2^");
}

TEST_CASE("syntax errors carry positions") {
    try {
        (void)parse_system("field: Q\nvars: x\npoly: x^2 - 3x\n");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 14);
    }
}

TEST_CASE("comments and root stanzas") {
    const auto ps = parse_system(
        "# leading comment\nfield: Q  # trailing\nvars: x y\npoly: x^2\npoly: y - 1\nroot: 0 1 @ 0 0; 1 0\nroot: 1/2 -3\n");
    REQUIRE(ps.file.roots.size() == 2);
    CHECK(ps.file.roots[0].derivatives == std::vector<std::vector<std::uint32_t>>{{0, 0}, {1, 0}});
    CHECK(ps.file.roots[1].point == std::vector{q(1, 2), q(-3)});
    CHECK_THROWS_AS((void)parse_system("field: Q\nvars: x\npoly: x\nroot: 1 2\n"), SyntaxError);
    CHECK_THROWS_AS((void)parse_system("field: Q\nvars: x\npoly: x\nroot: 1 @ 0 1\n"), SyntaxError);
}

TEST_CASE("parse, print, parse is the identity on canonical files") {
    for (const auto& entry : std::filesystem::directory_iterator(fixture_dir())) {
        CAPTURE(entry.path().string());
        const auto first = parse_system(slurp(entry.path()));
        const auto canonical = print_system(first.file, first.system);
        const auto second = parse_system(canonical);
        CHECK(second.system == first.system);
        CHECK(print_system(second.file, second.system) == canonical);
    }
}

TEST_CASE("certificates round-trip and re-check") {
    for (const auto& name : all_good_fixtures()) {
        CAPTURE(name);
        const auto ps = load_fixture(name);
        SolveOptions opts;
        opts.verify = true;
        const auto r = solve(ps.system, opts);
        for (bool with_report : {false, true}) {
            const auto cert = make_certificate(ps.file.variables, ps.system, r, with_report);
            const auto text = write_certificate_json(cert);
            const auto back = read_certificate_json(text);
            CHECK(back == cert);
            CHECK(write_certificate_json(back) == text);
            CHECK(recheck_certificate(back).all_passed());
        }
    }
}

TEST_CASE("certificate contents for x^2 - 1") {
    const auto ps = parse_system("field: Q\nvars: x\npoly: x^2 - 1\n");
    const auto text = write_certificate_json(make_certificate(ps.file.variables, ps.system, solve(ps.system), false));
    CHECK(text.find("\"D\": 2") != std::string::npos);
    CHECK(text.find("\"ann_dim\": 2") != std::string::npos);
    CHECK(text.find("\"unit\": {\n    \"1\": \"0\",\n    \"x\": \"1\"\n  }") != std::string::npos);
    CHECK(text.find("verification") == std::string::npos);
}

TEST_CASE("tampered certificates fail re-check") {
    const auto ps = load_fixture("four_points.sys");
    auto cert = make_certificate(ps.file.variables, ps.system, solve(ps.system), false);
    cert.unit[0] += q(1);
    CHECK_FALSE(recheck_certificate(cert).all_passed());

    cert = make_certificate(ps.file.variables, ps.system, solve(ps.system), false);
    cert.ideal_slice.pop_back();
    CHECK_FALSE(recheck_certificate(cert).all_passed());

    CHECK_THROWS_AS((void)read_certificate_json("{}"), Error);
    CHECK_THROWS_AS((void)read_certificate_json("not json"), Error);
}

TEST_CASE("text report") {
    const auto ps = load_fixture("x1sq_x2sq.sys");
    const auto report = write_text_report(make_certificate(ps.file.variables, ps.system, solve(ps.system), false));
    CHECK(report.find("delta_f = 2, D = 6, ann_dim = 4") != std::string::npos);
    CHECK(report.find("h1 = x1^2") != std::string::npos);
}
