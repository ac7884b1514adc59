#pragma once

#include "rootfun/oracle.hpp"
#include "rootfun/solver.hpp"
#include "rootfun/system.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rootfun {

/// Malformed input text. line and column are 1-based; 0 means "not tied to a
/// position" (e.g. a missing line).
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t line, std::size_t column, const std::string& message);
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

/// The textual content of a system file:
///
///   field: Q            (or "field: Fp 7")
///   vars: x y
///   poly: x^2 - 1
///   poly: y^2 - 1
///   root: 1 -1          (fixtures only; "root: 0 0 @ 0 0; 1 0" lists derivatives)
///
/// '#' starts a comment.
struct SystemFile {
    Field field;
    std::vector<std::string> variables;
    std::vector<std::string> polynomials;
    std::vector<FixtureRoot> roots;
};

struct ParsedSystem {
    SystemFile file;
    PolySystem system;
};

/// Throws SyntaxError, ArityMismatch, NotPrime or InvalidSystem.
[[nodiscard]] ParsedSystem parse_system(std::string_view text);

/// Parses one expression over the given variables: integers, variables,
/// + - * ^ and parentheses, ^ binding tightest and taking an integer exponent.
[[nodiscard]] Poly parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                                    const Field& field, std::size_t line = 0);

/// Canonical file text: polynomials printed leading term first.
[[nodiscard]] std::string print_system(const SystemFile& file, const PolySystem& sys);

[[nodiscard]] RootFixture to_fixture(const ParsedSystem& parsed);

/// Everything a certificate stores, in library types.
struct Certificate {
    Field field;
    std::vector<std::string> variables;
    std::vector<Poly> system;
    std::uint32_t delta_f = 0;
    std::size_t dimension = 0;
    std::size_t ann_dim = 0;
    std::vector<KVector> root_basis;  // values over MonomialBasis(delta_f)
    std::vector<Poly> ideal_slice;
    KVector unit;
    KVector unit_a;
    KVector unit_b;
    bool no_roots = false;
    std::optional<VerificationReport> verification;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

[[nodiscard]] Certificate make_certificate(const std::vector<std::string>& variables, const PolySystem& sys,
                                           const SolveResult& result, bool include_verification);

/// Stable JSON: rationals as "p/q" strings, monomials as "x1^2*x2", maps in
/// basis order. Identical inputs give byte-identical output.
[[nodiscard]] std::string write_certificate_json(const Certificate& cert);
/// Throws Error on malformed certificates.
[[nodiscard]] Certificate read_certificate_json(std::string_view text);

/// Re-checks a certificate without re-solving: dimensions, that the root
/// functionals annihilate the ideal slice, and the unit certificate.
[[nodiscard]] VerificationReport recheck_certificate(const Certificate& cert);

/// Human-readable summary.
[[nodiscard]] std::string write_text_report(const Certificate& cert);

}  // namespace rootfun
