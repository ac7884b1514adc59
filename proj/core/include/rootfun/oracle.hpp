#pragma once

#include "rootfun/functionals.hpp"
#include "rootfun/linalg.hpp"
#include "rootfun/system.hpp"

#include <vector>

namespace rootfun {

/// Saturation never produced two consecutive equal intersections.
class NotStabilized : public Error {
public:
    using Error::Error;
};

/// A known root with the exponent vectors beta whose divided-power derivative
/// functionals span the local dual space there (just {0} for a simple root).
struct FixtureRoot {
    std::vector<Scalar> point;
    std::vector<std::vector<std::uint32_t>> derivatives;
};

struct RootFixture {
    PolySystem system;
    std::vector<FixtureRoot> roots;

    /// Sum of the local multiplicities (number of derivative functionals).
    [[nodiscard]] std::size_t multiplicity() const;
};

/// Reduced basis of span{f_i x^alpha : |alpha| <= m - d_i} over MonomialBasis(m).
[[nodiscard]] EchelonBasis truncated_ideal_at(const PolySystem& sys, std::uint32_t m);

/// (f) intersected with R[x^{<= m}], approximated by intersecting the truncated
/// ideals at m + s for s = 0, 1, ..., slack and returning the first value two
/// consecutive s agree on. Throws NotStabilized otherwise. The result is over
/// MonomialBasis(m).
[[nodiscard]] EchelonBasis saturated_ideal_slice(const PolySystem& sys, std::uint32_t m, std::uint32_t slack);

/// values[alpha] = point^alpha.
[[nodiscard]] BoundedFunctional evaluation_functional(const BasisPtr& basis, std::span<const Scalar> point);

/// values[alpha] = coefficient of t^beta in (point + t)^alpha, i.e. the
/// divided-power derivative (d^beta / beta!) of x^alpha at the point.
[[nodiscard]] BoundedFunctional derivative_functional(const BasisPtr& basis, std::span<const Scalar> point,
                                                      std::span<const std::uint32_t> beta);

/// All derivative functionals listed by a fixture, over MonomialBasis(delta_f).
[[nodiscard]] std::vector<BoundedFunctional> fixture_functionals(const RootFixture& fixture);

/// (f) cap R[x^{<= delta_f + delta}] == ((f) cap R[x^{<= delta_f}]) * R[x^{<= delta}] + (f)^{<= delta_f + delta},
/// with the left side from saturated_ideal_slice and ideal_slice from the solver.
[[nodiscard]] bool slice_growth_check(const PolySystem& sys, const std::vector<Poly>& ideal_slice, std::uint32_t delta,
                                  std::uint32_t slack);
/// As above with the ideal slice computed by solve().
[[nodiscard]] bool slice_growth_check(const PolySystem& sys, std::uint32_t delta, std::uint32_t slack);

/// Reduced row basis of the functionals' value vectors.
[[nodiscard]] EchelonBasis functional_span(const std::vector<BoundedFunctional>& functionals, const PolySystem& sys);
[[nodiscard]] EchelonBasis poly_span(const std::vector<Poly>& polys, const PolySystem& sys);

struct OracleCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Solves the fixture system and compares against the oracles: root count,
/// span of the fixture functionals, the saturated ideal slice, and
/// slice_growth_check for delta = 0..delta_max. NotStabilized and solver errors
/// become failed checks.
[[nodiscard]] std::vector<OracleCheck> oracle_checks(const RootFixture& fixture, std::uint32_t delta_max,
                                                     std::uint32_t slack, bool fast_path = true);

}  // namespace rootfun
