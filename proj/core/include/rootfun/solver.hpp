#pragma once

#include "rootfun/functionals.hpp"
#include "rootfun/linalg.hpp"
#include "rootfun/system.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace rootfun {

/// The unit functional equation has no solution: the system does not have a
/// finite-dimensional quotient (or the field is degenerate for it).
class NotZeroDimensional : public Error {
public:
    NotZeroDimensional(const std::string& what, std::size_t rank_deficit)
        : Error(what), rank_deficit_(rank_deficit) {}
    [[nodiscard]] std::size_t rank_deficit() const noexcept { return rank_deficit_; }

private:
    std::size_t rank_deficit_;
};

struct SolveOptions {
    /// Stop powering once the span of A^k stops shrinking instead of forming
    /// every (L_p)^d * L_q. Both routes return the same reduced basis.
    bool fast_path = true;
    /// Run verify() before returning and store its report.
    bool verify = false;
    /// Worker cap for operator construction and powering; 0 = hardware concurrency.
    unsigned threads = 1;
    /// Extra degrees searched for 1 in the truncated ideal when no root
    /// functional survives.
    std::uint32_t empty_variety_slack = 4;
};

struct VerificationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
    friend bool operator==(const VerificationCheck&, const VerificationCheck&) = default;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    [[nodiscard]] bool all_passed() const;
    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct StepRecord {
    std::string step;
    std::size_t dimension = 0;
    std::chrono::microseconds elapsed{0};
};

struct UnitFunctional {
    BoundedFunctional unit;
    KVector a;  // coefficients on l_p(y).det(nabla f)
    KVector b;  // coefficients on the ideal slice h_q
};

struct SolveResult {
    std::uint32_t delta_f = 0;
    std::size_t dimension = 0;  // D
    std::size_t ann_dim = 0;    // dim of the step-2 annihilator
    std::vector<BoundedFunctional> root_basis;
    std::vector<Poly> ideal_slice;
    UnitFunctional unit;
    /// True when no root functional survives and 1 was found in the truncated ideal.
    bool no_roots = false;
    std::size_t power_iterations = 0;  // fast path only
    std::vector<StepRecord> steps;
    VerificationReport verification;
};

/// Step 1: reduced basis of span{f_i x^alpha : |alpha| <= delta_f - d_i}.
[[nodiscard]] EchelonBasis truncated_ideal_basis(const PolySystem& sys);

/// Step 2: basis of the functionals on R[x^{<= delta_f}] vanishing on the step-1 space.
[[nodiscard]] std::vector<BoundedFunctional> annihilator_functionals(const PolySystem& sys,
                                                                    const EchelonBasis& ideal);

/// Steps 3-6 as written: operators [L_p], powers (L_p)^d, the d^2 products
/// (L_p)^d * L_q, and a reduced basis of their span.
[[nodiscard]] std::vector<BoundedFunctional> root_functional_basis(const std::vector<BoundedFunctional>& ann,
                                                                   const ExtensionContext& ctx,
                                                                   unsigned threads = 1);
[[nodiscard]] std::vector<BoundedFunctional> root_functional_basis(const PolySystem& sys,
                                                                   const std::vector<BoundedFunctional>& ann);

/// Reduced bases of A, A^2, ... (A = span(ann)) up to and including the first
/// k with span(A^k) == span(A^{k+1}), or until max_power terms were produced.
[[nodiscard]] std::vector<EchelonBasis> power_span_chain(const std::vector<BoundedFunctional>& ann,
                                                         const ExtensionContext& ctx, std::size_t max_power,
                                                         unsigned threads = 1);

/// Step 7: reduced basis of the polynomials of degree <= delta_f annihilated by
/// every root functional.
[[nodiscard]] std::vector<Poly> ideal_slice_basis(const PolySystem& sys,
                                                  const std::vector<BoundedFunctional>& root_basis);

/// Step 8: solves sum a_p l_p(y).det(nabla f) + sum b_q h_q = 1 and returns
/// E' = sum a_p l_p. Throws NotZeroDimensional when 1 is unreachable.
[[nodiscard]] UnitFunctional unit_root_functional(const PolySystem& sys,
                                                  const std::vector<BoundedFunctional>& root_basis,
                                                  const std::vector<Poly>& ideal_slice,
                                                  const DoublePoly& bezout_determinant);

/// All eight steps. Throws NotZeroDimensional (step 8) and InvalidSystem.
[[nodiscard]] SolveResult solve(const PolySystem& sys, const SolveOptions& options = {});

/// Re-checks the structural invariants of a result: dimension duality,
/// annihilation, the unit certificate, idempotence, unit action, and that the
/// power-span chain stabilizes onto the root span.
[[nodiscard]] VerificationReport verify(const PolySystem& sys, const SolveResult& result,
                                        const ExtensionContext& ctx);

/// Unit certificate alone: apply_y(E', det nabla f) - 1 lies in span(ideal_slice).
[[nodiscard]] bool unit_certificate_holds(const PolySystem& sys, const BoundedFunctional& unit,
                                          const std::vector<Poly>& ideal_slice);

}  // namespace rootfun
