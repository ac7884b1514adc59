#pragma once

#include "rootfun/monomial.hpp"
#include "rootfun/poly.hpp"

#include <vector>

namespace rootfun {

class InvalidSystem : public Error {
public:
    using Error::Error;
};

/// A square system f = (f_1..f_n) in n variables over a single field, with its
/// derived degrees d_i, the bound delta_f = sum(d_i - 1), and D = C(n + delta_f, n).
class PolySystem {
public:
    /// Throws InvalidSystem if the count differs from nvars, or if any f_i is
    /// zero or constant.
    PolySystem(Field field, std::vector<Poly> polys);

    [[nodiscard]] const Field& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t nvars() const noexcept { return polys_.size(); }
    [[nodiscard]] const std::vector<Poly>& polys() const noexcept { return polys_; }
    [[nodiscard]] const Poly& operator[](std::size_t i) const { return polys_[i]; }
    [[nodiscard]] const std::vector<std::uint32_t>& degrees() const noexcept { return degrees_; }
    [[nodiscard]] std::uint32_t delta_f() const noexcept { return delta_f_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return basis_->size(); }
    /// MonomialBasis(delta_f), shared by everything derived from this system.
    [[nodiscard]] const BasisPtr& basis() const noexcept { return basis_; }

    friend bool operator==(const PolySystem& a, const PolySystem& b) {
        return a.field_ == b.field_ && a.polys_ == b.polys_;
    }

private:
    Field field_;
    std::vector<Poly> polys_;
    std::vector<std::uint32_t> degrees_;
    std::uint32_t delta_f_ = 0;
    BasisPtr basis_;
};

}  // namespace rootfun
