#include "rootfun/system.hpp"

namespace rootfun {

PolySystem::PolySystem(Field field, std::vector<Poly> polys) : field_(field), polys_(std::move(polys)) {
    const std::size_t n = polys_.size();
    if (n == 0) throw InvalidSystem("system: no polynomials");
    for (std::size_t i = 0; i < n; ++i) {
        const auto& f = polys_[i];
        if (f.nvars() != n)
            throw InvalidSystem("system: f" + std::to_string(i + 1) + " has " + std::to_string(f.nvars()) +
                                " variables, expected " + std::to_string(n));
        const auto deg = f.degree();
        if (!deg) throw InvalidSystem("system: f" + std::to_string(i + 1) + " is zero");
        if (*deg == 0) throw InvalidSystem("system: f" + std::to_string(i + 1) + " is constant");
        for (const auto& [m, c] : f.terms())
            if (!(c.field() == field_)) throw InvalidSystem("system: coefficient outside " + field_.name());
        degrees_.push_back(*deg);
        delta_f_ += *deg - 1;
    }
    basis_ = monomial_basis(n, delta_f_);
}

}  // namespace rootfun
