#include "rootfun/functionals.hpp"

#include "rootfun/parallel.hpp"

#include <stdexcept>

namespace rootfun {

namespace {

void require_same_basis(const BoundedFunctional& a, const BoundedFunctional& b) {
    if (!(*a.basis == *b.basis)) throw std::invalid_argument("functional: basis mismatch");
}

std::string cache_key(const KVector& values) {
    std::string key;
    for (const auto& v : values) {
        key += v.to_string();
        key += ',';
    }
    return key;
}

}  // namespace

KVector coordinates(const Poly& p, const MonomialBasis& basis, const Field& field) {
    if (p.nvars() != basis.nvars()) throw std::invalid_argument("coordinates: variable count mismatch");
    KVector v(basis.size(), field.zero());
    for (const auto& [m, c] : p.terms()) {
        const auto i = basis.index(m);
        if (i != MonomialBasis::npos) v[i] = c;
    }
    return v;
}

Poly from_coordinates(std::span<const Scalar> coords, const MonomialBasis& basis) {
    if (coords.size() != basis.size()) throw std::invalid_argument("from_coordinates: length mismatch");
    Poly p(basis.nvars());
    for (std::size_t i = 0; i < coords.size(); ++i) p.add_term(basis[i], coords[i]);
    return p;
}

BoundedFunctional BoundedFunctional::zero(BasisPtr basis, const Field& field) {
    KVector v(basis->size(), field.zero());
    return {std::move(basis), std::move(v)};
}

BoundedFunctional BoundedFunctional::coordinate(BasisPtr basis, const Monomial& m, const Field& field) {
    auto l = zero(std::move(basis), field);
    l.values.at(l.basis->index(m)) = field.one();
    return l;
}

BoundedFunctional operator+(const BoundedFunctional& a, const BoundedFunctional& b) {
    require_same_basis(a, b);
    BoundedFunctional r = a;
    for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
    return r;
}

BoundedFunctional operator*(const Scalar& c, const BoundedFunctional& l) {
    BoundedFunctional r = l;
    for (auto& v : r.values) v *= c;
    return r;
}

Scalar apply(const BoundedFunctional& l, const Poly& p) {
    if (p.nvars() != l.basis->nvars()) throw std::invalid_argument("apply: variable count mismatch");
    if (l.values.empty()) throw std::invalid_argument("apply: empty functional");
    Scalar acc = l.values[0].field().zero();
    for (const auto& [m, c] : p.terms()) {
        const auto i = l.basis->index(m);
        if (i != MonomialBasis::npos && !l.values[i].is_zero()) acc += c * l.values[i];
    }
    return acc;
}

Poly apply_y(const BoundedFunctional& l, const DoublePoly& q) {
    const std::size_t n = q.n();
    if (n != l.basis->nvars()) throw std::invalid_argument("apply_y: variable count mismatch");
    Poly out(n);
    std::vector<std::uint32_t> xe(n);
    std::vector<std::uint32_t> ye(n);
    for (const auto& [m, c] : q.body().terms()) {
        for (std::size_t i = 0; i < n; ++i) {
            xe[i] = m[i];
            ye[i] = m[n + i];
        }
        const auto yi = l.basis->index(Monomial(ye));
        if (yi == MonomialBasis::npos || l.values[yi].is_zero()) continue;
        out.add_term(Monomial(xe), c * l.values[yi]);
    }
    return out;
}

bool annihilates_truncated_ideal(const BoundedFunctional& l, const PolySystem& sys) {
    const auto bound = l.basis->bound();
    for (std::size_t i = 0; i < sys.nvars(); ++i) {
        if (sys.degrees()[i] > bound) continue;
        const MonomialBasis multipliers(sys.nvars(), bound - sys.degrees()[i]);
        for (const auto& m : multipliers.monomials()) {
            const Poly shifted = sys[i] * Poly::monomial(m, sys.field().one());
            if (!apply(l, shifted).is_zero()) return false;
        }
    }
    return true;
}

ExtensionContext::ExtensionContext(const PolySystem& sys, unsigned threads) : sys_(sys), bezoutian_(sys) {
    const auto& basis = *sys_.basis();
    const std::size_t n = sys_.nvars();
    const auto bound = sys_.delta_f();
    columns_.resize(basis.size());
    parallel_for(basis.size(), threads, [&](std::size_t a) {
        const Poly g = Poly::monomial(basis[a], sys_.field().one());
        const DoublePoly b = bezoutian_.bordered_bounded(g, bound, bound);
        std::vector<std::uint32_t> xe(n);
        std::vector<std::uint32_t> ye(n);
        auto& col = columns_[a];
        col.reserve(b.body().size());
        for (const auto& [m, c] : b.body().terms()) {
            for (std::size_t i = 0; i < n; ++i) {
                xe[i] = m[i];
                ye[i] = m[n + i];
            }
            col.push_back(Entry{basis.index(Monomial(xe)), basis.index(Monomial(ye)), c});
        }
    });
}

ExtensionOperator ExtensionContext::build_operator(const BoundedFunctional& l) const {
    if (!(*l.basis == *sys_.basis())) throw std::invalid_argument("extension operator: functional basis mismatch");
    const std::size_t dim = columns_.size();
    KMatrix m(dim, dim, sys_.field());
    for (std::size_t a = 0; a < dim; ++a)
        for (const auto& e : columns_[a]) {
            const auto& lv = l.values[e.y_index];
            if (!lv.is_zero()) m(e.x_index, a) += e.coeff * lv;
        }
    return ExtensionOperator{std::move(m)};
}

std::shared_ptr<const ExtensionOperator> ExtensionContext::operator_of(const BoundedFunctional& l) const {
    const std::string key = cache_key(l.values);
    {
        std::lock_guard lock(cache_mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    auto built = std::make_shared<const ExtensionOperator>(build_operator(l));
    std::lock_guard lock(cache_mutex_);
    // A concurrent builder may have won; both values are equal, keep the first.
    auto [it, inserted] = cache_.try_emplace(key, std::move(built));
    return it->second;
}

std::size_t ExtensionContext::cache_size() const {
    std::lock_guard lock(cache_mutex_);
    return cache_.size();
}

ExtensionOperator extension_operator(const BoundedFunctional& l, const PolySystem& sys) {
    return ExtensionContext(sys).build_operator(l);
}

BoundedFunctional extend(const BoundedFunctional& l1, const ExtensionOperator& op2) {
    if (l1.values.size() != op2.matrix.rows()) throw std::invalid_argument("extend: dimension mismatch");
    return {l1.basis, op2.matrix.apply_left(l1.values)};
}

BoundedFunctional product(const BoundedFunctional& l1, const BoundedFunctional& l2, const ExtensionContext& ctx) {
    require_same_basis(l1, l2);
    return extend(l1, *ctx.operator_of(l2));
}

BoundedFunctional power(const BoundedFunctional& l, std::uint32_t k, const ExtensionContext& ctx) {
    if (k == 0) throw std::invalid_argument("power: exponent must be >= 1");
    if (k == 1) return l;
    const auto op = ctx.operator_of(l);
    BoundedFunctional acc = l;
    for (std::uint32_t i = 2; i <= k; ++i) acc = extend(acc, *op);
    return acc;
}

BoundedFunctional power(const BoundedFunctional& l, std::uint32_t k, const PolySystem& sys) {
    return power(l, k, ExtensionContext(sys));
}

}  // namespace rootfun
