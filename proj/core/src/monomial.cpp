#include "rootfun/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rootfun {

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exps_(std::move(exponents)), degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0})) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
    std::vector<std::uint32_t> e(nvars, 0);
    e.at(index) = power;
    return Monomial(std::move(e));
}

std::uint32_t Monomial::partial_degree(std::size_t first, std::size_t count) const {
    std::uint32_t d = 0;
    for (std::size_t i = first; i < first + count; ++i) d += exps_[i];
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial: variable count mismatch");
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    r.degree_ += b.degree_;
    return r;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += names[i];
        if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : m.exponents()) h = (h ^ e) * 1099511628211ULL;
    return h;
}

bool grlex_greater(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    const auto ea = a.exponents();
    const auto eb = b.exponents();
    return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

namespace {

// Appends every exponent vector of total degree `remaining` over positions
// [pos, n) in lex-descending order.
void enumerate_degree(std::vector<std::uint32_t>& cur, std::size_t pos, std::uint32_t remaining,
                      std::vector<Monomial>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        cur[pos] = 0;
        return;
    }
    for (std::uint32_t e = remaining + 1; e-- > 0;) {
        cur[pos] = e;
        enumerate_degree(cur, pos + 1, remaining - e, out);
    }
    cur[pos] = 0;
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t nvars, std::uint32_t bound) : nvars_(nvars), bound_(bound) {
    if (nvars == 0) throw std::invalid_argument("monomial basis: need at least one variable");
    std::vector<std::uint32_t> cur(nvars, 0);
    for (std::uint32_t t = 0; t <= bound; ++t) enumerate_degree(cur, 0, t, monomials_);
    index_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index(const Monomial& m) const {
    if (m.degree() > bound_ || m.nvars() != nvars_) return npos;
    return index_.at(m);
}

BasisPtr monomial_basis(std::size_t nvars, std::uint32_t bound) {
    return std::make_shared<const MonomialBasis>(nvars, bound);
}

std::uint64_t bounded_monomial_count(std::size_t nvars, std::uint32_t bound) {
    // C(n + k, n) computed incrementally; each partial product is itself a binomial.
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= nvars; ++i) c = c * (bound + i) / i;
    return c;
}

}  // namespace rootfun
