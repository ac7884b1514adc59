#include "rootfun/scalar.hpp"

#include <ostream>

namespace rootfun {

namespace op_counter {
namespace {
std::atomic<std::uint64_t> g_ops{0};
}
std::uint64_t value() noexcept { return g_ops.load(std::memory_order_relaxed); }
void reset() noexcept { g_ops.store(0, std::memory_order_relaxed); }
void add(std::uint64_t n) noexcept { g_ops.fetch_add(n, std::memory_order_relaxed); }
}  // namespace op_counter

namespace {

const ModInt& same_field(const ModInt& a, const ModInt& b) {
    if (a.prime != b.prime) throw std::logic_error("scalar: mixed prime fields");
    return b;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (exp != 0) {
        if (exp & 1U) r = r * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return static_cast<std::uint32_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Scalar::Scalar(mpq_class q) : rep_(std::move(q)) { std::get<0>(rep_).canonicalize(); }

Scalar::Scalar(ModInt m) : rep_(m) {}

bool Scalar::is_zero() const noexcept {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return sgn(*q) == 0;
    return std::get<ModInt>(rep_).value == 0;
}

bool Scalar::is_one() const noexcept {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q == 1;
    return std::get<ModInt>(rep_).value == 1;
}

Field Scalar::field() const noexcept {
    if (is_rational()) return Field::rationals();
    // The residue already carries a validated prime.
    Field f;
    f.kind_ = Field::Kind::prime;
    f.prime_ = std::get<ModInt>(rep_).prime;
    return f;
}

const mpq_class& Scalar::as_rational() const { return std::get<mpq_class>(rep_); }
const ModInt& Scalar::as_modular() const { return std::get<ModInt>(rep_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("scalar: inverse of zero");
    op_counter::add(1);
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return Scalar(mpq_class(1) / *q);
    const auto& m = std::get<ModInt>(rep_);
    return Scalar(ModInt{pow_mod(m.value, m.prime - 2, m.prime), m.prime});
}

Scalar& Scalar::operator+=(const Scalar& o) {
    op_counter::add(1);
    if (rep_.index() != o.rep_.index()) throw std::logic_error("scalar: mixed fields");
    if (auto* q = std::get_if<mpq_class>(&rep_)) {
        *q += std::get<mpq_class>(o.rep_);
        return *this;
    }
    auto& m = std::get<ModInt>(rep_);
    const auto& n = same_field(m, std::get<ModInt>(o.rep_));
    m.value = static_cast<std::uint32_t>((std::uint64_t{m.value} + n.value) % m.prime);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    op_counter::add(1);
    if (rep_.index() != o.rep_.index()) throw std::logic_error("scalar: mixed fields");
    if (auto* q = std::get_if<mpq_class>(&rep_)) {
        *q -= std::get<mpq_class>(o.rep_);
        return *this;
    }
    auto& m = std::get<ModInt>(rep_);
    const auto& n = same_field(m, std::get<ModInt>(o.rep_));
    m.value = static_cast<std::uint32_t>((std::uint64_t{m.value} + m.prime - n.value) % m.prime);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    op_counter::add(1);
    if (rep_.index() != o.rep_.index()) throw std::logic_error("scalar: mixed fields");
    if (auto* q = std::get_if<mpq_class>(&rep_)) {
        *q *= std::get<mpq_class>(o.rep_);
        return *this;
    }
    auto& m = std::get<ModInt>(rep_);
    const auto& n = same_field(m, std::get<ModInt>(o.rep_));
    m.value = static_cast<std::uint32_t>(std::uint64_t{m.value} * n.value % m.prime);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return Scalar(mpq_class(-*q));
    const auto& m = std::get<ModInt>(rep_);
    return Scalar(ModInt{m.value == 0 ? 0 : m.prime - m.value, m.prime});
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.rep_.index() != b.rep_.index()) return false;
    if (const auto* q = std::get_if<mpq_class>(&a.rep_)) return *q == std::get<mpq_class>(b.rep_);
    return std::get<ModInt>(a.rep_) == std::get<ModInt>(b.rep_);
}

std::string Scalar::to_string() const {
    if (const auto* q = std::get_if<mpq_class>(&rep_)) return q->get_str();
    return std::to_string(std::get<ModInt>(rep_).value);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Field Field::prime_field(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31U) || !is_prime(p))
        throw NotPrime("field: " + std::to_string(p) + " is not a prime below 2^31");
    Field f;
    f.kind_ = Kind::prime;
    f.prime_ = static_cast<std::uint32_t>(p);
    return f;
}

Scalar Field::from_int(long long v) const {
    if (kind_ == Kind::rational) return Scalar(mpq_class(mpz_class(std::to_string(v))));
    long long r = v % static_cast<long long>(prime_);
    if (r < 0) r += prime_;
    return Scalar(ModInt{static_cast<std::uint32_t>(r), prime_});
}

Scalar Field::from_mpz(const mpz_class& v) const {
    if (kind_ == Kind::rational) return Scalar(mpq_class(v));
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), prime_);
    return Scalar(ModInt{static_cast<std::uint32_t>(r.get_ui()), prime_});
}

Scalar Field::parse(std::string_view text) const {
    auto parse_int = [](std::string_view s) {
        mpz_class z;
        const std::string str(s);
        bool ok = !str.empty();
        std::size_t start = (ok && (str[0] == '-' || str[0] == '+')) ? 1 : 0;
        ok = ok && start < str.size();
        for (std::size_t i = start; ok && i < str.size(); ++i) ok = str[i] >= '0' && str[i] <= '9';
        if (!ok || z.set_str(str[0] == '+' ? str.substr(1) : str, 10) != 0)
            throw Error("scalar: malformed number '" + str + "'");
        return z;
    };
    const auto slash = text.find('/');
    const mpz_class num = parse_int(text.substr(0, slash));
    const mpz_class den = slash == std::string_view::npos ? mpz_class(1) : parse_int(text.substr(slash + 1));
    const Scalar d = from_mpz(den);
    if (d.is_zero()) throw Error("scalar: zero denominator in '" + std::string(text) + "'");
    if (kind_ == Kind::rational) return Scalar(mpq_class(num, den));
    return from_mpz(num) / d;
}

std::string Field::name() const {
    return kind_ == Kind::rational ? std::string("Q") : "Fp " + std::to_string(prime_);
}

}  // namespace rootfun
