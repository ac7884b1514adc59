#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace rootfun {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
public:
    using Error::Error;
};

/// Running count of scalar field operations (add, sub, mul, div, inverse).
/// Used to measure algorithmic cost independently of wall-clock time.
namespace op_counter {
std::uint64_t value() noexcept;
void reset() noexcept;
void add(std::uint64_t n) noexcept;
}  // namespace op_counter

/// Residue modulo a prime p < 2^31, stored as the least non-negative representative.
struct ModInt {
    std::uint32_t value = 0;
    std::uint32_t prime = 0;
    friend bool operator==(const ModInt&, const ModInt&) = default;
};

class Field;

/// Element of the coefficient field: a reduced rational or a prime-field residue.
/// Mixing elements of different fields throws std::logic_error.
class Scalar {
public:
    Scalar() = default;  // rational zero
    explicit Scalar(mpq_class q);
    explicit Scalar(ModInt m);

    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_one() const noexcept;
    [[nodiscard]] bool is_rational() const noexcept { return rep_.index() == 0; }
    [[nodiscard]] Field field() const noexcept;

    [[nodiscard]] const mpq_class& as_rational() const;
    [[nodiscard]] const ModInt& as_modular() const;

    /// Multiplicative inverse; throws std::domain_error on zero.
    [[nodiscard]] Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "p/q" (or "p" when q == 1) for rationals; the residue for prime fields.
    [[nodiscard]] std::string to_string() const;

private:
    std::variant<mpq_class, ModInt> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// The coefficient field itself: Q or GF(p).
class Field {
public:
    enum class Kind { rational, prime };

    Field() = default;  // Q
    static Field rationals() { return Field{}; }
    /// Throws NotPrime unless p is a prime below 2^31.
    static Field prime_field(std::uint64_t p);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] std::uint32_t prime() const noexcept { return prime_; }

    [[nodiscard]] Scalar zero() const { return from_int(0); }
    [[nodiscard]] Scalar one() const { return from_int(1); }
    [[nodiscard]] Scalar from_int(long long v) const;
    [[nodiscard]] Scalar from_mpz(const mpz_class& v) const;
    /// Parses "a", "-a" or "a/b" with decimal integers; throws Error on bad input
    /// or a zero denominator (or one that vanishes mod p).
    [[nodiscard]] Scalar parse(std::string_view text) const;

    /// "Q" or "Fp <p>".
    [[nodiscard]] std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;

    Kind kind_ = Kind::rational;
    std::uint32_t prime_ = 0;
};

[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

}  // namespace rootfun
