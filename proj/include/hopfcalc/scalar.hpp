#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace hopfcalc {

/// Ground field descriptor: the rationals or a prime field GF(p) with p < 2^61.
class Field {
public:
    enum class Kind { rational, prime };

    Field() = default;

    static Field rational() { return Field{}; }
    /// Throws std::invalid_argument if p is not a prime below 2^61.
    static Field prime(std::uint64_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == Kind::rational; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    /// "rational" or "gf <p>", the same spelling the definition files use.
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    Kind kind_ = Kind::rational;
    std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept canonical by GMP (lowest terms,
/// positive denominator); residues are kept in [0, p).
class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}
    Scalar(const Field& field, long value);
    Scalar(const Field& field, const mpq_class& value);

    static Scalar zero(const Field& field) { return Scalar(field, 0L); }
    static Scalar one(const Field& field) { return Scalar(field, 1L); }
    /// Accepts "n" or "p/q" with optional leading sign. Throws std::invalid_argument.
    static Scalar parse(const Field& field, std::string_view text);

    const Field& field() const noexcept { return field_; }

    bool is_zero() const;
    bool is_one() const;

    /// Throws std::domain_error on zero.
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
    Scalar operator-() const;

    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Canonical text: "-3/4", "0", or the residue in [0, p).
    std::string to_string() const;

    /// Rational value; only valid over the rationals.
    const mpq_class& rational() const;
    /// Residue value; only valid over GF(p).
    std::uint64_t residue() const;

private:
    void check_same_field(const Scalar& other) const;

    Field field_;
    std::variant<mpq_class, std::uint64_t> value_;
};

}  // namespace hopfcalc
