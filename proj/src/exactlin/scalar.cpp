#include "hopfcalc/scalar.hpp"

#include <stdexcept>

namespace hopfcalc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m)
{
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

u64 reduce_integer(const mpz_class& z, u64 p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0)
            return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // These witnesses are deterministic for all 64-bit n.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p)
{
    if (p >= (1ULL << 61))
        throw std::invalid_argument("field modulus must be below 2^61");
    if (!is_prime(p))
        throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
    return Field(Kind::prime, p);
}

std::string Field::to_string() const
{
    return is_rational() ? std::string("rational") : "gf " + std::to_string(modulus_);
}

Scalar::Scalar(const Field& field, long value) : Scalar(field, mpq_class(value)) {}

Scalar::Scalar(const Field& field, const mpq_class& value) : field_(field)
{
    if (field.is_rational()) {
        mpq_class q(value);
        q.canonicalize();
        value_ = std::move(q);
        return;
    }
    const u64 p = field.modulus();
    const u64 den = reduce_integer(value.get_den(), p);
    if (den == 0)
        throw std::domain_error("denominator " + value.get_den().get_str() + " vanishes in GF(" +
                                std::to_string(p) + ")");
    const u64 num = reduce_integer(value.get_num(), p);
    value_ = mul_mod(num, pow_mod(den, p - 2, p), p);
}

Scalar Scalar::parse(const Field& field, std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty scalar");
    auto valid_integer = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s) {
            if (c < '0' || c > '9')
                return false;
        }
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false))
        throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    std::string num_str(num);
    if (!num_str.empty() && num_str.front() == '+')
        num_str.erase(0, 1);
    mpz_class n(num_str, 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Scalar(field, mpq_class(n, d));
}

bool Scalar::is_zero() const
{
    if (const auto* q = std::get_if<mpq_class>(&value_))
        return sgn(*q) == 0;
    return std::get<u64>(value_) == 0;
}

bool Scalar::is_one() const
{
    if (const auto* q = std::get_if<mpq_class>(&value_))
        return *q == 1;
    return std::get<u64>(value_) == 1 % field_.modulus();
}

void Scalar::check_same_field(const Scalar& other) const
{
    if (!(field_ == other.field_))
        throw std::invalid_argument("arithmetic between scalars of different fields");
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero");
    Scalar out = *this;
    if (auto* q = std::get_if<mpq_class>(&out.value_)) {
        *q = 1 / *q;
        q->canonicalize();
    } else {
        const u64 p = field_.modulus();
        out.value_ = pow_mod(std::get<u64>(value_), p - 2, p);
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    check_same_field(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q += std::get<mpq_class>(rhs.value_);
    } else {
        const u64 p = field_.modulus();
        const u64 s = std::get<u64>(value_) + std::get<u64>(rhs.value_);
        value_ = s >= p ? s - p : s;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    check_same_field(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q -= std::get<mpq_class>(rhs.value_);
    } else {
        const u64 p = field_.modulus();
        const u64 a = std::get<u64>(value_);
        const u64 b = std::get<u64>(rhs.value_);
        value_ = a >= b ? a - b : a + p - b;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    check_same_field(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q *= std::get<mpq_class>(rhs.value_);
    } else {
        value_ = mul_mod(std::get<u64>(value_), std::get<u64>(rhs.value_), field_.modulus());
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    check_same_field(rhs);
    return *this *= rhs.inverse();
}

Scalar Scalar::operator-() const
{
    Scalar out = *this;
    if (auto* q = std::get_if<mpq_class>(&out.value_)) {
        *q = -*q;
    } else {
        const u64 v = std::get<u64>(value_);
        out.value_ = v == 0 ? 0 : field_.modulus() - v;
    }
    return out;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (!(a.field_ == b.field_))
        return false;
    return a.value_ == b.value_;
}

std::string Scalar::to_string() const
{
    if (const auto* q = std::get_if<mpq_class>(&value_))
        return q->get_str();
    return std::to_string(std::get<u64>(value_));
}

const mpq_class& Scalar::rational() const
{
    if (const auto* q = std::get_if<mpq_class>(&value_))
        return *q;
    throw std::logic_error("rational() called on a GF(p) scalar");
}

std::uint64_t Scalar::residue() const
{
    if (const auto* r = std::get_if<u64>(&value_))
        return *r;
    throw std::logic_error("residue() called on a rational scalar");
}

}  // namespace hopfcalc
