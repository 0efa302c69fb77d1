#include "hopfcalc/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopfcalc {

namespace {

void trim(Polynomial& p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b)
{
    if (a.empty() || b.empty())
        return {};
    Polynomial out(a.size() + b.size() - 1, Scalar::zero(a.front().field()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

/// Remainder and quotient of a by a nonzero b.
std::pair<Polynomial, Polynomial> poly_divmod(Polynomial a, const Polynomial& b)
{
    trim(a);
    if (b.empty())
        throw std::domain_error("polynomial division by zero");
    const Field field = b.front().field();
    if (a.size() < b.size())
        return {Polynomial{}, a};
    Polynomial quotient(a.size() - b.size() + 1, Scalar::zero(field));
    const Scalar lead_inv = b.back().inverse();
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        const Scalar factor = a.back() * lead_inv;
        quotient[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= factor * b[i];
        trim(a);
    }
    trim(quotient);
    return {quotient, a};
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& b) { return poly_divmod(a, b).second; }

Polynomial monic(Polynomial p)
{
    trim(p);
    if (p.empty())
        return p;
    const Scalar inv = p.back().inverse();
    for (auto& c : p)
        c *= inv;
    return p;
}

Polynomial poly_gcd(Polynomial a, Polynomial b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Polynomial r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

Polynomial pow_mod(Polynomial base, std::uint64_t exp, const Polynomial& modulus)
{
    const Field field = modulus.front().field();
    Polynomial result{Scalar::one(field)};
    base = poly_mod(base, modulus);
    while (exp > 0) {
        if (exp & 1U)
            result = poly_mod(poly_mul(result, base), modulus);
        base = poly_mod(poly_mul(base, base), modulus);
        exp >>= 1U;
    }
    return result;
}

Polynomial sub(Polynomial a, const Polynomial& b)
{
    if (a.size() < b.size())
        a.resize(b.size(), Scalar::zero(b.front().field()));
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

void split_linear_factors(const Polynomial& g, std::vector<Scalar>& roots)
{
    const Field field = g.front().field();
    const std::size_t degree = g.size() - 1;
    if (degree == 0)
        return;
    if (degree == 1) {
        roots.push_back(-g[0] / g[1]);
        return;
    }
    const std::uint64_t p = field.modulus();
    for (std::uint64_t shift = 0;; ++shift) {
        Polynomial linear{Scalar(field, mpq_class(static_cast<unsigned long>(shift % p))), Scalar::one(field)};
        Polynomial h = pow_mod(linear, (p - 1) / 2, g);
        h = poly_gcd(g, sub(h, Polynomial{Scalar::one(field)}));
        if (h.size() > 1 && h.size() < g.size()) {
            split_linear_factors(h, roots);
            split_linear_factors(monic(poly_divmod(g, h).first), roots);
            return;
        }
    }
}

std::vector<mpz_class> divisors(const mpz_class& value)
{
    mpz_class n = abs(value);
    std::vector<mpz_class> small;
    std::vector<mpz_class> large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

RootSearch rational_roots(const Polynomial& p)
{
    const Field field = Field::rational();
    mpz_class common = 1;
    for (const auto& c : p)
        common = lcm(common, c.rational().get_den());
    std::vector<mpz_class> ints;
    for (const auto& c : p)
        ints.push_back(mpz_class(c.rational() * common));

    RootSearch out;
    std::size_t lowest = 0;
    while (lowest < ints.size() && ints[lowest] == 0)
        ++lowest;
    if (lowest > 0)
        out.roots.push_back(Scalar::zero(field));
    const mpz_class& constant = ints[lowest];
    const mpz_class& leading = ints.back();
    static const mpz_class factor_limit("100000000000000");
    if (abs(constant) > factor_limit || abs(leading) > factor_limit) {
        out.complete = false;
        return out;
    }
    Polynomial reduced(p.begin() + static_cast<std::ptrdiff_t>(lowest), p.end());
    for (const auto& num : divisors(constant)) {
        for (const auto& den : divisors(leading)) {
            for (int sign : {1, -1}) {
                const Scalar candidate(field, mpq_class(sign * num, den));
                if (evaluate(reduced, candidate).is_zero() &&
                    std::find(out.roots.begin(), out.roots.end(), candidate) == out.roots.end())
                    out.roots.push_back(candidate);
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const Scalar& a, const Scalar& b) { return a.rational() < b.rational(); });
    return out;
}

RootSearch prime_field_roots(const Polynomial& p)
{
    const Field field = p.front().field();
    RootSearch out;
    const std::uint64_t modulus = field.modulus();
    if (modulus <= (1U << 16)) {
        for (std::uint64_t x = 0; x < modulus; ++x) {
            const Scalar s(field, mpq_class(static_cast<unsigned long>(x)));
            if (evaluate(p, s).is_zero())
                out.roots.push_back(s);
        }
        return out;
    }
    // gcd(p, x^q - x) collects the distinct linear factors.
    const Polynomial f = monic(p);
    Polynomial x{Scalar::zero(field), Scalar::one(field)};
    Polynomial g = poly_gcd(f, sub(pow_mod(x, modulus, f), x));
    split_linear_factors(g, out.roots);
    std::sort(out.roots.begin(), out.roots.end(),
              [](const Scalar& a, const Scalar& b) { return a.residue() < b.residue(); });
    return out;
}

}  // namespace

Scalar evaluate(const Polynomial& p, const Scalar& x)
{
    Scalar acc = Scalar::zero(x.field());
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial characteristic_polynomial(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const Field field = m.field();
    const std::size_t n = m.rows();
    Matrix h = m;
    // Similarity reduction to upper Hessenberg form.
    for (std::size_t col = 0; col + 2 < n; ++col) {
        const std::size_t target = col + 1;
        std::size_t sel = target;
        while (sel < n && h(sel, col).is_zero())
            ++sel;
        if (sel == n)
            continue;
        if (sel != target) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(h(sel, c), h(target, c));
            for (std::size_t r = 0; r < n; ++r)
                std::swap(h(r, sel), h(r, target));
        }
        const Scalar pivot_inv = h(target, col).inverse();
        for (std::size_t r = target + 1; r < n; ++r) {
            if (h(r, col).is_zero())
                continue;
            const Scalar u = h(r, col) * pivot_inv;
            for (std::size_t c = 0; c < n; ++c)
                h(r, c) -= u * h(target, c);
            for (std::size_t rr = 0; rr < n; ++rr)
                h(rr, target) += u * h(rr, r);
        }
    }
    // p_k is the characteristic polynomial of the leading k x k block.
    std::vector<Polynomial> polys;
    polys.push_back(Polynomial{Scalar::one(field)});
    for (std::size_t k = 1; k <= n; ++k) {
        Polynomial next = poly_mul(Polynomial{-h(k - 1, k - 1), Scalar::one(field)}, polys[k - 1]);
        Scalar chain = Scalar::one(field);
        for (std::size_t i = k - 1; i >= 1; --i) {
            chain *= h(i, i - 1);
            const Scalar coeff = h(i - 1, k - 1) * chain;
            if (!coeff.is_zero()) {
                Polynomial term = polys[i - 1];
                for (auto& c : term)
                    c *= coeff;
                next = sub(next, term);
            }
        }
        if (next.size() < k + 1)
            next.resize(k + 1, Scalar::zero(field));
        polys.push_back(std::move(next));
    }
    Polynomial out = polys.back();
    trim(out);
    return out;
}

Scalar determinant(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Scalar det = Scalar::one(m.field());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a(sel, col).is_zero())
            ++sel;
        if (sel == n)
            return Scalar::zero(m.field());
        if (sel != col) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(sel, c), a(col, c));
            det = -det;
        }
        det *= a(col, col);
        const Scalar inv = a(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero())
                continue;
            const Scalar f = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c)
                a(r, c) -= f * a(col, c);
        }
    }
    return det;
}

RootSearch roots_in_field(const Polynomial& p)
{
    Polynomial q = p;
    trim(q);
    if (q.empty())
        throw std::invalid_argument("roots of the zero polynomial");
    if (q.size() == 1)
        return {};
    return q.front().field().is_rational() ? rational_roots(q) : prime_field_roots(q);
}

}  // namespace hopfcalc
