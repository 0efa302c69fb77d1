#pragma once

// Independent test-side oracles. These use plain GMP / machine arithmetic and
// naive algorithms so library bugs do not cancel out.

#include "hopfcalc/hopf.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline std::size_t rank_q(std::vector<std::vector<mpq_class>> rows)
{
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0)
                continue;
            const mpq_class f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::size_t rank_p(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p)
{
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t q = rank;
        while (q < rows.size() && rows[q][c] == 0)
            ++q;
        if (q == rows.size())
            continue;
        std::swap(rows[q], rows[rank]);
        const std::uint64_t inv = powmod(rows[rank][c], p - 2, p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0)
                continue;
            const std::uint64_t f = mulmod(rows[r][c], inv, p);
            for (std::size_t k = c; k < cols; ++k)
                rows[r][k] = (rows[r][k] + p - mulmod(f, rows[rank][k], p)) % p;
        }
        ++rank;
    }
    return rank;
}

/// Rank of a family of library vectors, recomputed from raw values.
inline std::size_t rank(const hopfcalc::Field& field, const std::vector<hopfcalc::Vector>& vs)
{
    if (vs.empty())
        return 0;
    if (field.is_rational()) {
        std::vector<std::vector<mpq_class>> rows;
        for (const auto& v : vs) {
            std::vector<mpq_class> r;
            for (const auto& s : v)
                r.push_back(s.rational());
            rows.push_back(std::move(r));
        }
        return rank_q(std::move(rows));
    }
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& v : vs) {
        std::vector<std::uint64_t> r;
        for (const auto& s : v)
            r.push_back(s.residue());
        rows.push_back(std::move(r));
    }
    return rank_p(std::move(rows), field.modulus());
}

/// Determinant by permutation expansion (small matrices only).
inline mpq_class det_q(const std::vector<std::vector<mpq_class>>& m)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpq_class total = 0;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    sign = -sign;
        mpq_class term = sign;
        for (std::size_t i = 0; i < n; ++i)
            term *= m[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// N = span{a S(b_1) (x) b_2} for the Woronowicz construction, straight from
/// the structure tensors.
inline std::vector<hopfcalc::Vector> woronowicz_n(const hopfcalc::HopfAlgebra& h,
                                                  const std::vector<hopfcalc::Vector>& ideal_basis)
{
    using hopfcalc::Scalar;
    const std::size_t n = h.dim();
    std::vector<hopfcalc::Vector> out;
    for (const auto& b : ideal_basis)
        for (std::size_t a = 0; a < n; ++a) {
            hopfcalc::Vector v(n * n, Scalar::zero(h.field()));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t p = 0; p < n; ++p)
                    for (std::size_t q = 0; q < n; ++q) {
                        const Scalar c = b[i] * h.comult_coeff(i, p, q);
                        if (c.is_zero())
                            continue;
                        // a S(e_p) = sum_s S[s][p] a e_s
                        for (std::size_t s = 0; s < n; ++s) {
                            const Scalar sp = h.antipode()(s, p);
                            if (sp.is_zero())
                                continue;
                            for (std::size_t k = 0; k < n; ++k)
                                if (!h.mult_coeff(a, s, k).is_zero())
                                    v[k * n + q] += c * sp * h.mult_coeff(a, s, k);
                        }
                    }
            out.push_back(std::move(v));
        }
    return out;
}

}  // namespace oracle
