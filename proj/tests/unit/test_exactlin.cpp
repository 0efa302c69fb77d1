#include "doctest.h"

#include "hopfcalc/polynomial.hpp"
#include "hopfcalc/subspace.hpp"

#include "oracle.hpp"

#include <random>

using namespace hopfcalc;

namespace {

const Field Q = Field::rational();

Vector vec(const Field& f, std::initializer_list<long> xs)
{
    Vector v;
    for (long x : xs)
        v.emplace_back(f, x);
    return v;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, long lo = -3, long hi = 3)
{
    std::uniform_int_distribution<long> dist(lo, hi);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = Scalar(f, dist(rng));
    return m;
}

}  // namespace

TEST_CASE("scalar arithmetic over Q and GF(p)")
{
    CHECK(Scalar::parse(Q, "-3/6") == Scalar(Q, mpq_class(-1, 2)));
    CHECK(Scalar::parse(Q, "4").to_string() == "4");
    const Field f7 = Field::prime(7);
    CHECK(Scalar(f7, 3L).inverse() == Scalar(f7, 5L));
    CHECK(Scalar(f7, -1L).residue() == 6);
    CHECK(Scalar(f7, mpq_class(1, 2)) == Scalar(f7, 4L));
    CHECK_THROWS_AS(Scalar(f7, mpq_class(1, 7)), std::domain_error);
    CHECK_THROWS_AS(Scalar(Q, 0L).inverse(), std::domain_error);
    CHECK_THROWS_AS(Scalar(Q, 1L) + Scalar(f7, 1L), std::invalid_argument);
    CHECK_THROWS(Field::prime(9));
    CHECK(is_prime(2305843009213693951ULL));
    CHECK_FALSE(is_prime(561));
    CHECK_THROWS(Scalar::parse(Q, "1/0"));
    CHECK_THROWS(Scalar::parse(Q, "abc"));
}

TEST_CASE("rref and solve on small hand examples")
{
    const Matrix a = Matrix::from_rows(Q, 2, {vec(Q, {1, 1}), vec(Q, {0, 0})});
    const auto x = solve(a, vec(Q, {2, 0}));
    REQUIRE(x);
    CHECK(*x == vec(Q, {2, 0}));
    CHECK_FALSE(solve(a, vec(Q, {2, 1})));

    const Subspace k = kernel(Matrix::from_rows(Q, 2, {vec(Q, {1, 1})}));
    REQUIRE(k.dim() == 1);
    const Vector kv = k.basis_vector(0);
    CHECK(kv[0] == -kv[1]);
    CHECK(!kv[0].is_zero());
}

TEST_CASE("rank agrees with an independent elimination")
{
    std::mt19937_64 rng(11);
    for (const Field& f : {Q, Field::prime(5), Field::prime(7)}) {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t r = 1 + rng() % 6;
            const std::size_t c = 1 + rng() % 6;
            Matrix m = random_matrix(f, r, c, rng);
            // make some rows dependent
            if (r > 2)
                m.set_row(r - 1, m.row(0) + m.row(1));
            std::vector<Vector> rows;
            for (std::size_t i = 0; i < r; ++i)
                rows.push_back(m.row(i));
            const RowEchelon e = rref(m);
            CHECK(e.rank == oracle::rank(f, rows));
            const Subspace ker = kernel(m);
            CHECK(ker.dim() + e.rank == c);
            for (const auto& v : ker.basis_vectors())
                CHECK(is_zero(m * v));
        }
    }
}

TEST_CASE("subspace sum, intersection and annihilator dimensions")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix a = random_matrix(Q, 1 + rng() % 4, 5, rng);
        const Matrix b = random_matrix(Q, 1 + rng() % 4, 5, rng);
        const Subspace u = Subspace::row_space(a);
        const Subspace v = Subspace::row_space(b);
        const Subspace s = sum(u, v);
        const Subspace i = intersect(u, v);
        CHECK(s.dim() + i.dim() == u.dim() + v.dim());
        CHECK(s.contains(u));
        CHECK(u.contains(i));
        CHECK(v.contains(i));
        const Subspace ann = u.annihilator();
        CHECK(ann.dim() + u.dim() == 5);
        for (const auto& w : ann.basis_vectors())
            for (const auto& x : u.basis_vectors())
                CHECK(dot(w, x).is_zero());
    }
}

TEST_CASE("canonical bases make equal subspaces identical")
{
    const Subspace a = Subspace::span(Q, 3, {vec(Q, {1, 2, 3}), vec(Q, {0, 1, 1})});
    const Subspace b = Subspace::span(Q, 3, {vec(Q, {1, 3, 4}), vec(Q, {2, 4, 6}), vec(Q, {1, 1, 2})});
    CHECK(a == b);
    CHECK(a.basis() == b.basis());
}

TEST_CASE("quotient coordinates and lifts")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Subspace whole = Subspace::row_space(random_matrix(Q, 4, 6, rng));
        std::vector<Vector> sub_gens;
        for (const auto& v : whole.basis_vectors())
            if (rng() % 2)
                sub_gens.push_back(v);
        const Subspace sub = Subspace::span(Q, 6, sub_gens);
        const Quotient quo(whole, sub);
        CHECK(quo.dim() == whole.dim() - sub.dim());
        for (std::size_t i = 0; i < quo.dim(); ++i) {
            const Vector e = unit_vector(Q, quo.dim(), i);
            CHECK(quo.coords(quo.lift(e)) == e);
            CHECK(whole.contains(quo.lift(e)));
        }
        for (const auto& v : sub.basis_vectors())
            CHECK(is_zero(quo.coords(v)));
    }
    CHECK_THROWS_AS(Quotient(Subspace::zero(Q, 2), Subspace::full(Q, 2)), std::invalid_argument);
}

TEST_CASE("characteristic polynomial matches det(xI - M) at sample points")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        const Matrix m = random_matrix(Q, n, n, rng);
        const Polynomial p = characteristic_polynomial(m);
        REQUIRE(p.size() == n + 1);
        CHECK(p.back().is_one());
        for (long x = -2; x <= 2; ++x) {
            std::vector<std::vector<mpq_class>> shifted(n, std::vector<mpq_class>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    shifted[i][j] = (i == j ? mpq_class(x) : mpq_class(0)) - m(i, j).rational();
            CHECK(evaluate(p, Scalar(Q, x)).rational() == oracle::det_q(shifted));
        }
        std::vector<std::vector<mpq_class>> raw(n, std::vector<mpq_class>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                raw[i][j] = m(i, j).rational();
        CHECK(determinant(m).rational() == oracle::det_q(raw));
    }
}

TEST_CASE("roots in the ground field")
{
    // (x - 1)(x + 2)(x - 1/3)(x^2 + 1)
    const Polynomial p{Scalar(Q, mpq_class(2, 3)), Scalar(Q, mpq_class(-7, 3)), Scalar(Q, mpq_class(4, 3)),
                       Scalar(Q, mpq_class(-4, 3)), Scalar(Q, mpq_class(2, 3)), Scalar(Q, 1L)};
    for (const auto& r : roots_in_field(p).roots)
        CHECK(evaluate(p, r).is_zero());
    const RootSearch rs = roots_in_field(p);
    CHECK(rs.complete);
    REQUIRE(rs.roots.size() == 3);
    CHECK(rs.roots[0] == Scalar(Q, -2L));
    CHECK(rs.roots[1] == Scalar(Q, mpq_class(1, 3)));
    CHECK(rs.roots[2] == Scalar(Q, 1L));

    // x^2 + 1 over GF(5) has roots 2 and 3; over GF(7) none.
    const Field f5 = Field::prime(5);
    CHECK(roots_in_field({Scalar(f5, 1L), Scalar(f5, 0L), Scalar(f5, 1L)}).roots.size() == 2);
    const Field f7 = Field::prime(7);
    CHECK(roots_in_field({Scalar(f7, 1L), Scalar(f7, 0L), Scalar(f7, 1L)}).roots.empty());

    // Large prime: x^2 - 4 has roots 2 and p - 2, found without enumeration.
    const Field big = Field::prime(2305843009213693951ULL);
    const RootSearch br = roots_in_field({Scalar(big, -4L), Scalar(big, 0L), Scalar(big, 1L)});
    CHECK(br.roots.size() == 2);
    for (const auto& r : br.roots)
        CHECK((r * r) == Scalar(big, 4L));
}
