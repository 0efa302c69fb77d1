#include "doctest.h"

#include "hopfcalc/builders.hpp"

#include "oracle.hpp"

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

HopfAlgebra kc2(const Field& f = Q) { return group_algebra(f, cyclic_group(2), {"1", "g"}); }

}  // namespace

TEST_CASE("bundled algebras satisfy the Hopf axioms over Q, GF(5), GF(7)")
{
    for (const Field& f : {Q, Field::prime(5), Field::prime(7)})
        for (const auto& b : bundled_algebras(f)) {
            CAPTURE(b.id);
            CAPTURE(f.to_string());
            const CheckList report = validate_hopf(b.algebra);
            CHECK(report.checks.size() == 7);
            CHECK(report.all_passed());
        }
}

TEST_CASE("zero antipode on kC2 fails with witness g")
{
    HopfData d = kc2().data();
    d.antipode = Matrix(Q, 2, 2);
    const CheckList report = validate_hopf(HopfAlgebra(d));
    const CheckResult* r = report.find("antipode");
    REQUIRE(r);
    CHECK(r->failed());
    CHECK(r->witness.find("g") != std::string::npos);
    CHECK(report.find("associativity")->passed());
}

TEST_CASE("every single-constant mutation of H4 is detected")
{
    const HopfAlgebra h = sweedler_h4(Q);
    const std::size_t n = 4;
    int mutations = 0;
    for (std::size_t idx = 0; idx < n * n * n; idx += 5) {
        HopfData d = h.data();
        d.mult[idx] += Scalar(Q, 1L);
        CHECK_FALSE(validate_hopf(HopfAlgebra(d)).all_passed());
        HopfData c = h.data();
        c.comult[idx] += Scalar(Q, 1L);
        CHECK_FALSE(validate_hopf(HopfAlgebra(c)).all_passed());
        mutations += 2;
    }
    CHECK(mutations > 20);
}

TEST_CASE("group table validation")
{
    CHECK_THROWS_AS(group_algebra(Q, {{0, 1}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(group_algebra(Q, {{0, 1}, {1}}), std::invalid_argument);
    CHECK_NOTHROW(validate_group_table(symmetric_group_s3()));
    const GroupTable s3 = symmetric_group_s3();
    bool commutative = true;
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b)
            commutative = commutative && s3[a][b] == s3[b][a];
    CHECK_FALSE(commutative);
}

TEST_CASE("H4 is neither commutative nor cocommutative")
{
    const HopfAlgebra h = sweedler_h4(Q);
    CHECK(h.multiply(h.basis(2), h.basis(1)) == -Scalar::one(Q) * h.basis(3));
    CHECK(h.multiply(h.basis(1), h.basis(2)) == h.basis(3));
    const TensorElement dx = h.comultiply(h.basis(2));
    CHECK(dx[2 * 4 + 0].is_one());
    CHECK(dx[0 * 4 + 2].is_zero());
    CHECK(h.apply_antipode(h.basis(2)) == -Scalar::one(Q) * h.basis(3));
}

TEST_CASE("smash product and dual comultiplication on kC2")
{
    const HopfAlgebra h = kc2();
    const Functional t = vec(Q, {0, 1});
    CHECK(smud_product(h, t, h.basis(1)) == h.basis(1));
    CHECK(is_zero(smud_product(h, t, h.basis(0))));
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(smud_product(h, h.counit(), h.basis(i)) == h.basis(i));
    const Vector dt = dual_comult(h, t);
    CHECK(dt[1 * 2 + 1].is_zero());
    CHECK(dt[0 * 2 + 1].is_one());
    const Vector de = dual_comult(h, h.counit());
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(de[i * 2 + j] == h.counit()[i] * h.counit()[j]);
    CHECK(convolution(h, h.counit(), t) == t);
    CHECK(convolution(h, t, h.counit()) == t);
}

TEST_CASE("characters of the bundled algebras")
{
    SUBCASE("kC2 has eps and sgn")
    {
        const CharacterSet cs = find_characters(kc2());
        CHECK(cs.complete);
        REQUIRE(cs.characters.size() == 2);
        CHECK(cs.characters[0].functional == kc2().counit());
        CHECK(cs.characters[1].functional == vec(Q, {1, -1}));
    }
    SUBCASE("kC3 over Q has only eps, over GF(7) three")
    {
        CHECK(find_characters(group_algebra(Q, cyclic_group(3))).characters.size() == 1);
        CHECK(find_characters(group_algebra(Field::prime(7), cyclic_group(3))).characters.size() == 3);
    }
    SUBCASE("H4 has two characters that vanish on x")
    {
        const CharacterSet cs = find_characters(sweedler_h4(Q));
        REQUIRE(cs.characters.size() == 2);
        for (const auto& c : cs.characters) {
            CHECK(c.functional[2].is_zero());
            CHECK(c.functional[3].is_zero());
        }
        CHECK(cs.characters[1].functional[1] == Scalar(Q, -1L));
        CHECK_FALSE(separates_points(sweedler_h4(Q), cs));
    }
    SUBCASE("function algebras have one character per point")
    {
        const HopfAlgebra h = function_algebra(Q, symmetric_group_s3());
        const CharacterSet cs = find_characters(h);
        CHECK(cs.characters.size() == 6);
        CHECK(separates_points(h, cs));
        for (const auto& c : cs.characters) {
            std::size_t ones = 0;
            for (const auto& v : c.functional)
                ones += v.is_one() ? 1 : 0;
            CHECK(ones == 1);
        }
    }
    SUBCASE("k[C2xC2] over GF(5)")
    {
        CHECK(find_characters(group_algebra(Field::prime(5), direct_product(cyclic_group(2), cyclic_group(2))))
                  .characters.size() == 4);
    }
}

TEST_CASE("every found character is multiplicative and the list is exhaustive on small GF(p)")
{
    // Brute force over all functionals with phi(1) = 1 for n <= 3, p = 5.
    const Field f5 = Field::prime(5);
    for (const auto& b : bundled_algebras(f5)) {
        const HopfAlgebra& h = b.algebra;
        if (h.dim() > 4)
            continue;
        CAPTURE(b.id);
        const CharacterSet cs = find_characters(h);
        for (const auto& c : cs.characters)
            CHECK(check_character(h, c.functional).passed());
        std::size_t brute = 0;
        std::vector<long> digits(h.dim(), 0);
        for (;;) {
            Functional phi;
            for (long dg : digits)
                phi.emplace_back(f5, dg);
            bool ok = evaluate(phi, h.unit()).is_one();
            for (std::size_t i = 0; ok && i < h.dim(); ++i)
                for (std::size_t j = 0; ok && j < h.dim(); ++j)
                    ok = evaluate(phi, h.multiply(h.basis(i), h.basis(j))) == phi[i] * phi[j];
            if (ok)
                ++brute;
            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] == 5)
                digits[k++] = 0;
            if (k == digits.size())
                break;
        }
        CHECK(cs.characters.size() == brute);
    }
}

TEST_CASE("star product, inverses and translations")
{
    for (const auto& b : bundled_algebras(Q)) {
        CAPTURE(b.id);
        const HopfAlgebra& h = b.algebra;
        const CharacterSet cs = find_characters(h);
        const Character eps = counit_character(h);
        for (const auto& phi : cs.characters) {
            CHECK(star_product(h, eps, phi) == phi);
            CHECK(star_product(h, phi, eps) == phi);
            const Character inv = character_inverse(h, phi);
            CHECK(star_product(h, phi, inv) == eps);
            CHECK(star_product(h, inv, phi) == eps);
            // L is an algebra map and a right comodule map
            for (std::size_t i = 0; i < h.dim(); ++i) {
                for (std::size_t j = 0; j < h.dim(); ++j)
                    CHECK(phi.translation * h.multiply(h.basis(i), h.basis(j)) ==
                          h.multiply(phi.translation * h.basis(i), phi.translation * h.basis(j)));
                const TensorElement lhs = h.comultiply(phi.translation * h.basis(i));
                const TensorElement di = h.comultiply(h.basis(i));
                TensorElement rhs = h.tensor_zero();
                for (std::size_t p = 0; p < h.dim(); ++p)
                    for (std::size_t q = 0; q < h.dim(); ++q)
                        if (!di[p * h.dim() + q].is_zero())
                            add_scaled(rhs, di[p * h.dim() + q], h.tensor(phi.translation * h.basis(p), h.basis(q)));
                CHECK(lhs == rhs);
            }
            const Matrix r = right_translation(h, phi);
            CHECK(r * h.antipode() == h.antipode() * phi.translation);
            for (const auto& psi : cs.characters) {
                const Character st = star_product(h, phi, psi);
                CHECK(cs.index_of(st.functional) != CharacterSet::npos);
                CHECK(st.translation == phi.translation * psi.translation);
                // (phi * psi)(a) = psi(phi * a)
                for (std::size_t i = 0; i < h.dim(); ++i)
                    CHECK(evaluate(st.functional, h.basis(i)) ==
                          evaluate(psi.functional, smud_product(h, phi.functional, h.basis(i))));
            }
        }
    }
    const HopfAlgebra h = kc2();
    const Character sgn = make_character(h, vec(Q, {1, -1}));
    CHECK(star_product(h, sgn, sgn) == counit_character(h));
    CHECK_THROWS_AS(make_character(h, vec(Q, {1, 2})), std::invalid_argument);
}

TEST_CASE("translations on function algebras are group translations")
{
    const GroupTable s3 = symmetric_group_s3();
    const HopfAlgebra h = function_algebra(Q, s3);
    for (std::size_t g = 0; g < 6; ++g) {
        const Character phi = make_character(h, unit_vector(Q, 6, g));
        // (L_g f)(x) = f(gx): on indicators L(delta_y) = delta_{g^-1 y}
        for (std::size_t y = 0; y < 6; ++y) {
            const std::size_t x = s3[group_inverse(s3, g)][y];
            CHECK(phi.translation * h.basis(y) == h.basis(x));
        }
    }
}
