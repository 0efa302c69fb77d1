#include "doctest.h"

#include "hopfcalc/builders.hpp"
#include "hopfcalc/calculus.hpp"

#include "oracle.hpp"

#include <random>

using namespace hopfcalc;

namespace {

const Field Q = Field::rational();

std::shared_ptr<const HopfAlgebra> share(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }

std::shared_ptr<const HopfAlgebra> kc2() { return share(group_algebra(Q, cyclic_group(2), {"1", "g"})); }

/// Basis of Ker(eps), computed directly: e_i - eps(e_i) 1 for non-unit e_i.
std::vector<Vector> counit_kernel(const HopfAlgebra& h)
{
    std::vector<Vector> out;
    for (std::size_t i = 0; i < h.dim(); ++i)
        out.push_back(h.basis(i) - h.counit()[i] * h.unit());
    return out;
}

std::vector<AlgebraElement> random_counit_kernel_elements(const HopfAlgebra& h, std::mt19937_64& rng, std::size_t count)
{
    std::uniform_int_distribution<long> coef(-2, 2);
    const auto ker = counit_kernel(h);
    std::vector<AlgebraElement> out;
    for (std::size_t c = 0; c < count; ++c) {
        AlgebraElement a = h.zero();
        for (const auto& k : ker)
            add_scaled(a, Scalar(h.field(), coef(rng)), k);
        out.push_back(a);
    }
    return out;
}

}  // namespace

TEST_CASE("universal calculus on kC2")
{
    const Fodc f = universal_fodc(kc2());
    const HopfAlgebra& h = f.algebra();
    CHECK(f.omega_dim() == 2);
    CHECK(is_zero(f.d_of(h.unit())));
    // d(g) lifts to g (x) 1 - 1 (x) g
    CHECK(f.lift(f.d_of(h.basis(1))) == universal_d(h, h.basis(1)));
    const OneForm dg = f.d_of(h.basis(1));
    CHECK(f.right_matrix(h.basis(1)) * dg == -Scalar::one(Q) * (f.left_matrix(h.basis(1)) * dg));
    CHECK(check_fodc(f).all_passed());
    CHECK(f.is_covariant());
}

TEST_CASE("universal calculus has omega_dim n^2 - n and passes the invariants everywhere")
{
    for (const Field& fld : {Q, Field::prime(7)})
        for (const auto& b : bundled_algebras(fld)) {
            CAPTURE(b.id);
            const Fodc f = universal_fodc(share(b.algebra));
            const std::size_t n = b.algebra.dim();
            CHECK(f.omega_dim() == n * n - n);
            const CheckList report = check_fodc(f);
            for (const auto& c : report.checks) {
                CAPTURE(c.name);
                CAPTURE(c.witness);
                CHECK(c.passed());
            }
            CHECK(ideal_from_fodc(f).dim() == 0);
        }
}

TEST_CASE("subbimodule closure on kC2")
{
    const auto h = kc2();
    CHECK(subbimodule_closure(*h, {}).dim() == 0);
    const TensorElement u = h->tensor(h->unit(), h->unit()) - h->tensor(h->basis(1), h->basis(1));
    const Subspace n = subbimodule_closure(*h, {u});
    CHECK(n.dim() == 2);
    CHECK(n.contains(universal_d(*h, h->basis(1))));
    CHECK(n == kernel_of_multiplication(*h));
    CHECK_THROWS_AS(subbimodule_closure(*h, {h->tensor(h->unit(), h->unit())}), std::invalid_argument);
    const Fodc zero = quotient_fodc(h, n);
    CHECK(zero.omega_dim() == 0);
    CHECK(zero.d().rows() == 0);
}

TEST_CASE("quotient by a non-subbimodule is rejected with a witness")
{
    const auto h = kc2();
    const Subspace line = Subspace::span(Q, 4, {universal_d(*h, h->basis(1))});
    try {
        quotient_fodc(h, line);
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("outside N") != std::string::npos);
    }
}

TEST_CASE("a non-covariant quotient of the universal calculus on kC2")
{
    const auto h = kc2();
    // u = dg + (1 (x) 1 - g (x) g) spans a subbimodule: g.u = -u.g ... checked by the constructor
    const TensorElement u =
        universal_d(*h, h->basis(1)) + h->tensor(h->unit(), h->unit()) - h->tensor(h->basis(1), h->basis(1));
    const Subspace n = subbimodule_closure(*h, {u});
    REQUIRE(n.dim() == 1);
    const Fodc f = quotient_fodc(h, n);
    CHECK(f.omega_dim() == 1);
    CHECK(check_fodc(f).all_passed());
    const CoactionAttempt attempt = attach_coaction(f);
    CHECK_FALSE(attempt.ok());
    CHECK(n.contains(attempt.witness));
    CHECK_FALSE(is_zero(attempt.witness));
}

TEST_CASE("factor_derivation")
{
    for (const auto& b : bundled_algebras(Q)) {
        CAPTURE(b.id);
        const auto h = share(b.algebra);
        const std::size_t n = h->dim();
        const Fodc u = universal_fodc(h);
        const BimoduleActions omega = fodc_bimodule(u);
        const Matrix f = factor_derivation(*h, omega, u.d());
        // identity on Ker(mu)
        for (const auto& v : u.kernel_mu().basis_vectors())
            CHECK(f * v == u.project(v));
        const Matrix zero(Q, u.omega_dim(), n);
        CHECK((factor_derivation(*h, omega, zero)).is_zero());
        CHECK(check_factorization(*h, omega, u.d(), f).all_passed());
    }
    // kC2 into the zero calculus: projection
    const auto h = kc2();
    const Fodc z = quotient_fodc(h, kernel_of_multiplication(*h));
    const Matrix fz = factor_derivation(*h, fodc_bimodule(z), z.d());
    CHECK(fz.rows() == 0);
    // not a derivation
    Matrix bad(Q, 2, 2);
    bad(0, 0) = Scalar::one(Q);
    CHECK_THROWS_AS(factor_derivation(*h, algebra_bimodule(*h), bad), std::invalid_argument);
    // an inner derivation [., x] into H
    const HopfAlgebra h4 = sweedler_h4(Q);
    const AlgebraElement x = h4.basis(2);
    const Matrix inner = h4.right_multiplication(x) - h4.left_multiplication(x);
    CHECK(check_derivation(h4, algebra_bimodule(h4), inner).passed());
    const Matrix fi = factor_derivation(h4, algebra_bimodule(h4), inner);
    CHECK(check_factorization(h4, algebra_bimodule(h4), inner, fi).all_passed());
}

TEST_CASE("Woronowicz calculi on kC2 and H4")
{
    const auto h = kc2();
    const AlgebraElement gm1 = h->basis(1) - h->unit();
    const Fodc full = woronowicz_from_ideal(h, {gm1});
    CHECK(full.omega_dim() == 0);
    CHECK(full.is_covariant());
    const Fodc none = woronowicz_from_ideal(h, {});
    CHECK(none.omega_dim() == 2);
    CHECK_THROWS_AS(woronowicz_from_ideal(h, {h->basis(1)}), std::invalid_argument);

    const auto h4 = share(sweedler_h4(Q));
    const AlgebraElement g1 = h4->basis(1) - h4->unit();
    const Fodc f = woronowicz_from_ideal(h4, {g1});
    const Subspace r = right_ideal_closure(*h4, {g1});
    // oracle: N from the structure tensors and an independent rank
    const std::size_t n_dim = oracle::rank(Q, oracle::woronowicz_n(*h4, r.basis_vectors()));
    CHECK(f.omega_dim() == 16 - 4 - n_dim);
    CHECK(invariant_forms(f).dim() == 3 - r.dim());
    CHECK(f.omega_dim() == 4 * (3 - r.dim()));
    CHECK(ideal_from_fodc(f) == r);
}

TEST_CASE("Woronowicz round trip on seeded generator sets")
{
    std::mt19937_64 rng(2024);
    for (const auto& b : bundled_algebras(Q)) {
        CAPTURE(b.id);
        const auto h = share(b.algebra);
        for (int trial = 0; trial < 4; ++trial) {
            const auto gens = random_counit_kernel_elements(*h, rng, 1 + rng() % 2);
            const Fodc f = woronowicz_from_ideal(h, gens);
            const Subspace r = right_ideal_closure(*h, gens);
            CHECK(ideal_from_fodc(f) == r);
            const std::size_t n_dim = oracle::rank(Q, oracle::woronowicz_n(*h, r.basis_vectors()));
            CHECK(f.omega_dim() == h->dim() * h->dim() - h->dim() - n_dim);
            CHECK(check_fodc(f).all_passed());
        }
    }
}

TEST_CASE("P_inv and invariant forms")
{
    const auto h = kc2();
    const Fodc u = universal_fodc(h);
    const OneForm dg = u.d_of(h->basis(1));
    CHECK(p_inv(u, dg) == u.left_matrix(h->basis(1)) * dg);
    const Subspace inv = invariant_forms(u);
    CHECK(inv.dim() == 1);
    CHECK(inv.contains(u.left_matrix(h->basis(1)) * dg));

    for (const auto& b : bundled_algebras(Q)) {
        CAPTURE(b.id);
        const Fodc f = universal_fodc(share(b.algebra));
        const Matrix p = p_inv_matrix(f);
        CHECK(p * p == p);
        std::vector<Vector> image;
        for (std::size_t c = 0; c < f.omega_dim(); ++c)
            image.push_back(p.column(c));
        CHECK(Subspace::span(Q, f.omega_dim(), image) == invariant_forms(f));
        for (std::size_t i = 0; i < b.algebra.dim(); ++i)
            CHECK(p * f.left_action()[i] == b.algebra.counit()[i] * p);
        // P_inv(da) = S(a_1) d(a_2)
        for (std::size_t i = 0; i < b.algebra.dim(); ++i) {
            const TensorElement da = b.algebra.comultiply(b.algebra.basis(i));
            OneForm expect = f.zero_form();
            for (std::size_t p1 = 0; p1 < b.algebra.dim(); ++p1)
                for (std::size_t q = 0; q < b.algebra.dim(); ++q)
                    if (!da[p1 * b.algebra.dim() + q].is_zero())
                        add_scaled(expect, da[p1 * b.algebra.dim() + q],
                                   f.left_matrix(b.algebra.apply_antipode(b.algebra.basis(p1))) * f.d().column(q));
            CHECK(p * f.d().column(i) == expect);
        }
    }
    const Fodc z = quotient_fodc(h, kernel_of_multiplication(*h));
    CHECK_THROWS_AS(p_inv_matrix(z), std::invalid_argument);
    const Fodc zc = *attach_coaction(z).fodc;
    CHECK(invariant_forms(zc).dim() == 0);
    CHECK(ideal_from_fodc(zc).dim() == 1);
}

TEST_CASE("quantum Lie algebra of the kC2 universal calculus")
{
    const auto h = kc2();
    const Fodc u = universal_fodc(h);
    const QuantumLieAlgebra q = quantum_lie(u);
    REQUIRE(q.dim() == 1);
    CHECK(q.basis[0][0].is_zero());
    CHECK(q.basis[0][1].is_one());
    CHECK(q.duals[0] == h->basis(1));
    const OneForm dg = u.d_of(h->basis(1));
    CHECK(q.invariant_forms[0] == u.left_matrix(h->basis(1)) * dg);
    CHECK(check_schmudgen(*h, q).passed());
    CHECK(check_reconstruction(u, q).passed());
    REQUIRE(q.structure);
    CHECK(check_structure_functionals(*h, q).passed());
}

TEST_CASE("quantum Lie algebras of Woronowicz calculi")
{
    std::mt19937_64 rng(7);
    for (const auto& b : bundled_algebras(Q)) {
        CAPTURE(b.id);
        const auto h = share(b.algebra);
        for (int trial = 0; trial < 3; ++trial) {
            const auto gens = random_counit_kernel_elements(*h, rng, 1);
            const Fodc f = trial == 0 ? universal_fodc(h) : woronowicz_from_ideal(h, gens);
            const QuantumLieAlgebra q = quantum_lie(f);
            CHECK(q.dim() == h->dim() - 1 - q.ideal.dim());
            for (const auto& t : q.basis) {
                CHECK(evaluate(t, h->unit()).is_zero());
                for (const auto& x : q.ideal.basis_vectors())
                    CHECK(evaluate(t, x).is_zero());
            }
            CHECK(check_schmudgen(*h, q).passed());
            CHECK(check_reconstruction(f, q).passed());
            const CheckResult s = check_structure_functionals(*h, q);
            CHECK(s.status != CheckStatus::fail);
            // universal calculi always admit f_ij
            if (trial == 0)
                CHECK(q.structure.has_value());
        }
    }
}

TEST_CASE("zero calculus has an empty tangent space")
{
    const auto h = kc2();
    const Fodc z = woronowicz_from_ideal(h, {h->basis(1) - h->unit()});
    const QuantumLieAlgebra q = quantum_lie(z);
    CHECK(q.dim() == 0);
    CHECK(check_reconstruction(z, q).passed());
}
