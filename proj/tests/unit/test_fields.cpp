#include "doctest.h"

#include "hopfcalc/builders.hpp"
#include "hopfcalc/fields.hpp"

#include "oracle.hpp"

using namespace hopfcalc;

namespace {

const Field Q = Field::rational();

std::shared_ptr<const HopfAlgebra> share(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }

std::shared_ptr<const HopfAlgebra> kc2() { return share(group_algebra(Q, cyclic_group(2), {"1", "g"})); }

/// dim Hom_{-,H}(Omega, H) by solving X R_j = R_{e_j} X over all n x m matrices.
std::size_t right_linear_dim(const Fodc& f)
{
    const HopfAlgebra& h = f.algebra();
    const std::size_t n = h.dim();
    const std::size_t m = f.omega_dim();
    std::vector<Vector> rows;
    for (std::size_t j = 0; j < n; ++j) {
        const Matrix& r = f.right_action()[j];
        const Matrix rm = h.right_multiplication(h.basis(j));
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t c = 0; c < m; ++c) {
                // (X r)(p, c) - (rm X)(p, c), unknown X(q, k) at q*m + k
                Vector row(n * m, Scalar::zero(Q));
                for (std::size_t k = 0; k < m; ++k)
                    row[p * m + k] += r(k, c);
                for (std::size_t q = 0; q < n; ++q)
                    row[q * m + c] -= rm(p, q);
                rows.push_back(std::move(row));
            }
    }
    return n * m - oracle::rank(Q, rows);
}

std::vector<Fodc> sample_calculi(const std::shared_ptr<const HopfAlgebra>& h)
{
    std::vector<Fodc> out{universal_fodc(h)};
    // the right ideal generated by e_i - eps(e_i) 1 for the last basis element
    const std::size_t last = h->dim() - 1;
    out.push_back(woronowicz_from_ideal(h, {h->basis(last) - h->counit()[last] * h->unit()}));
    return out;
}

}  // namespace

TEST_CASE("Cartan pair on the kC2 universal calculus")
{
    const auto h = kc2();
    const CartanPair pair = vector_fields_basis(universal_fodc(h));
    CHECK(pair.dim() == 2);
    const QuantumLieAlgebra q = quantum_lie(pair.fodc());
    const VectorField v = invariant_vf_from_functional(pair, q, q.basis[0]);
    CHECK(pair.rho(v).column(1) == h->basis(1));
    CHECK(is_zero(pair.rho(v).column(0)));

    // rho(X)(g g) = 0 = rho(X)(g) g + rho(Xg)(g)
    const Matrix e = pair.rho(v);
    const Matrix eg = pair.rho(pair.right_scale(v, h->basis(1)));
    CHECK(is_zero(e * h->multiply(h->basis(1), h->basis(1))));
    CHECK(is_zero(h->multiply(e.column(1), h->basis(1)) + eg.column(1)));

    const CharacterSet cs = find_characters(*h);
    const Character& sgn = cs.characters[1];
    const TranslationLift lift = lift_translation(pair.fodc(), sgn);
    const OneForm dg = pair.fodc().d_of(h->basis(1));
    CHECK(lift.matrix * dg == -Scalar::one(Q) * dg);
    CHECK(pair.rho(pullback(v, lift)).column(1) == -Scalar::one(Q) * h->basis(1));
    const TranslationLift id = lift_translation(pair.fodc(), cs.characters[0]);
    CHECK(id.matrix == Matrix::identity(Q, 2));
    CHECK(pullback(v, id) == v);
    CHECK(pullback(pair.zero(), lift) == pair.zero());

    const auto cod = coderivation_witness(pair, v, cs);
    REQUIRE(cod);
    CHECK(cod->witness == sgn);
    const auto zero_cod = coderivation_witness(pair, pair.zero(), cs);
    REQUIRE(zero_cod);
    CHECK(zero_cod->witness == cs.characters[0]);

    const FieldsSpanReport span = general_fields_span(pair, q);
    CHECK(span.equal);
    CHECK(span.span_dim == 2);
    CHECK(span.leibniz.passed());
}

TEST_CASE("field spaces match an independent right-linear oracle")
{
    for (const auto& b : bundled_algebras(Q)) {
        CAPTURE(b.id);
        const auto h = share(b.algebra);
        for (const Fodc& f : sample_calculi(h)) {
            const CartanPair pair = vector_fields_basis(f);
            CHECK(pair.dim() == right_linear_dim(f));
            const CheckList checks = pair.check();
            CHECK(checks.all_passed());
            for (const auto& x : pair.fields())
                CHECK(pair.coordinates(x).has_value());
        }
    }
}

TEST_CASE("zero calculus has no vector fields")
{
    const auto h = kc2();
    const CartanPair pair = vector_fields_basis(woronowicz_from_ideal(h, {h->basis(1) - h->unit()}));
    CHECK(pair.dim() == 0);
    const QuantumLieAlgebra q = quantum_lie(pair.fodc());
    const FieldsSpanReport span = general_fields_span(pair, q);
    CHECK(span.equal);
    CHECK(span.field_dim == 0);
    CHECK(discover_coderivations(pair, find_characters(*h)).empty());
}

TEST_CASE("invariant fields recover their functionals")
{
    for (const auto& b : bundled_algebras(Q)) {
        CAPTURE(b.id);
        const auto h = share(b.algebra);
        const CharacterSet cs = find_characters(*h);
        const CartanPair pair = vector_fields_basis(universal_fodc(h));
        const QuantumLieAlgebra q = quantum_lie(pair.fodc());
        for (const auto& t : q.basis) {
            const VectorField v = invariant_vf_from_functional(pair, q, t);
            CHECK(pair.rho(v).transpose() * h->counit() == t);
            const InvarianceReport inv = is_invariant(pair, v, cs);
            CHECK(inv.def_a.passed());
            CHECK(inv.def_b.status != CheckStatus::fail);
        }
        CHECK(invariant_vf_from_functional(pair, q, h->zero()) == pair.zero());
        const FieldsSpanReport span = general_fields_span(pair, q);
        CHECK(span.leibniz.status != CheckStatus::fail);
        CHECK_THROWS_AS(invariant_vf_from_functional(pair, q, h->counit()), std::invalid_argument);
    }
}

TEST_CASE("invariance definitions")
{
    const auto h = kc2();
    const CharacterSet cs = find_characters(*h);
    const CartanPair pair = vector_fields_basis(universal_fodc(h));

    // X(dg) = 1 is not invariant
    Matrix e(Q, 2, 2);
    e.set_column(1, h->unit());
    const auto x = pair.field_from_rho(e);
    REQUIRE(x);
    const InvarianceReport r = is_invariant(pair, *x, cs);
    CHECK(r.def_a.failed());
    CHECK(r.def_b.failed());
    CHECK(r.agreement.passed());

    // g V is not invariant
    const QuantumLieAlgebra q = quantum_lie(pair.fodc());
    const VectorField v = invariant_vf_from_functional(pair, q, q.basis[0]);
    CHECK_FALSE(is_invariant(pair, pair.left_scale(h->basis(1), v), cs).invariant());
    CHECK(is_invariant(pair, pair.left_scale(Scalar(Q, 3L) * h->unit(), v), cs).invariant());

    // H4 characters do not separate points, so agreement is not asserted
    const auto h4 = share(sweedler_h4(Q));
    const CartanPair p4 = vector_fields_basis(universal_fodc(h4));
    const InvarianceReport r4 = is_invariant(p4, p4.fields()[0], find_characters(*h4));
    CHECK(r4.agreement.status == CheckStatus::skipped);
}

TEST_CASE("defA and defB agree on a full basis when characters separate points")
{
    for (const auto& hp : {kc2(), share(function_algebra(Q, cyclic_group(2))), share(function_algebra(Q, cyclic_group(3)))}) {
        const CharacterSet cs = find_characters(*hp);
        REQUIRE(cs.complete);
        REQUIRE(separates_points(*hp, cs));
        for (const Fodc& f : sample_calculi(hp)) {
            const CartanPair pair = vector_fields_basis(f);
            for (const auto& x : pair.fields()) {
                const InvarianceReport r = is_invariant(pair, x, cs);
                CHECK(r.agreement.passed());
            }
            // sums of basis fields too
            if (pair.dim() >= 2) {
                const VectorField s{pair.fields()[0].matrix + pair.fields()[1].matrix};
                CHECK(is_invariant(pair, s, cs).agreement.passed());
            }
        }
    }
}

TEST_CASE("lifted translations on covariant calculi")
{
    for (const auto& b : bundled_algebras(Q)) {
        CAPTURE(b.id);
        const auto h = share(b.algebra);
        const CharacterSet cs = find_characters(*h);
        for (const Fodc& f : sample_calculi(h)) {
            for (const auto& phi : cs.characters) {
                const TranslationLift lift = lift_translation(f, phi);
                CHECK(lift.checks.all_passed());
                CHECK(lift.matrix * f.d() == f.d() * phi.translation);
                for (const auto& psi : cs.characters) {
                    const TranslationLift lp = lift_translation(f, psi);
                    const TranslationLift lst = lift_translation(f, star_product(*h, phi, psi));
                    CHECK(lst.matrix == lift.matrix * lp.matrix);
                }
            }
        }
    }
    const auto h = kc2();
    const Fodc plain = quotient_fodc(h, Subspace::zero(Q, 4));
    CHECK_THROWS_AS(lift_translation(plain, counit_character(*h)), std::invalid_argument);
}

TEST_CASE("coderivation discovery")
{
    SUBCASE("kC2 universal has a coderivation with witness sgn")
    {
        const auto h = kc2();
        const CharacterSet cs = find_characters(*h);
        const CartanPair pair = vector_fields_basis(universal_fodc(h));
        const auto found = discover_coderivations(pair, cs);
        bool nontrivial = false;
        for (const auto& c : found) {
            CHECK(check_coderivation(pair, c, cs).all_passed());
            if (!(c.witness == cs.characters[0]) && !pair.rho(c.field).is_zero())
                nontrivial = true;
        }
        CHECK(nontrivial);
    }
    SUBCASE("function algebra on C2: eps-witnessed coderivations are derivations")
    {
        const auto h = share(function_algebra(Q, cyclic_group(2)));
        const CharacterSet cs = find_characters(*h);
        const CartanPair pair = vector_fields_basis(universal_fodc(h));
        for (const auto& c : discover_coderivations(pair, cs)) {
            if (!(c.witness == cs.characters[0]))
                continue;
            CHECK(check_derivation(*h, algebra_bimodule(*h), pair.rho(c.field)).passed());
        }
    }
    SUBCASE("every discovered coderivation validates everywhere")
    {
        for (const auto& b : bundled_algebras(Q)) {
            CAPTURE(b.id);
            const auto h = share(b.algebra);
            const CharacterSet cs = find_characters(*h);
            for (const Fodc& f : sample_calculi(h)) {
                const CartanPair pair = vector_fields_basis(f);
                for (const auto& c : discover_coderivations(pair, cs)) {
                    CHECK(check_coderivation(pair, c, cs).all_passed());
                    const auto again = coderivation_witness(pair, c.field, cs);
                    REQUIRE(again);
                    CHECK(again->witness == c.witness);
                }
            }
        }
    }
}

TEST_CASE("Lie bracket and its identities")
{
    for (const auto& hp : {kc2(), share(function_algebra(Q, cyclic_group(2))), share(function_algebra(Q, cyclic_group(3))),
                           share(sweedler_h4(Q))}) {
        const CharacterSet cs = find_characters(*hp);
        const CartanPair pair = vector_fields_basis(universal_fodc(hp));
        const auto found = discover_coderivations(pair, cs);
        for (const auto& x : found) {
            CHECK(lie_bracket(pair, x, x, cs).field == pair.zero());
            const Coderivation zero{pair.zero(), counit_character(*hp)};
            CHECK(lie_bracket(pair, x, zero, cs).field == pair.zero());
        }
        const IdentityReport report = verify_bracket_identities(pair, found, cs);
        CHECK(report.checks.checks.size() == 11);
        for (const auto& c : report.checks.checks) {
            CAPTURE(c.name);
            CAPTURE(c.witness);
            CHECK(c.passed());
        }
    }
}

TEST_CASE("non-commuting witnesses are rejected on k^S3")
{
    const auto h = share(function_algebra(Q, symmetric_group_s3()));
    const CharacterSet cs = find_characters(*h);
    REQUIRE(cs.characters.size() == 6);
    const CartanPair pair = vector_fields_basis(universal_fodc(h));
    const Coderivation x{pair.zero(), cs.characters[1]};
    const Coderivation y{pair.zero(), cs.characters[4]};
    REQUIRE_FALSE(witnesses_commute(x, y));
    CHECK_THROWS_AS(lie_bracket(pair, x, y, cs), std::invalid_argument);
    const IdentityReport report = verify_bracket_identities(pair, {x, y}, cs);
    CHECK_FALSE(report.skipped_pairs.empty());
    CHECK(report.checks.all_passed());
}
