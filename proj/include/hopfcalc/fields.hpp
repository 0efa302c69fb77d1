#pragma once

#include "hopfcalc/calculus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopfcalc {

/// Right H-linear map Omega -> H, an n x m matrix in canonical bases.
struct VectorField {
    Matrix matrix;

    friend bool operator==(const VectorField& a, const VectorField& b) { return a.matrix == b.matrix; }
};

/// Omega* = Hom_{-,H}(Omega, H) with rho(X)(r) = X(dr).
class CartanPair {
public:
    explicit CartanPair(Fodc fodc);

    const Fodc& fodc() const noexcept { return fodc_; }
    const HopfAlgebra& algebra() const noexcept { return fodc_.algebra(); }
    std::size_t dim() const noexcept { return fields_.size(); }
    const std::vector<VectorField>& fields() const noexcept { return fields_; }
    /// Right-module relations sum d(e_i) c_i = 0, as n^2-vectors indexed i*n + j (c_i = sum_j c_ij e_j).
    const std::vector<Vector>& relations() const noexcept { return relations_; }

    /// n x n endomorphism X o d.
    Matrix rho(const VectorField& x) const { return x.matrix * fodc_.d(); }
    /// The field with X o d = e, or nullopt when e violates a relation.
    std::optional<VectorField> field_from_rho(const Matrix& e) const;
    /// First relation violated by e (as readable text), or nullopt.
    std::optional<std::string> violated_relation(const Matrix& e) const;
    /// Coordinates of x in fields(); nullopt if x is not in the span.
    std::optional<Vector> coordinates(const VectorField& x) const;
    VectorField combine(const Vector& coords) const;
    VectorField zero() const;

    /// (aX)(w) = a X(w)
    VectorField left_scale(const AlgebraElement& a, const VectorField& x) const;
    /// (Xa)(w) = X(a w)
    VectorField right_scale(const VectorField& x, const AlgebraElement& a) const;

    /// Right-linearity of every basis field, the left-module law, the twisted Leibniz rule, faithfulness.
    CheckList check() const;
    CheckResult check_right_linear(const VectorField& x) const;

    std::string describe(const VectorField& x) const;

private:
    Fodc fodc_;
    Matrix generators_;                 // m x n^2, column i*n + j = d(e_i) e_j
    std::vector<Vector> relations_;
    std::vector<Vector> expansions_;    // omega_k = sum c_ij d(e_i) e_j
    std::vector<VectorField> fields_;
};

/// Builds the Cartan pair and verifies it; throws ConsistencyError on failure.
CartanPair vector_fields_basis(const Fodc& f);

/// The field with X(da) = t * a. Throws std::invalid_argument if t is outside chi
/// or if t * - violates a relation of Omega (the message names it).
VectorField invariant_vf_from_functional(const CartanPair& pair, const QuantumLieAlgebra& q, const Functional& t);

struct FieldsSpanReport {
    std::size_t invariant_count = 0;
    std::size_t span_dim = 0;
    std::size_t field_dim = 0;
    bool equal = false;
    /// X(ab) = X(a)b + a^i sum_j (f_ij * a) V_j(b) for X = e_s V_i, all basis pairs.
    CheckResult leibniz;
};

FieldsSpanReport general_fields_span(const CartanPair& pair, const QuantumLieAlgebra& q);

/// L' = (eps (x) I)(L (x) I) Delta_l with the checks that it intertwines the
/// coaction, twists the bimodule structure and satisfies L'd = dL.
struct TranslationLift {
    Matrix matrix;
    CheckList checks;
};

/// Throws std::invalid_argument without a coaction and ConsistencyError if a check fails.
TranslationLift lift_translation(const Fodc& f, const Character& phi);

/// (L*X)(w) = X(L'w)
VectorField pullback(const VectorField& x, const TranslationLift& lift);

struct InvarianceReport {
    /// rho(X) o L = L o rho(X) for every listed translation; conditional on an incomplete list.
    CheckResult def_b;
    /// rho(X) = (I (x) eps rho(X)) Delta
    CheckResult def_a;
    bool separating = false;
    /// Skipped unless the list is complete and separating.
    CheckResult agreement;

    bool invariant() const { return def_a.passed() && def_b.status != CheckStatus::fail; }
};

InvarianceReport is_invariant(const CartanPair& pair, const VectorField& x, const CharacterSet& characters);

/// rho(X)(ab) = L(a) rho(X)(b) + rho(X)(a) b on all basis pairs.
CheckResult check_coderivation_rule(const HopfAlgebra& h, const Matrix& rho, const Matrix& translation);

struct Coderivation {
    VectorField field;
    Character witness;
};

/// First listed character witnessing the coderivation rule, provided X is also
/// invariant under every listed translation; nullopt otherwise. Verifies Xa = L(a)X.
std::optional<Coderivation> coderivation_witness(const CartanPair& pair, const VectorField& x,
                                                 const CharacterSet& characters);

/// For each character, a basis of the invariant coderivations it witnesses.
std::vector<Coderivation> discover_coderivations(const CartanPair& pair, const CharacterSet& characters);

/// Checks Xa = L(a)X, the coderivation rule and invariance.
CheckList check_coderivation(const CartanPair& pair, const Coderivation& c, const CharacterSet& characters);

bool witnesses_commute(const Coderivation& x, const Coderivation& y);

/// [X, Y] with rho([X,Y]) = rho(X)rho(Y) - rho(Y)rho(X) and witness phi * psi.
/// Throws std::invalid_argument when the witness translations do not commute or
/// the commutator has no preimage; ConsistencyError if the result fails validation.
Coderivation lie_bracket(const CartanPair& pair, const Coderivation& x, const Coderivation& y,
                         const CharacterSet& characters);

struct IdentityReport {
    CheckList checks;
    std::size_t pairs_checked = 0;
    std::vector<std::string> skipped_pairs;
};

/// Antisymmetry, additivity, Jacobi, the bracket Leibniz rule, both mixed-argument
/// formulas and the five module-twisted formulas, on all basis elements.
IdentityReport verify_bracket_identities(const CartanPair& pair, const std::vector<Coderivation>& coderivations,
                                         const CharacterSet& characters);

}  // namespace hopfcalc
