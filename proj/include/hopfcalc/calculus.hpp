#pragma once

#include "hopfcalc/check.hpp"
#include "hopfcalc/hopf.hpp"
#include "hopfcalc/subspace.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopfcalc {

/// Coordinates in the canonical basis of Omega.
using OneForm = Vector;

/// Ker(mu) inside H (x) H.
Subspace kernel_of_multiplication(const HopfAlgebra& h);
/// (a (x) 1) x
TensorElement tensor_left(const HopfAlgebra& h, const AlgebraElement& a, const TensorElement& x);
/// x (1 (x) b)
TensorElement tensor_right(const HopfAlgebra& h, const TensorElement& x, const AlgebraElement& b);
/// a (x) 1 - 1 (x) a
TensorElement universal_d(const HopfAlgebra& h, const AlgebraElement& a);

/// First-order differential calculus Omega = Ker(mu) / N with D = pi o d.
/// The coaction is present exactly when the calculus has been certified left-covariant.
class Fodc {
public:
    /// Throws std::invalid_argument (with a witnessing product) unless n_sub is
    /// a subbimodule of Ker(mu).
    Fodc(std::shared_ptr<const HopfAlgebra> algebra, Subspace n_sub);

    const HopfAlgebra& algebra() const noexcept { return *algebra_; }
    const std::shared_ptr<const HopfAlgebra>& algebra_ptr() const noexcept { return algebra_; }
    const Field& field() const noexcept { return algebra_->field(); }

    const Subspace& kernel_mu() const noexcept { return quotient_.whole(); }
    const Subspace& n_sub() const noexcept { return quotient_.sub(); }
    const Quotient& quotient() const noexcept { return quotient_; }
    std::size_t omega_dim() const noexcept { return quotient_.dim(); }
    std::size_t algebra_dim() const noexcept { return algebra_->dim(); }

    /// m x n matrix; column i is d(e_i).
    const Matrix& d() const noexcept { return d_; }
    OneForm d_of(const AlgebraElement& a) const { return d_ * a; }
    OneForm basis_form(std::size_t k) const { return unit_vector(field(), omega_dim(), k); }
    OneForm zero_form() const { return zero_vector(field(), omega_dim()); }

    /// omega -> a omega and omega -> omega a as m x m matrices.
    Matrix left_matrix(const AlgebraElement& a) const;
    Matrix right_matrix(const AlgebraElement& a) const;
    const std::vector<Matrix>& left_action() const noexcept { return left_; }
    const std::vector<Matrix>& right_action() const noexcept { return right_; }

    OneForm project(const TensorElement& x) const { return quotient_.coords(x); }
    TensorElement lift(const OneForm& w) const { return quotient_.lift(w); }

    const std::optional<Coaction>& coaction() const noexcept { return coaction_; }
    bool is_covariant() const noexcept { return coaction_.has_value(); }
    /// Set on calculi built from a right ideal.
    const std::optional<Subspace>& source_ideal() const noexcept { return source_ideal_; }

    Fodc with_coaction(Coaction coaction) const;
    Fodc with_source_ideal(Subspace ideal) const;

private:
    std::shared_ptr<const HopfAlgebra> algebra_;
    Quotient quotient_;
    Matrix d_;
    std::vector<Matrix> left_;
    std::vector<Matrix> right_;
    std::optional<Coaction> coaction_;
    std::optional<Subspace> source_ideal_;
};

/// Omega = Ker(mu), d(a) = a (x) 1 - 1 (x) a, with its (trivially well-defined) coaction.
Fodc universal_fodc(std::shared_ptr<const HopfAlgebra> h);

/// Smallest subbimodule of H (x) H containing the generators. Throws
/// std::invalid_argument if a generator is outside Ker(mu).
Subspace subbimodule_closure(const HopfAlgebra& h, const std::vector<TensorElement>& generators);

/// Ker(mu) / n_sub without a coaction.
Fodc quotient_fodc(std::shared_ptr<const HopfAlgebra> h, const Subspace& n_sub);

/// Right-ideal closure of the generators.
Subspace right_ideal_closure(const HopfAlgebra& h, const std::vector<AlgebraElement>& generators);

/// span{ a S(b_1) (x) b_2 : b in the ideal, a in H }
Subspace woronowicz_subbimodule(const HopfAlgebra& h, const Subspace& ideal);

/// Left-covariant calculus of the right ideal generated by gens. Throws
/// std::invalid_argument if a generator has eps(b) != 0.
Fodc woronowicz_from_ideal(std::shared_ptr<const HopfAlgebra> h, const std::vector<AlgebraElement>& gens);

struct CoactionAttempt {
    std::optional<Fodc> fodc;
    /// Element of N whose image under the universal coaction leaves H (x) N.
    TensorElement witness;
    std::string detail;

    bool ok() const { return fodc.has_value(); }
};

/// Defines Delta_l(a db) = Delta(a)(I (x) d)Delta(b) on Omega when this kills N,
/// then checks covariance, coassociativity and the counit law.
CoactionAttempt attach_coaction(const Fodc& f);

/// Sum of S(omega_(-1)) omega_(0). Throws std::invalid_argument without a coaction.
Matrix p_inv_matrix(const Fodc& f);
OneForm p_inv(const Fodc& f, const OneForm& w);

/// { omega : Delta_l(omega) = 1 (x) omega }
Subspace invariant_forms(const Fodc& f);

/// { x in Ker(eps) : P_inv(dx) = 0 }, verified to be a right ideal.
Subspace ideal_from_fodc(const Fodc& f);

/// The quantum tangent space of a left-covariant calculus.
struct QuantumLieAlgebra {
    Subspace ideal;
    /// Functionals vanishing on 1 and on the ideal, as a subspace of H'.
    Subspace chi;
    std::vector<Functional> basis;
    /// x_i with t_i(x_j) = delta_ij
    std::vector<AlgebraElement> duals;
    /// omega_i = P_inv(d x_i)
    std::vector<OneForm> invariant_forms;
    /// structure[i][j] = f_ij with t_i(ab) = t_i(a) eps(b) + sum_j f_ij(a) t_j(b).
    /// Absent when that system has no solution (the ideal is then not two-sided).
    std::optional<std::vector<std::vector<Functional>>> structure;
    std::string structure_note;

    std::size_t dim() const { return basis.size(); }
};

/// Throws ConsistencyError naming the basis element if da = sum (t_i * a) omega_i fails.
QuantumLieAlgebra quantum_lie(const Fodc& f);

/// Delta t - eps (x) t in chi (x) H' for every basis t.
CheckResult check_schmudgen(const HopfAlgebra& h, const QuantumLieAlgebra& q);
/// da = sum (t_i * a) omega_i on every basis a.
CheckResult check_reconstruction(const Fodc& f, const QuantumLieAlgebra& q);
/// t_i(ab) = t_i(a) eps(b) + sum_j f_ij(a) t_j(b) on all basis pairs (skipped without structure).
CheckResult check_structure_functionals(const HopfAlgebra& h, const QuantumLieAlgebra& q);

/// Bimodule with coordinates: left[i], right[i] act by e_i.
struct BimoduleActions {
    std::vector<Matrix> left;
    std::vector<Matrix> right;

    std::size_t dim() const { return left.empty() ? 0 : left.front().rows(); }
};

BimoduleActions algebra_bimodule(const HopfAlgebra& h);
BimoduleActions fodc_bimodule(const Fodc& f);

/// D(e_i e_j) = D(e_i) e_j + e_i D(e_j) for D given as a dim(M) x n matrix.
CheckResult check_derivation(const HopfAlgebra& h, const BimoduleActions& target, const Matrix& derivation);

/// The map f_D on H (x) H (dim(M) x n^2) with f_D(sum a_i (x) b_i) = -sum a_i D(b_i);
/// on Ker(mu) it is the unique bimodule map with D = f_D o d. Throws
/// std::invalid_argument with a witness pair when D is not a derivation.
Matrix factor_derivation(const HopfAlgebra& h, const BimoduleActions& target, const Matrix& derivation);
/// D = f_D o d and f_D restricted to Ker(mu) is a bimodule map.
CheckList check_factorization(const HopfAlgebra& h, const BimoduleActions& target, const Matrix& derivation,
                              const Matrix& factor);

/// Leibniz rule, d(1) = 0, left/right generation, bimodule axioms, and (if present)
/// covariance of the coaction.
CheckList check_fodc(const Fodc& f);

}  // namespace hopfcalc
