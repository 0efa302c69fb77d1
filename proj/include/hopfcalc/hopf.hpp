#pragma once

#include "hopfcalc/check.hpp"
#include "hopfcalc/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hopfcalc {

/// Raw structure tensors of a finite-dimensional Hopf algebra over basis e_0..e_{n-1}.
struct HopfData {
    Field field;
    std::vector<std::string> basis_names;
    /// mult[(i*n + j)*n + k]: coefficient of e_k in e_i e_j.
    std::vector<Scalar> mult;
    Vector unit;
    /// comult[(i*n + j)*n + k]: coefficient of e_j (x) e_k in Delta(e_i).
    std::vector<Scalar> comult;
    Vector counit;
    /// Column i holds S(e_i).
    Matrix antipode;
};

/// Elements of H are n-vectors, elements of H (x) H are n^2-vectors indexed i*n + j,
/// functionals on H are n-covectors.
using AlgebraElement = Vector;
using TensorElement = Vector;
using Functional = Vector;

/// A finite-dimensional Hopf algebra held as structure tensors. The constructor
/// checks shapes only; the axioms are checked by validate_hopf.
class HopfAlgebra {
public:
    explicit HopfAlgebra(HopfData data);

    const Field& field() const noexcept { return data_.field; }
    std::size_t dim() const noexcept { return n_; }
    const std::vector<std::string>& basis_names() const noexcept { return data_.basis_names; }
    const std::string& name(std::size_t i) const { return data_.basis_names.at(i); }
    const HopfData& data() const noexcept { return data_; }

    const Scalar& mult_coeff(std::size_t i, std::size_t j, std::size_t k) const { return data_.mult[(i * n_ + j) * n_ + k]; }
    const Scalar& comult_coeff(std::size_t i, std::size_t j, std::size_t k) const
    {
        return data_.comult[(i * n_ + j) * n_ + k];
    }
    const Vector& unit() const noexcept { return data_.unit; }
    const Vector& counit() const noexcept { return data_.counit; }
    const Matrix& antipode() const noexcept { return data_.antipode; }

    AlgebraElement basis(std::size_t i) const { return unit_vector(field(), n_, i); }
    AlgebraElement zero() const { return zero_vector(field(), n_); }
    TensorElement tensor_zero() const { return zero_vector(field(), n_ * n_); }

    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
    TensorElement comultiply(const AlgebraElement& a) const;
    Scalar apply_counit(const AlgebraElement& a) const;
    AlgebraElement apply_antipode(const AlgebraElement& a) const;

    /// b -> a b
    Matrix left_multiplication(const AlgebraElement& a) const;
    /// b -> b a
    Matrix right_multiplication(const AlgebraElement& a) const;

    TensorElement tensor(const AlgebraElement& a, const AlgebraElement& b) const;
    /// Componentwise product in the algebra H (x) H.
    TensorElement tensor_multiply(const TensorElement& x, const TensorElement& y) const;
    /// mu: H (x) H -> H as an n x n^2 matrix.
    Matrix multiplication_map() const;

    /// Readable linear combination of basis names, e.g. "g - 2*x".
    std::string describe(const AlgebraElement& a) const;
    std::string describe_tensor(const TensorElement& t) const;

private:
    HopfData data_;
    std::size_t n_ = 0;
};

/// One check per axiom family; failures name a witnessing basis tuple.
CheckList validate_hopf(const HopfAlgebra& h);

/// f * a = a_1 f(a_2)
AlgebraElement smud_product(const HopfAlgebra& h, const Functional& f, const AlgebraElement& a);
/// The operator a -> f * a.
Matrix smud_operator(const HopfAlgebra& h, const Functional& f);
/// (f (x) g) o Delta
Functional convolution(const HopfAlgebra& h, const Functional& f, const Functional& g);
/// a (x) b -> t(ab), an n^2-covector.
Vector dual_comult(const HopfAlgebra& h, const Functional& t);
Scalar evaluate(const Functional& f, const AlgebraElement& a);

/// (phi (x) I) o Delta, for any functional.
Matrix translation_matrix(const HopfAlgebra& h, const Functional& phi);

/// An algebra map H -> k with its left translation L = (phi (x) I) o Delta.
struct Character {
    Functional functional;
    Matrix translation;

    friend bool operator==(const Character& a, const Character& b) { return a.functional == b.functional; }
};

/// Multiplicativity and unitality, with a witness on failure.
CheckResult check_character(const HopfAlgebra& h, const Functional& phi);
/// Throws std::invalid_argument when phi is not an algebra map.
Character make_character(const HopfAlgebra& h, const Functional& phi);
Character counit_character(const HopfAlgebra& h);

struct CharacterSet {
    /// The counit comes first; the rest follow a fixed search order.
    std::vector<Character> characters;
    /// False means "undecided": the list may be incomplete.
    bool complete = true;
    std::string note;

    /// Index of phi in the list, or npos.
    std::size_t index_of(const Functional& phi) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Every algebra map H -> k. A character is a common left eigenvector of the
/// left-multiplication operators with phi(1) = 1, so each coordinate phi(e_i)
/// is an eigenvalue of L_{e_i}; the search runs over those roots.
CharacterSet find_characters(const HopfAlgebra& h);

/// (phi * psi)(a) = phi(a_2) psi(a_1). Throws std::invalid_argument on shape mismatch.
Character star_product(const HopfAlgebra& h, const Character& phi, const Character& psi);
/// phi o S
Character character_inverse(const HopfAlgebra& h, const Character& phi);
/// R = (I (x) (phi o S)) o Delta, satisfying R o S = S o L.
Matrix right_translation(const HopfAlgebra& h, const Character& phi);

/// The found characters separate points iff they span the dual space.
bool separates_points(const HopfAlgebra& h, const CharacterSet& set);

/// Left coaction lambda: C -> H (x) C stored as lambda(c) = sum_h e_h (x) components[h] c.
struct Coaction {
    std::vector<Matrix> components;

    std::size_t comodule_dim() const { return components.empty() ? 0 : components.front().rows(); }
};

/// (Delta (x) I) lambda = (I (x) lambda) lambda
CheckResult check_coassociative(const HopfAlgebra& h, const Coaction& lambda);
/// L' = (eps (x) I)(L (x) I) lambda. Throws std::invalid_argument naming a
/// witness coordinate when lambda is not coassociative.
Matrix comodule_lift(const HopfAlgebra& h, const Coaction& lambda, const Matrix& translation);
/// lambda o L' = (L (x) I) o lambda
CheckResult check_lift_square(const HopfAlgebra& h, const Coaction& lambda, const Matrix& translation,
                              const Matrix& lift);

}  // namespace hopfcalc
