#pragma once

#include "hopfcalc/matrix.hpp"

#include <vector>

namespace hopfcalc {

/// Univariate polynomial, coefficients from the constant term upward, no trailing zeros.
using Polynomial = std::vector<Scalar>;

/// det(x I - m), monic of degree rows(m). Hessenberg reduction, exact.
Polynomial characteristic_polynomial(const Matrix& m);

Scalar evaluate(const Polynomial& p, const Scalar& x);

Scalar determinant(const Matrix& m);

struct RootSearch {
    /// Distinct roots in the ground field, ascending (rationals by value, residues by representative).
    std::vector<Scalar> roots;
    /// False when the search gave up (rational coefficients too large to factor).
    bool complete = true;
};

/// All roots of a nonzero polynomial that lie in its coefficient field.
RootSearch roots_in_field(const Polynomial& p);

}  // namespace hopfcalc
