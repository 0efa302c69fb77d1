#include "hopfcalc/subspace.hpp"

#include <stdexcept>

namespace hopfcalc {

Subspace::Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots))
{
}

Subspace Subspace::zero(const Field& field, std::size_t ambient) { return {ambient, Matrix(field, 0, ambient), {}}; }

Subspace Subspace::full(const Field& field, std::size_t ambient)
{
    std::vector<std::size_t> pivots(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        pivots[i] = i;
    return {ambient, Matrix::identity(field, ambient), std::move(pivots)};
}

Subspace Subspace::row_space(const Matrix& m)
{
    RowEchelon e = rref(m);
    Matrix basis(m.field(), e.rank, m.cols());
    for (std::size_t r = 0; r < e.rank; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            basis(r, c) = e.reduced(r, c);
    return {m.cols(), std::move(basis), std::move(e.pivots)};
}

Subspace Subspace::span(const Field& field, std::size_t ambient, const std::vector<Vector>& vectors)
{
    for (const auto& v : vectors) {
        if (v.size() != ambient)
            throw std::invalid_argument("span: vector length differs from ambient dimension");
    }
    return row_space(Matrix::from_rows(field, ambient, vectors));
}

std::vector<Vector> Subspace::basis_vectors() const
{
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        out.push_back(basis_.row(i));
    return out;
}

Vector Subspace::reduce(const Vector& v) const
{
    if (v.size() != ambient_)
        throw std::invalid_argument("reduce: vector length differs from ambient dimension");
    Vector out = v;
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        const Scalar coeff = out[pivots_[i]];
        if (coeff.is_zero())
            continue;
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (!basis_(i, c).is_zero())
                out[c] -= coeff * basis_(i, c);
        }
    }
    return out;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_ != ambient_)
        throw std::invalid_argument("subspace ambient dimension mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i) {
        if (!contains(other.basis_.row(i)))
            return false;
    }
    return true;
}

Subspace Subspace::annihilator() const
{
    if (dim() == 0)
        return full(field(), ambient_);
    return kernel(basis_);
}

bool operator==(const Subspace& a, const Subspace& b)
{
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
}

Subspace sum(const Subspace& u, const Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw std::invalid_argument("subspace ambient dimension mismatch");
    return Subspace::row_space(Matrix::vstack(u.basis(), v.basis()));
}

Subspace intersect(const Subspace& u, const Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw std::invalid_argument("subspace ambient dimension mismatch");
    // x = sum a_i u_i = sum b_j v_j  <=>  (a, -b) in ker [U^T | V^T]
    const Field& field = u.basis().field();
    const std::size_t n = u.ambient_dim();
    if (u.dim() == 0 || v.dim() == 0)
        return Subspace::zero(field, n);
    Matrix stacked = Matrix::hstack(u.basis().transpose(), v.basis().transpose());
    const Subspace coefficients = kernel(stacked);
    std::vector<Vector> vectors;
    for (std::size_t k = 0; k < coefficients.dim(); ++k) {
        const Vector c = coefficients.basis_vector(k);
        Vector x = zero_vector(field, n);
        for (std::size_t i = 0; i < u.dim(); ++i)
            add_scaled(x, c[i], u.basis_vector(i));
        vectors.push_back(std::move(x));
    }
    return Subspace::span(field, n, vectors);
}

Subspace kernel(const Matrix& m)
{
    const RowEchelon e = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> vectors;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vector v = unit_vector(m.field(), cols, free);
        for (std::size_t i = 0; i < e.rank; ++i)
            v[e.pivots[i]] = -e.reduced(i, free);
        vectors.push_back(std::move(v));
    }
    return Subspace::span(m.field(), cols, vectors);
}

Quotient::Quotient(const Subspace& whole, const Subspace& sub) : whole_(whole), sub_(sub)
{
    if (!whole.contains(sub))
        throw std::invalid_argument("quotient: subspace is not contained in the ambient space");
    std::vector<Vector> reps;
    reps.reserve(whole.dim());
    for (std::size_t i = 0; i < whole.dim(); ++i)
        reps.push_back(sub.reduce(whole.basis_vector(i)));
    section_ = Subspace::span(whole.field(), whole.ambient_dim(), reps);
}

Vector Quotient::coords(const Vector& v) const
{
    const Vector rep = sub_.reduce(v);
    Vector out;
    out.reserve(dim());
    for (auto p : section_.pivots())
        out.push_back(rep[p]);
    return out;
}

Vector Quotient::lift(const Vector& coords) const
{
    if (coords.size() != dim())
        throw std::invalid_argument("lift: coordinate length mismatch");
    Vector out = zero_vector(whole_.field(), whole_.ambient_dim());
    for (std::size_t i = 0; i < dim(); ++i)
        add_scaled(out, coords[i], section_.basis_vector(i));
    return out;
}

}  // namespace hopfcalc
