#pragma once

#include "hopfcalc/matrix.hpp"

#include <cstddef>
#include <vector>

namespace hopfcalc {

/// Subspace of k^ambient stored as a canonical RREF row basis, so equal
/// subspaces have identical representations.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(const Field& field, std::size_t ambient);
    static Subspace full(const Field& field, std::size_t ambient);
    static Subspace span(const Field& field, std::size_t ambient, const std::vector<Vector>& vectors);
    static Subspace row_space(const Matrix& m);

    const Field& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return pivots_.size(); }
    const Matrix& basis() const noexcept { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }
    std::vector<Vector> basis_vectors() const;
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Canonical coset representative: v with the pivot columns cleared.
    Vector reduce(const Vector& v) const;
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    /// Vectors w with w.v = 0 for all v in this subspace.
    Subspace annihilator() const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots);

    std::size_t ambient_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Throws std::invalid_argument on ambient mismatch.
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

/// {v : m v = 0}
Subspace kernel(const Matrix& m);

/// V / W for W inside V. Classes are coordinatised by the canonical
/// representatives reduce_W(v), which vanish on W's pivot columns; those
/// representatives span a subspace whose RREF basis fixes the coordinates.
class Quotient {
public:
    Quotient() = default;
    /// Throws std::invalid_argument unless sub is contained in whole.
    Quotient(const Subspace& whole, const Subspace& sub);

    std::size_t dim() const noexcept { return section_.dim(); }
    std::size_t ambient_dim() const noexcept { return whole_.ambient_dim(); }
    const Subspace& whole() const noexcept { return whole_; }
    const Subspace& sub() const noexcept { return sub_; }

    /// Coordinates of the class of v (v must lie in whole; not rechecked).
    Vector coords(const Vector& v) const;
    /// Canonical representative with the given coordinates.
    Vector lift(const Vector& coords) const;

private:
    Subspace whole_;
    Subspace sub_;
    Subspace section_;
};

}  // namespace hopfcalc
