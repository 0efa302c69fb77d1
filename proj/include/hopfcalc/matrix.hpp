#pragma once

#include "hopfcalc/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hopfcalc {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t index);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
/// a += s * b
void add_scaled(Vector& a, const Scalar& s, const Vector& b);
Scalar dot(const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

/// Dense row-major matrix over an exact field.
class Matrix {
public:
    Matrix() = default;
    Matrix(const Field& field, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& field, std::size_t n);
    static Matrix from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_row(std::size_t r, const Vector& v);
    void set_column(std::size_t c, const Vector& v);
    /// Entries in row-major order.
    const std::vector<Scalar>& entries() const noexcept { return data_; }

    Matrix transpose() const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    static Matrix hstack(const Matrix& left, const Matrix& right);

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Unique reduced row echelon form.
RowEchelon rref(const Matrix& m);

/// Some x with a*x = b, free variables set to zero; nullopt when b is not in the column space.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

}  // namespace hopfcalc
