#include "hopfcalc/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hopfcalc {

namespace {

void require(bool condition, const char* message)
{
    if (!condition)
        throw std::invalid_argument(message);
}

}  // namespace

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t index)
{
    Vector v = zero_vector(field, n);
    v.at(index) = Scalar::one(field);
    return v;
}

bool is_zero(const Vector& v)
{
    for (const auto& s : v) {
        if (!s.is_zero())
            return false;
    }
    return true;
}

Vector operator+(const Vector& a, const Vector& b)
{
    require(a.size() == b.size(), "vector length mismatch");
    Vector out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += b[i];
    return out;
}

Vector operator-(const Vector& a, const Vector& b)
{
    require(a.size() == b.size(), "vector length mismatch");
    Vector out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] -= b[i];
    return out;
}

Vector operator*(const Scalar& s, const Vector& v)
{
    Vector out = v;
    for (auto& x : out)
        x *= s;
    return out;
}

void add_scaled(Vector& a, const Scalar& s, const Vector& b)
{
    require(a.size() == b.size(), "vector length mismatch");
    if (s.is_zero())
        return;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!b[i].is_zero())
            a[i] += s * b[i];
    }
}

Scalar dot(const Vector& a, const Vector& b)
{
    require(a.size() == b.size(), "vector length mismatch");
    if (a.empty())
        return Scalar();
    Scalar acc = Scalar::zero(a.front().field());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero())
            acc += a[i] * b[i];
    }
    return acc;
}

std::string to_string(const Vector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += v[i].to_string();
    }
    return out + ")";
}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field))
{
}

Matrix Matrix::identity(const Field& field, std::size_t n)
{
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        m.set_row(r, rows[r]);
    return m;
}

Matrix Matrix::from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& columns)
{
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        m.set_column(c, columns[c]);
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    require(r < rows_, "row index out of range");
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    require(c < cols_, "column index out of range");
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v.push_back((*this)(r, c));
    return v;
}

void Matrix::set_row(std::size_t r, const Vector& v)
{
    require(r < rows_ && v.size() == cols_, "row shape mismatch");
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = v[c];
}

void Matrix::set_column(std::size_t c, const Vector& v)
{
    require(c < cols_ && v.size() == rows_, "column shape mismatch");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const { return hopfcalc::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& rhs)
{
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += rhs.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs)
{
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= rhs.data_[i];
    return *this;
}

Matrix operator*(const Scalar& s, const Matrix& m)
{
    Matrix out = m;
    for (auto& x : out.data_)
        x *= s;
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    require(a.cols_ == b.rows_, "matrix product shape mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (!bkj.is_zero())
                    out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

Vector operator*(const Matrix& a, const Vector& v)
{
    require(a.cols_ == v.size(), "matrix-vector shape mismatch");
    Vector out = zero_vector(a.field_, a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (!a(i, k).is_zero() && !v[k].is_zero())
                out[i] += a(i, k) * v[k];
        }
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom)
{
    require(top.cols_ == bottom.cols_, "vstack column mismatch");
    Matrix out(top.field_, top.rows_ + bottom.rows_, top.cols_);
    std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
    return out;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right)
{
    require(left.rows_ == right.rows_, "hstack row mismatch");
    Matrix out(left.field_, left.rows_, left.cols_ + right.cols_);
    for (std::size_t r = 0; r < left.rows_; ++r) {
        for (std::size_t c = 0; c < left.cols_; ++c)
            out(r, c) = left(r, c);
        for (std::size_t c = 0; c < right.cols_; ++c)
            out(r, left.cols_ + c) = right(r, c);
    }
    return out;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r)
            os << ", ";
        os << hopfcalc::to_string(row(r));
    }
    os << "]";
    return os.str();
}

RowEchelon rref(const Matrix& m)
{
    RowEchelon out{m, {}, 0};
    Matrix& a = out.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && a(sel, col).is_zero())
            ++sel;
        if (sel == rows)
            continue;
        if (sel != pivot_row) {
            for (std::size_t c = col; c < cols; ++c)
                std::swap(a(sel, c), a(pivot_row, c));
        }
        const Scalar inv = a(pivot_row, col).inverse();
        for (std::size_t c = col; c < cols; ++c) {
            if (!a(pivot_row, c).is_zero())
                a(pivot_row, c) *= inv;
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || a(r, col).is_zero())
                continue;
            const Scalar factor = a(r, col);
            for (std::size_t c = col; c < cols; ++c) {
                if (!a(pivot_row, c).is_zero())
                    a(r, c) -= factor * a(pivot_row, c);
            }
        }
        out.pivots.push_back(col);
        ++pivot_row;
    }
    out.rank = out.pivots.size();
    return out;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b)
{
    require(a.rows() == b.size(), "solve: right-hand side length mismatch");
    Matrix augmented(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            augmented(r, c) = a(r, c);
        augmented(r, a.cols()) = b[r];
    }
    const RowEchelon e = rref(augmented);
    if (!e.pivots.empty() && e.pivots.back() == a.cols())
        return std::nullopt;
    Vector x = zero_vector(a.field(), a.cols());
    for (std::size_t i = 0; i < e.rank; ++i)
        x[e.pivots[i]] = e.reduced(i, a.cols());
    return x;
}

}  // namespace hopfcalc
