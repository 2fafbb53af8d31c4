#include "nalg/linalg.hpp"
#include "nalg/error.hpp"

#include <utility>

namespace nalg {

namespace {

void require(bool ok, const char* what)
{
    if (!ok)
        throw Error(ErrorKind::DimensionMismatch, what);
}

// In-place reduced row echelon form. Pivot = first nonzero entry at or
// below the current row. Returns the pivot column of each pivot row.
std::vector<std::size_t> reduce(Matrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(p, c), m(row, c));

        Rational inv = Rational(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero())
                continue;
            Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero())
                    m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Vector Vector::basis(std::size_t n, std::size_t index)
{
    if (index >= n)
        throw Error(ErrorKind::IndexOutOfRange, "basis index out of range");
    Vector v(n);
    v[index] = 1;
    return v;
}

bool Vector::is_zero() const
{
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

Vector& Vector::operator+=(const Vector& o)
{
    require(size() == o.size(), "vector lengths differ");
    for (std::size_t i = 0; i < size(); ++i)
        if (!o[i].is_zero())
            entries_[i] += o[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o)
{
    require(size() == o.size(), "vector lengths differ");
    for (std::size_t i = 0; i < size(); ++i)
        if (!o[i].is_zero())
            entries_[i] -= o[i];
    return *this;
}

Vector& Vector::operator*=(const Rational& c)
{
    for (auto& e : entries_)
        if (!e.is_zero())
            e *= c;
    return *this;
}

void Vector::axpy(const Rational& c, const Vector& o)
{
    require(size() == o.size(), "vector lengths differ");
    if (c.is_zero())
        return;
    for (std::size_t i = 0; i < size(); ++i)
        if (!o[i].is_zero())
            entries_[i] += c * o[i];
}

Vector Vector::operator-() const
{
    Vector r(*this);
    for (auto& e : r.entries_)
        e = -e;
    return r;
}

std::vector<std::string> Vector::to_strings() const
{
    std::vector<std::string> out;
    out.reserve(size());
    for (const auto& e : entries_)
        out.push_back(e.to_string());
    return out;
}

Rational dot(const Vector& a, const Vector& b)
{
    require(a.size() == b.size(), "vector lengths differ");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero())
            s += a[i] * b[i];
    return s;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require(r.size() == cols_, "ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t rows)
{
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        m.set_column(c, columns[c]);
    return m;
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::row(std::size_t r) const
{
    Vector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        v[c] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, const Vector& v)
{
    require(v.size() == rows_, "column length differs from row count");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& e : data_)
        if (!e.is_zero())
            return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero())
            data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!o.data_[i].is_zero())
            data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& c)
{
    for (auto& e : data_)
        if (!e.is_zero())
            e *= c;
    return *this;
}

Matrix Matrix::operator-() const
{
    Matrix r(*this);
    for (auto& e : r.data_)
        e = -e;
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    require(a.cols() == b.rows(), "inner dimensions differ");
    Matrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero())
                    m(i, j) += aik * b(k, j);
        }
    return m;
}

Vector operator*(const Matrix& m, const Vector& v)
{
    require(m.cols() == v.size(), "matrix/vector dimensions differ");
    Vector out(m.rows());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (v[c].is_zero())
            continue;
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (!m(r, c).is_zero())
                out[r] += m(r, c) * v[c];
    }
    return out;
}

Vector solve_linear(const Matrix& m, const Vector& b)
{
    if (!m.is_square())
        throw Error(ErrorKind::DimensionMismatch, "solve_linear needs a square matrix");
    const std::size_t n = m.rows();
    require(b.size() == n, "right-hand side length differs from matrix size");

    Matrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n) = b[r];
    }
    auto pivots = reduce(aug);
    if (pivots.size() < n || pivots.back() >= n)
        throw Error(ErrorKind::SingularMatrix, "matrix is singular");
    return aug.column(n);
}

Matrix invert(const Matrix& m)
{
    if (!m.is_square())
        throw Error(ErrorKind::DimensionMismatch, "invert needs a square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto pivots = reduce(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n))
        throw Error(ErrorKind::SingularMatrix, "matrix is singular");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = aug(r, n + c);
    return inv;
}

std::size_t rank(const Matrix& m)
{
    Matrix copy(m);
    return reduce(copy).size();
}

std::vector<Vector> nullspace(const Matrix& m)
{
    Matrix r(m);
    auto pivots = reduce(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace nalg
