#pragma once

#include "nalg/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace nalg {

/// Coordinate vector of fixed length.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t n) : entries_(n) {}
    Vector(std::initializer_list<Rational> values) : entries_(values) {}
    explicit Vector(std::vector<Rational> values) : entries_(std::move(values)) {}

    static Vector basis(std::size_t n, std::size_t index);

    std::size_t size() const { return entries_.size(); }
    Rational& operator[](std::size_t i) { return entries_[i]; }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Rational> entries() const { return entries_; }

    bool is_zero() const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    Vector& operator*=(const Rational& c);
    /// this += c * o
    void axpy(const Rational& c, const Vector& o);

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Rational& c, Vector v) { return v *= c; }
    Vector operator-() const;

    friend bool operator==(const Vector& a, const Vector& b) = default;

    std::vector<std::string> to_strings() const;

private:
    std::vector<Rational> entries_;
};

Rational dot(const Vector& a, const Vector& b);

/// Dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_columns(std::span<const Vector> columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;
    void set_column(std::size_t c, const Vector& v);

    Matrix transpose() const;
    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Rational& c, Matrix m) { return m *= c; }
    Matrix operator-() const;

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& m, const Vector& v);

/// Unique x with m x = b. Throws SingularMatrix or DimensionMismatch.
Vector solve_linear(const Matrix& m, const Vector& b);

/// m^{-1}. Throws SingularMatrix (or DimensionMismatch for non-square m).
Matrix invert(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, in reduced form (one free variable set to 1 per vector).
std::vector<Vector> nullspace(const Matrix& m);

} // namespace nalg
