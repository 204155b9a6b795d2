#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qtilt {

using Rational = mpq_class;

// Dense matrix over the rationals, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix column(const std::vector<Rational>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Rational>& data() const { return data_; }

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const Rational& s) const;
    Matrix& operator+=(const Matrix& rhs);
    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    Matrix transpose() const;
    bool is_zero() const;

    std::vector<Rational> col(std::size_t c) const;
    std::vector<Rational> row(std::size_t r) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
    Matrix select_cols(const std::vector<std::size_t>& idx) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols);

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct Echelon {
    Matrix reduced;                  // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots; // pivot column of each row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

// Columns form a basis of {x : m x = 0}.
Matrix nullspace(const Matrix& m);
// Rows form a basis of {y : y m = 0}.
Matrix left_nullspace(const Matrix& m);
// Columns form a basis of the column space (a subset of the columns of m).
Matrix column_basis(const Matrix& m);
std::vector<std::size_t> independent_columns(const Matrix& m);

// Some X with a X = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
Matrix left_inverse(const Matrix& full_column_rank);
Matrix right_inverse(const Matrix& full_row_rank);

// Columns of `extra` that extend the column space of `base`, chosen greedily.
std::vector<std::size_t> complement_columns(const Matrix& base, const Matrix& extra);

bool in_column_space(const Matrix& base, const std::vector<Rational>& v);

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

} // namespace qtilt
