#include "qtilt/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qtilt {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long v : r)
            data_.emplace_back(v);
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::column(const std::vector<Rational>& v)
{
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        m(i, 0) = v[i];
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs(k, j);
                if (sgn(b) != 0)
                    out(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
    Matrix out = *this;
    out += rhs;
    return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += rhs.data_[i];
    return *this;
}

Matrix Matrix::operator-(const Matrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] -= rhs.data_[i];
    return out;
}

Matrix Matrix::operator-() const
{
    Matrix out = *this;
    for (auto& x : out.data_)
        x = -x;
    return out;
}

Matrix Matrix::scaled(const Rational& s) const
{
    Matrix out = *this;
    for (auto& x : out.data_)
        x *= s;
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const
{
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

Matrix Matrix::transpose() const
{
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (sgn(x) != 0)
            return false;
    return true;
}

std::vector<Rational> Matrix::col(std::size_t c) const
{
    std::vector<Rational> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, c);
    return v;
}

std::vector<Rational> Matrix::row(std::size_t r) const
{
    return {data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_)};
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b)
{
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw std::out_of_range("set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const
{
    Matrix out(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            out(i, j) = (*this)(i, idx[j]);
    return out;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const
{
    Matrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(i, j) = (*this)(idx[i], j);
    return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b)
{
    // an empty operand adopts the row count of the other one
    if (a.cols_ == 0)
        return b.cols_ == 0 ? Matrix(std::max(a.rows_, b.rows_), 0) : b;
    if (b.cols_ == 0)
        return a;
    if (a.rows_ != b.rows_)
        throw std::invalid_argument("hstack row mismatch");
    Matrix out(a.rows_, a.cols_ + b.cols_);
    out.set_block(0, 0, a);
    out.set_block(0, a.cols_, b);
    return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b)
{
    if (a.rows_ == 0)
        return b.rows_ == 0 ? Matrix(0, std::max(a.cols_, b.cols_)) : b;
    if (b.rows_ == 0)
        return a;
    if (a.cols_ != b.cols_)
        throw std::invalid_argument("vstack col mismatch");
    Matrix out(a.rows_ + b.rows_, a.cols_);
    out.set_block(0, 0, a);
    out.set_block(a.rows_, 0, b);
    return out;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols)
{
    Matrix out(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("from_columns length mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            out(i, j) = cols[j][i];
    }
    return out;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << (*this)(i, j).get_str();
    }
    os << "]";
    return os.str();
}

Echelon rref(Matrix m)
{
    Echelon e;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j)
                std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0)
                continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(m(r, j)) != 0)
                    m(i, j) -= f * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = m.block(0, 0, r, cols);
    return e;
}

std::size_t rank(const Matrix& m)
{
    if (m.empty())
        return 0;
    return rref(m).pivots.size();
}

Matrix nullspace(const Matrix& m)
{
    const std::size_t n = m.cols();
    if (m.rows() == 0)
        return Matrix::identity(n);
    Echelon e = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j])
            free.push_back(j);
    Matrix out(n, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        out(free[k], k) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            out(e.pivots[r], k) = -e.reduced(r, free[k]);
    }
    return out;
}

Matrix left_nullspace(const Matrix& m)
{
    return nullspace(m.transpose()).transpose();
}

std::vector<std::size_t> independent_columns(const Matrix& m)
{
    if (m.empty())
        return {};
    return rref(m).pivots;
}

Matrix column_basis(const Matrix& m)
{
    return m.select_cols(independent_columns(m));
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve shape mismatch");
    const std::size_t n = a.cols(), k = b.cols();
    if (a.rows() == 0)
        return Matrix(n, k);
    Echelon e = rref(Matrix::hstack(a, b));
    Matrix x(n, k);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= n)
            return std::nullopt;
        for (std::size_t j = 0; j < k; ++j)
            x(e.pivots[r], j) = e.reduced(r, n + j);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    if (rank(m) != m.rows())
        return std::nullopt;
    return solve(m, Matrix::identity(m.rows()));
}

Matrix left_inverse(const Matrix& k)
{
    // rows of k that are independent give an invertible square block
    auto rows = independent_columns(k.transpose());
    if (rows.size() != k.cols())
        throw std::invalid_argument("left_inverse: not full column rank");
    auto inv = inverse(k.select_rows(rows));
    Matrix out(k.cols(), k.rows());
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < k.cols(); ++i)
            out(i, rows[j]) = (*inv)(i, j);
    return out;
}

Matrix right_inverse(const Matrix& q)
{
    return left_inverse(q.transpose()).transpose();
}

std::vector<std::size_t> complement_columns(const Matrix& base, const Matrix& extra)
{
    std::size_t nb = base.cols();
    auto piv = independent_columns(Matrix::hstack(base, extra));
    std::vector<std::size_t> out;
    for (auto p : piv)
        if (p >= nb)
            out.push_back(p - nb);
    return out;
}

bool in_column_space(const Matrix& base, const std::vector<Rational>& v)
{
    if (base.cols() == 0) {
        for (const auto& x : v)
            if (sgn(x) != 0)
                return false;
        return true;
    }
    return rank(Matrix::hstack(base, Matrix::column(v))) == rank(base);
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

Rational parse_rational(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: " + s);
    q.canonicalize();
    return q;
}

} // namespace qtilt
