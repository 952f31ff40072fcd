#include "toral/matrix.hpp"

#include <sstream>
#include <utility>

namespace toral {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw error("ragged matrix literal");
        for (long x : r)
            e_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix I(n, n);
    for (std::size_t i = 0; i < n; i++)
        I(i, i) = 1;
    return I;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty())
        return IntMatrix();
    IntMatrix M(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); i++) {
        if (rows[i].size() != M.cols_)
            throw error("ragged row list");
        for (std::size_t j = 0; j < M.cols_; j++)
            M(i, j) = rows[i][j];
    }
    return M;
}

IntVector IntMatrix::row(std::size_t i) const {
    IntVector r(cols_);
    for (std::size_t j = 0; j < cols_; j++)
        r[j] = (*this)(i, j);
    return r;
}

void IntMatrix::set_row(std::size_t i, const IntVector& r) {
    for (std::size_t j = 0; j < cols_; j++)
        (*this)(i, j) = r[j];
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw error("matrix dimension mismatch in +");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); i++)
        r.e_[i] = e_[i] + o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw error("matrix dimension mismatch in -");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); i++)
        r.e_[i] = e_[i] - o.e_[i];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
        throw error("matrix dimension mismatch in *");
    IntMatrix r(rows_, o.cols_);
    Int t;
    for (std::size_t i = 0; i < rows_; i++)
        for (std::size_t k = 0; k < cols_; k++) {
            const Int& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; j++) {
                t = a * o(k, j);
                r(i, j) += t;
            }
        }
    return r;
}

IntMatrix IntMatrix::operator*(const Int& c) const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); i++)
        r.e_[i] = e_[i] * c;
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); i++)
        r.e_[i] = -e_[i];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; i++)
        for (std::size_t j = 0; j < cols_; j++)
            r(j, i) = (*this)(i, j);
    return r;
}

IntMatrix IntMatrix::pow(unsigned long k) const {
    if (!square())
        throw error("pow requires a square matrix");
    IntMatrix r = identity(rows_);
    IntMatrix b = *this;
    while (k) {
        if (k & 1)
            r = r * b;
        k >>= 1;
        if (k)
            b = b * b;
    }
    return r;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : e_)
        if (x != 0)
            return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (!square())
        return false;
    for (std::size_t i = 0; i < rows_; i++)
        for (std::size_t j = 0; j < cols_; j++)
            if ((*this)(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t k = 0; k < cols_; k++)
        std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j)
        return;
    for (std::size_t k = 0; k < rows_; k++)
        std::swap((*this)(k, i), (*this)(k, j));
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; i++) {
        for (std::size_t j = 0; j < cols_; j++)
            os << (j ? " " : "") << (*this)(i, j).get_str();
        os << "\n";
    }
    return os.str();
}

IntVector operator*(const IntVector& m, const IntMatrix& M) {
    if (m.size() != M.rows())
        throw error("vector/matrix dimension mismatch");
    IntVector r(M.cols());
    Int t;
    for (std::size_t i = 0; i < m.size(); i++) {
        if (m[i] == 0)
            continue;
        for (std::size_t j = 0; j < M.cols(); j++) {
            t = m[i] * M(i, j);
            r[j] += t;
        }
    }
    return r;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); i++)
        r[i] = a[i] + b[i];
    return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); i++)
        r[i] = a[i] - b[i];
    return r;
}

IntVector operator*(const Int& c, const IntVector& v) {
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); i++)
        r[i] = c * v[i];
    return r;
}

bool is_zero(const IntVector& v) {
    for (const Int& x : v)
        if (x != 0)
            return false;
    return true;
}

} // namespace toral
