#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "toral/error.hpp"

namespace toral {

using Int = mpz_class;
using Rat = mpq_class;

// Row vector of arbitrary-precision integers.
using IntVector = std::vector<Int>;

// Dense matrix of arbitrary-precision integers. Row vectors act on the
// left (m -> mA), so lattices are spanned by matrix rows throughout.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    // Row-major literal, e.g. IntMatrix({{2,1},{1,1}}).
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    void set_row(std::size_t i, const IntVector& r);

    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator*(const Int& c) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    IntMatrix transpose() const;
    IntMatrix pow(unsigned long k) const;
    bool is_zero() const;
    bool is_identity() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

// Row-vector action m -> m M.
IntVector operator*(const IntVector& m, const IntMatrix& M);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator*(const Int& c, const IntVector& v);
bool is_zero(const IntVector& v);

} // namespace toral
