#pragma once

#include <vector>

#include "singcol/rational.hpp"

namespace singcol {

// Dense matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

struct RrefResult {
    RationalMatrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

// Reduced row echelon form by Gauss-Jordan elimination; exact.
RrefResult rref(const RationalMatrix& m);

} // namespace singcol
