#include "singcol/matrix.hpp"

namespace singcol {

RrefResult rref(const RationalMatrix& m) {
    RrefResult res;
    res.matrix = m;
    RationalMatrix& a = res.matrix;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t c = col; c < a.cols(); ++c)
                std::swap(a.at(sel, c), a.at(pivot_row, c));
        Rational inv = 1 / a.at(pivot_row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a.at(pivot_row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a.at(r, col) == 0) continue;
            Rational f = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(r, c) -= f * a.at(pivot_row, c);
        }
        res.pivot_columns.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

} // namespace singcol
