#include <cstdlib>
#include <utility>

#include "equilef/classes.hpp"

namespace equilef {

namespace {

struct Reducer {
    IntMatrix a, left, left_inverse, right, right_inverse;

    // row i -= k·row j
    void row_sub(std::size_t i, std::size_t j, std::int64_t k) {
        if (k == 0) return;
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = checked_sub(a(i, c), checked_mul(k, a(j, c)));
        for (std::size_t c = 0; c < left.cols(); ++c) left(i, c) = checked_sub(left(i, c), checked_mul(k, left(j, c)));
        for (std::size_t r = 0; r < left_inverse.rows(); ++r)
            left_inverse(r, j) = checked_add(left_inverse(r, j), checked_mul(k, left_inverse(r, i)));
    }
    // col i -= k·col j
    void col_sub(std::size_t i, std::size_t j, std::int64_t k) {
        if (k == 0) return;
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) = checked_sub(a(r, i), checked_mul(k, a(r, j)));
        for (std::size_t r = 0; r < right.rows(); ++r) right(r, i) = checked_sub(right(r, i), checked_mul(k, right(r, j)));
        for (std::size_t c = 0; c < right_inverse.cols(); ++c)
            right_inverse(j, c) = checked_add(right_inverse(j, c), checked_mul(k, right_inverse(i, c)));
    }
    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
        for (std::size_t c = 0; c < left.cols(); ++c) std::swap(left(i, c), left(j, c));
        for (std::size_t r = 0; r < left_inverse.rows(); ++r) std::swap(left_inverse(r, i), left_inverse(r, j));
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
        for (std::size_t r = 0; r < right.rows(); ++r) std::swap(right(r, i), right(r, j));
        for (std::size_t c = 0; c < right_inverse.cols(); ++c) std::swap(right_inverse(i, c), right_inverse(j, c));
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
        for (std::size_t c = 0; c < left.cols(); ++c) left(i, c) = -left(i, c);
        for (std::size_t r = 0; r < left_inverse.rows(); ++r) left_inverse(r, i) = -left_inverse(r, i);
    }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    Reducer r{m, IntMatrix::identity(rows), IntMatrix::identity(rows), IntMatrix::identity(cols),
              IntMatrix::identity(cols)};
    auto& a = r.a;
    const std::size_t k = std::min(rows, cols);
    for (std::size_t t = 0; t < k; ++t) {
        for (;;) {
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a(i, j) != 0 && (pi == rows || std::llabs(a(i, j)) < std::llabs(a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) break;
            r.row_swap(t, pi);
            r.col_swap(t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                r.row_sub(i, t, a(i, t) / a(t, t));
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                r.col_sub(j, t, a(t, j) / a(t, t));
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        r.row_sub(t, i, -1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) r.row_negate(t);
    }
    SmithNormalForm out;
    out.input = m;
    out.d.resize(k);
    for (std::size_t t = 0; t < k; ++t) out.d[t] = a(t, t);
    out.left = std::move(r.left);
    out.left_inverse = std::move(r.left_inverse);
    out.right = std::move(r.right);
    out.right_inverse = std::move(r.right_inverse);
    return out;
}

}  // namespace equilef
