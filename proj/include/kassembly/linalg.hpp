#pragma once

#include "kassembly/rational.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace kassembly {

// Dense matrix over exact rationals, row-major. Used for the per-degree
// slices of graded linear maps; sizes stay at desk scale.
class RatMatrix {
public:
    RatMatrix() = default;

    RatMatrix(int rows, int cols) : rows_(check_dim(rows)), cols_(check_dim(cols)) {
        d_.assign(static_cast<std::size_t>(rows_) * cols_, Rat(0));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int i, int j) { return d_[index(i, j)]; }
    const Rat& at(int i, int j) const { return d_[index(i, j)]; }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    bool is_zero() const {
        for (const auto& x : d_)
            if (x != 0) return false;
        return true;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: size mismatch in product");
        RatMatrix out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rat& aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Rat& bkj = b.at(k, j);
                    if (bkj != 0) out.at(i, j) += aik * bkj;
                }
            }
        return out;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

private:
    static int check_dim(int n) {
        if (n < 0) throw std::invalid_argument("RatMatrix: negative dimension");
        return n;
    }

    std::size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("RatMatrix: index out of range");
        return static_cast<std::size_t>(i) * cols_ + j;
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> d_;
};

inline RatMatrix hconcat(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row count mismatch");
    RatMatrix out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

namespace detail {

// Row echelon form over the integers by fraction-free (Bareiss) elimination.
// Rows are first scaled by the LCM of their denominators, so ranks and pivot
// columns agree with the rational matrix. Exact throughout; no pivoting
// heuristics are needed for correctness.
struct IntEchelon {
    std::vector<std::vector<Int>> m; // echelon rows, one per pivot
    std::vector<int> pivot_cols;     // strictly increasing
    int cols = 0;
};

inline IntEchelon fraction_free_echelon(const RatMatrix& a) {
    IntEchelon e;
    e.cols = a.cols();
    std::vector<std::vector<Int>> rows;
    rows.reserve(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i) {
        Int lcm = 1;
        for (int j = 0; j < a.cols(); ++j) {
            Int den = denominator(a.at(i, j));
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        std::vector<Int> row(static_cast<std::size_t>(a.cols()));
        bool nonzero = false;
        for (int j = 0; j < a.cols(); ++j) {
            Rat scaled = a.at(i, j) * Rat(lcm);
            row[static_cast<std::size_t>(j)] = numerator(scaled);
            nonzero = nonzero || row[static_cast<std::size_t>(j)] != 0;
        }
        if (nonzero) rows.push_back(std::move(row));
    }

    Int prev = 1;
    std::size_t r = 0;
    for (int c = 0; c < a.cols() && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][static_cast<std::size_t>(c)] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Int pivot = rows[r][static_cast<std::size_t>(c)];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            const Int head = rows[i][static_cast<std::size_t>(c)];
            for (int j = 0; j < a.cols(); ++j) {
                std::size_t sj = static_cast<std::size_t>(j);
                rows[i][sj] = (pivot * rows[i][sj] - head * rows[r][sj]) / prev;
            }
        }
        prev = pivot;
        e.pivot_cols.push_back(c);
        ++r;
    }
    rows.resize(e.pivot_cols.size());
    e.m = std::move(rows);
    return e;
}

} // namespace detail

inline int rank(const RatMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return static_cast<int>(detail::fraction_free_echelon(a).pivot_cols.size());
}

// Columns form a basis of {x : a·x = 0}; the result has a.cols() rows and
// (a.cols() - rank) columns, one per free column of the echelon form.
inline RatMatrix nullspace(const RatMatrix& a) {
    const int n = a.cols();
    if (n == 0) return RatMatrix(0, 0);
    detail::IntEchelon e = (a.rows() == 0) ? detail::IntEchelon{{}, {}, n}
                                           : detail::fraction_free_echelon(a);
    const int r = static_cast<int>(e.pivot_cols.size());
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    RatMatrix out(n, n - r);
    int outcol = 0;
    for (int fc = 0; fc < n; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        std::vector<Rat> v(static_cast<std::size_t>(n), Rat(0));
        v[static_cast<std::size_t>(fc)] = 1;
        // Back-substitute through the echelon rows above the free column.
        for (int i = r - 1; i >= 0; --i) {
            const int pc = e.pivot_cols[static_cast<std::size_t>(i)];
            if (pc > fc) continue;
            Rat acc(0);
            for (int j = pc + 1; j < n; ++j) {
                const Int& coef = e.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (coef != 0 && v[static_cast<std::size_t>(j)] != 0)
                    acc += Rat(coef) * v[static_cast<std::size_t>(j)];
            }
            v[static_cast<std::size_t>(pc)] = -acc / Rat(e.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(pc)]);
        }
        for (int i = 0; i < n; ++i) out.at(i, outcol) = v[static_cast<std::size_t>(i)];
        ++outcol;
    }
    return out;
}

} // namespace kassembly
