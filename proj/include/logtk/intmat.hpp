#pragma once

#include "logtk/field.hpp"
#include <vector>
#include <cassert>
#include <initializer_list>

namespace logtk {

// Dense integer matrix with exact entries.
class IntMat {
public:
    IntMat() : r_(0), c_(0) {}
    IntMat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, Int(0)) {}

    IntMat(std::initializer_list<std::initializer_list<long>> rows) {
        r_ = int(rows.size());
        c_ = r_ ? int(rows.begin()->size()) : 0;
        a_.reserve(size_t(r_) * c_);
        for (auto& row : rows) {
            assert(int(row.size()) == c_);
            for (long v : row) a_.push_back(Int(v));
        }
    }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    Int& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
    const Int& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

    bool operator==(const IntMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    IntMat operator*(const IntMat& o) const {
        assert(c_ == o.r_);
        IntMat m(r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const Int& v = (*this)(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.c_; ++j) m(i, j) += v * o(k, j);
            }
        return m;
    }

    IntMat transpose() const {
        IntMat m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    // Horizontal concatenation [this | o].
    IntMat hcat(const IntMat& o) const {
        assert(r_ == o.r_ || c_ == 0 || o.c_ == 0);
        int rr = std::max(r_, o.r_);
        IntMat m(rr, c_ + o.c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
        for (int i = 0; i < o.r_; ++i)
            for (int j = 0; j < o.c_; ++j) m(i, c_ + j) = o(i, j);
        return m;
    }

    std::vector<Int> col(int j) const {
        std::vector<Int> v(r_);
        for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    std::vector<Int> mul_vec(const std::vector<Int>& x) const {
        assert(int(x.size()) == c_);
        std::vector<Int> y(r_, Int(0));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    bool is_zero() const {
        for (const Int& v : a_) if (v != 0) return false;
        return true;
    }

    // Rank over the given coefficient field (Gaussian elimination on exact scalars).
    int rank_over(const Field& K) const {
        std::vector<std::vector<Rat>> m(r_, std::vector<Rat>(c_));
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m[i][j] = K.reduce(Rat((*this)(i, j)));
        int rank = 0;
        for (int j = 0; j < c_ && rank < r_; ++j) {
            int piv = -1;
            for (int i = rank; i < r_; ++i)
                if (!K.is_zero(m[i][j])) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(m[rank], m[piv]);
            Rat inv = K.inv(m[rank][j]);
            for (int jj = j; jj < c_; ++jj) m[rank][jj] = K.mul(m[rank][jj], inv);
            for (int i = 0; i < r_; ++i) {
                if (i == rank || K.is_zero(m[i][j])) continue;
                Rat f = m[i][j];
                for (int jj = j; jj < c_; ++jj)
                    m[i][jj] = K.sub(m[i][jj], K.mul(f, m[rank][jj]));
            }
            ++rank;
        }
        return rank;
    }

private:
    int r_, c_;
    std::vector<Int> a_;
};

} // namespace logtk
