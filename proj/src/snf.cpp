#include "logtk/snf.hpp"

namespace logtk {

namespace {

void swap_rows(IntMat& M, int i, int j) {
    for (int c = 0; c < M.cols(); ++c) std::swap(M(i, c), M(j, c));
}
void swap_cols(IntMat& M, int i, int j) {
    for (int r = 0; r < M.rows(); ++r) std::swap(M(r, i), M(r, j));
}
void add_row(IntMat& M, int i, int j, const Int& f) { // row i += f * row j
    for (int c = 0; c < M.cols(); ++c) M(i, c) += f * M(j, c);
}
void add_col(IntMat& M, int i, int j, const Int& f) { // col i += f * col j
    for (int r = 0; r < M.rows(); ++r) M(r, i) += f * M(r, j);
}
void scale_row(IntMat& M, int i, int s) {
    for (int c = 0; c < M.cols(); ++c) M(i, c) *= s;
}
void scale_col(IntMat& M, int i, int s) {
    for (int r = 0; r < M.rows(); ++r) M(r, i) *= s;
}

struct Work {
    IntMat D, U, Uinv, V, Vinv;

    void row_swap(int i, int j) {
        swap_rows(D, i, j);
        swap_rows(U, i, j);
        swap_cols(Uinv, i, j);
    }
    void col_swap(int i, int j) {
        swap_cols(D, i, j);
        swap_cols(V, i, j);
        swap_rows(Vinv, i, j);
    }
    void row_add(int i, int j, const Int& f) {
        add_row(D, i, j, f);
        add_row(U, i, j, f);
        add_col(Uinv, j, i, -f);
    }
    void col_add(int i, int j, const Int& f) {
        add_col(D, i, j, f);
        add_col(V, i, j, f);
        add_row(Vinv, j, i, -f);
    }
    void row_negate(int i) {
        scale_row(D, i, -1);
        scale_row(U, i, -1);
        scale_col(Uinv, i, -1);
    }

    // Smallest nonzero |entry| in D[k:,k:]; ties broken by (row, col) so the
    // output is reproducible. Returns false when the block is zero.
    bool find_pivot(int k, int& pi, int& pj) const {
        bool found = false;
        Int best;
        for (int i = k; i < D.rows(); ++i)
            for (int j = k; j < D.cols(); ++j) {
                if (D(i, j) == 0) continue;
                Int a = abs(D(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }
};

} // namespace

SmithForm smith_normal_form(const IntMat& A) {
    const int m = A.rows(), n = A.cols();
    Work w;
    w.D = A;
    w.U = IntMat::identity(m);
    w.Uinv = IntMat::identity(m);
    w.V = IntMat::identity(n);
    w.Vinv = IntMat::identity(n);

    const int nmin = std::min(m, n);
    for (int k = 0; k < nmin; ++k) {
        int pi, pj;
        if (!w.find_pivot(k, pi, pj)) break;
        for (;;) {
            w.row_swap(k, pi);
            w.col_swap(k, pj);

            bool clean = true;
            for (int i = k + 1; i < m; ++i) {
                if (w.D(i, k) == 0) continue;
                Int q = w.D(i, k) / w.D(k, k); // truncated division
                w.row_add(i, k, -q);
                if (w.D(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < n; ++j) {
                if (w.D(k, j) == 0) continue;
                Int q = w.D(k, j) / w.D(k, k);
                w.col_add(j, k, -q);
                if (w.D(k, j) != 0) clean = false;
            }
            if (!clean) {
                w.find_pivot(k, pi, pj);
                continue;
            }

            // Pivot divides every entry of the trailing block, or fold the
            // offending row in and restart the elimination at k.
            int bi = -1;
            for (int i = k + 1; i < m && bi < 0; ++i)
                for (int j = k + 1; j < n; ++j)
                    if (w.D(i, j) % w.D(k, k) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            w.row_add(k, bi, Int(1));
            pi = k;
            pj = k;
        }
        if (w.D(k, k) < 0) w.row_negate(k);
    }

    SmithForm s;
    s.U = std::move(w.U);
    s.Uinv = std::move(w.Uinv);
    s.V = std::move(w.V);
    s.Vinv = std::move(w.Vinv);
    s.D = std::move(w.D);
    return s;
}

std::optional<std::vector<Int>> solve_integer(const IntMat& A, const std::vector<Int>& b) {
    SmithForm s = smith_normal_form(A);
    std::vector<Int> ub = s.U.mul_vec(b);
    std::vector<Int> y(A.cols(), Int(0));
    const int nmin = s.diag_len();
    for (int i = 0; i < A.rows(); ++i) {
        Int d = i < nmin ? s.diag(i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            if (i < A.cols()) y[i] = ub[i] / d;
        }
    }
    return s.V.mul_vec(y);
}

IntMat integer_kernel(const IntMat& A) {
    SmithForm s = smith_normal_form(A);
    const int n = A.cols(), nmin = s.diag_len();
    std::vector<int> free_idx;
    for (int i = 0; i < n; ++i)
        if (i >= nmin || s.diag(i) == 0) free_idx.push_back(i);
    IntMat K(n, int(free_idx.size()));
    for (size_t j = 0; j < free_idx.size(); ++j)
        for (int i = 0; i < n; ++i) K(i, int(j)) = s.V(i, free_idx[j]);
    return K;
}

bool in_column_lattice(const IntMat& A, const std::vector<Int>& b) {
    return solve_integer(A, b).has_value();
}

} // namespace logtk
