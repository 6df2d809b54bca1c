#pragma once

#include "logtk/intmat.hpp"
#include <optional>

namespace logtk {

// Smith normal form U*A*V = D with U, V unimodular and D diagonal with the
// divisibility chain d1 | d2 | ... . Inverses of U and V are tracked alongside
// so group elements can be moved between presentation and invariant coordinates.
struct SmithForm {
    IntMat U, Uinv; // rows() x rows()
    IntMat V, Vinv; // cols() x cols()
    IntMat D;       // rows() x cols()

    int diag_len() const { return std::min(D.rows(), D.cols()); }
    Int diag(int i) const { return D(i, i); }
};

SmithForm smith_normal_form(const IntMat& A);

// Solve A*x = b over the integers; nullopt when no integral solution exists.
std::optional<std::vector<Int>> solve_integer(const IntMat& A, const std::vector<Int>& b);

// Basis (as matrix columns) of the integer kernel {x : A*x = 0}.
IntMat integer_kernel(const IntMat& A);

// True when b lies in the lattice spanned by the columns of A.
bool in_column_lattice(const IntMat& A, const std::vector<Int>& b);

} // namespace logtk
