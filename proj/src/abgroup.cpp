#include "logtk/abgroup.hpp"
#include <sstream>

namespace logtk {

FgAbGroup FgAbGroup::from_presentation(const IntMat& R) {
    FgAbGroup g;
    g.pres_ = R;
    g.snf_ = smith_normal_form(R);
    const int n = R.rows();
    const int nmin = g.snf_.diag_len();
    for (int i = 0; i < n; ++i) {
        Int d = i < nmin ? g.snf_.diag(i) : Int(0);
        if (d == 0)
            g.free_idx_.push_back(i);
        else if (d >= 2) {
            g.torsion_idx_.push_back(i);
            g.inv_.push_back(d);
        }
        // d == 1 carries no group data and is dropped
    }
    g.rank_ = int(g.free_idx_.size());
    return g;
}

FgAbGroup FgAbGroup::free_group(int rank) {
    return from_presentation(IntMat(rank, 0));
}

std::vector<Int> FgAbGroup::coords(const std::vector<Int>& z) const {
    std::vector<Int> w = snf_.U.mul_vec(z);
    std::vector<Int> c;
    c.reserve(free_idx_.size() + torsion_idx_.size());
    for (int i : free_idx_) c.push_back(w[i]);
    for (size_t t = 0; t < torsion_idx_.size(); ++t) {
        Int r = w[torsion_idx_[t]] % inv_[t];
        if (r < 0) r += inv_[t];
        c.push_back(r);
    }
    return c;
}

std::vector<Int> FgAbGroup::lift(const std::vector<Int>& coords) const {
    std::vector<Int> w(ambient(), Int(0));
    size_t k = 0;
    for (int i : free_idx_) w[i] = coords.at(k++);
    for (int i : torsion_idx_) w[i] = coords.at(k++);
    return snf_.Uinv.mul_vec(w);
}

bool FgAbGroup::class_is_zero(const std::vector<Int>& z) const {
    for (const Int& c : coords(z))
        if (c != 0) return false;
    return true;
}

bool FgAbGroup::same_class(const std::vector<Int>& a, const std::vector<Int>& b) const {
    std::vector<Int> d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return class_is_zero(d);
}

std::string FgAbGroup::str() const {
    std::ostringstream os;
    if (is_trivial()) return "0";
    bool first = true;
    if (rank_ > 0) {
        os << "Z";
        if (rank_ > 1) os << "^" << rank_;
        first = false;
    }
    for (const Int& d : inv_) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

bool AbGroupMap::well_defined() const {
    if (matrix.rows() != target.ambient() || matrix.cols() != source.ambient())
        return false;
    const IntMat& R = source.presentation();
    for (int j = 0; j < R.cols(); ++j)
        if (!in_column_lattice(target.presentation(), matrix.mul_vec(R.col(j))))
            return false;
    return true;
}

KernelCokernel kernel_cokernel(const AbGroupMap& f) {
    if (!f.well_defined())
        throw IllFormedMap("map does not carry source relations into target relations");

    KernelCokernel out;
    out.source_presentation = f.source.presentation();

    // coker f = Z^b / (L_target + im F)
    out.cokernel = FgAbGroup::from_presentation(f.target.presentation().hcat(f.matrix));

    // Preimage lattice {z : F z in L_target}: kernel of [F | R_target], z-part.
    IntMat big = f.matrix.hcat(f.target.presentation());
    IntMat ker = integer_kernel(big);
    const int a = f.source.ambient();
    IntMat zpart(a, ker.cols());
    for (int j = 0; j < ker.cols(); ++j)
        for (int i = 0; i < a; ++i) zpart(i, j) = ker(i, j);
    out.kernel_gens = zpart;

    // ker f as abstract group: Z^gens / {c : sum c_i k_i in L_source}.
    IntMat rel = integer_kernel(zpart.hcat(f.source.presentation()));
    IntMat relc(zpart.cols(), rel.cols());
    for (int j = 0; j < rel.cols(); ++j)
        for (int i = 0; i < zpart.cols(); ++i) relc(i, j) = rel(i, j);
    out.kernel = FgAbGroup::from_presentation(relc);
    return out;
}

std::optional<std::vector<Int>> KernelCokernel::kernel_coords(const std::vector<Int>& z) const {
    auto sol = solve_integer(kernel_gens.hcat(source_presentation), z);
    if (!sol) return std::nullopt;
    return std::vector<Int>(sol->begin(), sol->begin() + kernel_gens.cols());
}

FunctorDims functor_dims(const FgAbGroup& G, const Field& K) {
    FunctorDims d;
    if (K.is_rationals()) {
        d.hom = d.tensor = G.rank();
        d.ext1 = d.tor1 = 0;
        return d;
    }
    Int p(K.characteristic());
    int pdiv = 0;
    for (const Int& di : G.invariant_factors())
        if (di % p == 0) ++pdiv;
    d.hom = d.tensor = G.rank() + pdiv;
    d.ext1 = d.tor1 = pdiv;
    return d;
}

FgAbGroup subgroup_generated(const FgAbGroup& G, const IntMat& gens) {
    IntMat ker = integer_kernel(gens.hcat(G.presentation()));
    IntMat rel(gens.cols(), ker.cols());
    for (int j = 0; j < ker.cols(); ++j)
        for (int i = 0; i < gens.cols(); ++i) rel(i, j) = ker(i, j);
    return FgAbGroup::from_presentation(rel);
}

} // namespace logtk
