#pragma once

#include "logtk/snf.hpp"
#include "logtk/field.hpp"
#include <optional>
#include <string>
#include <vector>

namespace logtk {

// Finitely generated abelian group in invariant-factor form, kept together with
// the presenting matrix (group = Z^rows / column lattice) and the unimodular
// change of basis produced by the Smith normal form. Unit invariant factors are
// discarded from the canonical form.
class FgAbGroup {
public:
    FgAbGroup() : rank_(0) {}

    static FgAbGroup from_presentation(const IntMat& R);
    static FgAbGroup free_group(int rank);
    static FgAbGroup trivial() { return free_group(0); }

    int rank() const { return rank_; }
    const std::vector<Int>& invariant_factors() const { return inv_; }
    const IntMat& presentation() const { return pres_; }
    const SmithForm& basis_map() const { return snf_; }

    int ambient() const { return pres_.rows(); }
    bool is_trivial() const { return rank_ == 0 && inv_.empty(); }
    bool is_free() const { return inv_.empty(); }

    // Canonical coordinates of the class of an ambient vector: free coordinates
    // first, then one coordinate per invariant factor reduced to [0, d).
    std::vector<Int> coords(const std::vector<Int>& z) const;

    // Some ambient vector whose class has the given canonical coordinates.
    std::vector<Int> lift(const std::vector<Int>& coords) const;

    bool class_is_zero(const std::vector<Int>& z) const;
    bool same_class(const std::vector<Int>& a, const std::vector<Int>& b) const;
    bool same_iso_type(const FgAbGroup& o) const {
        return rank_ == o.rank_ && inv_ == o.inv_;
    }

    std::string str() const;

private:
    IntMat pres_;
    SmithForm snf_;
    int rank_ = 0;
    std::vector<Int> inv_;          // divisibility chain, each >= 2
    std::vector<int> free_idx_;     // U-coordinate indices contributing free parts
    std::vector<int> torsion_idx_;  // U-coordinate indices per invariant factor
};

// Homomorphism between presented groups given by a matrix on ambient coordinates.
struct AbGroupMap {
    FgAbGroup source, target;
    IntMat matrix; // target.ambient() x source.ambient()

    bool well_defined() const;
    std::vector<Int> apply(const std::vector<Int>& z) const { return matrix.mul_vec(z); }
};

struct KernelCokernel {
    FgAbGroup kernel;
    FgAbGroup cokernel;
    // Inclusion witness: columns are source-ambient vectors generating the kernel.
    IntMat kernel_gens;
    IntMat source_presentation;

    // Express a source-ambient vector whose class lies in the kernel as a
    // combination of the kernel generators (modulo source relations).
    std::optional<std::vector<Int>> kernel_coords(const std::vector<Int>& z) const;
};

struct IllFormedMap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

KernelCokernel kernel_cokernel(const AbGroupMap& f);

// K-dimensions of Hom_Z(G,K), Ext^1_Z(G,K), Tor_1^Z(G,K), G (x) K.
struct FunctorDims {
    int hom = 0, ext1 = 0, tor1 = 0, tensor = 0;
};

FunctorDims functor_dims(const FgAbGroup& G, const Field& K);

// Isomorphism type of the subgroup of G generated by the classes of the given
// ambient vectors (columns).
FgAbGroup subgroup_generated(const FgAbGroup& G, const IntMat& gens);

} // namespace logtk
