#pragma once

#include "logtk/abgroup.hpp"
#include "logtk/ring.hpp"
#include <memory>
#include <optional>

namespace logtk {

// Finitely presented commutative monoid, written additively: exponent rows over
// the generators, relations as row pairs. A nonempty `absorbing` list makes the
// monoid pointed: the listed rows generate a monoid ideal identified to one
// absorbing class z (the quotient M/I).
struct FinMonoid {
    std::vector<std::string> gens;
    std::vector<std::pair<Expo, Expo>> relations;
    std::vector<Expo> absorbing;

    int ngens() const { return int(gens.size()); }
    bool pointed() const { return !absorbing.empty(); }

    static FinMonoid free_monoid(int n, const std::string& prefix = "a");
};

struct PointedMonoid : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotIntegral : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct TorsionCompletion : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct ImproperIdeal : PreconditionError {
    using PreconditionError::PreconditionError;
};

// K[M]: generators as variables, one binomial per congruence pair. For pointed
// monoids the absorbing class is kept as a basis element (the paper's Z[M/I] =
// Z[M]/a with a generated by the differences of ideal elements).
PresentedRing monoid_algebra_presentation(const FinMonoid& M, const Field& K);

// Binomial generators of the difference ideal a = <x^a - x^b : a, b in I> over
// the polynomial ring of K[M]'s presentation.
std::vector<Poly> difference_ideal_gens(const FinMonoid& M, const PolyRing& P);

// Monomial generators x^g of I' = <g : g in absorbing ideal>.
std::vector<Poly> monomial_ideal_gens(const FinMonoid& M, const PolyRing& P);

// Congruence oracle: normal forms in the monoid algebra over Q.
class MonoidOracle {
public:
    explicit MonoidOracle(FinMonoid M);

    const FinMonoid& monoid() const { return M_; }
    const PresentedRing& algebra() const { return *alg_; }

    Poly class_nf(const Expo& m) const;
    bool congruent(const Expo& a, const Expo& b) const;
    bool is_absorbing_class(const Expo& m) const;
    bool is_unit(const Expo& m) const; // non-pointed monoids

private:
    FinMonoid M_;
    std::shared_ptr<const PresentedRing> alg_;
};

struct GroupCompletion {
    FgAbGroup group; // ambient = ngens; generator i is the class of e_i
};

// errors: PointedMonoid when an absorbing element is present
GroupCompletion group_completion(const FinMonoid& M);

// gp of a pointed monoid degenerates to the trivial group
FgAbGroup pointed_gp();

// M integral iff the binomial ideal equals its saturation (lattice ideal test
// over Q); certificate records both reduced bases.
Verdict is_integral(const FinMonoid& M);

FinMonoid quotient_by_ideal(const FinMonoid& M, const std::vector<Expo>& ideal_gens);

FinMonoid localization(const FinMonoid& M, const std::vector<Expo>& S);

struct UnitsReport {
    FgAbGroup units;
    bool is_sharp = false;
    std::vector<Expo> maximal_ideal; // generators of m_M = M - M*
};

UnitsReport units_and_sharpness(const FinMonoid& M);

// Hilbert-basis comparison of M against its saturation inside M^gp; bounded
// Contejean-Devie completion with the given element budget.
Verdict is_saturated(const FinMonoid& M, long budget = 10000);

struct MonoidHom {
    FinMonoid source, target;
    std::vector<Expo> images; // one target row per source generator

    Expo image_row(const Expo& a) const;
};

bool hom_well_defined(const MonoidHom& h);
bool hom_surjective(const MonoidHom& h);

// Group-completion functor on a homomorphism (both monoids non-pointed).
AbGroupMap gp_map(const MonoidHom& h);

// Minimal nonzero solutions of B z = 0 over N^D (Contejean-Devie completion).
std::vector<std::vector<Int>> cd_minimal_solutions(const IntMat& B, long budget);

// Membership of x in the monoid generated by the columns of V.
bool monoid_membership(const IntMat& V, const std::vector<Int>& x, long budget);

} // namespace logtk
