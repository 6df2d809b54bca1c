#pragma once

#include "logtk/ring.hpp"
#include <memory>

namespace logtk {

using RingPtr = std::shared_ptr<const PresentedRing>;

// Finitely presented module over a PresentedRing: coker of the relation columns
// inside R^rank. Generator labels survive pushouts and minimalization so
// certificates can name where classes come from.
struct FpModule {
    RingPtr over;
    int rank = 0;
    std::vector<Vec> relations; // columns, elements of P^rank
    std::vector<std::string> labels;

    const PolyRing& poly() const { return over->poly_ring(); }
};

FpModule make_module(RingPtr R, int rank, std::vector<Vec> relations,
                     std::vector<std::string> labels = {});

FpModule zero_module(RingPtr R);
FpModule free_module(RingPtr R, int rank, std::vector<std::string> labels = {});

// Subquotient (span(gens) + span(rels))/span(rels) of R^ambient_comps, returned
// as an abstract presentation on the given generators.
FpModule present_subquotient(RingPtr R, int ambient_comps, const std::vector<Vec>& gens,
                             const std::vector<Vec>& rels,
                             std::vector<std::string> labels = {});

// dim_k (W tensor k) at the origin.
int residue_dim(const FpModule& W);

// rank over the coefficient field of the matrix of columns evaluated at the
// given point (constant terms when the point is the origin)
int eval_rank(const PolyRing& P, int ncomps, const std::vector<Vec>& cols,
              const std::vector<Rat>& point);

// Gaussian elimination on unit entries; presents the same module with
// Nakayama-minimal generators in local mode.
FpModule minimal_presentation(const FpModule& W);

FpModule direct_sum(const FpModule& A, const FpModule& B);

// W tensor R/(f)
FpModule tensor_cyclic(const FpModule& W, const Poly& f);

// Freeness: the minimal presentation has no nonzero relation column.
Verdict freeness(const FpModule& W);

// Map between presented modules: one image column per source generator.
struct ModuleMap {
    FpModule source, target;
    std::vector<Vec> cols;
};

bool map_well_defined(const ModuleMap& f);

// Generators (in the source free hull) of ker(f) as a submodule of the source.
std::vector<Vec> kernel_gens(const ModuleMap& f);

// Membership engine for a submodule of R^ncomps spanned by gens, quotient
// relations included.
SubmoduleEngine submodule_engine(const PresentedRing& R, int ncomps, std::vector<Vec> gens,
                                 bool with_syzygies = false);

// Syzygies over the quotient ring R of the elements/vectors gens < R^ncomps,
// projected to the generator coordinates.
std::vector<Vec> quotient_syzygies(const PresentedRing& R, int ncomps,
                                   const std::vector<Vec>& gens);

// --- regular sequences and Tor ---

struct NotMinimal : PreconditionError {
    using PreconditionError::PreconditionError;
};

// H_1 of the Koszul complex of g over local R vanishes iff every syzygy of g
// lies in the span of the Koszul syzygies g_i e_j - g_j e_i. Certificate
// records the syzygy basis and the reductions (replayable).
Verdict koszul_h1_vanishes(const PresentedRing& R, const std::vector<Poly>& g);

// Tor_1^R(A, R/I') for an R-algebra A given by polynomial images of R's
// variables; returns a minimal presentation over A (zero module has rank 0).
FpModule tor1_cyclic(const PresentedRing& R, RingPtr A, const std::vector<Poly>& images,
                     const std::vector<Poly>& iprime);

// Same computation, with the replayable witness record: the mapped resolution
// step, the cycles, and the reduction bases.
struct TorResult {
    FpModule tor;
    nlohmann::json certificate;
};

TorResult tor1_cyclic_cert(const PresentedRing& R, RingPtr A, const std::vector<Poly>& images,
                           const std::vector<Poly>& iprime);

// extra resolution step: Tor_2^R(A, R/I'), used as a property-test probe
FpModule tor2_cyclic(const PresentedRing& R, RingPtr A, const std::vector<Poly>& images,
                     const std::vector<Poly>& iprime);

} // namespace logtk
