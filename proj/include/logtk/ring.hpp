#pragma once

#include "logtk/groebner.hpp"
#include "logtk/verdict.hpp"
#include <memory>

namespace logtk {

enum class RingMode { Graded, Local };

// Quotient of a polynomial ring by a finitely generated ideal. Graded mode uses
// degrevlex; local mode means the localization at the origin and uses
// negdegrevlex with Mora normal forms. In local mode every ideal generator must
// lie in the maximal ideal of the origin.
class PresentedRing {
public:
    PresentedRing() = default;
    PresentedRing(std::vector<std::string> vars, Field K, std::vector<Poly> ideal,
                  RingMode mode);

    static PresentedRing make(std::vector<std::string> vars, Field K,
                              const std::vector<std::string>& ideal, RingMode mode);

    const PolyRing& poly_ring() const { return amb_; }
    const Field& field() const { return amb_.field(); }
    RingMode mode() const { return mode_; }
    bool is_local() const { return mode_ == RingMode::Local; }
    int nvars() const { return amb_.nvars(); }
    const std::vector<Poly>& ideal_gens() const { return ideal_; }
    const SubmoduleEngine& ideal_engine() const { return *sb_; }
    const std::vector<Vec>& ideal_basis() const { return sb_->reduced(); }

    Poly parse(const std::string& s) const { return amb_.parse(s); }
    std::string str(const Poly& p) const { return amb_.str(p); }

    Poly nf(const Poly& p) const { return sb_->nf(p); }
    bool is_zero(const Poly& p) const { return sb_->contains(p); }
    bool equal(const Poly& a, const Poly& b) const { return is_zero(amb_.sub(a, b)); }

    // Local mode: nonzero constant term. Graded mode: nonzero constant normal
    // form (correct for positively graded quotients, where units are scalars).
    bool is_unit(const Poly& p) const;

    // Quotient relations q*e_c for module computations over this ring.
    std::vector<Vec> quotient_relations(int ncomps) const;

    bool is_zero_ring() const;

private:
    PolyRing amb_;
    std::vector<Poly> ideal_;
    RingMode mode_ = RingMode::Graded;
    std::shared_ptr<const SubmoduleEngine> sb_;
};

// Krull dimension of the presented ring (graded: of the affine cone; local: of
// the localization at the origin), via independent variable sets of the leading
// term ideal. Returns -1 for the zero ring.
int krull_dimension(const PresentedRing& R);

// Embedding dimension vs Krull dimension at the origin; local mode only.
Verdict is_regular_local(const PresentedRing& R);

// Nakayama selection of a minimal generating subset of the ideal generated by
// `gens` inside a local ring; the returned elements map to a K-basis of Q/mQ.
std::vector<Poly> minimal_generators(const PresentedRing& R, const std::vector<Poly>& gens);

// Ambient-ring ideal saturation (I : f^inf); global orders only.
std::vector<Poly> ideal_saturation(const PolyRing& P, const std::vector<Poly>& I, const Poly& f);

// Mutual-membership equality of ambient ideals.
bool ideal_equal(const PolyRing& P, const std::vector<Poly>& I, const std::vector<Poly>& J);

// Generators of the kernel of the ring map source_ambient -> target,
// x_i -> images[i]; computed by block elimination (global target only).
std::vector<Poly> ring_map_kernel(const PolyRing& source, const PresentedRing& target,
                                  const std::vector<Poly>& images);

} // namespace logtk
