#pragma once

#include "logtk/poly.hpp"
#include <optional>

namespace logtk {

// unit * v = sum coeffs[j] * gens[j]; `unit` has nonzero constant term (it is 1
// in global mode), so the identity determines v up to a local unit.
struct LiftResult {
    bool member = false;
    std::vector<Poly> coeffs;
    Poly unit;
};

struct TrackedVec {
    Vec v;   // element of P^m
    Vec rep; // tag-space vector: v = sum rep[comp j] * gens[j]
};

// Standard basis (Buchberger over global orders, Mora's tangent-cone algorithm
// over local orders) of a submodule of P^m, with optional representation
// tracking. Tracked runs process every S-pair and harvest the reductions to
// zero as exact syzygies of the input generators (Schreyer).
class SubmoduleEngine {
public:
    SubmoduleEngine(PolyRing R, std::vector<Vec> gens, bool with_syzygies = false);

    const PolyRing& ring() const { return R_; }
    const std::vector<Vec>& generators() const { return gens_; }

    // canonical reduced basis: minimal, monic, sorted; fully tail-reduced in
    // global mode, lead-interreduced in local mode
    const std::vector<Vec>& reduced() const { return reduced_; }

    // exact syzygies of the input generators (only when requested at build)
    const std::vector<Vec>& syzygies() const { return syz_; }

    Vec nf(const Vec& v) const;
    bool contains(const Vec& v) const { return nf(v).zero(); }
    LiftResult lift(const Vec& v) const;

private:
    void build(bool with_syzygies);

    PolyRing R_;
    std::vector<Vec> gens_;
    std::vector<TrackedVec> basis_;
    std::vector<Vec> reduced_;
    std::vector<Vec> syz_;
};

// Zero-reduction check of every S-pair against the basis; no pair criteria.
bool buchberger_ok(const PolyRing& R, const std::vector<Vec>& basis);

// Normal form of v against an explicit basis (weak Mora NF in local mode, full
// division in global mode). Exposed for certificate replay.
Vec normal_form(const PolyRing& R, const Vec& v, const std::vector<Vec>& basis);

} // namespace logtk
