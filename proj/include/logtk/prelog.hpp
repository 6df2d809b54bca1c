#pragma once

#include "logtk/module.hpp"
#include "logtk/monoid.hpp"

namespace logtk {

// Noetherian local prelog ring: local-at-origin presented ring A, finitely
// presented monoid M and a multiplicative alpha sending nonunit monoid
// generators into the maximal ideal.
struct PrelogRing {
    RingPtr ring;
    FinMonoid monoid;
    std::vector<Poly> alpha; // one ring element per monoid generator
    std::string name = "prelog";

    const PolyRing& poly() const { return ring->poly_ring(); }
    const Field& field() const { return ring->field(); }

    Poly alpha_of(const Expo& row) const;
};

struct PrelogHom {
    PrelogRing source, target;
    std::vector<Poly> ring_images;  // images of source ring variables in target
    std::vector<Expo> monoid_images; // images of source monoid generators

    MonoidHom monoid_hom() const { return MonoidHom{source.monoid, target.monoid, monoid_images}; }
    Poly map_ring(const Poly& p) const {
        return source.poly().map_poly(p, ring_images, target.poly());
    }
};

// Both prelog invariants: alpha multiplicative on every relation, and local
// (nonunit generators map into the maximal ideal). The certificate lists each
// checked relation.
Verdict validate(const PrelogRing& P);

Verdict validate_hom(const PrelogHom& f);

struct MonoidPreimage {
    std::vector<Expo> gens; // generators of {m : alpha(m) in J} up to the bound
    bool complete = false;
    int degree_bound = 0;
    long classes_seen = 0;
};

// Bounded search for alpha^{-1}(J) among monoid classes of degree <= bound,
// with one full saturated extra layer as the completeness criterion.
MonoidPreimage monoid_preimage_ideal(const PrelogRing& P, const std::vector<Poly>& J,
                                     int degree_bound, long class_budget = 100000);

struct LogIdeal {
    std::vector<Poly> gens; // I = <alpha(M) /\ J> = <alpha of the preimage generators>
    MonoidPreimage preimage;
};

LogIdeal log_ideal(const PrelogRing& P, const std::vector<Poly>& J, int degree_bound);

// (B, N) = (A/J, M/alpha^{-1}(J)) with the induced structure map.
PrelogRing quotient_prelog(const PrelogRing& P, const std::vector<Poly>& J, int degree_bound);

} // namespace logtk
