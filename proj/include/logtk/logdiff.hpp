#pragma once

#include "logtk/prelog.hpp"

namespace logtk {

struct NotSurjective : PreconditionError {
    using PreconditionError::PreconditionError;
};

// N^gp as a presented group on the monoid generators; the trivial group (with
// the same ambient) for pointed monoids, which is the quotient convention the
// regularity procedures rely on.
FgAbGroup gp_of(const FinMonoid& N);

// coker(M^gp -> N^gp) on the target generators.
FgAbGroup gp_cokernel(const MonoidHom& h);

// One binomial generator x^{l1} - x^{l2} of ker(K[L] -> K[N]) together with the
// class of l1 - l2 in W = ker(L^gp -> N^gp) and the common image in N.
struct NuBinomial {
    Expo l1, l2;
    std::vector<Int> w_coords;
    Expo target_row;
};

struct NuData {
    FgAbGroup W;
    KernelCokernel kc; // witnesses: kernel generators in L^gp coordinates
    std::vector<NuBinomial> gens;
};

// Map data for a surjective monoid homomorphism; the kernel
// generators are found structurally for quotient maps and by elimination
// otherwise.
NuData nu_g(const MonoidHom& g);

// Log differentials: pushout of Omega_{B|A} <- B (x) Omega_{K[N]|K[M]} ->
// B (x) (N^gp/im M^gp), materialized as the cokernel of an explicit block
// matrix with labeled generators.
struct LogOmega {
    FpModule mod;
    int n_dy = 0; // generators [0, n_dy) are the dy_j; the rest are dlog classes
    FgAbGroup X;
    std::vector<Vec> target_rels; // Jacobian and invariant-factor columns
    std::vector<Vec> glue_cols;   // (u(dn_j), -v(dn_j)) columns
};

LogOmega log_differentials_data(const PrelogHom& f);
FpModule log_differentials(const PrelogHom& f);

// Surjective homomorphism of prelog rings with its ring-kernel generators.
struct SurjectionData {
    PrelogHom f;                   // (C,L) -> (B,N), ring and monoid surjective
    std::vector<Poly> ring_kernel; // generators of I = ker(C -> B) in C
};

// Conormal module N_{(B,N)|(C,L)}: pushout of I/I^2 <- B (x) J/J^2 -> B (x) W,
// with the building blocks exposed for the fundamental-sequence evaluator.
struct ConormalData {
    FpModule mod;
    FpModule iisq; // I/I^2 over B
    FgAbGroup W;
    int rI = 0, rW = 0;
    std::vector<Vec> glue;      // gluing relation columns
    std::vector<Vec> w_torsion; // invariant-factor columns of B (x) W
};

ConormalData conormal_data(const SurjectionData& s);
FpModule conormal_module(const SurjectionData& s);

PrelogHom compose_hom(const PrelogHom& f, const PrelogHom& g);

// First fundamental sequence: C (x) Omega_{(B,N)|(A,M)} -> Omega_{(C,P)|(A,M)} ->
// Omega_{(C,P)|(B,N)} -> 0 is exact.
Verdict check_first_sequence(const PrelogHom& f, const PrelogHom& h);

// Conormal sequence: N_{(B,N)|(C,L)} -> B (x) Omega_{(C,L)|(A,M)} ->
// Omega_{(B,N)|(A,M)} -> 0 is exact.
Verdict check_conormal_sequence(const PrelogHom& g, const SurjectionData& s);

// Base change: for a supplied pushout square, B2 (x) Omega_{(B1,N1)|(A1,M1)} ->
// Omega_{(B2,N2)|(A2,M2)} is an isomorphism.
Verdict base_change_check(const PrelogHom& f1, const PrelogHom& f2, const PrelogHom& cobase);

// presentation entries moved along a ring map (right-exactness of tensor)
FpModule pushforward(const FpModule& W, RingPtr target, const std::vector<Poly>& var_images);

} // namespace logtk
