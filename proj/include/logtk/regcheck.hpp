#pragma once

#include "logtk/logdiff.hpp"

namespace logtk {

struct RegcheckOptions {
    int degree_bound = 8;      // monoid preimage search
    long hilbert_budget = 10000; // saturation / membership completions
};

// J is a log regular ideal: ker(A/I -> B) is generated by a regular sequence
// (Koszul H1 test over A/I) and Tor_1^{K[M]}(A, K[M]/I') = 0, where I is
// generated by the structure-map image of the monoid preimage of J and I' is
// the corresponding monomial ideal of K[M]. Preconditions: valid prelog
// structure, M integral and sharp with free group completion.
Verdict is_log_regular_ideal(const PrelogRing& P, const std::vector<Poly>& J,
                             const RegcheckOptions& opt = {});

// Log regular local ring: the maximal ideal is a log regular ideal.
Verdict is_log_regular(const PrelogRing& P, const RegcheckOptions& opt = {});

// Dimension criterion: A/I regular and dim A = dim A/I + rank M^gp.
Verdict kato_criterion(const PrelogRing& P, const RegcheckOptions& opt = {});

// Log complete intersection, direct route: requires A regular local; decides
// whether the maximal monomial ideal of K[M] (localized at the origin) is
// generated by a regular sequence.
Verdict is_log_complete_intersection_direct(const PrelogRing& P,
                                            const RegcheckOptions& opt = {});

// Presentation route: P presented as Q/J with Q certified log regular; the
// verdict is is_log_regular_ideal(Q, J).
Verdict is_log_complete_intersection_presented(const PrelogRing& Q, const std::vector<Poly>& J,
                                               const RegcheckOptions& opt = {});

// Sufficient smoothness criterion for K[M] -> K[N] (N integral): Hom of the
// gp-kernel and Ext^1 of the gp-cokernel vanish for modules over the residue
// characteristic. Certificate records the SNF data of both groups.
Verdict is_log_smooth_sufficient(const MonoidHom& h, const Field& K);

// Restriction of the smoothness transfer: with the three group-vanishing
// hypotheses, (B,N) is log formally smooth over (K[M],M) iff B is formally
// smooth over K[N]; decided at the origin by the Jacobian criterion plus
// regularity of the monomial fiber.
Verdict smoothness_equivalence(const MonoidHom& h, const PrelogRing& target,
                               const RegcheckOptions& opt = {});

// Tripwire: over a perfect coefficient field with N integral and saturated,
// log regularity and log formal smoothness over the base field must agree on
// monoid-algebra instances; non-monoid-algebra instances are not comparable.
Verdict regularity_smoothness_crosscheck(const PrelogRing& P, const RegcheckOptions& opt = {});

struct FundamentalReport {
    // H0 row
    int dim_omega_mon_k = 0;  // Omega_{K[N]|K[M]} (x) k
    int dim_omega_ring_k = 0; // Omega_{B|A} (x) k
    int dim_x_k = 0;          // (N^gp / im M^gp) (x) k
    int dim_omega_log_k = 0;  // Omega_{(B,N)|(A,M)} (x) k
    int dim_gamma = 0;        // ker (x) k + Tor_1(coker, k), any homomorphism
    bool h0_consistent = false;

    // H1 row (surjective case only)
    bool surjective_case = false;
    int dim_asq_k = 0;      // a/a^2 (x) k
    int dim_iisq_k = 0;     // I/I^2 (x) k
    int dim_conormal_k = 0; // N_{(B,N)|(A,M)} (x) k
    bool h1_consistent = false;
    bool gamma_consistent = false;

    nlohmann::json to_json() const;
};

// Low-degree evaluation of the fundamental exact sequence with W = k. The ring
// kernel generators enable the H1 row when both maps are surjective.
FundamentalReport fundamental_sequence_low_degree(
    const PrelogHom& f, const std::vector<Poly>& ring_kernel = {});

// Re-verify an emitted certificate by normal-form reductions and dimension
// arithmetic only; returns the replayed status.
Verdict replay_certificate(const nlohmann::json& cert);

} // namespace logtk
