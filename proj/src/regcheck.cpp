#include "logtk/regcheck.hpp"
#include "logtk/serial.hpp"
#include <algorithm>

namespace logtk {

namespace {

const char* kNormalizeHint =
    "replace the prelog structure by a sharp integral one with free group "
    "completion inducing the same log structure; the verdicts are invariant "
    "under that replacement";

void check_normalized(const PrelogRing& P) {
    if (!validate(P).ok())
        throw PreconditionError("prelog structure invalid (validate fails)");
    if (P.monoid.pointed())
        throw PreconditionError(std::string("monoid has an absorbing element; ") +
                                kNormalizeHint);
    if (!is_integral(P.monoid).ok())
        throw PreconditionError(std::string("monoid is not integral; ") + kNormalizeHint);
    UnitsReport units = units_and_sharpness(P.monoid);
    if (!units.is_sharp)
        throw PreconditionError(std::string("monoid is not sharp; ") + kNormalizeHint);
    if (!group_completion(P.monoid).group.is_free())
        throw PreconditionError(std::string("monoid group completion has torsion; ") +
                                kNormalizeHint);
}

std::vector<Poly> maximal_ideal_gens(const PresentedRing& A) {
    std::vector<Poly> out;
    for (int i = 0; i < A.nvars(); ++i) out.push_back(A.poly_ring().variable(i));
    return out;
}

bool ideal_is_proper(const PresentedRing& A, const std::vector<Poly>& J) {
    std::vector<Vec> gens(J.begin(), J.end());
    for (const Poly& q : A.ideal_gens()) gens.push_back(q);
    SubmoduleEngine e(A.poly_ring(), std::move(gens));
    return !e.contains(A.poly_ring().constant(Rat(1)));
}

nlohmann::json group_json(const FgAbGroup& G) {
    nlohmann::json inv = nlohmann::json::array();
    for (const Int& d : G.invariant_factors()) inv.push_back(d.get_str());
    return {{"rank", G.rank()}, {"invariant_factors", inv}, {"iso", G.str()}};
}

AbGroupMap gp_map_general(const MonoidHom& h) {
    AbGroupMap m{gp_of(h.source), gp_of(h.target), IntMat(h.target.ngens(), h.source.ngens())};
    for (int j = 0; j < h.source.ngens(); ++j) {
        Expo e(size_t(h.source.ngens()), 0);
        e[size_t(j)] = 1;
        Expo img = h.image_row(e);
        for (int i = 0; i < h.target.ngens(); ++i) m.matrix(i, j) = img[size_t(i)];
    }
    return m;
}

} // namespace

Verdict is_log_regular_ideal(const PrelogRing& P, const std::vector<Poly>& J,
                             const RegcheckOptions& opt) {
    check_normalized(P);
    const PresentedRing& A = *P.ring;
    const PolyRing& PA = A.poly_ring();
    if (!A.is_local()) throw PreconditionError("is_log_regular_ideal needs a local ring");
    if (!ideal_is_proper(A, J)) throw PreconditionError("J must be a proper ideal");

    Verdict v;
    v.preconditions_checked = {"validate", "integral", "sharp", "free group completion",
                               "local ring", "J proper"};

    LogIdeal li = log_ideal(P, J, opt.degree_bound);
    nlohmann::json cert = {{"kind", "log-regular-ideal"}};
    nlohmann::json pg = nlohmann::json::array();
    for (const Expo& m : li.preimage.gens) {
        nlohmann::json row = nlohmann::json::array();
        for (int x : m) row.push_back(x);
        pg.push_back(row);
    }
    cert["preimage_generators"] = pg;
    cert["induced_ideal"] = poly_list_json(PA, li.gens);
    if (!li.preimage.complete) {
        v.status = Status::indeterminate;
        cert["reason"] = "monoid preimage incomplete at degree bound " +
                         std::to_string(opt.degree_bound);
        v.certificate = std::move(cert);
        return v;
    }

    // (a) ker(A/I -> B) generated by a regular sequence
    std::vector<Poly> ai_ideal = A.ideal_gens();
    for (const Poly& f : li.gens) ai_ideal.push_back(f);
    PresentedRing AI(PA.var_names(), PA.field(), ai_ideal, RingMode::Local);
    std::vector<Poly> mg = minimal_generators(AI, J);
    Verdict koszul = koszul_h1_vanishes(AI, mg);
    cert["regular_sequence"] = poly_list_json(PA, mg);
    cert["koszul"] = koszul.certificate;

    // (b) Tor_1^{K[M]}(A, K[M]/I') = 0
    PresentedRing KM = monoid_algebra_presentation(P.monoid, P.field());
    std::vector<Poly> iprime;
    for (const Expo& m : li.preimage.gens)
        iprime.push_back(KM.poly_ring().monomial(m, Rat(1)));
    TorResult tor = tor1_cyclic_cert(KM, P.ring, P.alpha, iprime);
    cert["tor1"] = tor.certificate;

    bool ok = koszul.ok() && tor.tor.rank == 0;
    v.status = ok ? Status::holds : Status::fails;
    if (!ok) {
        if (!koszul.ok())
            cert["witness"] = {{"kind", "non-koszul syzygy"},
                               {"syzygy", koszul.certificate.value("witness_pretty", "")}};
        else
            cert["witness"] = {{"kind", "nonzero tor1 class"},
                               {"dimension", residue_dim(tor.tor)}};
    }
    v.certificate = std::move(cert);
    return v;
}

Verdict is_log_regular(const PrelogRing& P, const RegcheckOptions& opt) {
    Verdict v = is_log_regular_ideal(P, maximal_ideal_gens(*P.ring), opt);
    v.certificate["kind"] = "log-regular";
    return v;
}

Verdict kato_criterion(const PrelogRing& P, const RegcheckOptions& opt) {
    check_normalized(P);
    const PresentedRing& A = *P.ring;
    const PolyRing& PA = A.poly_ring();
    if (!A.is_local()) throw PreconditionError("kato_criterion needs a local ring");

    Verdict v;
    v.preconditions_checked = {"validate", "integral", "sharp", "free group completion",
                               "local ring"};

    LogIdeal li = log_ideal(P, maximal_ideal_gens(A), opt.degree_bound);
    if (!li.preimage.complete) {
        v.status = Status::indeterminate;
        v.certificate = {{"kind", "kato"},
                         {"reason", "monoid preimage incomplete at degree bound"}};
        return v;
    }

    std::vector<Poly> ai_ideal = A.ideal_gens();
    for (const Poly& f : li.gens) ai_ideal.push_back(f);
    PresentedRing AI(PA.var_names(), PA.field(), ai_ideal, RingMode::Local);

    Verdict reg = is_regular_local(AI);
    int dim_a = krull_dimension(A);
    int dim_ai = krull_dimension(AI);
    int rank = group_completion(P.monoid).group.rank();

    bool ok = reg.ok() && dim_a == dim_ai + rank;
    v.status = ok ? Status::holds : Status::fails;
    v.certificate = {{"kind", "kato"},
                     {"dim_A", dim_a},
                     {"dim_A_mod_I", dim_ai},
                     {"rank_gp", rank},
                     {"induced_ideal", poly_list_json(PA, li.gens)},
                     {"regular_local", reg.certificate}};
    if (!ok)
        v.certificate["witness"] = {{"dim_A", dim_a}, {"expected", dim_ai + rank},
                                    {"A_mod_I_regular", reg.ok()}};
    return v;
}

Verdict is_log_complete_intersection_direct(const PrelogRing& P, const RegcheckOptions&) {
    check_normalized(P);
    Verdict regA = is_regular_local(*P.ring);
    if (!regA.ok())
        throw PreconditionError(
            "direct log-complete-intersection route requires a regular ambient ring");

    // ker(K[M] -> K[M/m_M]) is the monomial maximal ideal of K[M]; test its
    // minimal generators for Koszul H1 vanishing over K[M] at the origin
    PresentedRing KMg = monoid_algebra_presentation(P.monoid, P.field());
    PresentedRing KM(KMg.poly_ring().var_names(), P.field(), KMg.ideal_gens(), RingMode::Local);
    std::vector<Poly> gens = maximal_ideal_gens(KM);
    std::vector<Poly> mg = minimal_generators(KM, gens);
    Verdict koszul = koszul_h1_vanishes(KM, mg);

    Verdict v;
    v.status = koszul.status;
    v.preconditions_checked = {"validate", "integral", "sharp", "free group completion",
                               "ambient ring regular"};
    v.certificate = {{"kind", "log-ci-direct"},
                     {"ambient_regular", regA.certificate},
                     {"koszul", koszul.certificate}};
    return v;
}

Verdict is_log_complete_intersection_presented(const PrelogRing& Q, const std::vector<Poly>& J,
                                               const RegcheckOptions& opt) {
    Verdict qreg = is_log_regular(Q, opt);
    if (!qreg.ok())
        throw PreconditionError(
            "presentation route requires a log regular presenting ring");
    Verdict v = is_log_regular_ideal(Q, J, opt);
    nlohmann::json cert = {{"kind", "log-ci-presented"},
                           {"presenting_ring_log_regular", qreg.certificate},
                           {"ideal_check", v.certificate}};
    v.certificate = std::move(cert);
    return v;
}

Verdict is_log_smooth_sufficient(const MonoidHom& h, const Field& K) {
    if (!h.target.pointed() && !is_integral(h.target).ok())
        throw NotIntegral("is_log_smooth_sufficient: target monoid must be integral");
    if (!hom_well_defined(h)) throw PreconditionError("monoid map ill-formed");

    KernelCokernel kc = kernel_cokernel(gp_map_general(h));
    FunctorDims dker = functor_dims(kc.kernel, K);
    FunctorDims dcok = functor_dims(kc.cokernel, K);
    bool ok = dker.hom == 0 && dcok.ext1 == 0;

    Verdict v;
    v.preconditions_checked = {"target integral"};
    v.status = ok ? Status::holds : Status::fails;
    v.certificate = {{"kind", "log-smooth-sufficient"},
                     {"field", K.str()},
                     {"kernel", group_json(kc.kernel)},
                     {"cokernel", group_json(kc.cokernel)},
                     {"hom_kernel_dim", dker.hom},
                     {"ext1_cokernel_dim", dcok.ext1}};
    if (!ok)
        v.certificate["witness"] = dker.hom != 0
                                       ? "Hom of the gp-kernel does not vanish"
                                       : "Ext^1 of the gp-cokernel does not vanish";
    return v;
}

Verdict smoothness_equivalence(const MonoidHom& h, const PrelogRing& target,
                               const RegcheckOptions&) {
    const Field& K = target.field();
    if (!target.monoid.pointed() && !is_integral(target.monoid).ok())
        throw NotIntegral("smoothness_equivalence: N must be integral");
    KernelCokernel kc = kernel_cokernel(gp_map_general(h));
    FunctorDims dker = functor_dims(kc.kernel, K);
    FunctorDims dcok = functor_dims(kc.cokernel, K);
    if (dker.hom != 0 || dcok.ext1 != 0 || dcok.hom != 0)
        throw PreconditionError(
            "smoothness_equivalence: the three group-vanishing hypotheses fail");

    const PresentedRing& B = *target.ring;
    const PolyRing& PB = B.poly_ring();

    // relative differentials Omega_{B|K[N]} (x) k
    std::vector<Vec> cols;
    for (const Poly& q : B.ideal_gens()) {
        Vec c;
        for (int j = 0; j < PB.nvars(); ++j) c = PB.add(c, PB.embed(PB.derivative(q, j), j));
        if (!c.zero()) cols.push_back(c);
    }
    for (const Poly& a : target.alpha) {
        Vec c;
        for (int j = 0; j < PB.nvars(); ++j) c = PB.add(c, PB.embed(PB.derivative(a, j), j));
        if (!c.zero()) cols.push_back(c);
    }
    std::vector<Rat> origin(size_t(PB.nvars()), Rat(0));
    int omega_dim = PB.nvars() - eval_rank(PB, PB.nvars(), cols, origin);

    int dim_b = krull_dimension(B);
    PresentedRing KN = monoid_algebra_presentation(target.monoid, K);
    int dim_kn = krull_dimension(KN);
    int expected = dim_b - dim_kn;

    Verdict v;
    v.preconditions_checked = {"N integral", "group-vanishing hypotheses"};
    nlohmann::json cert = {{"kind", "smoothness-equivalence"},
                           {"relative_omega_residue", omega_dim},
                           {"dim_B", dim_b},
                           {"dim_KN", dim_kn},
                           {"expected_fiber_dim", expected}};
    if (expected < 0) {
        v.status = Status::indeterminate;
        cert["reason"] = "dimension bookkeeping fails; flatness over K[N] not certified";
        v.certificate = std::move(cert);
        return v;
    }

    // the monomial fiber B / <alpha(n_j)>
    bool fiber_regular = false;
    try {
        std::vector<Poly> fib = B.ideal_gens();
        for (const Poly& a : target.alpha) fib.push_back(a);
        PresentedRing fiber(PB.var_names(), K, fib, RingMode::Local);
        Verdict freg = is_regular_local(fiber);
        fiber_regular = freg.ok();
        cert["fiber_regular_local"] = freg.certificate;
    } catch (const std::invalid_argument&) {
        v.status = Status::indeterminate;
        cert["reason"] = "fiber presentation not local at the origin";
        v.certificate = std::move(cert);
        return v;
    }

    bool ok = fiber_regular && omega_dim == expected;
    v.status = ok ? Status::holds : Status::fails;
    if (!ok)
        cert["witness"] = {{"fiber_regular", fiber_regular},
                           {"relative_omega_residue", omega_dim},
                           {"expected", expected}};
    v.certificate = std::move(cert);
    return v;
}

Verdict regularity_smoothness_crosscheck(const PrelogRing& P, const RegcheckOptions& opt) {
    if (!validate(P).ok()) throw PreconditionError("invalid prelog structure");
    if (P.monoid.pointed()) throw PreconditionError("crosscheck needs a non-pointed monoid");
    if (!is_integral(P.monoid).ok()) throw NotIntegral("crosscheck: N must be integral");
    Verdict sat = is_saturated(P.monoid, opt.hilbert_budget);
    if (!sat.ok()) throw PreconditionError("crosscheck: N must be saturated");

    Verdict reg = is_log_regular(P, opt);

    // the sufficient smoothness criterion applies to monoid-algebra instances
    bool applicable = P.ring->nvars() == P.monoid.ngens();
    const PolyRing& PB = P.poly();
    if (applicable)
        for (int j = 0; j < P.monoid.ngens() && applicable; ++j)
            if (!P.ring->equal(P.alpha[size_t(j)], PB.variable(j))) applicable = false;
    if (applicable) {
        std::vector<Poly> in;
        for (const auto& [a, b] : P.monoid.relations) {
            if (a == b) continue;
            in.push_back(PB.sub(PB.monomial(a, Rat(1)), PB.monomial(b, Rat(1))));
        }
        applicable = ideal_equal(PB, P.ring->ideal_gens(), in);
    }

    Verdict v;
    v.preconditions_checked = {"validate", "integral", "saturated", "perfect field"};
    nlohmann::json cert = {{"kind", "crosscheck"},
                           {"log_regular_status", status_str(reg.status)},
                           {"log_regular", reg.certificate}};
    if (!applicable) {
        cert["smooth_status"] = "not-applicable";
        cert["note"] = "underlying ring is not the monoid algebra of N; the "
                       "sufficient smoothness criterion does not compare";
        v.status = Status::holds;
        v.certificate = std::move(cert);
        return v;
    }

    MonoidHom from_trivial{FinMonoid::free_monoid(0), P.monoid, {}};
    Verdict smooth = is_log_smooth_sufficient(from_trivial, P.field());
    cert["smooth_status"] = status_str(smooth.status);
    cert["smooth"] = smooth.certificate;

    bool agree = reg.status == smooth.status;
    v.status = agree ? Status::holds : Status::fails;
    if (!agree) cert["witness"] = "regularity and smoothness verdicts disagree";
    v.certificate = std::move(cert);
    return v;
}

nlohmann::json FundamentalReport::to_json() const {
    nlohmann::json j = {{"dim_omega_monoid_k", dim_omega_mon_k},
                        {"dim_omega_ring_k", dim_omega_ring_k},
                        {"dim_x_k", dim_x_k},
                        {"dim_omega_log_k", dim_omega_log_k},
                        {"dim_gamma", dim_gamma},
                        {"h0_consistent", h0_consistent},
                        {"surjective_case", surjective_case}};
    if (surjective_case) {
        j["dim_asq_k"] = dim_asq_k;
        j["dim_iisq_k"] = dim_iisq_k;
        j["dim_conormal_k"] = dim_conormal_k;
        j["h1_consistent"] = h1_consistent;
        j["gamma_consistent"] = gamma_consistent;
    }
    return j;
}

FundamentalReport fundamental_sequence_low_degree(const PrelogHom& f,
                                                  const std::vector<Poly>& ring_kernel) {
    if (!validate_hom(f).ok())
        throw PreconditionError("fundamental_sequence_low_degree: invalid homomorphism");
    const Field& K = f.target.field();
    const PolyRing& PB = f.target.poly();
    MonoidHom mh = f.monoid_hom();

    FundamentalReport rep;

    // Omega_{K[N]|K[M]} (x) k, evaluated where the structure map sends N
    PresentedRing KN = monoid_algebra_presentation(f.target.monoid, K);
    const PolyRing& PN = KN.poly_ring();
    std::vector<Rat> ptN;
    for (int j = 0; j < f.target.monoid.ngens(); ++j)
        ptN.push_back(K.reduce(PB.constant_term(f.target.alpha[size_t(j)])));
    std::vector<Vec> mon_cols;
    for (const Poly& q : KN.ideal_gens()) {
        Vec c;
        for (int j = 0; j < PN.nvars(); ++j) c = PN.add(c, PN.embed(PN.derivative(q, j), j));
        if (!c.zero()) mon_cols.push_back(c);
    }
    for (int i = 0; i < f.source.monoid.ngens(); ++i) {
        Expo e(size_t(f.source.monoid.ngens()), 0);
        e[size_t(i)] = 1;
        Poly img = PN.monomial(mh.image_row(e), Rat(1));
        Vec c;
        for (int j = 0; j < PN.nvars(); ++j) c = PN.add(c, PN.embed(PN.derivative(img, j), j));
        if (!c.zero()) mon_cols.push_back(c);
    }
    rep.dim_omega_mon_k = PN.nvars() - eval_rank(PN, PN.nvars(), mon_cols, ptN);

    // Omega_{B|A} (x) k at the origin
    std::vector<Rat> origin(size_t(PB.nvars()), Rat(0));
    std::vector<Vec> ring_cols;
    for (const Poly& q : f.target.ring->ideal_gens()) {
        Vec c;
        for (int j = 0; j < PB.nvars(); ++j) c = PB.add(c, PB.embed(PB.derivative(q, j), j));
        if (!c.zero()) ring_cols.push_back(c);
    }
    for (const Poly& img : f.ring_images) {
        Vec c;
        for (int j = 0; j < PB.nvars(); ++j) c = PB.add(c, PB.embed(PB.derivative(img, j), j));
        if (!c.zero()) ring_cols.push_back(c);
    }
    rep.dim_omega_ring_k = PB.nvars() - eval_rank(PB, PB.nvars(), ring_cols, origin);

    LogOmega om = log_differentials_data(f);
    rep.dim_x_k = functor_dims(om.X, K).tensor;
    rep.dim_omega_log_k = residue_dim(om.mod);

    // Gamma depends only on the gp-level kernel and cokernel
    KernelCokernel gp_kc = kernel_cokernel(gp_map_general(mh));
    rep.dim_gamma = functor_dims(gp_kc.kernel, K).tensor + functor_dims(gp_kc.cokernel, K).tor1;

    const int tot = om.mod.rank;
    int rank_t = eval_rank(PB, tot, om.target_rels, origin);
    std::vector<Vec> all = om.target_rels;
    for (const Vec& c : om.glue_cols) all.push_back(c);
    int rank_all = eval_rank(PB, tot, all, origin);
    rep.h0_consistent =
        rep.dim_omega_log_k == rep.dim_omega_ring_k + rep.dim_x_k - (rank_all - rank_t);

    // surjective case: both maps structurally surjective
    bool ring_surj = f.source.poly().nvars() == PB.nvars();
    if (ring_surj)
        for (int i = 0; i < PB.nvars() && ring_surj; ++i)
            if (!f.target.ring->equal(f.ring_images[size_t(i)], PB.variable(i)))
                ring_surj = false;
    rep.surjective_case = ring_surj && hom_surjective(mh);
    if (!rep.surjective_case) return rep;

    SurjectionData s{f, ring_kernel};
    ConormalData cd = conormal_data(s);
    rep.dim_conormal_k = residue_dim(cd.mod);
    rep.dim_iisq_k = residue_dim(cd.iisq);

    // surjective case: coker(M^gp -> N^gp) = 0, so Gamma is the W tensor part;
    // compare the group closed form with the module route
    int gamma_module = cd.rW - eval_rank(PB, cd.rI + cd.rW, cd.w_torsion, origin);
    rep.gamma_consistent = rep.dim_gamma == gamma_module;

    // a/a^2 (x) k over K[M]
    NuData nu = nu_g(mh);
    PresentedRing KMk = monoid_algebra_presentation(f.source.monoid, K);
    auto KMp = std::make_shared<PresentedRing>(KMk);
    const PolyRing& PM = KMp->poly_ring();
    std::vector<Rat> ptM;
    for (int i = 0; i < f.source.monoid.ngens(); ++i) {
        Expo e(size_t(f.source.monoid.ngens()), 0);
        e[size_t(i)] = 1;
        ptM.push_back(K.reduce(PB.constant_term(f.target.alpha_of(mh.image_row(e)))));
    }
    std::vector<Vec> agens;
    for (const NuBinomial& nb : nu.gens)
        agens.push_back(PM.sub(PM.monomial(nb.l1, Rat(1)), PM.monomial(nb.l2, Rat(1))));
    std::vector<Vec> asq;
    for (size_t i = 0; i < agens.size(); ++i)
        for (size_t j = i; j < agens.size(); ++j)
            asq.push_back(PM.mul(agens[i], PM.component(agens[j], 0)));
    FpModule asqm = present_subquotient(KMp, 1, agens, asq);
    rep.dim_asq_k = asqm.rank - eval_rank(PM, asqm.rank, asqm.relations, ptM);

    std::vector<Vec> t2 = cd.iisq.relations;
    for (const Vec& c : cd.w_torsion) t2.push_back(c);
    int rank_t2 = eval_rank(PB, cd.rI + cd.rW, t2, origin);
    std::vector<Vec> all2 = t2;
    for (const Vec& c : cd.glue) all2.push_back(c);
    int rank_all2 = eval_rank(PB, cd.rI + cd.rW, all2, origin);
    rep.h1_consistent =
        rep.dim_conormal_k == rep.dim_iisq_k + rep.dim_gamma - (rank_all2 - rank_t2);
    return rep;
}

namespace {

Verdict replay_koszul(const nlohmann::json& cert) {
    if (!cert.contains("context")) // vacuously regular empty sequence
        return Verdict::holds();
    PolyRing P = poly_ring_from_context(cert.at("context"));
    std::vector<Vec> basis = vec_list_from_json(P, cert.value("koszul_basis", nlohmann::json::array()));
    bool all_zero = true;
    if (cert.contains("reductions"))
        for (const auto& red : cert.at("reductions")) {
            Vec s = vec_from_json(P, red.at("syzygy"));
            if (!normal_form(P, s, basis).zero()) all_zero = false;
        }
    return all_zero ? Verdict::holds() : Verdict::fails();
}

Verdict replay_tor1(const nlohmann::json& cert) {
    int rank = cert.at("rank").get<int>();
    if (cert.contains("note")) return rank == 0 ? Verdict::holds() : Verdict::fails();
    PolyRing P = poly_ring_from_context(cert.at("context"));
    std::vector<Vec> ring_basis = vec_list_from_json(P, cert.at("ring_basis"));
    std::vector<Vec> boundary = vec_list_from_json(P, cert.at("boundary_basis"));
    std::vector<Vec> d1 = vec_list_from_json(P, cert.at("d1"));

    bool cycles_ok = true, all_boundary = true;
    for (const auto& cj : cert.at("cycles")) {
        Vec c = vec_from_json(P, cj);
        // cycle check: sum c_i d1_i reduces to zero mod the ring relations
        Poly acc;
        for (const MTerm& m : c.t)
            acc = P.add(acc, P.mul_mono(d1[size_t(m.comp)], m.e, m.c));
        if (!normal_form(P, acc, ring_basis).zero()) cycles_ok = false;
        if (!normal_form(P, c, boundary).zero()) all_boundary = false;
    }
    if (!cycles_ok) return Verdict::indeterminate({{"reason", "cycle re-check failed"}});
    bool zero = all_boundary;
    return (rank == 0) == zero ? (rank == 0 ? Verdict::holds() : Verdict::fails())
                               : Verdict::indeterminate({{"reason", "replay mismatch"}});
}

Verdict replay_log_regular(const nlohmann::json& cert) {
    if (cert.contains("reason")) return Verdict::indeterminate();
    Verdict k = replay_koszul(cert.at("koszul"));
    Verdict t = replay_tor1(cert.at("tor1"));
    return (k.ok() && t.ok()) ? Verdict::holds() : Verdict::fails();
}

Verdict replay_kato(const nlohmann::json& cert) {
    if (cert.contains("reason")) return Verdict::indeterminate();
    const auto& reg = cert.at("regular_local");
    bool reg_ok = reg.at("embedding_dimension") == reg.at("krull_dimension");
    bool dims_ok = cert.at("dim_A").get<int>() ==
                   cert.at("dim_A_mod_I").get<int>() + cert.at("rank_gp").get<int>();
    return (reg_ok && dims_ok) ? Verdict::holds() : Verdict::fails();
}

Verdict replay_smooth(const nlohmann::json& cert) {
    Field K = field_from_str(cert.at("field").get<std::string>());
    auto dims = [&](const nlohmann::json& g) {
        int rank = g.at("rank").get<int>();
        int pdiv = 0;
        for (const auto& d : g.at("invariant_factors")) {
            Int di(d.get<std::string>());
            if (!K.is_rationals() && di % Int(K.characteristic()) == 0) ++pdiv;
        }
        return std::pair<int, int>{K.is_rationals() ? rank : rank + pdiv, pdiv};
    };
    auto [homk, pk] = dims(cert.at("kernel"));
    auto [homc, pc] = dims(cert.at("cokernel"));
    (void)homc;
    bool ok = homk == 0 && pc == 0; // Hom(ker) = 0, Ext1(coker) = 0
    return ok ? Verdict::holds() : Verdict::fails();
}

Verdict replay_smooth_equiv(const nlohmann::json& cert) {
    if (cert.contains("reason")) return Verdict::indeterminate();
    bool fiber = cert.contains("fiber_regular_local") &&
                 cert.at("fiber_regular_local").at("embedding_dimension") ==
                     cert.at("fiber_regular_local").at("krull_dimension");
    bool dims = cert.at("relative_omega_residue").get<int>() ==
                cert.at("expected_fiber_dim").get<int>();
    return (fiber && dims) ? Verdict::holds() : Verdict::fails();
}

Verdict replay_crosscheck(const nlohmann::json& cert) {
    Verdict reg = replay_log_regular(cert.at("log_regular"));
    std::string recorded_reg = cert.at("log_regular_status").get<std::string>();
    if (status_str(reg.status) != recorded_reg)
        return Verdict::fails({{"reason", "log-regular sub-certificate diverges"}});
    if (cert.at("smooth_status") == "not-applicable") return Verdict::holds();
    Verdict sm = replay_smooth(cert.at("smooth"));
    return (reg.status == sm.status) ? Verdict::holds() : Verdict::fails();
}

} // namespace

Verdict replay_certificate(const nlohmann::json& cert) {
    const std::string kind = cert.value("kind", "");
    if (kind == "koszul-h1") return replay_koszul(cert);
    if (kind == "tor1") return replay_tor1(cert);
    if (kind == "log-regular" || kind == "log-regular-ideal") return replay_log_regular(cert);
    if (kind == "kato") return replay_kato(cert);
    if (kind == "regular-local")
        return cert.at("embedding_dimension") == cert.at("krull_dimension")
                   ? Verdict::holds()
                   : Verdict::fails();
    if (kind == "log-smooth-sufficient") return replay_smooth(cert);
    if (kind == "smoothness-equivalence") return replay_smooth_equiv(cert);
    if (kind == "log-ci-direct") return replay_koszul(cert.at("koszul"));
    if (kind == "log-ci-presented") return replay_log_regular(cert.at("ideal_check"));
    if (kind == "crosscheck") return replay_crosscheck(cert);
    return Verdict::indeterminate({{"reason", "unknown certificate kind '" + kind + "'"}});
}

} // namespace logtk
