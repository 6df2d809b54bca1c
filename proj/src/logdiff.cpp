#include "logtk/logdiff.hpp"
#include "logtk/serial.hpp"
#include <algorithm>

namespace logtk {

namespace {

Expo to_expo(const std::vector<Int>& v) {
    Expo e(v.size());
    for (size_t i = 0; i < v.size(); ++i) e[i] = int(v[i].get_si());
    return e;
}

std::vector<Int> to_ints(const Expo& e) {
    return std::vector<Int>(e.begin(), e.end());
}

Vec jacobian_col(const PolyRing& P, const Poly& f) {
    Vec out;
    for (int j = 0; j < P.nvars(); ++j) {
        Poly d = P.derivative(f, j);
        out = P.add(out, P.embed(d, j));
    }
    return out;
}

int dlog_count(const FgAbGroup& X) { return X.rank() + int(X.invariant_factors().size()); }

} // namespace

FgAbGroup gp_of(const FinMonoid& N) {
    if (N.pointed()) return FgAbGroup::from_presentation(IntMat::identity(N.ngens()));
    return group_completion(N).group;
}

FgAbGroup gp_cokernel(const MonoidHom& h) {
    const int nt = h.target.ngens();
    if (h.target.pointed()) return FgAbGroup::from_presentation(IntMat::identity(nt));
    const int nrel = int(h.target.relations.size());
    const int nsrc = h.source.pointed() ? 0 : h.source.ngens();
    IntMat R(nt, nrel + nsrc);
    for (int j = 0; j < nrel; ++j)
        for (int i = 0; i < nt; ++i)
            R(i, j) = h.target.relations[size_t(j)].first[size_t(i)] -
                      h.target.relations[size_t(j)].second[size_t(i)];
    for (int j = 0; j < nsrc; ++j) {
        Expo img(size_t(nt), 0);
        Expo e(size_t(h.source.ngens()), 0);
        e[size_t(j)] = 1;
        img = h.image_row(e);
        for (int i = 0; i < nt; ++i) R(i, nrel + j) = img[size_t(i)];
    }
    return FgAbGroup::from_presentation(R);
}

NuData nu_g(const MonoidHom& g) {
    if (!hom_well_defined(g)) throw PreconditionError("nu_g: monoid map ill-formed");
    if (!hom_surjective(g)) throw NotSurjective("nu_g: monoid map is not surjective");

    NuData out;
    AbGroupMap gpm{gp_of(g.source), gp_of(g.target), IntMat(g.target.ngens(), g.source.ngens())};
    for (int j = 0; j < g.source.ngens(); ++j) {
        Expo e(size_t(g.source.ngens()), 0);
        e[size_t(j)] = 1;
        Expo img = g.image_row(e);
        for (int i = 0; i < g.target.ngens(); ++i) gpm.matrix(i, j) = img[size_t(i)];
    }
    KernelCokernel kc = kernel_cokernel(gpm);
    out.W = kc.kernel;
    out.kc = kc;

    // kernel of K[L] -> K[N] by block elimination; generators of binomial
    // ideals stay binomial
    PresentedRing KL = monoid_algebra_presentation(g.source, Field::rationals());
    PresentedRing KN = monoid_algebra_presentation(g.target, Field::rationals());
    const PolyRing& PL = KL.poly_ring();
    std::vector<Poly> images;
    for (int i = 0; i < g.source.ngens(); ++i) {
        Expo e(size_t(g.source.ngens()), 0);
        e[size_t(i)] = 1;
        images.push_back(KN.poly_ring().monomial(g.image_row(e), Rat(1)));
    }
    std::vector<Poly> jgens = ring_map_kernel(PL, KN, images);

    for (const Poly& b : jgens) {
        if (KL.is_zero(b)) continue; // zero class in J/J^2
        if (b.t.size() != 2 || b.t[0].c + b.t[1].c != 0)
            throw std::logic_error("nu_g: kernel generator is not a pure-difference binomial");
        NuBinomial nb;
        nb.l1 = b.t[0].e;
        nb.l2 = b.t[1].e;
        std::vector<Int> diff(size_t(g.source.ngens()));
        for (int i = 0; i < g.source.ngens(); ++i) diff[size_t(i)] = nb.l1[size_t(i)] - nb.l2[size_t(i)];
        auto coords = kc.kernel_coords(diff);
        if (!coords) throw std::logic_error("nu_g: binomial difference not in the gp kernel");
        nb.w_coords = out.W.coords(*coords);
        nb.target_row = g.image_row(nb.l2);
        out.gens.push_back(std::move(nb));
    }
    return out;
}

LogOmega log_differentials_data(const PrelogHom& f) {
    if (!validate_hom(f).ok())
        throw PreconditionError("log_differentials: invalid prelog homomorphism");

    const PolyRing& PB = f.target.poly();
    const int n_dy = PB.nvars();

    LogOmega out;
    out.n_dy = n_dy;
    out.X = gp_cokernel(f.monoid_hom());
    const int nd = dlog_count(out.X);

    std::vector<std::string> labels;
    for (int j = 0; j < n_dy; ++j) labels.push_back("d " + PB.var_names()[size_t(j)]);
    for (int i = 0; i < nd; ++i) labels.push_back("dlog[" + std::to_string(i) + "]");

    for (const Poly& q : f.target.ring->ideal_gens()) {
        Vec c = jacobian_col(PB, q);
        if (!c.zero()) out.target_rels.push_back(c);
    }
    for (const Poly& img : f.ring_images) {
        Vec c = jacobian_col(PB, img);
        if (!c.zero()) out.target_rels.push_back(c);
    }
    // torsion of X contributes invariant-factor columns
    for (size_t t = 0; t < out.X.invariant_factors().size(); ++t) {
        Rat d(out.X.invariant_factors()[t]);
        Vec c = PB.monomial(Expo(size_t(PB.nvars()), 0), d, n_dy + out.X.rank() + int(t));
        if (!c.zero()) out.target_rels.push_back(c);
    }
    // gluing: u(dn_j) - v(dn_j) per target monoid generator
    for (int j = 0; j < f.target.monoid.ngens(); ++j) {
        const Poly& aj = f.target.alpha[size_t(j)];
        Vec col = jacobian_col(PB, aj);
        std::vector<Int> ej(size_t(f.target.monoid.ngens()), Int(0));
        ej[size_t(j)] = 1;
        std::vector<Int> c = out.X.coords(ej);
        for (size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            Poly entry = PB.scale(aj, Rat(-c[i]));
            col = PB.add(col, PB.embed(entry, n_dy + int(i)));
        }
        if (!col.zero()) out.glue_cols.push_back(col);
    }
    std::vector<Vec> rels = out.target_rels;
    for (const Vec& c : out.glue_cols) rels.push_back(c);
    out.mod = make_module(f.target.ring, n_dy + nd, std::move(rels), std::move(labels));
    return out;
}

FpModule log_differentials(const PrelogHom& f) { return log_differentials_data(f).mod; }

FpModule pushforward(const FpModule& W, RingPtr target, const std::vector<Poly>& var_images) {
    const PolyRing& PS = W.poly();
    const PolyRing& PT = target->poly_ring();
    std::vector<Vec> rels;
    for (const Vec& col : W.relations) {
        std::vector<MTerm> acc;
        for (int comp = 0; comp < W.rank; ++comp) {
            Poly entry = PS.component(col, comp);
            if (entry.zero()) continue;
            Poly img = PS.map_poly(entry, var_images, PT);
            for (const MTerm& m : img.t) acc.push_back(MTerm{comp, m.e, m.c});
        }
        Vec v = PT.normalize(std::move(acc));
        if (!v.zero()) rels.push_back(std::move(v));
    }
    return make_module(std::move(target), W.rank, std::move(rels), W.labels);
}

ConormalData conormal_data(const SurjectionData& s) {
    const PrelogHom& f = s.f;
    if (!validate_hom(f).ok()) throw PreconditionError("conormal_module: invalid homomorphism");
    const PolyRing& PC = f.source.poly();
    const PolyRing& PB = f.target.poly();

    for (const Poly& ik : s.ring_kernel)
        if (!f.target.ring->is_zero(f.map_ring(ik)))
            throw PreconditionError("conormal_module: ring_kernel element does not map to zero");

    NuData nu = nu_g(f.monoid_hom());
    ConormalData out;
    out.W = nu.W;
    out.rI = int(s.ring_kernel.size());
    out.rW = dlog_count(nu.W);
    const int rI = out.rI, rW = out.rW;

    // I/I^2 over C, pushed to B
    std::vector<Vec> gens(s.ring_kernel.begin(), s.ring_kernel.end());
    std::vector<Vec> sq;
    for (int i = 0; i < rI; ++i)
        for (int j = i; j < rI; ++j)
            sq.push_back(PC.mul(s.ring_kernel[size_t(i)], s.ring_kernel[size_t(j)]));
    std::vector<std::string> labels;
    for (const Poly& ik : s.ring_kernel) labels.push_back("[" + PC.str(ik) + "]");
    FpModule iisq = present_subquotient(f.source.ring, 1, gens, sq, labels);
    out.iisq = pushforward(iisq, f.target.ring, f.ring_images);

    std::vector<Vec> rels = out.iisq.relations;
    std::vector<std::string> all_labels = out.iisq.labels;
    for (int i = 0; i < rW; ++i) all_labels.push_back("w" + std::to_string(i));

    for (size_t t = 0; t < nu.W.invariant_factors().size(); ++t) {
        Rat d(nu.W.invariant_factors()[t]);
        Vec c = PB.monomial(Expo(size_t(PB.nvars()), 0), d, rI + nu.W.rank() + int(t));
        if (!c.zero()) {
            out.w_torsion.push_back(c);
            rels.push_back(c);
        }
    }

    // gluing (u(b), -nu(b)) per binomial generator of J
    std::vector<Vec> lift_gens(s.ring_kernel.begin(), s.ring_kernel.end());
    for (const Poly& q : f.source.ring->ideal_gens()) lift_gens.push_back(q);
    SubmoduleEngine lifter(PC, lift_gens);

    for (const NuBinomial& nb : nu.gens) {
        Poly adiff = PC.sub(f.source.alpha_of(nb.l1), f.source.alpha_of(nb.l2));
        LiftResult lr = lifter.lift(adiff);
        if (!lr.member)
            throw PreconditionError("conormal_module: ring_kernel does not generate ker(C -> B)");
        Vec col;
        for (int k = 0; k < rI; ++k) {
            const Poly& ck = lr.coeffs[size_t(k)];
            if (ck.zero()) continue;
            Poly img = PC.map_poly(ck, f.ring_images, PB);
            col = PB.add(col, PB.embed(img, k));
        }
        Poly unit_b = PC.map_poly(lr.unit, f.ring_images, PB);
        Poly nucoeff = f.target.alpha_of(nb.target_row);
        for (size_t i = 0; i < nb.w_coords.size(); ++i) {
            if (nb.w_coords[i] == 0) continue;
            Poly entry = PB.mul(PB.scale(nucoeff, Rat(-nb.w_coords[i])), unit_b);
            col = PB.add(col, PB.embed(entry, rI + int(i)));
        }
        if (!col.zero()) {
            out.glue.push_back(col);
            rels.push_back(col);
        }
    }
    out.mod = make_module(f.target.ring, rI + rW, std::move(rels), std::move(all_labels));
    return out;
}

FpModule conormal_module(const SurjectionData& s) { return conormal_data(s).mod; }

PrelogHom compose_hom(const PrelogHom& f, const PrelogHom& g) {
    PrelogHom out;
    out.source = f.source;
    out.target = g.target;
    for (const Poly& p : f.ring_images)
        out.ring_images.push_back(f.target.poly().map_poly(p, g.ring_images, g.target.poly()));
    MonoidHom gh = g.monoid_hom();
    for (const Expo& row : f.monoid_images) out.monoid_images.push_back(gh.image_row(row));
    return out;
}

namespace {

// natural map columns src -> dst along the prelog hom of their targets
std::vector<Vec> omega_map_cols(const LogOmega& src, const LogOmega& dst,
                                const PrelogHom& along) {
    const PolyRing& PD = dst.mod.poly();
    std::vector<Vec> cols;
    for (int j = 0; j < src.n_dy; ++j)
        cols.push_back(jacobian_col(PD, along.ring_images[size_t(j)]));
    MonoidHom mh = along.monoid_hom();
    const int nd = dlog_count(src.X);
    for (int i = 0; i < nd; ++i) {
        std::vector<Int> delta(size_t(nd), Int(0));
        delta[size_t(i)] = 1;
        std::vector<Int> z = src.X.lift(delta);
        Expo ze = to_expo(z);
        Expo img = mh.image_row(ze);
        std::vector<Int> c = dst.X.coords(to_ints(img));
        Vec col;
        for (size_t t = 0; t < c.size(); ++t) {
            if (c[t] == 0) continue;
            col = PD.add(col, PD.monomial(Expo(size_t(PD.nvars()), 0), Rat(c[t]),
                                          dst.n_dy + int(t)));
        }
        cols.push_back(col);
    }
    return cols;
}

struct SeqFlags {
    bool composite_zero = true;
    bool middle_exact = true;
    bool right_surjective = true;
    int homology_residue = 0; // dim_k of (ker/im (x) k) at the middle spot
    std::string witness;
};

SeqFlags three_term_checks(const PresentedRing& R, const FpModule& left,
                           const std::vector<Vec>& cols1, const FpModule& mid,
                           const std::vector<Vec>& cols2, const FpModule& right) {
    SeqFlags flags;
    const PolyRing& P = R.poly_ring();

    auto apply = [&](const std::vector<Vec>& cols, const Vec& v) {
        Vec out;
        for (const MTerm& m : v.t)
            out = P.add(out, P.mul_mono(cols[size_t(m.comp)], m.e, m.c));
        return out;
    };

    SubmoduleEngine right_rel = submodule_engine(R, right.rank, right.relations);
    for (int i = 0; i < left.rank && flags.composite_zero; ++i) {
        Vec mid_img = cols1[size_t(i)];
        Vec end = apply(cols2, mid_img);
        if (!right_rel.contains(end)) {
            flags.composite_zero = false;
            flags.witness = "composite nonzero on generator " + std::to_string(i);
        }
    }

    {
        std::vector<Vec> gens = cols2;
        for (const Vec& r : right.relations) gens.push_back(r);
        SubmoduleEngine surj = submodule_engine(R, right.rank, gens);
        for (int k = 0; k < right.rank && flags.right_surjective; ++k)
            if (!surj.contains(P.unit_vec(k))) {
                flags.right_surjective = false;
                flags.witness = "generator " + std::to_string(k) + " of the right module not hit";
            }
    }

    {
        ModuleMap phi2{mid, right, cols2};
        std::vector<Vec> ker = kernel_gens(phi2);
        std::vector<Vec> im = cols1;
        for (const Vec& r : mid.relations) im.push_back(r);
        SubmoduleEngine img = submodule_engine(R, mid.rank, im);
        for (const Vec& k : ker)
            if (!img.contains(k)) {
                flags.middle_exact = false;
                flags.witness = "kernel class outside the image: " + P.str(k);
                break;
            }
        FpModule homology = present_subquotient(
            std::make_shared<PresentedRing>(R), mid.rank, ker, im);
        flags.homology_residue = residue_dim(minimal_presentation(homology));
    }
    return flags;
}

Verdict seq_verdict(const SeqFlags& f, nlohmann::json cert) {
    cert["composite_zero"] = f.composite_zero;
    cert["middle_exact"] = f.middle_exact;
    cert["right_surjective"] = f.right_surjective;
    cert["middle_homology_residue"] = f.homology_residue;
    if (!f.witness.empty()) cert["witness"] = f.witness;
    Verdict v;
    v.status = (f.composite_zero && f.middle_exact && f.right_surjective) ? Status::holds
                                                                          : Status::fails;
    v.certificate = std::move(cert);
    return v;
}

} // namespace

Verdict check_first_sequence(const PrelogHom& f, const PrelogHom& h) {
    PrelogHom fh = compose_hom(f, h);
    LogOmega O1 = log_differentials_data(f);
    LogOmega O2 = log_differentials_data(fh);
    LogOmega O3 = log_differentials_data(h);

    FpModule O1C = pushforward(O1.mod, h.target.ring, h.ring_images);
    std::vector<Vec> cols1 = omega_map_cols(O1, O2, h);

    // middle -> right: identity on dy, projection on dlog classes
    const PolyRing& PC = h.target.poly();
    std::vector<Vec> cols2;
    for (int j = 0; j < O2.n_dy; ++j) cols2.push_back(PC.unit_vec(j));
    const int nd2 = dlog_count(O2.X);
    for (int i = 0; i < nd2; ++i) {
        std::vector<Int> delta(size_t(nd2), Int(0));
        delta[size_t(i)] = 1;
        std::vector<Int> z = O2.X.lift(delta);
        std::vector<Int> c = O3.X.coords(z);
        Vec col;
        for (size_t t = 0; t < c.size(); ++t)
            if (c[t] != 0)
                col = PC.add(col, PC.monomial(Expo(size_t(PC.nvars()), 0), Rat(c[t]),
                                              O3.n_dy + int(t)));
        cols2.push_back(col);
    }

    SeqFlags flags = three_term_checks(*h.target.ring, O1C, cols1, O2.mod, cols2, O3.mod);
    nlohmann::json cert = {{"kind", "first-fundamental-sequence"},
                           {"dims",
                            {{"left_residue", residue_dim(O1C)},
                             {"middle_residue", residue_dim(O2.mod)},
                             {"right_residue", residue_dim(O3.mod)}}}};
    return seq_verdict(flags, std::move(cert));
}

Verdict check_conormal_sequence(const PrelogHom& g, const SurjectionData& s) {
    FpModule conormal = conormal_module(s);
    NuData nu = nu_g(s.f.monoid_hom());
    const int rI = int(s.ring_kernel.size());

    LogOmega OCL = log_differentials_data(g);
    PrelogHom gs = compose_hom(g, s.f);
    LogOmega OB = log_differentials_data(gs);

    const PolyRing& PC = g.target.poly();
    const PolyRing& PB = s.f.target.poly();
    FpModule OCL_B = pushforward(OCL.mod, s.f.target.ring, s.f.ring_images);

    // conormal -> B (x) Omega_{(C,L)|(A,M)}
    std::vector<Vec> cols1;
    for (int k = 0; k < rI; ++k) {
        Vec dc = jacobian_col(PC, s.ring_kernel[size_t(k)]);
        std::vector<MTerm> acc;
        for (int comp = 0; comp < OCL.n_dy; ++comp) {
            Poly entry = PC.component(dc, comp);
            if (entry.zero()) continue;
            Poly img = PC.map_poly(entry, s.f.ring_images, PB);
            for (const MTerm& m : img.t) acc.push_back(MTerm{comp, m.e, m.c});
        }
        cols1.push_back(PB.normalize(std::move(acc)));
    }
    const int ndW = nu.W.rank() + int(nu.W.invariant_factors().size());
    for (int i = 0; i < ndW; ++i) {
        std::vector<Int> delta(size_t(ndW), Int(0));
        delta[size_t(i)] = 1;
        std::vector<Int> in_kgens = nu.W.lift(delta);
        std::vector<Int> z = nu.kc.kernel_gens.mul_vec(in_kgens);
        std::vector<Int> c = OCL.X.coords(z);
        Vec col;
        for (size_t t = 0; t < c.size(); ++t)
            if (c[t] != 0)
                col = PB.add(col, PB.monomial(Expo(size_t(PB.nvars()), 0), Rat(c[t]),
                                              OCL.n_dy + int(t)));
        cols1.push_back(col);
    }

    std::vector<Vec> cols2 = omega_map_cols(OCL, OB, s.f);

    SeqFlags flags = three_term_checks(*s.f.target.ring, conormal, cols1, OCL_B, cols2, OB.mod);
    nlohmann::json cert = {{"kind", "conormal-sequence"},
                           {"dims",
                            {{"conormal_residue", residue_dim(conormal)},
                             {"middle_residue", residue_dim(OCL_B)},
                             {"right_residue", residue_dim(OB.mod)}}}};
    return seq_verdict(flags, std::move(cert));
}

Verdict base_change_check(const PrelogHom& f1, const PrelogHom& f2, const PrelogHom& cobase) {
    LogOmega O1 = log_differentials_data(f1);
    LogOmega O2 = log_differentials_data(f2);
    FpModule O1p = pushforward(O1.mod, f2.target.ring, cobase.ring_images);
    std::vector<Vec> cols = omega_map_cols(O1, O2, cobase);

    const PresentedRing& R = *f2.target.ring;
    const PolyRing& P = R.poly_ring();

    nlohmann::json cert = {{"kind", "base-change"},
                           {"source_residue", residue_dim(O1p)},
                           {"target_residue", residue_dim(O2.mod)}};

    ModuleMap phi{O1p, O2.mod, cols};
    bool ok = map_well_defined(phi);
    if (ok) {
        std::vector<Vec> gens = cols;
        for (const Vec& r : O2.mod.relations) gens.push_back(r);
        SubmoduleEngine surj = submodule_engine(R, O2.mod.rank, gens);
        for (int k = 0; k < O2.mod.rank && ok; ++k)
            if (!surj.contains(P.unit_vec(k))) {
                ok = false;
                cert["witness"] = "not surjective at generator " + std::to_string(k);
            }
    } else {
        cert["witness"] = "map not well defined on relations";
    }
    if (ok) {
        std::vector<Vec> ker = kernel_gens(phi);
        SubmoduleEngine rel = submodule_engine(R, O1p.rank, O1p.relations);
        for (const Vec& k : ker)
            if (!rel.contains(k)) {
                ok = false;
                cert["witness"] = "kernel class " + P.str(k);
                break;
            }
    }
    Verdict v;
    v.status = ok ? Status::holds : Status::fails;
    v.certificate = std::move(cert);
    return v;
}

} // namespace logtk
