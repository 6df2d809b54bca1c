#include "logtk/prelog.hpp"
#include "logtk/serial.hpp"
#include <functional>
#include <map>

namespace logtk {

Poly PrelogRing::alpha_of(const Expo& row) const {
    const PolyRing& P = poly();
    Poly out = P.constant(Rat(1));
    for (size_t i = 0; i < row.size(); ++i)
        for (int k = 0; k < row[i]; ++k) out = P.mul(out, alpha[i]);
    return out;
}

Verdict validate(const PrelogRing& P) {
    const PolyRing& R = P.poly();
    Verdict v;
    nlohmann::json cert = {{"kind", "prelog-validate"}, {"checked", nlohmann::json::array()}};
    bool ok = true;

    if (int(P.alpha.size()) != P.monoid.ngens()) {
        v.status = Status::fails;
        cert["error"] = "alpha must assign one ring element per monoid generator";
        v.certificate = cert;
        return v;
    }

    // multiplicativity on each congruence pair
    for (const auto& [a, b] : P.monoid.relations) {
        Poly lhs = P.alpha_of(a), rhs = P.alpha_of(b);
        bool eq = P.ring->equal(lhs, rhs);
        cert["checked"].push_back({{"relation", R.str(lhs) + " = " + R.str(rhs)},
                                   {"holds", eq}});
        if (!eq) {
            ok = false;
            if (!cert.contains("witness"))
                cert["witness"] = {{"kind", "multiplicativity"},
                                   {"lhs", R.str(P.ring->nf(lhs))},
                                   {"rhs", R.str(P.ring->nf(rhs))}};
        }
    }
    // absorbing classes must map to 0
    for (const Expo& g : P.monoid.absorbing) {
        bool z = P.ring->is_zero(P.alpha_of(g));
        cert["checked"].push_back({{"relation", "alpha(z) = 0"}, {"holds", z}});
        if (!z) ok = false;
    }
    // locality: nonunit generators land in the maximal ideal
    if (P.ring->is_local()) {
        MonoidOracle oracle(P.monoid);
        for (int i = 0; i < P.monoid.ngens(); ++i) {
            Expo e(size_t(P.monoid.ngens()), 0);
            e[size_t(i)] = 1;
            bool unit_gen = false;
            if (!P.monoid.pointed()) unit_gen = oracle.is_unit(e);
            if (unit_gen) continue;
            bool in_m = R.field().is_zero(R.constant_term(P.alpha[size_t(i)]));
            cert["checked"].push_back(
                {{"relation", "alpha(" + P.monoid.gens[size_t(i)] + ") in m"}, {"holds", in_m}});
            if (!in_m) {
                ok = false;
                if (!cert.contains("witness"))
                    cert["witness"] = {{"kind", "locality"},
                                       {"generator", P.monoid.gens[size_t(i)]},
                                       {"image", R.str(P.alpha[size_t(i)])}};
            }
        }
    }
    v.status = ok ? Status::holds : Status::fails;
    v.certificate = std::move(cert);
    return v;
}

Verdict validate_hom(const PrelogHom& f) {
    Verdict v;
    nlohmann::json cert = {{"kind", "prelog-hom-validate"}};
    Verdict vs = validate(f.source), vt = validate(f.target);
    if (!vs.ok() || !vt.ok()) {
        v.status = Status::fails;
        cert["error"] = "source or target prelog structure invalid";
        v.certificate = cert;
        return v;
    }
    if (!hom_well_defined(f.monoid_hom())) {
        v.status = Status::fails;
        cert["error"] = "monoid map does not respect relations";
        v.certificate = cert;
        return v;
    }
    bool ok = true;
    const PolyRing& T = f.target.poly();
    for (int i = 0; i < f.source.monoid.ngens(); ++i) {
        Poly lhs = f.target.alpha_of(f.monoid_images[size_t(i)]);
        Poly rhs = f.map_ring(f.source.alpha[size_t(i)]);
        bool eq = f.target.ring->equal(lhs, rhs);
        cert["square"].push_back({{"generator", f.source.monoid.gens[size_t(i)]},
                                  {"alpha_target", T.str(lhs)},
                                  {"ring_image", T.str(rhs)},
                                  {"holds", eq}});
        if (!eq) ok = false;
    }
    v.status = ok ? Status::holds : Status::fails;
    v.certificate = std::move(cert);
    return v;
}

MonoidPreimage monoid_preimage_ideal(const PrelogRing& P, const std::vector<Poly>& J,
                                     int degree_bound, long class_budget) {
    const PolyRing& R = P.poly();
    if (!validate(P).ok()) throw PreconditionError("monoid_preimage_ideal: invalid prelog ring");

    // J must be a proper ideal inside the maximal ideal
    std::vector<Vec> jgens(J.begin(), J.end());
    for (const Poly& q : P.ring->ideal_gens()) jgens.push_back(q);
    SubmoduleEngine ej(R, jgens);
    if (ej.contains(R.constant(Rat(1))))
        throw PreconditionError("monoid_preimage_ideal: J is not proper");

    MonoidOracle oracle(P.monoid);
    const PresentedRing& MA = oracle.algebra();
    const PolyRing& MP = MA.poly_ring();
    const int g = P.monoid.ngens();

    MonoidPreimage out;
    out.degree_bound = degree_bound;

    std::map<std::string, Expo> seen; // class nf -> representative of least degree
    std::vector<Expo> new_layer;

    auto covered = [&](const Expo& m) {
        if (out.gens.empty()) return false;
        std::vector<Vec> cov;
        for (const Expo& q : out.gens) cov.push_back(MP.monomial(q, Rat(1)));
        for (const Poly& q : MA.ideal_gens()) cov.push_back(q);
        SubmoduleEngine e(MP, std::move(cov));
        return e.contains(MP.monomial(m, Rat(1)));
    };

    bool all_covered_next_layer = true;
    for (int d = 0; d <= degree_bound + 1; ++d) {
        // enumerate rows of total degree d
        Expo cur(size_t(g), 0);
        std::vector<Expo> rows;
        std::function<void(int, int)> gen = [&](int i, int left) {
            if (i == g) {
                if (left == 0) rows.push_back(cur);
                return;
            }
            for (int x = left; x >= 0; --x) {
                cur[size_t(i)] = x;
                gen(i + 1, left - x);
            }
            cur[size_t(i)] = 0;
        };
        gen(0, d);

        for (const Expo& m : rows) {
            if (++out.classes_seen > class_budget)
                throw BudgetExceeded("monoid preimage enumeration exceeded the class budget");
            std::string key = MP.str(oracle.class_nf(m));
            if (seen.count(key)) continue;
            seen.emplace(key, m);
            if (total_deg(m) == 0) continue; // identity maps to 1, never in a proper J
            if (!ej.contains(P.alpha_of(m))) continue;
            if (covered(m)) continue;
            if (d <= degree_bound)
                out.gens.push_back(m);
            else
                all_covered_next_layer = false; // a new generator appears past the bound
        }
    }
    out.complete = all_covered_next_layer;
    return out;
}

LogIdeal log_ideal(const PrelogRing& P, const std::vector<Poly>& J, int degree_bound) {
    LogIdeal out;
    out.preimage = monoid_preimage_ideal(P, J, degree_bound);
    for (const Expo& m : out.preimage.gens) out.gens.push_back(P.alpha_of(m));
    return out;
}

PrelogRing quotient_prelog(const PrelogRing& P, const std::vector<Poly>& J, int degree_bound) {
    MonoidPreimage pre = monoid_preimage_ideal(P, J, degree_bound);
    if (!pre.complete)
        throw PreconditionError("quotient_prelog: monoid preimage incomplete at the bound");

    std::vector<Poly> ideal = P.ring->ideal_gens();
    for (const Poly& j : J) ideal.push_back(j);
    auto B = std::make_shared<PresentedRing>(P.poly().var_names(), P.field(), ideal,
                                             P.ring->mode());

    PrelogRing out;
    out.ring = B;
    out.monoid = pre.gens.empty() ? P.monoid : quotient_by_ideal(P.monoid, pre.gens);
    out.alpha = P.alpha;
    out.name = P.name + "/J";
    return out;
}

} // namespace logtk
