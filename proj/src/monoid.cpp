#include "logtk/monoid.hpp"
#include "logtk/serial.hpp"
#include <algorithm>
#include <deque>
#include <set>
#include <functional>

namespace logtk {

FinMonoid FinMonoid::free_monoid(int n, const std::string& prefix) {
    FinMonoid m;
    for (int i = 0; i < n; ++i) m.gens.push_back(prefix + std::to_string(i));
    return m;
}

namespace {

Poly row_monomial(const PolyRing& P, const Expo& row) {
    return P.monomial(row, Rat(1));
}

} // namespace

std::vector<Poly> difference_ideal_gens(const FinMonoid& M, const PolyRing& P) {
    std::vector<Poly> out;
    const auto& I = M.absorbing;
    for (size_t i = 0; i < I.size(); ++i)
        for (size_t j = i + 1; j < I.size(); ++j)
            out.push_back(P.sub(row_monomial(P, I[i]), row_monomial(P, I[j])));
    for (const Expo& g : I)
        for (int k = 0; k < M.ngens(); ++k) {
            Expo shifted = g;
            shifted[size_t(k)] += 1;
            out.push_back(P.sub(row_monomial(P, shifted), row_monomial(P, g)));
        }
    return out;
}

std::vector<Poly> monomial_ideal_gens(const FinMonoid& M, const PolyRing& P) {
    std::vector<Poly> out;
    for (const Expo& g : M.absorbing) out.push_back(row_monomial(P, g));
    return out;
}

PresentedRing monoid_algebra_presentation(const FinMonoid& M, const Field& K) {
    PolyRing P(M.gens, K, TermOrder::degrevlex());
    std::vector<Poly> ideal;
    for (const auto& [a, b] : M.relations) {
        if (a == b) continue;
        ideal.push_back(P.sub(row_monomial(P, a), row_monomial(P, b)));
    }
    for (Poly& d : difference_ideal_gens(M, P)) ideal.push_back(std::move(d));
    return PresentedRing(M.gens, K, std::move(ideal), RingMode::Graded);
}

MonoidOracle::MonoidOracle(FinMonoid M) : M_(std::move(M)) {
    alg_ = std::make_shared<PresentedRing>(
        monoid_algebra_presentation(M_, Field::rationals()));
}

Poly MonoidOracle::class_nf(const Expo& m) const {
    return alg_->nf(row_monomial(alg_->poly_ring(), m));
}

bool MonoidOracle::congruent(const Expo& a, const Expo& b) const {
    const PolyRing& P = alg_->poly_ring();
    return alg_->is_zero(P.sub(row_monomial(P, a), row_monomial(P, b)));
}

bool MonoidOracle::is_absorbing_class(const Expo& m) const {
    if (!M_.pointed()) return false;
    return congruent(m, M_.absorbing.front());
}

bool MonoidOracle::is_unit(const Expo& m) const {
    if (M_.pointed())
        throw PointedMonoid("unit detection on a pointed monoid");
    const PolyRing& P = alg_->poly_ring();
    std::vector<Vec> gens(alg_->ideal_gens().begin(), alg_->ideal_gens().end());
    gens.push_back(row_monomial(P, m));
    SubmoduleEngine e(P, std::move(gens));
    return e.contains(P.constant(Rat(1)));
}

GroupCompletion group_completion(const FinMonoid& M) {
    if (M.pointed())
        throw PointedMonoid("group completion of a pointed monoid degenerates; "
                            "use the quotient convention instead");
    IntMat R(M.ngens(), int(M.relations.size()));
    for (size_t j = 0; j < M.relations.size(); ++j)
        for (int i = 0; i < M.ngens(); ++i)
            R(i, int(j)) = M.relations[j].first[size_t(i)] - M.relations[j].second[size_t(i)];
    return GroupCompletion{FgAbGroup::from_presentation(R)};
}

FgAbGroup pointed_gp() { return FgAbGroup::trivial(); }

Verdict is_integral(const FinMonoid& M) {
    if (M.pointed())
        throw PointedMonoid("is_integral expects a monoid without absorbing element");
    if (M.ngens() == 0) {
        Verdict v = Verdict::holds();
        v.certificate = {{"kind", "integrality"}, {"note", "trivial monoid"}};
        return v;
    }
    PresentedRing A = monoid_algebra_presentation(M, Field::rationals());
    const PolyRing& P = A.poly_ring();
    Poly prod = P.constant(Rat(1));
    for (int i = 0; i < P.nvars(); ++i) prod = P.mul(prod, P.variable(i));
    std::vector<Poly> sat = ideal_saturation(P, A.ideal_gens(), prod);

    bool equal = ideal_equal(P, A.ideal_gens(), sat);
    Verdict v = equal ? Verdict::holds() : Verdict::fails();
    v.certificate = {{"kind", "integrality"},
                     {"binomial_basis", nlohmann::json::array()},
                     {"saturation_basis", poly_list_json(P, sat)}};
    for (const Vec& b : A.ideal_basis()) v.certificate["binomial_basis"].push_back(P.str(b));
    if (!equal) {
        for (const Poly& s : sat)
            if (!A.is_zero(s)) {
                v.certificate["witness"] = P.str(s);
                break;
            }
    }
    return v;
}

FinMonoid quotient_by_ideal(const FinMonoid& M, const std::vector<Expo>& ideal_gens) {
    if (ideal_gens.empty()) throw ImproperIdeal("monoid ideal must be nonempty");
    if (!M.pointed()) {
        MonoidOracle oracle(M);
        for (const Expo& g : ideal_gens)
            if (oracle.is_unit(g))
                throw ImproperIdeal("ideal contains a unit class, quotient would collapse");
    }
    FinMonoid out = M;
    for (const Expo& g : ideal_gens) out.absorbing.push_back(g);
    return out;
}

FinMonoid localization(const FinMonoid& M, const std::vector<Expo>& S) {
    if (M.pointed()) throw PointedMonoid("localization of a pointed monoid");
    FinMonoid out = M;
    const int g = M.ngens();
    const int extra = int(S.size());
    for (auto& [a, b] : out.relations) {
        a.resize(size_t(g + extra), 0);
        b.resize(size_t(g + extra), 0);
    }
    for (int i = 0; i < extra; ++i) out.gens.push_back("inv" + std::to_string(i));
    for (int i = 0; i < extra; ++i) {
        Expo lhs(size_t(g + extra), 0), rhs(size_t(g + extra), 0);
        for (int k = 0; k < g; ++k) lhs[size_t(k)] = S[size_t(i)][size_t(k)];
        lhs[size_t(g + i)] = 1;
        out.relations.emplace_back(lhs, rhs); // s + s' = 0
    }
    return out;
}

UnitsReport units_and_sharpness(const FinMonoid& M) {
    if (M.pointed()) throw PointedMonoid("units of a pointed monoid");
    if (!is_integral(M).ok())
        throw NotIntegral("units_and_sharpness expects an integral monoid");

    UnitsReport rep;
    if (M.ngens() == 0) {
        rep.units = FgAbGroup::trivial();
        rep.is_sharp = true;
        return rep;
    }
    MonoidOracle oracle(M);
    GroupCompletion gp = group_completion(M);
    std::vector<int> unit_gens;
    for (int i = 0; i < M.ngens(); ++i) {
        Expo e(size_t(M.ngens()), 0);
        e[size_t(i)] = 1;
        if (oracle.is_unit(e))
            unit_gens.push_back(i);
        else
            rep.maximal_ideal.push_back(e);
    }
    IntMat cols(M.ngens(), int(unit_gens.size()));
    for (size_t j = 0; j < unit_gens.size(); ++j) cols(unit_gens[j], int(j)) = 1;
    rep.units = subgroup_generated(gp.group, cols);
    rep.is_sharp = rep.units.is_trivial();
    return rep;
}

Expo MonoidHom::image_row(const Expo& a) const {
    Expo out(size_t(target.ngens()), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (int k = 0; k < target.ngens(); ++k)
            out[size_t(k)] += a[i] * images[i][size_t(k)];
    return out;
}

bool hom_well_defined(const MonoidHom& h) {
    if (int(h.images.size()) != h.source.ngens()) return false;
    MonoidOracle target(h.target);
    for (const auto& [a, b] : h.source.relations)
        if (!target.congruent(h.image_row(a), h.image_row(b))) return false;
    // absorbing classes must land on absorbing classes
    for (const Expo& g : h.source.absorbing)
        if (!target.is_absorbing_class(h.image_row(g))) return false;
    return true;
}

bool hom_surjective(const MonoidHom& h) {
    // subalgebra membership: eliminate the target variables against
    // tag variables for the image monomials
    PresentedRing TA = monoid_algebra_presentation(h.target, Field::rationals());
    const PolyRing& T = TA.poly_ring();
    const int nt = T.nvars(), ns = h.source.ngens();
    std::vector<std::string> vars;
    for (const std::string& v : T.var_names()) vars.push_back(v);
    for (int i = 0; i < ns; ++i) vars.push_back("@w" + std::to_string(i));
    PolyRing E(vars, Field::rationals(), TermOrder::elim(nt));

    auto inject = [&](const Poly& p) {
        std::vector<MTerm> ts;
        for (const MTerm& m : p.t) {
            Expo e(size_t(nt + ns), 0);
            for (int i = 0; i < nt; ++i) e[size_t(i)] = m.e[size_t(i)];
            ts.push_back(MTerm{0, e, m.c});
        }
        return E.normalize(std::move(ts));
    };

    std::vector<Vec> gens;
    for (const Poly& q : TA.ideal_gens()) gens.push_back(inject(q));
    for (int i = 0; i < ns; ++i) {
        Expo w(size_t(nt + ns), 0);
        w[size_t(nt + i)] = 1;
        Expo img(size_t(nt + ns), 0);
        for (int k = 0; k < nt; ++k) img[size_t(k)] = h.images[size_t(i)][size_t(k)];
        gens.push_back(E.sub(E.monomial(w, Rat(1)), E.monomial(img, Rat(1))));
    }
    SubmoduleEngine eng(E, std::move(gens));

    for (int j = 0; j < nt; ++j) {
        Expo target(size_t(nt + ns), 0);
        target[size_t(j)] = 1;
        Vec r = eng.nf(E.monomial(target, Rat(1)));
        for (const MTerm& m : r.t)
            for (int i = 0; i < nt; ++i)
                if (m.e[size_t(i)] > 0) return false;
    }
    return true;
}

AbGroupMap gp_map(const MonoidHom& h) {
    GroupCompletion s = group_completion(h.source);
    GroupCompletion t = group_completion(h.target);
    IntMat F(h.target.ngens(), h.source.ngens());
    for (int j = 0; j < h.source.ngens(); ++j)
        for (int i = 0; i < h.target.ngens(); ++i) F(i, j) = h.images[size_t(j)][size_t(i)];
    return AbGroupMap{s.group, t.group, F};
}

std::vector<std::vector<Int>> cd_minimal_solutions(const IntMat& B, long budget) {
    const int D = B.cols();
    auto cols = std::vector<std::vector<Int>>(size_t(D));
    for (int j = 0; j < D; ++j) cols[size_t(j)] = B.col(j);

    auto dominated = [](const std::vector<Int>& z, const std::vector<std::vector<Int>>& sols) {
        for (const auto& s : sols) {
            bool le = true;
            for (size_t i = 0; i < z.size() && le; ++i)
                if (s[i] > z[i]) le = false;
            if (le) return true;
        }
        return false;
    };

    std::vector<std::vector<Int>> sols;
    std::deque<std::vector<Int>> frontier;
    std::set<std::vector<Int>> seen;
    for (int j = 0; j < D; ++j) {
        std::vector<Int> e(size_t(D), Int(0));
        e[size_t(j)] = 1;
        frontier.push_back(e);
        seen.insert(std::move(e));
    }

    long iters = 0;
    while (!frontier.empty()) {
        if (++iters > budget)
            throw BudgetExceeded("Hilbert-basis completion exceeded the element budget");
        std::vector<Int> z = std::move(frontier.front());
        frontier.pop_front();
        if (dominated(z, sols)) continue;
        std::vector<Int> v = B.mul_vec(z);
        bool is_sol = true;
        for (const Int& x : v)
            if (x != 0) { is_sol = false; break; }
        if (is_sol) {
            sols.push_back(z);
            continue;
        }
        for (int j = 0; j < D; ++j) {
            Int dot(0);
            for (int i = 0; i < B.rows(); ++i) dot += v[size_t(i)] * cols[size_t(j)][size_t(i)];
            if (dot >= 0) continue;
            std::vector<Int> nz = z;
            nz[size_t(j)] += 1;
            if (dominated(nz, sols)) continue;
            if (seen.insert(nz).second) frontier.push_back(std::move(nz));
        }
    }
    return sols;
}

bool monoid_membership(const IntMat& V, const std::vector<Int>& x, long budget) {
    IntMat B(V.rows(), V.cols() + 1);
    for (int i = 0; i < V.rows(); ++i) {
        for (int j = 0; j < V.cols(); ++j) B(i, j) = V(i, j);
        B(i, V.cols()) = -x[size_t(i)];
    }
    for (const auto& sol : cd_minimal_solutions(B, budget))
        if (sol.back() == 1) return true;
    return false;
}

Verdict is_saturated(const FinMonoid& M, long budget) {
    if (M.pointed()) throw PointedMonoid("is_saturated expects a monoid without absorbing element");
    if (!is_integral(M).ok())
        throw NotIntegral("is_saturated expects an integral monoid");

    GroupCompletion gp = group_completion(M);
    if (!gp.group.is_free())
        throw TorsionCompletion("saturation test restricted to torsion-free group completion");
    const int r = gp.group.rank();
    const int g = M.ngens();
    Verdict v;
    v.preconditions_checked = {"integral", "torsion-free group completion"};
    if (r == 0) {
        v.status = Status::holds;
        v.certificate = {{"kind", "saturation"}, {"note", "trivial group completion"}};
        return v;
    }

    // generator images in invariant coordinates
    IntMat V(r, g);
    for (int i = 0; i < g; ++i) {
        std::vector<Int> e(size_t(g), Int(0));
        e[size_t(i)] = 1;
        auto c = gp.group.coords(e);
        for (int k = 0; k < r; ++k) V(k, i) = c[size_t(k)];
    }

    // facet normals from (r-1)-subsets of the generator images
    std::vector<std::vector<Int>> normals;
    std::vector<int> subset;
    auto consider = [&](const std::vector<int>& idx) {
        IntMat rows(r - 1, r);
        for (int a = 0; a < r - 1; ++a)
            for (int k = 0; k < r; ++k) rows(a, k) = V(k, idx[size_t(a)]);
        IntMat K = integer_kernel(rows);
        if (K.cols() != 1) return;
        std::vector<Int> w = K.col(0);
        Int g0(0);
        for (const Int& x : w) g0 = gcd(g0, x);
        if (g0 > 1)
            for (Int& x : w) x /= g0;
        int pos = 0, neg = 0;
        for (int i = 0; i < g; ++i) {
            Int dot(0);
            for (int k = 0; k < r; ++k) dot += w[size_t(k)] * V(k, i);
            if (dot > 0) ++pos;
            if (dot < 0) ++neg;
        }
        if (pos && neg) return;
        if (neg)
            for (Int& x : w) x = -x;
        if (std::find(normals.begin(), normals.end(), w) == normals.end())
            normals.push_back(std::move(w));
    };
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (need == 0) {
            consider(subset);
            return;
        }
        for (int i = start; i <= g - need; ++i) {
            subset.push_back(i);
            rec(i + 1, need - 1);
            subset.pop_back();
        }
    };
    rec(0, r - 1);

    const int f = int(normals.size());
    nlohmann::json cert = {{"kind", "saturation"}, {"rank", r}};
    for (const auto& w : normals) {
        nlohmann::json n = nlohmann::json::array();
        for (const Int& x : w) n.push_back(x.get_str());
        cert["facet_normals"].push_back(n);
    }

    // generators of cone /\ lattice: minimal solutions of W(p - q) - s = 0
    IntMat B(f, 2 * r + f);
    for (int i = 0; i < f; ++i) {
        for (int k = 0; k < r; ++k) {
            B(i, k) = normals[size_t(i)][size_t(k)];
            B(i, r + k) = -normals[size_t(i)][size_t(k)];
        }
        B(i, 2 * r + i) = -1;
    }
    std::vector<std::vector<Int>> raw = cd_minimal_solutions(B, budget);
    std::vector<std::vector<Int>> cone_gens;
    for (const auto& sol : raw) {
        auto x = std::vector<Int>(size_t(r));
        bool nonzero = false;
        for (int k = 0; k < r; ++k) {
            x[size_t(k)] = sol[size_t(k)] - sol[size_t(r + k)];
            if (x[size_t(k)] != 0) nonzero = true;
        }
        if (nonzero && std::find(cone_gens.begin(), cone_gens.end(), x) == cone_gens.end())
            cone_gens.push_back(std::move(x));
    }

    for (const auto& x : cone_gens) {
        nlohmann::json jx = nlohmann::json::array();
        for (const Int& c : x) jx.push_back(c.get_str());
        cert["cone_generators"].push_back(jx);
        if (!monoid_membership(V, x, budget)) {
            v.status = Status::fails;
            cert["witness"] = jx;
            v.certificate = std::move(cert);
            return v;
        }
    }
    v.status = Status::holds;
    v.certificate = std::move(cert);
    return v;
}

} // namespace logtk
