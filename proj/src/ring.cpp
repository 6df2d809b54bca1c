#include "logtk/ring.hpp"
#include <algorithm>
#include <stdexcept>

namespace logtk {

PresentedRing::PresentedRing(std::vector<std::string> vars, Field K, std::vector<Poly> ideal,
                             RingMode mode)
    : mode_(mode) {
    TermOrder ord = mode == RingMode::Local ? TermOrder::negdegrevlex() : TermOrder::degrevlex();
    amb_ = PolyRing(std::move(vars), K, ord);
    ideal_ = std::move(ideal);
    for (Poly& p : ideal_) {
        std::vector<MTerm> ts(p.t.begin(), p.t.end());
        p = amb_.normalize(std::move(ts)); // re-sort under this ring's order
    }
    if (mode_ == RingMode::Local)
        for (const Poly& p : ideal_)
            if (!amb_.field().is_zero(amb_.constant_term(p)))
                throw std::invalid_argument(
                    "local ring generators must lie in the maximal ideal at the origin");
    std::vector<Vec> gens(ideal_.begin(), ideal_.end());
    sb_ = std::make_shared<SubmoduleEngine>(amb_, std::move(gens));
}

PresentedRing PresentedRing::make(std::vector<std::string> vars, Field K,
                                  const std::vector<std::string>& ideal, RingMode mode) {
    TermOrder ord = mode == RingMode::Local ? TermOrder::negdegrevlex() : TermOrder::degrevlex();
    PolyRing amb(vars, K, ord);
    std::vector<Poly> gens;
    gens.reserve(ideal.size());
    for (const std::string& s : ideal) gens.push_back(amb.parse(s));
    return PresentedRing(std::move(vars), K, std::move(gens), mode);
}

bool PresentedRing::is_unit(const Poly& p) const {
    if (mode_ == RingMode::Local)
        return !amb_.field().is_zero(amb_.constant_term(p));
    Poly r = nf(p);
    return !r.zero() && total_deg(r.lead().e) == 0 && r.t.size() == 1;
}

std::vector<Vec> PresentedRing::quotient_relations(int ncomps) const {
    std::vector<Vec> out;
    out.reserve(ideal_.size() * size_t(ncomps));
    for (int c = 0; c < ncomps; ++c)
        for (const Poly& q : ideal_) out.push_back(amb_.embed(q, c));
    return out;
}

bool PresentedRing::is_zero_ring() const {
    for (const Vec& v : ideal_basis())
        if (total_deg(v.lead().e) == 0) return true;
    return false;
}

int krull_dimension(const PresentedRing& R) {
    if (R.is_zero_ring()) return -1;
    const int n = R.nvars();
    std::vector<Expo> leads;
    for (const Vec& v : R.ideal_basis()) leads.push_back(v.lead().e);

    // max |S| with no leading monomial supported inside S
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const Expo& e : leads) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (e[i] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

namespace {

int rat_rank(const Field& K, std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    int rows = int(m.size()), cols = int(m[0].size());
    int rank = 0;
    for (int j = 0; j < cols && rank < rows; ++j) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (!K.is_zero(m[i][j])) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        Rat inv = K.inv(m[rank][j]);
        for (int jj = j; jj < cols; ++jj) m[rank][jj] = K.mul(m[rank][jj], inv);
        for (int i = 0; i < rows; ++i) {
            if (i == rank || K.is_zero(m[i][j])) continue;
            Rat f = m[i][j];
            for (int jj = j; jj < cols; ++jj) m[i][jj] = K.sub(m[i][jj], K.mul(f, m[rank][jj]));
        }
        ++rank;
    }
    return rank;
}

} // namespace

Verdict is_regular_local(const PresentedRing& R) {
    if (!R.is_local()) throw PreconditionError("is_regular_local needs a local-mode ring");
    const Field& K = R.field();
    const int n = R.nvars();

    // span of linear parts of the ideal generators = m/m^2 relations
    std::vector<std::vector<Rat>> lin;
    for (const Poly& g : R.ideal_gens()) {
        std::vector<Rat> row(n, Rat(0));
        for (const MTerm& t : g.t)
            if (total_deg(t.e) == 1)
                for (int i = 0; i < n; ++i)
                    if (t.e[i] == 1) row[i] = t.c;
        lin.push_back(std::move(row));
    }
    int embdim = n - rat_rank(K, lin);
    int dim = krull_dimension(R);

    Verdict v = embdim == dim ? Verdict::holds() : Verdict::fails();
    v.certificate = {{"kind", "regular-local"},
                     {"embedding_dimension", embdim},
                     {"krull_dimension", dim}};
    return v;
}

std::vector<Poly> minimal_generators(const PresentedRing& R, const std::vector<Poly>& gens) {
    if (!R.is_local()) throw PreconditionError("minimal_generators needs a local-mode ring");
    const PolyRing& P = R.poly_ring();
    for (const Poly& g : gens)
        if (!P.field().is_zero(P.constant_term(g)))
            throw PreconditionError("minimal_generators: element outside the maximal ideal");

    // m*Q generators: x_i * g_j, plus the ring relations
    std::vector<Vec> mq;
    for (const Poly& g : gens)
        for (int i = 0; i < P.nvars(); ++i) mq.push_back(P.mul(g, P.variable(i)));
    for (const Poly& q : R.ideal_gens()) mq.push_back(q);

    std::vector<Poly> kept;
    for (const Poly& g : gens) {
        if (R.is_zero(g)) continue;
        std::vector<Vec> test = mq;
        for (const Poly& k : kept) test.push_back(k);
        SubmoduleEngine e(P, std::move(test));
        if (!e.contains(g)) kept.push_back(g);
    }
    return kept;
}

std::vector<Poly> ideal_saturation(const PolyRing& P, const std::vector<Poly>& I, const Poly& f) {
    if (P.order().local)
        throw PreconditionError("saturation is implemented for global orders only");
    const int n = P.nvars();
    std::vector<std::string> vars;
    vars.push_back("@s");
    for (const std::string& v : P.var_names()) vars.push_back(v);
    PolyRing E(vars, P.field(), TermOrder::elim(1));

    auto inject = [&](const Poly& p) {
        std::vector<MTerm> ts;
        for (const MTerm& m : p.t) {
            Expo e(n + 1, 0);
            for (int i = 0; i < n; ++i) e[i + 1] = m.e[i];
            ts.push_back(MTerm{0, e, m.c});
        }
        return E.normalize(std::move(ts));
    };

    std::vector<Vec> gens;
    for (const Poly& p : I) gens.push_back(inject(p));
    gens.push_back(E.sub(E.mul(E.variable(0), inject(f)), E.constant(Rat(1))));
    SubmoduleEngine eng(E, std::move(gens));

    std::vector<Poly> out;
    for (const Vec& v : eng.reduced()) {
        bool has_s = false;
        for (const MTerm& m : v.t)
            if (m.e[0] > 0) { has_s = true; break; }
        if (has_s) continue;
        std::vector<MTerm> ts;
        for (const MTerm& m : v.t) {
            Expo e(n, 0);
            for (int i = 0; i < n; ++i) e[i] = m.e[i + 1];
            ts.push_back(MTerm{0, e, m.c});
        }
        out.push_back(P.normalize(std::move(ts)));
    }
    return out;
}

bool ideal_equal(const PolyRing& P, const std::vector<Poly>& I, const std::vector<Poly>& J) {
    SubmoduleEngine ei(P, std::vector<Vec>(I.begin(), I.end()));
    SubmoduleEngine ej(P, std::vector<Vec>(J.begin(), J.end()));
    for (const Poly& p : J)
        if (!ei.contains(p)) return false;
    for (const Poly& p : I)
        if (!ej.contains(p)) return false;
    return true;
}

std::vector<Poly> ring_map_kernel(const PolyRing& source, const PresentedRing& target,
                                  const std::vector<Poly>& images) {
    if (target.poly_ring().order().local)
        throw PreconditionError("ring_map_kernel is implemented for global targets only");
    const PolyRing& T = target.poly_ring();
    const int nt = T.nvars(), ns = source.nvars();

    std::vector<std::string> vars;
    for (const std::string& v : T.var_names()) vars.push_back("@" + v);
    for (const std::string& v : source.var_names()) vars.push_back(v);
    PolyRing E(vars, source.field(), TermOrder::elim(nt));

    auto inject_t = [&](const Poly& p) {
        std::vector<MTerm> ts;
        for (const MTerm& m : p.t) {
            Expo e(nt + ns, 0);
            for (int i = 0; i < nt; ++i) e[i] = m.e[i];
            ts.push_back(MTerm{0, e, m.c});
        }
        return E.normalize(std::move(ts));
    };

    std::vector<Vec> gens;
    for (const Poly& q : target.ideal_gens()) gens.push_back(inject_t(q));
    for (int i = 0; i < ns; ++i) {
        Expo e(nt + ns, 0);
        e[nt + i] = 1;
        gens.push_back(E.sub(E.monomial(e, Rat(1)), inject_t(images[size_t(i)])));
    }
    SubmoduleEngine eng(E, std::move(gens));

    std::vector<Poly> out;
    for (const Vec& v : eng.reduced()) {
        bool has_t = false;
        for (const MTerm& m : v.t)
            for (int i = 0; i < nt && !has_t; ++i)
                if (m.e[i] > 0) has_t = true;
        if (has_t) continue;
        std::vector<MTerm> ts;
        for (const MTerm& m : v.t) {
            Expo e(ns, 0);
            for (int i = 0; i < ns; ++i) e[i] = m.e[nt + i];
            ts.push_back(MTerm{0, e, m.c});
        }
        out.push_back(source.normalize(std::move(ts)));
    }
    return out;
}

} // namespace logtk
