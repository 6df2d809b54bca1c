#include "logtk/groebner.hpp"
#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace logtk {

namespace {

constexpr long kStepBudget = 4000000;

// LOGTK_VERIFY_BASES=1 makes every engine self-check its reduced basis with
// the full Buchberger zero-reduction test; the test suite runs this way.
bool verify_bases_enabled() {
    static const bool on = std::getenv("LOGTK_VERIFY_BASES") != nullptr;
    return on;
}

struct Reducer {
    Vec v;
    Vec rep;
    Poly uc; // lift mode only: v-part multiplier
};

struct RedState {
    Vec h;
    Vec rep;
    Poly uc;
};

// One reduction pass. Invariants maintained exactly in P^m:
//   basis mode: h = sum rep_j * gens_j
//   lift mode:  h = uc * v + sum rep_j * gens_j
// In local mode the ecart rule may push the running state as an extra reducer
// (Mora); interim reducers are only ever hit with a strictly positive monomial
// shift, so the constant term of uc never moves.
RedState reduce(const PolyRing& R, RedState st, std::vector<Reducer>& T, bool local,
                long& steps) {
    Vec result; // irreducible terms (global tail reduction)
    while (!st.h.zero()) {
        if (++steps > kStepBudget)
            throw std::runtime_error("standard basis engine exceeded its step budget");
        const MTerm& lt = st.h.lead();
        int pick = -1;
        int pick_ecart = 0;
        for (size_t i = 0; i < T.size(); ++i) {
            if (T[i].v.zero()) continue;
            const MTerm& lg = T[i].v.lead();
            if (lg.comp != lt.comp || !expo_divides(lg.e, lt.e)) continue;
            int ec = T[i].v.ecart();
            if (pick < 0 || ec < pick_ecart) {
                pick = int(i);
                pick_ecart = ec;
            }
        }
        if (pick < 0) {
            if (!local) {
                // move the irreducible lead into the remainder and keep going
                result.t.push_back(lt);
                st.h.t.erase(st.h.t.begin());
                continue;
            }
            break; // weak normal form: lead irreducible
        }
        if (local && pick_ecart > st.h.ecart())
            T.push_back(Reducer{st.h, st.rep, st.uc});
        const Reducer& g = T[pick];
        Rat c = R.field().div(lt.c, g.v.lead().c);
        Expo sh = expo_sub(lt.e, g.v.lead().e);
        st.h = R.sub(st.h, R.mul_mono(g.v, sh, c));
        st.rep = R.sub(st.rep, R.mul_mono(g.rep, sh, c));
        st.uc = R.sub(st.uc, R.mul_mono(g.uc, sh, c));
    }
    if (!local && !result.t.empty()) {
        for (const MTerm& m : st.h.t) result.t.push_back(m); // h is empty here
        st.h = std::move(result);
    }
    return st;
}

struct Pair {
    int i, j, deg;
    bool operator<(const Pair& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

} // namespace

SubmoduleEngine::SubmoduleEngine(PolyRing R, std::vector<Vec> gens, bool with_syzygies)
    : R_(std::move(R)), gens_(std::move(gens)) {
    build(with_syzygies);
}

void SubmoduleEngine::build(bool with_syzygies) {
    long steps = 0;
    const bool local = R_.order().local;

    for (size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].zero()) {
            if (with_syzygies) syz_.push_back(R_.unit_vec(int(i)));
            continue;
        }
        basis_.push_back(TrackedVec{gens_[i], R_.unit_vec(int(i))});
    }

    std::vector<Pair> pairs;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (basis_[i].v.lead().comp != basis_[j].v.lead().comp) continue;
            Expo l = expo_lcm(basis_[i].v.lead().e, basis_[j].v.lead().e);
            pairs.push_back(Pair{i, j, total_deg(l)});
        }
    };
    for (int j = 0; j < int(basis_.size()); ++j) push_pairs(j);

    const bool single_comp = [&] {
        for (const TrackedVec& b : basis_)
            if (R_.max_comp(b.v) > 0) return false;
        return true;
    }();

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end());
        Pair p = *it;
        pairs.erase(it);

        const Vec& f = basis_[p.i].v;
        const Vec& g = basis_[p.j].v;
        Expo l = expo_lcm(f.lead().e, g.lead().e);
        if (!with_syzygies && single_comp &&
            total_deg(l) == total_deg(f.lead().e) + total_deg(g.lead().e))
            continue; // product criterion (coprime leads, ideal case only)

        Rat ci = R_.field().inv(f.lead().c);
        Rat cj = R_.field().inv(g.lead().c);
        RedState st;
        st.h = R_.sub(R_.mul_mono(f, expo_sub(l, f.lead().e), ci),
                      R_.mul_mono(g, expo_sub(l, g.lead().e), cj));
        st.rep = R_.sub(R_.mul_mono(basis_[p.i].rep, expo_sub(l, f.lead().e), ci),
                        R_.mul_mono(basis_[p.j].rep, expo_sub(l, g.lead().e), cj));
        st.uc = R_.zero();

        std::vector<Reducer> T;
        T.reserve(basis_.size());
        for (const TrackedVec& b : basis_) T.push_back(Reducer{b.v, b.rep, R_.zero()});
        st = reduce(R_, st, T, local, steps);

        if (st.h.zero()) {
            if (with_syzygies && !st.rep.zero()) syz_.push_back(st.rep);
        } else {
            Rat inv = R_.field().inv(st.h.lead().c);
            basis_.push_back(TrackedVec{R_.scale(st.h, inv), R_.scale(st.rep, inv)});
            push_pairs(int(basis_.size()) - 1);
        }
    }

    // canonical reduced basis
    std::vector<Vec> mins;
    for (const TrackedVec& b : basis_) mins.push_back(R_.monic(b.v));
    std::sort(mins.begin(), mins.end(), [&](const Vec& a, const Vec& b) {
        return R_.term_greater(b.lead(), a.lead()); // ascending leads
    });
    std::vector<Vec> kept;
    for (const Vec& v : mins) {
        bool redundant = false;
        for (const Vec& k : kept)
            if (k.lead().comp == v.lead().comp && expo_divides(k.lead().e, v.lead().e)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(v);
    }
    if (!local) {
        // full tail reduction against the other elements
        for (size_t i = 0; i < kept.size(); ++i) {
            std::vector<Reducer> T;
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i) T.push_back(Reducer{kept[j], Vec{}, R_.zero()});
            RedState st{kept[i], Vec{}, R_.zero()};
            st = reduce(R_, st, T, false, steps);
            kept[i] = R_.monic(st.h);
        }
        std::sort(kept.begin(), kept.end(), [&](const Vec& a, const Vec& b) {
            return R_.term_greater(b.lead(), a.lead());
        });
    }
    reduced_ = std::move(kept);

    if (verify_bases_enabled() && !buchberger_ok(R_, reduced_))
        throw std::logic_error("reduced basis failed the Buchberger zero-reduction check");
}

Vec SubmoduleEngine::nf(const Vec& v) const {
    return normal_form(R_, v, reduced_);
}

LiftResult SubmoduleEngine::lift(const Vec& v) const {
    long steps = 0;
    std::vector<Reducer> T;
    T.reserve(basis_.size());
    for (const TrackedVec& b : basis_) T.push_back(Reducer{b.v, b.rep, R_.zero()});
    RedState st{v, R_.zero(), R_.constant(Rat(1))};
    st = reduce(R_, st, T, R_.order().local, steps);

    LiftResult out;
    out.member = st.h.zero();
    if (!out.member) return out;
    if (R_.field().is_zero(R_.constant_term(st.uc)))
        throw std::logic_error("lift produced a non-unit multiplier");
    out.unit = st.uc;
    out.coeffs.assign(gens_.size(), R_.zero());
    for (const MTerm& m : st.rep.t) {
        Vec& c = out.coeffs[size_t(m.comp)];
        c = R_.add(c, R_.monomial(m.e, R_.field().neg(m.c)));
    }
    return out;
}

Vec normal_form(const PolyRing& R, const Vec& v, const std::vector<Vec>& basis) {
    long steps = 0;
    std::vector<Reducer> T;
    T.reserve(basis.size());
    for (const Vec& b : basis) T.push_back(Reducer{b, Vec{}, Poly{}});
    RedState st{v, Vec{}, Poly{}};
    st = reduce(R, st, T, R.order().local, steps);
    return st.h;
}

bool buchberger_ok(const PolyRing& R, const std::vector<Vec>& basis) {
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            const Vec& f = basis[i];
            const Vec& g = basis[j];
            if (f.zero() || g.zero()) continue;
            if (f.lead().comp != g.lead().comp) continue;
            Expo l = expo_lcm(f.lead().e, g.lead().e);
            Vec s = R.sub(R.mul_mono(f, expo_sub(l, f.lead().e), R.field().inv(f.lead().c)),
                          R.mul_mono(g, expo_sub(l, g.lead().e), R.field().inv(g.lead().c)));
            if (!normal_form(R, s, basis).zero()) return false;
        }
    return true;
}

} // namespace logtk
