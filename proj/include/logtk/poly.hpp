#pragma once

#include "logtk/field.hpp"
#include <string>
#include <vector>

namespace logtk {

using Expo = std::vector<int>;

inline int total_deg(const Expo& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

inline bool expo_divides(const Expo& a, const Expo& b) { // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Expo expo_sub(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Expo expo_add(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Expo expo_lcm(const Expo& a, const Expo& b) {
    Expo r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

// Monomial orders. Graded rings use degrevlex; local-at-origin rings use the
// anti-graded negdegrevlex, under which 1 is the largest monomial. An optional
// leading block of variables may be compared first (elimination orders, used for
// saturations and subalgebra membership in global mode).
struct TermOrder {
    bool local = false;
    int elim_block = 0;

    static TermOrder degrevlex() { return TermOrder{false, 0}; }
    static TermOrder negdegrevlex() { return TermOrder{true, 0}; }
    static TermOrder elim(int block) { return TermOrder{false, block}; }

    // strict: a comes before b (a is larger)
    bool greater(const Expo& a, const Expo& b) const {
        if (elim_block > 0) {
            int cmp = drl_block(a, b, 0, elim_block, false);
            if (cmp != 0) return cmp > 0;
        }
        int cmp = drl_block(a, b, elim_block, int(a.size()), local);
        return cmp > 0;
    }

    bool equal(const Expo& a, const Expo& b) const { return a == b; }

private:
    static int drl_block(const Expo& a, const Expo& b, int from, int to, bool anti) {
        int da = 0, db = 0;
        for (int i = from; i < to; ++i) {
            da += a[i];
            db += b[i];
        }
        if (da != db) {
            int cmp = da > db ? 1 : -1;
            return anti ? -cmp : cmp;
        }
        for (int i = to - 1; i >= from; --i)
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1; // revlex tie-break
        return 0;
    }
};

// Term of a free-module element: component index, monomial, coefficient.
struct MTerm {
    int comp = 0;
    Expo e;
    Rat c;

    bool operator==(const MTerm& o) const { return comp == o.comp && e == o.e && c == o.c; }
};

// Element of P^m: terms sorted strictly descending under the module order
// (monomial order first, lower component index wins ties). A polynomial is the
// single-component case comp == 0.
struct Vec {
    std::vector<MTerm> t;

    bool zero() const { return t.empty(); }
    const MTerm& lead() const { return t.front(); }
    int max_deg() const {
        int d = 0;
        for (const MTerm& m : t) d = std::max(d, total_deg(m.e));
        return d;
    }
    int ecart() const { return zero() ? 0 : max_deg() - total_deg(lead().e); }
};

using Poly = Vec;

// Ambient polynomial ring K[x_1..x_n] with a fixed monomial order. All Vec/Poly
// arithmetic routes through here so coefficients stay in canonical field form.
class PolyRing {
public:
    PolyRing() = default;
    PolyRing(std::vector<std::string> vars, Field K, TermOrder ord)
        : vars_(std::move(vars)), field_(K), order_(ord) {}

    int nvars() const { return int(vars_.size()); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const Field& field() const { return field_; }
    const TermOrder& order() const { return order_; }

    int var_index(const std::string& name) const;

    // strict module-term comparison: a before b
    bool term_greater(const MTerm& a, const MTerm& b) const {
        if (a.e != b.e) return order_.greater(a.e, b.e);
        return a.comp < b.comp;
    }

    Vec normalize(std::vector<MTerm> terms) const;

    Vec zero() const { return Vec{}; }
    Vec constant(const Rat& c) const;
    Vec variable(int i) const;
    Vec monomial(const Expo& e, const Rat& c = Rat(1), int comp = 0) const;
    Vec unit_vec(int comp) const { return monomial(Expo(nvars(), 0), Rat(1), comp); }

    Vec add(const Vec& a, const Vec& b) const;
    Vec sub(const Vec& a, const Vec& b) const;
    Vec neg(const Vec& a) const;
    Vec scale(const Vec& a, const Rat& c) const;
    Vec mul_mono(const Vec& a, const Expo& e, const Rat& c) const;
    Vec mul(const Vec& a, const Poly& p) const; // p single-component
    Vec monic(const Vec& a) const;

    Poly power(const Poly& p, int k) const;
    Poly derivative(const Poly& p, int var) const;

    // constant term of the single-component part (component `comp`)
    Rat constant_term(const Vec& a, int comp = 0) const;

    // substitute images[i] for variable i; result lives in `target`
    Poly map_poly(const Poly& p, const std::vector<Poly>& images, const PolyRing& target) const;

    // evaluate a single-component polynomial at a point
    Rat eval(const Poly& p, const std::vector<Rat>& point) const;

    // component split / embed helpers
    Poly component(const Vec& a, int comp) const;
    Vec embed(const Poly& p, int comp) const;
    int max_comp(const Vec& a) const;

    std::string str(const Vec& a) const;
    std::string str_poly(const Poly& p) const { return str(p); }

    Poly parse(const std::string& text) const;

private:
    std::vector<std::string> vars_;
    Field field_;
    TermOrder order_;
};

} // namespace logtk
