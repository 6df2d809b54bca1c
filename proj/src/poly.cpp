#include "logtk/poly.hpp"
#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace logtk {

int PolyRing::var_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (vars_[i] == name) return i;
    return -1;
}

Vec PolyRing::normalize(std::vector<MTerm> terms) const {
    for (MTerm& m : terms) m.c = field_.reduce(m.c);
    std::sort(terms.begin(), terms.end(), [&](const MTerm& a, const MTerm& b) {
        return term_greater(a, b);
    });
    Vec out;
    for (MTerm& m : terms) {
        if (m.c == 0) continue;
        if (!out.t.empty() && out.t.back().comp == m.comp && out.t.back().e == m.e) {
            out.t.back().c = field_.add(out.t.back().c, m.c);
            if (out.t.back().c == 0) out.t.pop_back();
        } else {
            out.t.push_back(std::move(m));
        }
    }
    return out;
}

Vec PolyRing::constant(const Rat& c) const {
    return monomial(Expo(nvars(), 0), c, 0);
}

Vec PolyRing::variable(int i) const {
    Expo e(nvars(), 0);
    e[i] = 1;
    return monomial(e, Rat(1), 0);
}

Vec PolyRing::monomial(const Expo& e, const Rat& c, int comp) const {
    Rat r = field_.reduce(c);
    if (r == 0) return Vec{};
    return Vec{{MTerm{comp, e, r}}};
}

Vec PolyRing::add(const Vec& a, const Vec& b) const {
    // merge of two sorted term lists
    Vec out;
    out.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        if (a.t[i].comp == b.t[j].comp && a.t[i].e == b.t[j].e) {
            Rat c = field_.add(a.t[i].c, b.t[j].c);
            if (c != 0) out.t.push_back(MTerm{a.t[i].comp, a.t[i].e, c});
            ++i;
            ++j;
        } else if (term_greater(a.t[i], b.t[j])) {
            out.t.push_back(a.t[i++]);
        } else {
            out.t.push_back(b.t[j++]);
        }
    }
    for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) out.t.push_back(b.t[j]);
    return out;
}

Vec PolyRing::sub(const Vec& a, const Vec& b) const { return add(a, neg(b)); }

Vec PolyRing::neg(const Vec& a) const {
    Vec out = a;
    for (MTerm& m : out.t) m.c = field_.neg(m.c);
    return out;
}

Vec PolyRing::scale(const Vec& a, const Rat& c) const {
    Rat r = field_.reduce(c);
    if (r == 0) return Vec{};
    Vec out = a;
    for (MTerm& m : out.t) m.c = field_.mul(m.c, r);
    return out;
}

Vec PolyRing::mul_mono(const Vec& a, const Expo& e, const Rat& c) const {
    Rat r = field_.reduce(c);
    if (r == 0) return Vec{};
    Vec out;
    out.t.reserve(a.t.size());
    for (const MTerm& m : a.t)
        out.t.push_back(MTerm{m.comp, expo_add(m.e, e), field_.mul(m.c, r)});
    return out; // multiplying by a monomial preserves the term order
}

Vec PolyRing::mul(const Vec& a, const Poly& p) const {
    std::vector<MTerm> acc;
    acc.reserve(a.t.size() * std::max<size_t>(1, p.t.size()));
    for (const MTerm& pm : p.t)
        for (const MTerm& am : a.t)
            acc.push_back(MTerm{am.comp, expo_add(am.e, pm.e), field_.mul(am.c, pm.c)});
    return normalize(std::move(acc));
}

Vec PolyRing::monic(const Vec& a) const {
    if (a.zero()) return a;
    return scale(a, field_.inv(a.lead().c));
}

Poly PolyRing::power(const Poly& p, int k) const {
    Poly r = constant(Rat(1));
    for (int i = 0; i < k; ++i) r = mul(r, p);
    return r;
}

Poly PolyRing::derivative(const Poly& p, int var) const {
    std::vector<MTerm> acc;
    for (const MTerm& m : p.t) {
        if (m.e[var] == 0) continue;
        Expo e = m.e;
        Rat c = field_.mul(m.c, Rat(e[var]));
        e[var] -= 1;
        acc.push_back(MTerm{m.comp, e, c});
    }
    return normalize(std::move(acc));
}

Rat PolyRing::constant_term(const Vec& a, int comp) const {
    for (const MTerm& m : a.t)
        if (m.comp == comp && total_deg(m.e) == 0) return m.c;
    return Rat(0);
}

Poly PolyRing::map_poly(const Poly& p, const std::vector<Poly>& images,
                        const PolyRing& target) const {
    Poly out = target.zero();
    for (const MTerm& m : p.t) {
        Poly term = target.constant(m.c);
        for (int i = 0; i < nvars(); ++i)
            for (int k = 0; k < m.e[i]; ++k) term = target.mul(term, images[i]);
        out = target.add(out, term);
    }
    return out;
}

Rat PolyRing::eval(const Poly& p, const std::vector<Rat>& point) const {
    Rat out(0);
    for (const MTerm& m : p.t) {
        Rat term = m.c;
        for (int i = 0; i < nvars(); ++i)
            for (int k = 0; k < m.e[size_t(i)]; ++k) term = field_.mul(term, point[size_t(i)]);
        out = field_.add(out, term);
    }
    return out;
}

Poly PolyRing::component(const Vec& a, int comp) const {
    Vec out;
    for (const MTerm& m : a.t)
        if (m.comp == comp) out.t.push_back(MTerm{0, m.e, m.c});
    return out;
}

Vec PolyRing::embed(const Poly& p, int comp) const {
    Vec out = p;
    for (MTerm& m : out.t) m.comp = comp;
    return out;
}

int PolyRing::max_comp(const Vec& a) const {
    int m = -1;
    for (const MTerm& t : a.t) m = std::max(m, t.comp);
    return m;
}

std::string PolyRing::str(const Vec& a) const {
    if (a.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    bool module = max_comp(a) > 0;
    for (const MTerm& m : a.t) {
        Rat c = m.c;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::string mono;
        for (int i = 0; i < nvars(); ++i) {
            if (m.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
        }
        if (mono.empty()) {
            os << c.get_str();
        } else {
            if (c != 1) os << c.get_str() << "*";
            os << mono;
        }
        if (module) os << "<e" << m.comp << ">";
    }
    return os.str();
}

namespace {

struct Parser {
    const PolyRing& R;
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const PolyRing& ring, const std::string& text) : R(ring), s(text) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos) + ": " + what + " in '" + s + "'");
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return Int(s.substr(start, pos - start));
    }

    Poly parse_factor() {
        skip_ws();
        if (pos >= s.size()) fail("expected factor");
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = parse_int();
            if (eat('/')) {
                Int den = parse_int();
                if (den == 0) fail("zero denominator");
                return R.constant(Rat(num, den));
            }
            return R.constant(Rat(num));
        }
        if (c == '(') {
            ++pos;
            Poly p = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int idx = R.var_index(name);
            if (idx < 0) fail("unknown variable '" + name + "'");
            Poly p = R.variable(idx);
            if (eat('^')) {
                Int k = parse_int();
                p = R.power(R.variable(idx), int(k.get_si()));
            }
            return p;
        }
        fail("unexpected character");
    }

    Poly parse_term() {
        Poly p = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                p = R.mul(p, parse_factor());
            } else if (pos < s.size() &&
                       (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
                        s[pos] == '(')) {
                p = R.mul(p, parse_factor()); // juxtaposition
            } else {
                break;
            }
        }
        return p;
    }

    Poly parse_expr() {
        skip_ws();
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly p = parse_term();
        if (neg) p = R.neg(p);
        for (;;) {
            skip_ws();
            if (eat('+')) {
                p = R.add(p, parse_term());
            } else if (eat('-')) {
                p = R.sub(p, parse_term());
            } else {
                break;
            }
        }
        return p;
    }
};

} // namespace

Poly PolyRing::parse(const std::string& text) const {
    Parser p(*this, text);
    Poly out = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

} // namespace logtk
