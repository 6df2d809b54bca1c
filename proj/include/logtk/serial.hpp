#pragma once

#include "logtk/poly.hpp"
#include <json.hpp>

namespace logtk {

// Machine form of a module vector: list of [comp, [exponents...], "coeff"].
inline nlohmann::json vec_to_json(const PolyRing& R, const Vec& v) {
    (void)R;
    nlohmann::json out = nlohmann::json::array();
    for (const MTerm& m : v.t) {
        nlohmann::json term = nlohmann::json::array();
        term.push_back(m.comp);
        nlohmann::json e = nlohmann::json::array();
        for (int x : m.e) e.push_back(x);
        term.push_back(e);
        term.push_back(m.c.get_str());
        out.push_back(term);
    }
    return out;
}

inline Vec vec_from_json(const PolyRing& R, const nlohmann::json& j) {
    std::vector<MTerm> ts;
    for (const auto& term : j) {
        MTerm m;
        m.comp = term.at(0).get<int>();
        for (const auto& x : term.at(1)) m.e.push_back(x.get<int>());
        if (int(m.e.size()) != R.nvars())
            throw std::invalid_argument("vector term has wrong exponent length");
        m.c = Rat(term.at(2).get<std::string>());
        ts.push_back(std::move(m));
    }
    return R.normalize(std::move(ts));
}

inline nlohmann::json poly_list_json(const PolyRing& R, const std::vector<Poly>& ps) {
    nlohmann::json out = nlohmann::json::array();
    for (const Poly& p : ps) out.push_back(R.str(p));
    return out;
}

inline Field field_from_str(const std::string& s) {
    if (s == "Q") return Field::rationals();
    if (s.rfind("Fp(", 0) == 0 && s.back() == ')')
        return Field::prime(std::stoul(s.substr(3, s.size() - 4)));
    throw std::invalid_argument("unknown field descriptor '" + s + "'");
}

// Enough ambient data to replay normal-form reductions.
inline nlohmann::json poly_ring_context(const PolyRing& P, bool local) {
    nlohmann::json vars = nlohmann::json::array();
    for (const std::string& v : P.var_names()) vars.push_back(v);
    return {{"variables", vars}, {"field", P.field().str()}, {"local", local}};
}

inline PolyRing poly_ring_from_context(const nlohmann::json& j) {
    std::vector<std::string> vars;
    for (const auto& v : j.at("variables")) vars.push_back(v.get<std::string>());
    Field K = field_from_str(j.at("field").get<std::string>());
    bool local = j.at("local").get<bool>();
    return PolyRing(std::move(vars), K,
                    local ? TermOrder::negdegrevlex() : TermOrder::degrevlex());
}

inline nlohmann::json vec_list_json(const PolyRing& P, const std::vector<Vec>& vs) {
    nlohmann::json out = nlohmann::json::array();
    for (const Vec& v : vs) out.push_back(vec_to_json(P, v));
    return out;
}

inline std::vector<Vec> vec_list_from_json(const PolyRing& P, const nlohmann::json& j) {
    std::vector<Vec> out;
    for (const auto& v : j) out.push_back(vec_from_json(P, v));
    return out;
}

} // namespace logtk
