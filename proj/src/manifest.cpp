#include "logtk/manifest.hpp"
#include "logtk/serial.hpp"
#include <algorithm>
#include <cctype>
#include <sstream>

namespace logtk {

const FinMonoid& Manifest::monoid(const std::string& name) const {
    auto it = monoids.find(name);
    if (it == monoids.end()) throw UnresolvedReference(name);
    return it->second;
}
const RingPtr& Manifest::ring(const std::string& name) const {
    auto it = rings.find(name);
    if (it == rings.end()) throw UnresolvedReference(name);
    return it->second;
}
const PrelogRing& Manifest::prelog(const std::string& name) const {
    auto it = prelogs.find(name);
    if (it == prelogs.end()) throw UnresolvedReference(name);
    return it->second;
}
const PrelogHom& Manifest::map(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end()) throw UnresolvedReference(name);
    return it->second;
}

namespace {

struct Line {
    std::string text;
    int number;
};

struct Cursor {
    const std::string& s;
    int line;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size() || s[pos] == '#';
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& expected) {
        throw SyntaxError(line, int(pos) + 1, expected);
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
                s[pos] == '-'))
            ++pos;
        if (pos == start) fail("identifier");
        return s.substr(start, pos - start);
    }
    std::string quoted() {
        skip_ws();
        if (pos >= s.size() || s[pos] != '"') fail("'\"'");
        ++pos;
        size_t start = pos;
        while (pos < s.size() && s[pos] != '"') ++pos;
        if (pos >= s.size()) fail("closing '\"'");
        std::string out = s.substr(start, pos - start);
        ++pos;
        return out;
    }
};

ManifestValue parse_value(Cursor& c) {
    ManifestValue v;
    char ch = c.peek();
    if (ch == '"') {
        v.kind = ManifestValue::Kind::Str;
        v.str = c.quoted();
    } else if (ch == '[') {
        c.eat('[');
        v.kind = ManifestValue::Kind::List;
        if (!c.eat(']')) {
            for (;;) {
                v.list.push_back(c.quoted());
                if (c.eat(']')) break;
                if (!c.eat(',')) c.fail("',' or ']'");
                if (c.eat(']')) break; // trailing comma
            }
        }
    } else if (ch == '{') {
        c.eat('{');
        v.kind = ManifestValue::Kind::Table;
        if (!c.eat('}')) {
            for (;;) {
                std::string key = c.ident();
                if (!c.eat('=')) c.fail("'='");
                v.table.emplace_back(key, c.quoted());
                if (c.eat('}')) break;
                if (!c.eat(',')) c.fail("',' or '}'");
                if (c.eat('}')) break;
            }
        }
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' ||
               std::isalpha(static_cast<unsigned char>(ch))) {
        // bare scalar (number / true / false), kept as a string
        v.kind = ManifestValue::Kind::Str;
        c.skip_ws();
        size_t start = c.pos;
        while (c.pos < c.s.size() && !std::isspace(static_cast<unsigned char>(c.s[c.pos])) &&
               c.s[c.pos] != '#')
            ++c.pos;
        v.str = c.s.substr(start, c.pos - start);
    } else {
        c.fail("value (string, list, table or scalar)");
    }
    if (!c.eof()) c.fail("end of line");
    return v;
}

struct RawSection {
    std::string kind, name;
    int line;
    std::map<std::string, ManifestValue> entries;
};

} // namespace

Expo parse_monoid_word(const std::string& word, const std::vector<std::string>& gens,
                       int line) {
    Cursor c{word, line};
    Expo row(gens.size(), 0);
    auto term = [&]() {
        c.skip_ws();
        int coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            size_t start = c.pos;
            while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
                ++c.pos;
            coeff = std::stoi(c.s.substr(start, c.pos - start));
            if (!c.eat('*')) {
                if (coeff == 0 && c.eof()) return; // bare "0"
                if (c.eof() || c.peek() == '+') {
                    if (coeff == 0) return;
                    c.fail("'*' after coefficient");
                }
                c.fail("'*' after coefficient");
            }
        }
        std::string name = c.ident();
        auto it = std::find(gens.begin(), gens.end(), name);
        if (it == gens.end()) throw UnresolvedReference(name);
        row[size_t(it - gens.begin())] += coeff;
    };
    term();
    while (c.eat('+')) term();
    if (!c.eof()) c.fail("'+' or end of word");
    return row;
}

std::string format_monoid_word(const Expo& row, const std::vector<std::string>& gens) {
    std::string out;
    for (size_t i = 0; i < row.size(); ++i) {
        if (row[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (row[i] != 1) out += std::to_string(row[i]) + "*";
        out += gens[i];
    }
    return out.empty() ? "0" : out;
}

Manifest parse_manifest(const std::string& text, const Field* field_override) {
    std::vector<RawSection> sections;
    RawSection* current = nullptr;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        Cursor c{raw, lineno};
        if (c.eof()) continue;
        if (c.peek() == '[') {
            c.eat('[');
            std::string kind = c.ident();
            std::string name;
            if (c.eat('.')) name = c.ident();
            if (!c.eat(']')) c.fail("']'");
            if (!c.eof()) c.fail("end of line after section header");
            for (const RawSection& s : sections)
                if (s.kind == kind && s.name == name && kind != "field")
                    throw DuplicateName(kind + "." + name);
            sections.push_back(RawSection{kind, name, lineno, {}});
            current = &sections.back();
            continue;
        }
        if (!current) c.fail("section header before entries");
        std::string key = c.ident();
        if (!c.eat('=')) c.fail("'='");
        ManifestValue v = parse_value(c);
        if (current->entries.count(key)) throw DuplicateName(current->kind + "." + key);
        current->entries.emplace(std::move(key), std::move(v));
    }

    Manifest m;
    if (field_override) m.field = *field_override;

    auto need = [&](const RawSection& s, const std::string& key) -> const ManifestValue& {
        auto it = s.entries.find(key);
        if (it == s.entries.end())
            throw SyntaxError(s.line, 1, "key '" + key + "' in [" + s.kind +
                                             (s.name.empty() ? "" : "." + s.name) + "]");
        return it->second;
    };

    // field first
    for (const RawSection& s : sections)
        if (s.kind == "field" && !field_override)
            m.field = field_from_str(need(s, "name").str);

    for (const RawSection& s : sections) {
        if (s.kind == "monoid") {
            FinMonoid mon;
            for (const std::string& g : need(s, "generators").list) mon.gens.push_back(g);
            if (auto it = s.entries.find("relations"); it != s.entries.end())
                for (const std::string& rel : it->second.list) {
                    size_t eq = rel.find('=');
                    if (eq == std::string::npos)
                        throw SyntaxError(s.line, 1, "'=' in relation '" + rel + "'");
                    mon.relations.emplace_back(
                        parse_monoid_word(rel.substr(0, eq), mon.gens, s.line),
                        parse_monoid_word(rel.substr(eq + 1), mon.gens, s.line));
                }
            if (auto it = s.entries.find("absorbing"); it != s.entries.end())
                for (const std::string& w : it->second.list)
                    mon.absorbing.push_back(parse_monoid_word(w, mon.gens, s.line));
            m.monoids.emplace(s.name, std::move(mon));
        } else if (s.kind == "ring") {
            std::vector<std::string> vars = need(s, "variables").list;
            std::vector<std::string> ideal;
            if (auto it = s.entries.find("ideal"); it != s.entries.end()) ideal = it->second.list;
            std::string mode = "local";
            if (auto it = s.entries.find("mode"); it != s.entries.end()) mode = it->second.str;
            if (mode != "local" && mode != "graded")
                throw SyntaxError(s.line, 1, "mode 'local' or 'graded'");
            m.rings.emplace(s.name, std::make_shared<PresentedRing>(PresentedRing::make(
                                        vars, m.field, ideal,
                                        mode == "local" ? RingMode::Local : RingMode::Graded)));
        }
    }

    for (const RawSection& s : sections) {
        if (s.kind != "prelog") continue;
        PrelogRing P;
        P.name = s.name;
        P.ring = m.ring(need(s, "ring").str);
        P.monoid = m.monoid(need(s, "monoid").str);
        const ManifestValue& alpha = need(s, "alpha");
        P.alpha.assign(size_t(P.monoid.ngens()), P.poly().zero());
        std::vector<bool> seen(size_t(P.monoid.ngens()), false);
        for (const auto& [gen, img] : alpha.table) {
            auto it = std::find(P.monoid.gens.begin(), P.monoid.gens.end(), gen);
            if (it == P.monoid.gens.end()) throw UnresolvedReference(gen);
            size_t idx = size_t(it - P.monoid.gens.begin());
            P.alpha[idx] = P.poly().parse(img);
            seen[idx] = true;
        }
        for (size_t i = 0; i < seen.size(); ++i)
            if (!seen[i])
                throw SyntaxError(s.line, 1, "alpha image for generator '" +
                                                 P.monoid.gens[i] + "'");
        m.prelogs.emplace(s.name, std::move(P));
    }

    for (const RawSection& s : sections) {
        if (s.kind != "map") continue;
        PrelogHom f;
        f.source = m.prelog(need(s, "source").str);
        f.target = m.prelog(need(s, "target").str);
        f.ring_images.assign(size_t(f.source.poly().nvars()), f.target.poly().zero());
        std::vector<bool> seen(size_t(f.source.poly().nvars()), false);
        if (auto it = s.entries.find("ring_map"); it != s.entries.end())
            for (const auto& [var, img] : it->second.table) {
                int idx = f.source.poly().var_index(var);
                if (idx < 0) throw UnresolvedReference(var);
                f.ring_images[size_t(idx)] = f.target.poly().parse(img);
                seen[size_t(idx)] = true;
            }
        for (size_t i = 0; i < seen.size(); ++i)
            if (!seen[i])
                throw SyntaxError(s.line, 1, "ring_map image for variable '" +
                                                 f.source.poly().var_names()[i] + "'");
        f.monoid_images.assign(size_t(f.source.monoid.ngens()),
                               Expo(size_t(f.target.monoid.ngens()), 0));
        std::vector<bool> mseen(size_t(f.source.monoid.ngens()), false);
        if (auto it = s.entries.find("monoid_map"); it != s.entries.end())
            for (const auto& [gen, word] : it->second.table) {
                auto git = std::find(f.source.monoid.gens.begin(), f.source.monoid.gens.end(),
                                     gen);
                if (git == f.source.monoid.gens.end()) throw UnresolvedReference(gen);
                size_t idx = size_t(git - f.source.monoid.gens.begin());
                f.monoid_images[idx] =
                    parse_monoid_word(word, f.target.monoid.gens, s.line);
                mseen[idx] = true;
            }
        for (size_t i = 0; i < mseen.size(); ++i)
            if (!mseen[i])
                throw SyntaxError(s.line, 1, "monoid_map image for generator '" +
                                                 f.source.monoid.gens[i] + "'");
        m.maps.emplace(s.name, std::move(f));
    }

    for (const RawSection& s : sections) {
        if (s.kind != "task") continue;
        Task t;
        t.id = s.name;
        t.procedure = need(s, "procedure").str;
        t.args = s.entries;
        // dry-run resolution of the named references
        auto check_ref = [&](const std::string& key, auto member) {
            if (auto it = t.args.find(key); it != t.args.end()) (m.*member)(it->second.str);
        };
        check_ref("prelog", &Manifest::prelog);
        check_ref("presenting", &Manifest::prelog);
        check_ref("map", &Manifest::map);
        check_ref("monoid", &Manifest::monoid);
        check_ref("source", &Manifest::monoid);
        check_ref("target", &Manifest::monoid);
        m.tasks.push_back(std::move(t));
    }
    return m;
}

namespace {

std::string quote(const std::string& s) { return "\"" + s + "\""; }

void print_value(std::ostream& os, const ManifestValue& v) {
    switch (v.kind) {
        case ManifestValue::Kind::Str: {
            bool bare = !v.str.empty() &&
                        v.str.find_first_not_of("0123456789-") == std::string::npos;
            os << (bare ? v.str : quote(v.str));
            break;
        }
        case ManifestValue::Kind::List: {
            os << "[";
            for (size_t i = 0; i < v.list.size(); ++i)
                os << (i ? ", " : "") << quote(v.list[i]);
            os << "]";
            break;
        }
        case ManifestValue::Kind::Table: {
            os << "{ ";
            for (size_t i = 0; i < v.table.size(); ++i)
                os << (i ? ", " : "") << v.table[i].first << " = " << quote(v.table[i].second);
            os << " }";
            break;
        }
    }
}

} // namespace

std::string print_manifest(const Manifest& m) {
    std::ostringstream os;
    os << "[field]\nname = " << quote(m.field.str()) << "\n";

    for (const auto& [name, mon] : m.monoids) {
        os << "\n[monoid." << name << "]\ngenerators = [";
        for (size_t i = 0; i < mon.gens.size(); ++i) os << (i ? ", " : "") << quote(mon.gens[i]);
        os << "]\n";
        if (!mon.relations.empty()) {
            os << "relations = [";
            for (size_t i = 0; i < mon.relations.size(); ++i)
                os << (i ? ", " : "")
                   << quote(format_monoid_word(mon.relations[i].first, mon.gens) + " = " +
                            format_monoid_word(mon.relations[i].second, mon.gens));
            os << "]\n";
        }
        if (!mon.absorbing.empty()) {
            os << "absorbing = [";
            for (size_t i = 0; i < mon.absorbing.size(); ++i)
                os << (i ? ", " : "") << quote(format_monoid_word(mon.absorbing[i], mon.gens));
            os << "]\n";
        }
    }
    for (const auto& [name, ring] : m.rings) {
        os << "\n[ring." << name << "]\nvariables = [";
        const auto& vars = ring->poly_ring().var_names();
        for (size_t i = 0; i < vars.size(); ++i) os << (i ? ", " : "") << quote(vars[i]);
        os << "]\n";
        if (!ring->ideal_gens().empty()) {
            os << "ideal = [";
            for (size_t i = 0; i < ring->ideal_gens().size(); ++i)
                os << (i ? ", " : "") << quote(ring->str(ring->ideal_gens()[i]));
            os << "]\n";
        }
        os << "mode = " << quote(ring->is_local() ? "local" : "graded") << "\n";
    }
    for (const auto& [name, P] : m.prelogs) {
        os << "\n[prelog." << name << "]\n";
        std::string rname, mname;
        for (const auto& [rn, r] : m.rings)
            if (r == P.ring) rname = rn;
        for (const auto& [mn, mo] : m.monoids)
            if (mo.gens == P.monoid.gens && mo.relations == P.monoid.relations &&
                mo.absorbing == P.monoid.absorbing)
                mname = mn;
        os << "ring = " << quote(rname) << "\nmonoid = " << quote(mname) << "\nalpha = { ";
        for (int i = 0; i < P.monoid.ngens(); ++i)
            os << (i ? ", " : "") << P.monoid.gens[size_t(i)] << " = "
               << quote(P.poly().str(P.alpha[size_t(i)]));
        os << " }\n";
    }
    for (const auto& [name, f] : m.maps) {
        os << "\n[map." << name << "]\n";
        os << "source = " << quote(f.source.name) << "\ntarget = " << quote(f.target.name)
           << "\n";
        if (f.source.poly().nvars() > 0) {
            os << "ring_map = { ";
            for (int i = 0; i < f.source.poly().nvars(); ++i)
                os << (i ? ", " : "") << f.source.poly().var_names()[size_t(i)] << " = "
                   << quote(f.target.poly().str(f.ring_images[size_t(i)]));
            os << " }\n";
        }
        if (f.source.monoid.ngens() > 0) {
            os << "monoid_map = { ";
            for (int i = 0; i < f.source.monoid.ngens(); ++i)
                os << (i ? ", " : "") << f.source.monoid.gens[size_t(i)] << " = "
                   << quote(format_monoid_word(f.monoid_images[size_t(i)],
                                               f.target.monoid.gens));
            os << " }\n";
        }
    }
    for (const Task& t : m.tasks) {
        os << "\n[task." << t.id << "]\n";
        os << "procedure = " << quote(t.procedure) << "\n";
        for (const auto& [k, v] : t.args) {
            if (k == "procedure") continue;
            os << k << " = ";
            print_value(os, v);
            os << "\n";
        }
    }
    return os.str();
}

} // namespace logtk
