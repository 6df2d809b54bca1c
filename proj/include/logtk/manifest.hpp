#pragma once

#include "logtk/prelog.hpp"
#include <map>

namespace logtk {

struct SyntaxError : std::runtime_error {
    int line, column;
    SyntaxError(int l, int c, const std::string& expected)
        : std::runtime_error("syntax error at line " + std::to_string(l) + ", column " +
                             std::to_string(c) + ": expected " + expected),
          line(l), column(c) {}
};

struct UnresolvedReference : std::runtime_error {
    explicit UnresolvedReference(const std::string& name)
        : std::runtime_error("unresolved reference '" + name + "'") {}
};

struct DuplicateName : std::runtime_error {
    explicit DuplicateName(const std::string& name)
        : std::runtime_error("duplicate section name '" + name + "'") {}
};

struct ManifestValue {
    enum class Kind { Str, List, Table };
    Kind kind = Kind::Str;
    std::string str;
    std::vector<std::string> list;
    std::vector<std::pair<std::string, std::string>> table; // insertion order
};

struct Task {
    std::string id;
    std::string procedure;
    std::map<std::string, ManifestValue> args;
};

struct Manifest {
    Field field = Field::rationals();
    std::map<std::string, FinMonoid> monoids;
    std::map<std::string, RingPtr> rings;
    std::map<std::string, PrelogRing> prelogs;
    std::map<std::string, PrelogHom> maps;
    std::vector<Task> tasks;

    const FinMonoid& monoid(const std::string& name) const;
    const RingPtr& ring(const std::string& name) const;
    const PrelogRing& prelog(const std::string& name) const;
    const PrelogHom& map(const std::string& name) const;
};

// Line-oriented key/value manifest (TOML-compatible subset): [kind.name]
// section headers; string, list-of-string and inline-table values; monoid
// relations as additive words "a+b = 2*b"; field override per manifest.
Manifest parse_manifest(const std::string& text, const Field* field_override = nullptr);

// Normalized textual form; print(parse(m)) is a fixed point.
std::string print_manifest(const Manifest& m);

// Additive word over named generators, e.g. "a + 2*b" or "0".
Expo parse_monoid_word(const std::string& word, const std::vector<std::string>& gens,
                       int line = 0);

std::string format_monoid_word(const Expo& row, const std::vector<std::string>& gens);

} // namespace logtk
