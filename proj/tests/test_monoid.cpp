#include <doctest.h>
#include "logtk/monoid.hpp"
#include <map>
#include <numeric>

using namespace logtk;

namespace {

FinMonoid from_relations(std::vector<std::string> names,
                         std::vector<std::pair<Expo, Expo>> rels) {
    FinMonoid m;
    m.gens = std::move(names);
    m.relations = std::move(rels);
    return m;
}

// independent congruence oracle: union-find closure over rows of bounded degree
struct UnionFind {
    std::map<Expo, Expo> parent;
    Expo find(Expo x) {
        auto it = parent.find(x);
        if (it == parent.end() || it->second == x) return x;
        Expo r = find(it->second);
        parent[x] = r;
        return r;
    }
    void unite(const Expo& a, const Expo& b) {
        Expo ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
};

// number of congruence classes of elements of degree <= D
int class_count_oracle(const FinMonoid& M, int D) {
    // enumerate rows of degree <= D + max relation degree to close the congruence
    int pad = 0;
    for (const auto& [a, b] : M.relations)
        pad = std::max({pad, total_deg(a), total_deg(b)});
    int bound = D + pad;
    std::vector<Expo> rows;
    Expo cur(size_t(M.ngens()), 0);
    std::function<void(int, int)> gen = [&](int i, int left) {
        if (i == M.ngens()) {
            rows.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[size_t(i)] = v;
            gen(i + 1, left - v);
        }
        cur[size_t(i)] = 0;
    };
    gen(0, bound);

    UnionFind uf;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Expo& r : rows)
            for (const auto& [a, b] : M.relations) {
                bool fits = true;
                for (size_t i = 0; i < a.size(); ++i)
                    if (r[i] < a[i]) { fits = false; break; }
                if (!fits) continue;
                Expo other = r;
                for (size_t i = 0; i < a.size(); ++i) other[i] = r[i] - a[i] + b[i];
                if (total_deg(other) > bound) continue;
                if (uf.find(r) != uf.find(other)) {
                    uf.unite(r, other);
                    changed = true;
                }
            }
    }
    std::map<Expo, int> reps; // representative -> min degree seen
    for (const Expo& r : rows) {
        Expo root = uf.find(r);
        auto it = reps.find(root);
        int d = total_deg(r);
        if (it == reps.end())
            reps[root] = d;
        else
            it->second = std::min(it->second, d);
    }
    int count = 0;
    for (auto& [root, d] : reps)
        if (d <= D) ++count;
    return count;
}

int normal_form_count(const PresentedRing& A, int D) {
    // standard monomials of degree <= D
    const PolyRing& P = A.poly_ring();
    int count = 0;
    Expo cur(size_t(P.nvars()), 0);
    std::function<void(int, int)> gen = [&](int i, int left) {
        if (i == P.nvars()) {
            Poly m = P.monomial(cur, Rat(1));
            if (P.sub(A.nf(m), m).zero()) ++count;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[size_t(i)] = v;
            gen(i + 1, left - v);
        }
        cur[size_t(i)] = 0;
    };
    gen(0, D);
    return count;
}

} // namespace

TEST_CASE("monoid algebra presentations") {
    FinMonoid n2 = FinMonoid::free_monoid(2);
    PresentedRing A = monoid_algebra_presentation(n2, Field::rationals());
    CHECK(A.ideal_gens().empty());
    CHECK(A.nvars() == 2);

    // <u,v,w | u+w = 2v> -> K[u,v,w]/(uw - v^2)
    FinMonoid m = from_relations({"u", "v", "w"}, {{{1, 0, 1}, {0, 2, 0}}});
    PresentedRing B = monoid_algebra_presentation(m, Field::rationals());
    REQUIRE(B.ideal_gens().size() == 1);
    CHECK(ideal_equal(B.poly_ring(), B.ideal_gens(), {B.parse("u*w - v^2")}));
    // normal-form count agrees with the congruence-closure oracle up to degree 4
    CHECK(normal_form_count(B, 4) == class_count_oracle(m, 4));

    FinMonoid trivial;
    PresentedRing K = monoid_algebra_presentation(trivial, Field::rationals());
    CHECK(K.nvars() == 0);
}

TEST_CASE("normal form counts for a non-integral monoid") {
    FinMonoid m = from_relations({"a"}, {{{2}, {3}}});
    PresentedRing A = monoid_algebra_presentation(m, Field::rationals());
    CHECK(normal_form_count(A, 4) == class_count_oracle(m, 4));
    CHECK(class_count_oracle(m, 4) == 3); // {0, a, 2a}; 2a absorbs higher powers
}

TEST_CASE("group completion") {
    auto z2 = group_completion(FinMonoid::free_monoid(2));
    CHECK(z2.group.same_iso_type(FgAbGroup::free_group(2)));

    // <a,b | a+b = 2b>: a = b in the completion
    auto g = group_completion(from_relations({"a", "b"}, {{{1, 1}, {0, 2}}}));
    CHECK(g.group.same_iso_type(FgAbGroup::free_group(1)));
    CHECK(g.group.same_class({1, 0}, {0, 1}));

    // <a | 2a = 3a>: trivial completion
    auto t = group_completion(from_relations({"a"}, {{{2}, {3}}}));
    CHECK(t.group.is_trivial());

    FinMonoid pointed = FinMonoid::free_monoid(1);
    pointed.absorbing.push_back({2});
    CHECK_THROWS_AS(group_completion(pointed), PointedMonoid);
}

TEST_CASE("integrality verdicts") {
    CHECK(is_integral(FinMonoid::free_monoid(3)).status == Status::holds);
    CHECK(is_integral(from_relations({"a"}, {{{2}, {3}}})).status == Status::fails);
    CHECK(is_integral(from_relations({"u", "v", "w"}, {{{1, 0, 1}, {0, 2, 0}}})).status ==
          Status::holds);
}

TEST_CASE("quotients by ideals") {
    // M = N, I = <2>: classes {0, 1, z}
    FinMonoid n1 = FinMonoid::free_monoid(1);
    FinMonoid q = quotient_by_ideal(n1, {{2}});
    CHECK(q.pointed());
    MonoidOracle o(q);
    CHECK(o.is_absorbing_class({2}));
    CHECK(o.is_absorbing_class({3}));
    CHECK(!o.is_absorbing_class({1}));
    CHECK(!o.congruent({0}, {1}));
    // its algebra is K[x]/(x^3 - x^2), the paper's z-keeping quotient
    const PresentedRing& A = o.algebra();
    CHECK(ideal_equal(A.poly_ring(), A.ideal_gens(), {A.parse("a0^3 - a0^2")}));

    // M = N^2, I = maximal ideal: {0, z}, algebra K[x]/(x^2 - x) after collapse
    FinMonoid n2 = FinMonoid::free_monoid(2);
    FinMonoid q2 = quotient_by_ideal(n2, {{1, 0}, {0, 1}});
    MonoidOracle o2(q2);
    CHECK(o2.congruent({1, 0}, {0, 1}));
    CHECK(o2.congruent({2, 0}, {1, 1}));
    CHECK(!o2.congruent({0, 0}, {1, 0}));

    // I containing a unit class is improper
    CHECK_THROWS_AS(quotient_by_ideal(n1, {{0}}), ImproperIdeal);
}

TEST_CASE("localization presentations") {
    FinMonoid n1 = FinMonoid::free_monoid(1);
    FinMonoid z = localization(n1, {{1}});
    auto gz = group_completion(z);
    CHECK(gz.group.same_iso_type(FgAbGroup::free_group(1)));
    auto rep = units_and_sharpness(z);
    CHECK(!rep.is_sharp);
    CHECK(rep.units.same_iso_type(FgAbGroup::free_group(1)));

    FinMonoid n2 = FinMonoid::free_monoid(2);
    FinMonoid l = localization(n2, {{1, 0}});
    auto rep2 = units_and_sharpness(l);
    CHECK(rep2.units.same_iso_type(FgAbGroup::free_group(1)));
    CHECK(!rep2.is_sharp);

    CHECK(localization(n2, {}).ngens() == 2); // empty S: unchanged
}

TEST_CASE("units and sharpness") {
    auto rep = units_and_sharpness(FinMonoid::free_monoid(2));
    CHECK(rep.is_sharp);
    CHECK(rep.units.is_trivial());
    CHECK(rep.maximal_ideal.size() == 2);

    auto triv = units_and_sharpness(FinMonoid::free_monoid(0));
    CHECK(triv.is_sharp);
    CHECK(triv.maximal_ideal.empty());
}

TEST_CASE("saturation verdicts") {
    CHECK(is_saturated(FinMonoid::free_monoid(2)).status == Status::holds);

    // numerical monoid <2,3>: 1 is in the saturation but not in M
    FinMonoid num = from_relations({"a", "b"}, {{{3, 0}, {0, 2}}});
    Verdict v = is_saturated(num);
    CHECK(v.status == Status::fails);
    CHECK(v.certificate.contains("witness"));

    // cone generated by (1,0),(1,1),(1,2) is saturated
    FinMonoid cone = from_relations({"u", "v", "w"}, {{{1, 0, 1}, {0, 2, 0}}});
    CHECK(is_saturated(cone).status == Status::holds);
}

TEST_CASE("localization at all generators gives a group") {
    FinMonoid m = from_relations({"u", "v", "w"}, {{{1, 0, 1}, {0, 2, 0}}});
    std::vector<Expo> all{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    FinMonoid loc = localization(m, all);
    CHECK(is_integral(loc).status == Status::holds);
    auto gl = group_completion(loc);
    auto gm = group_completion(m);
    CHECK(gl.group.rank() == gm.group.rank());
    CHECK(gl.group.invariant_factors() == gm.group.invariant_factors());
    auto rep = units_and_sharpness(loc);
    CHECK(rep.units.same_iso_type(gl.group)); // everything inverted
}

TEST_CASE("gp injectivity on normal forms for integral monoids") {
    FinMonoid m = from_relations({"u", "v", "w"}, {{{1, 0, 1}, {0, 2, 0}}});
    MonoidOracle o(m);
    auto gp = group_completion(m);
    // distinct classes up to degree 3 stay distinct in the completion
    std::vector<Expo> reps;
    Expo cur(3, 0);
    std::function<void(int, int)> gen = [&](int i, int left) {
        if (i == 3) {
            for (const Expo& r : reps)
                if (o.congruent(r, cur)) return;
            reps.push_back(cur);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            cur[size_t(i)] = x;
            gen(i + 1, left - x);
        }
        cur[size_t(i)] = 0;
    };
    gen(0, 3);
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j) {
            std::vector<Int> a(reps[i].begin(), reps[i].end());
            std::vector<Int> b(reps[j].begin(), reps[j].end());
            CHECK(!gp.group.same_class(a, b));
        }
}

TEST_CASE("quotient algebra equals difference-ideal quotient") {
    // K[M/I] = K[M]/a, checked by mutual ideal membership
    FinMonoid m = from_relations({"u", "v"}, {{{2, 0}, {0, 2}}}); // u+u = v+v
    std::vector<Expo> ideal{{1, 1}};                               // I = <u+v>
    FinMonoid q = quotient_by_ideal(m, ideal);
    PresentedRing qa = monoid_algebra_presentation(q, Field::rationals());

    PresentedRing ma = monoid_algebra_presentation(m, Field::rationals());
    std::vector<Poly> rhs = ma.ideal_gens();
    FinMonoid pointed_only = m;
    pointed_only.absorbing = ideal;
    for (Poly& d : difference_ideal_gens(pointed_only, ma.poly_ring()))
        rhs.push_back(std::move(d));
    CHECK(ideal_equal(qa.poly_ring(), qa.ideal_gens(), rhs));
}

TEST_CASE("monoid homs") {
    // fold N^2 -> N, (a,b) -> a+b
    MonoidHom fold{FinMonoid::free_monoid(2), FinMonoid::free_monoid(1), {{1}, {1}}};
    CHECK(hom_well_defined(fold));
    CHECK(hom_surjective(fold));

    MonoidHom dbl{FinMonoid::free_monoid(1), FinMonoid::free_monoid(1), {{2}}};
    CHECK(hom_well_defined(dbl));
    CHECK(!hom_surjective(dbl));

    // hom must respect relations: <a|2a=3a> -> N, a -> 1 is ill-formed
    MonoidHom bad{from_relations({"a"}, {{{2}, {3}}}), FinMonoid::free_monoid(1), {{1}}};
    CHECK(!hom_well_defined(bad));

    auto kc = kernel_cokernel(gp_map(dbl));
    CHECK(kc.kernel.is_trivial());
    CHECK(kc.cokernel.invariant_factors() == std::vector<Int>{2});
}

TEST_CASE("contejean-devie on a small system") {
    // x1 + x2 - x3 = 0: minimal solutions (1,0,1),(0,1,1)
    IntMat B{{1, 1, -1}};
    auto sols = cd_minimal_solutions(B, 10000);
    CHECK(sols.size() == 2);
    CHECK(monoid_membership(IntMat{{2, 3}}, {7}, 10000));
    CHECK(!monoid_membership(IntMat{{2, 3}}, {1}, 10000));
}

TEST_CASE("gp cokernel agrees with the glued-copy kernel") {
    // coker(M^gp -> N^gp) agrees with ker((N +_M N)^gp -> N^gp)
    auto check_map = [](const MonoidHom& h) {
        auto direct = kernel_cokernel(gp_map(h)).cokernel;

        // pushout N +_M N and the fold map back to N
        const FinMonoid& N = h.target;
        FinMonoid glued;
        for (const std::string& g : N.gens) glued.gens.push_back(g + "_l");
        for (const std::string& g : N.gens) glued.gens.push_back(g + "_r");
        auto widen = [&](const Expo& row, bool right) {
            Expo out(size_t(2 * N.ngens()), 0);
            for (int i = 0; i < N.ngens(); ++i)
                out[size_t(i + (right ? N.ngens() : 0))] = row[size_t(i)];
            return out;
        };
        for (const auto& [a, b] : N.relations) {
            glued.relations.emplace_back(widen(a, false), widen(b, false));
            glued.relations.emplace_back(widen(a, true), widen(b, true));
        }
        for (int j = 0; j < h.source.ngens(); ++j) {
            Expo e(size_t(h.source.ngens()), 0);
            e[size_t(j)] = 1;
            Expo img = h.image_row(e);
            glued.relations.emplace_back(widen(img, false), widen(img, true));
        }
        MonoidHom fold{glued, N, {}};
        for (int r = 0; r < 2; ++r)
            for (int i = 0; i < N.ngens(); ++i) {
                Expo e(size_t(N.ngens()), 0);
                e[size_t(i)] = 1;
                fold.images.push_back(e);
            }
        REQUIRE(hom_well_defined(fold));
        auto as_kernel = kernel_cokernel(gp_map(fold)).kernel;
        CHECK(direct.rank() == as_kernel.rank());
        CHECK(direct.invariant_factors() == as_kernel.invariant_factors());
    };

    check_map(MonoidHom{FinMonoid::free_monoid(1), FinMonoid::free_monoid(2), {{1, 1}}});
    check_map(MonoidHom{FinMonoid::free_monoid(2), FinMonoid::free_monoid(1), {{1}, {1}}});
    check_map(MonoidHom{FinMonoid::free_monoid(1), FinMonoid::free_monoid(1), {{2}}});
    check_map(MonoidHom{FinMonoid::free_monoid(2), FinMonoid::free_monoid(2),
                        {{2, 0}, {1, 3}}});
}
