#include <doctest.h>
#include "logtk/regcheck.hpp"

using namespace logtk;

namespace {

RingPtr local_ring(std::vector<std::string> vars, std::vector<std::string> ideal,
                   Field K = Field::rationals()) {
    return std::make_shared<PresentedRing>(
        PresentedRing::make(std::move(vars), K, ideal, RingMode::Local));
}

PrelogRing log_point(Field K = Field::rationals()) {
    PrelogRing P;
    P.ring = local_ring({"s", "t"}, {}, K);
    P.monoid = FinMonoid::free_monoid(2);
    P.alpha = {P.poly().parse("s"), P.poly().parse("t")};
    P.name = "logpoint";
    return P;
}

PrelogRing node(Field K = Field::rationals()) {
    PrelogRing P;
    P.ring = local_ring({"x", "y"}, {"x*y"}, K);
    P.monoid = FinMonoid::free_monoid(2);
    P.alpha = {P.poly().parse("x"), P.poly().parse("y")};
    P.name = "node";
    return P;
}

PrelogRing affine_line() {
    PrelogRing P;
    P.ring = local_ring({"t"}, {});
    P.monoid = FinMonoid::free_monoid(1);
    P.alpha = {P.poly().parse("t")};
    return P;
}

PrelogRing toric_cone(Field K = Field::rationals()) {
    PrelogRing P;
    P.ring = local_ring({"u", "v", "w"}, {"u*w - v^2"}, K);
    FinMonoid m;
    m.gens = {"u", "v", "w"};
    m.relations = {{{1, 0, 1}, {0, 2, 0}}};
    P.monoid = m;
    P.alpha = {P.poly().parse("u"), P.poly().parse("v"), P.poly().parse("w")};
    P.name = "toric-cone";
    return P;
}

PrelogRing cusp() {
    PrelogRing P;
    P.ring = local_ring({"x", "y"}, {"y^2 - x^3"});
    P.monoid = FinMonoid::free_monoid(1);
    P.alpha = {P.poly().parse("x")};
    P.name = "cusp";
    return P;
}

} // namespace

TEST_CASE("log regular ideal: flat quotient on the affine line") {
    PrelogRing P = affine_line();
    Verdict v = is_log_regular_ideal(P, {P.poly().parse("t^2")});
    CHECK(v.status == Status::holds);
    CHECK(v.certificate["tor1"]["rank"] == 0);
}

TEST_CASE("log regular ideal: node maximal ideal fails with a 1-dim Tor witness") {
    PrelogRing P = node();
    Verdict v = is_log_regular_ideal(P, {P.poly().parse("x"), P.poly().parse("y")});
    CHECK(v.status == Status::fails);
    CHECK(v.certificate["witness"]["kind"] == "nonzero tor1 class");
    CHECK(v.certificate["witness"]["dimension"] == 1);
}

TEST_CASE("log regular ideal: log point maximal ideal holds") {
    PrelogRing P = log_point();
    Verdict v = is_log_regular_ideal(P, {P.poly().parse("s"), P.poly().parse("t")});
    CHECK(v.status == Status::holds);
}

TEST_CASE("log regular local rings") {
    CHECK(is_log_regular(log_point()).status == Status::holds);
    CHECK(is_log_regular(node()).status == Status::fails);
    CHECK(is_log_regular(toric_cone()).status == Status::holds);
    CHECK(is_log_regular(cusp()).status == Status::fails);
}

TEST_CASE("kato criterion") {
    Verdict lp = kato_criterion(log_point());
    CHECK(lp.status == Status::holds);
    CHECK(lp.certificate["dim_A"] == 2);
    CHECK(lp.certificate["dim_A_mod_I"] == 0);
    CHECK(lp.certificate["rank_gp"] == 2);

    Verdict nd = kato_criterion(node());
    CHECK(nd.status == Status::fails);
    CHECK(nd.certificate["dim_A"] == 1);
    CHECK(nd.certificate["dim_A_mod_I"].get<int>() + nd.certificate["rank_gp"].get<int>() == 2);

    // trivial monoid on a regular ring reduces to plain regularity
    PrelogRing triv;
    triv.ring = local_ring({"x"}, {});
    triv.monoid = FinMonoid::free_monoid(0);
    CHECK(kato_criterion(triv).status == Status::holds);
}

TEST_CASE("oracle agreement on the named instances") {
    for (auto make : {+[]() { return log_point(); }, +[]() { return node(); },
                      +[]() { return toric_cone(); }, +[]() { return cusp(); }}) {
        PrelogRing P = make();
        CHECK(is_log_regular(P).status == kato_criterion(P).status);
    }
}

TEST_CASE("log complete intersection: direct route") {
    Verdict lp = is_log_complete_intersection_direct(log_point());
    CHECK(lp.status == Status::holds);

    // K[x] with the toric-cone monoid mapped through a point: mu = 3 > 2
    PrelogRing P;
    P.ring = local_ring({"x"}, {});
    FinMonoid m;
    m.gens = {"u", "v", "w"};
    m.relations = {{{1, 0, 1}, {0, 2, 0}}};
    P.monoid = m;
    P.alpha = {P.poly().parse("x"), P.poly().parse("x"), P.poly().parse("x")};
    REQUIRE(validate(P).ok());
    Verdict v = is_log_complete_intersection_direct(P);
    CHECK(v.status == Status::fails);
}

TEST_CASE("log complete intersection: presentation route") {
    PrelogRing Q = affine_line();
    Verdict v = is_log_complete_intersection_presented(Q, {Q.poly().parse("t^2")});
    CHECK(v.status == Status::holds);

    // non-regular base ideal: the node as a quotient of the log point by (xy)
    PrelogRing L = log_point();
    Verdict w = is_log_complete_intersection_presented(L, {L.poly().parse("s*t")});
    CHECK(w.status == Status::holds); // (st) is a regular element, empty preimage
}

TEST_CASE("kummer sufficient smoothness criterion") {
    MonoidHom kummer2{FinMonoid::free_monoid(1), FinMonoid::free_monoid(1), {{2}}};
    CHECK(is_log_smooth_sufficient(kummer2, Field::rationals()).status == Status::holds);
    CHECK(is_log_smooth_sufficient(kummer2, Field::prime(3)).status == Status::holds);
    CHECK(is_log_smooth_sufficient(kummer2, Field::prime(5)).status == Status::holds);
    Verdict bad = is_log_smooth_sufficient(kummer2, Field::prime(2));
    CHECK(bad.status == Status::fails);
    CHECK(bad.certificate["cokernel"]["iso"] == "Z/2");

    // ker = 0, coker = Z: holds in any characteristic
    MonoidHom diag{FinMonoid::free_monoid(1), FinMonoid::free_monoid(2), {{1, 1}}};
    CHECK(is_log_smooth_sufficient(diag, Field::rationals()).status == Status::holds);
    CHECK(is_log_smooth_sufficient(diag, Field::prime(2)).status == Status::holds);

    MonoidHom id{FinMonoid::free_monoid(1), FinMonoid::free_monoid(1), {{1}}};
    CHECK(is_log_smooth_sufficient(id, Field::prime(7)).status == Status::holds);
}

TEST_CASE("smoothness equivalence over the monoid base") {
    MonoidHom id{FinMonoid::free_monoid(1), FinMonoid::free_monoid(1), {{1}}};

    PrelogRing B1; // B = K[N]
    B1.ring = local_ring({"u"}, {});
    B1.monoid = FinMonoid::free_monoid(1);
    B1.alpha = {B1.poly().parse("u")};
    CHECK(smoothness_equivalence(id, B1).status == Status::holds);

    PrelogRing B2; // one extra smooth variable
    B2.ring = local_ring({"u", "z"}, {});
    B2.monoid = FinMonoid::free_monoid(1);
    B2.alpha = {B2.poly().parse("u")};
    CHECK(smoothness_equivalence(id, B2).status == Status::holds);

    PrelogRing B3; // non-reduced fiber
    B3.ring = local_ring({"u", "z"}, {"z^2"});
    B3.monoid = FinMonoid::free_monoid(1);
    B3.alpha = {B3.poly().parse("u")};
    CHECK(smoothness_equivalence(id, B3).status == Status::fails);
}

TEST_CASE("regularity-smoothness crosscheck") {
    Verdict lp = regularity_smoothness_crosscheck(log_point());
    CHECK(lp.status == Status::holds);
    CHECK(lp.certificate["smooth_status"] == "holds");
    CHECK(lp.certificate["log_regular_status"] == "holds");

    Verdict nd = regularity_smoothness_crosscheck(node());
    CHECK(nd.status == Status::holds); // consistent: criterion not applicable
    CHECK(nd.certificate["smooth_status"] == "not-applicable");
    CHECK(nd.certificate["log_regular_status"] == "fails");

    Verdict tc = regularity_smoothness_crosscheck(toric_cone());
    CHECK(tc.status == Status::holds);
    CHECK(tc.certificate["smooth_status"] == "holds");
    CHECK(tc.certificate["log_regular_status"] == "holds");
}

TEST_CASE("fundamental sequence: identity homomorphism") {
    PrelogRing P = affine_line();
    PrelogHom id{P, P, {P.poly().parse("t")}, {{1}}};
    FundamentalReport rep = fundamental_sequence_low_degree(id, {});
    CHECK(rep.dim_omega_mon_k == 0);
    CHECK(rep.dim_omega_ring_k == 0);
    CHECK(rep.dim_x_k == 0);
    CHECK(rep.dim_omega_log_k == 0);
    CHECK(rep.h0_consistent);
    CHECK(rep.surjective_case);
    CHECK(rep.dim_conormal_k == 0);
    CHECK(rep.h1_consistent);
    CHECK(rep.gamma_consistent);
}

TEST_CASE("fundamental sequence: log point quotient to the residue field") {
    PrelogRing L = log_point();
    PrelogRing Q = quotient_prelog(L, {L.poly().parse("s"), L.poly().parse("t")}, 6);
    PrelogHom f{L, Q, {Q.poly().parse("s"), Q.poly().parse("t")}, {{1, 0}, {0, 1}}};
    REQUIRE(validate_hom(f).ok());
    FundamentalReport rep =
        fundamental_sequence_low_degree(f, {L.poly().parse("s"), L.poly().parse("t")});
    CHECK(rep.h0_consistent);
    CHECK(rep.surjective_case);
    CHECK(rep.dim_iisq_k == 2);
    CHECK(rep.dim_gamma == 2);     // Gamma = ker(Z^2 -> 0) (x) k
    CHECK(rep.dim_conormal_k == 2); // matches the H1 closed form
    CHECK(rep.h1_consistent);
    CHECK(rep.gamma_consistent);
}

TEST_CASE("fundamental sequence: free prelog algebra has free H0") {
    PrelogRing A = affine_line();
    PrelogRing B;
    B.ring = local_ring({"t", "x", "y"}, {});
    B.monoid = FinMonoid::free_monoid(2);
    B.alpha = {B.poly().parse("t"), B.poly().parse("y")};
    PrelogHom f{A, B, {B.poly().parse("t")}, {{1, 0}}};
    REQUIRE(validate_hom(f).ok());
    FundamentalReport rep = fundamental_sequence_low_degree(f);
    CHECK(rep.dim_omega_log_k == 2); // free on {x} u {y}
    CHECK(rep.h0_consistent);
    CHECK(!rep.surjective_case);
}

TEST_CASE("certificates replay to their original status") {
    PrelogRing lp = log_point();
    PrelogRing nd = node();

    Verdict v1 = is_log_regular(lp);
    CHECK(replay_certificate(v1.certificate).status == v1.status);

    Verdict v2 = is_log_regular(nd);
    CHECK(replay_certificate(v2.certificate).status == v2.status);

    Verdict v3 = kato_criterion(lp);
    CHECK(replay_certificate(v3.certificate).status == v3.status);

    Verdict v4 = kato_criterion(nd);
    CHECK(replay_certificate(v4.certificate).status == v4.status);

    MonoidHom kummer2{FinMonoid::free_monoid(1), FinMonoid::free_monoid(1), {{2}}};
    Verdict v5 = is_log_smooth_sufficient(kummer2, Field::prime(2));
    CHECK(replay_certificate(v5.certificate).status == v5.status);

    Verdict v6 = regularity_smoothness_crosscheck(lp);
    CHECK(replay_certificate(v6.certificate).status == v6.status);

    Verdict v7 = is_log_complete_intersection_direct(lp);
    CHECK(replay_certificate(v7.certificate).status == v7.status);
}

TEST_CASE("precondition errors surface distinctly") {
    // non-sharp monoid is refused with the normalization hint
    PrelogRing P;
    P.ring = local_ring({"x"}, {});
    P.monoid = localization(FinMonoid::free_monoid(1), {{1}});
    P.alpha = {P.poly().parse("1 + x"), P.poly().parse("1 - x + x^2 - x^3 + x^4")};
    // alpha multiplicativity for s + s' = 0 will fail at this truncation, so
    // validate itself rejects; use a sharper error path instead: torsion gp
    FinMonoid tors;
    tors.gens = {"a", "b"};
    tors.relations = {{{2, 0}, {0, 0}}}; // 2a = 0: gp has torsion
    PrelogRing T;
    T.ring = local_ring({"x"}, {});
    T.monoid = tors;
    T.alpha = {T.poly().parse("0"), T.poly().parse("x")};
    // a is a unit class (2a = 0), so the monoid is not sharp
    CHECK_THROWS_AS(is_log_regular(T), PreconditionError);
}

TEST_CASE("fields beyond Q") {
    CHECK(is_log_regular(log_point(Field::prime(2))).status == Status::holds);
    CHECK(is_log_regular(node(Field::prime(3))).status == Status::fails);
    CHECK(is_log_regular(toric_cone(Field::prime(5))).status == Status::holds);
    CHECK(kato_criterion(log_point(Field::prime(2))).status == Status::holds);
    CHECK(kato_criterion(toric_cone(Field::prime(2))).status == Status::holds);
}

TEST_CASE("tor rigidity on a certified monoid instance") {
    // K[<2,3>]: Tor_1 over K[M] of the localization vanishes; the extra
    // resolution step certifies Tor_2 = 0 as well
    auto R = PresentedRing::make({"u", "v"}, Field::rationals(), {"u^3 - v^2"},
                                 RingMode::Graded);
    auto A = local_ring({"u", "v"}, {"u^3 - v^2"});
    std::vector<Poly> images{A->poly_ring().parse("u"), A->poly_ring().parse("v")};
    std::vector<Poly> iprime{R.parse("u"), R.parse("v")};
    CHECK(tor1_cyclic(R, A, images, iprime).rank == 0);
    CHECK(tor2_cyclic(R, A, images, iprime).rank == 0);
}

TEST_CASE("incomplete preimage yields an indeterminate verdict") {
    PrelogRing P = affine_line();
    RegcheckOptions opt;
    opt.degree_bound = 2;
    Verdict v = is_log_regular_ideal(P, {P.poly().parse("t^3")}, opt);
    CHECK(v.status == Status::indeterminate);
    CHECK(v.certificate.contains("reason"));
    // replay of an indeterminate certificate stays indeterminate
    CHECK(replay_certificate(v.certificate).status == Status::indeterminate);

    opt.degree_bound = 4;
    CHECK(is_log_regular_ideal(P, {P.poly().parse("t^3")}, opt).status == Status::holds);
}

TEST_CASE("cusp fails on the regular-sequence side with a syzygy witness") {
    Verdict v = is_log_regular(cusp());
    CHECK(v.status == Status::fails);
    CHECK(v.certificate["witness"]["kind"] == "non-koszul syzygy");
    CHECK(v.certificate["tor1"]["rank"] == 0); // the Tor obstruction vanishes here
}

TEST_CASE("non-integral monoids are refused") {
    PrelogRing P;
    P.ring = local_ring({"x"}, {"x^2 - x^3"});
    FinMonoid m;
    m.gens = {"a"};
    m.relations = {{{2}, {3}}};
    P.monoid = m;
    P.alpha = {P.poly().parse("x")};
    REQUIRE(validate(P).ok());
    CHECK_THROWS_AS(is_log_regular(P), PreconditionError);
}

TEST_CASE("iterated pointed quotient tower still satisfies the first sequence") {
    PrelogRing L = log_point();
    PrelogRing Q1 = quotient_prelog(L, {L.poly().parse("s")}, 6);
    REQUIRE(Q1.monoid.pointed());
    PrelogRing Q2 = quotient_prelog(Q1, {Q1.poly().parse("t")}, 6);
    REQUIRE(Q2.monoid.absorbing.size() > Q1.monoid.absorbing.size());

    PrelogHom f{L, Q1, {Q1.poly().parse("s"), Q1.poly().parse("t")}, {{1, 0}, {0, 1}}};
    PrelogHom g{Q1, Q2, {Q2.poly().parse("s"), Q2.poly().parse("t")}, {{1, 0}, {0, 1}}};
    REQUIRE(validate_hom(f).ok());
    REQUIRE(validate_hom(g).ok());
    CHECK(check_first_sequence(f, g).status == Status::holds);
}

TEST_CASE("smoothness equivalence over a toric base") {
    FinMonoid m;
    m.gens = {"u", "v", "w"};
    m.relations = {{{1, 0, 1}, {0, 2, 0}}};
    MonoidHom id{m, m, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

    PrelogRing B;
    B.ring = local_ring({"u", "v", "w", "z"}, {"u*w - v^2"});
    B.monoid = m;
    B.alpha = {B.poly().parse("u"), B.poly().parse("v"), B.poly().parse("w")};
    Verdict v = smoothness_equivalence(id, B);
    CHECK(v.status == Status::holds);
    CHECK(v.certificate["dim_B"] == 3);
    CHECK(v.certificate["dim_KN"] == 2);

    PrelogRing Bad;
    Bad.ring = local_ring({"u", "v", "w", "z"}, {"u*w - v^2", "z^2"});
    Bad.monoid = m;
    Bad.alpha = {Bad.poly().parse("u"), Bad.poly().parse("v"), Bad.poly().parse("w")};
    CHECK(smoothness_equivalence(id, Bad).status == Status::fails);
}
