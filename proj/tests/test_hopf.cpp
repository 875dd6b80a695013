#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcyc/builtins.hpp"
#include "hopfcyc/errors.hpp"
#include "test_util.hpp"

using namespace hopfcyc;

TEST_CASE("Hopf axioms hold on every builtin") {
    for (auto& [name, D] : std::vector<std::pair<std::string, int>>{
             {"point", 0}, {"z2", 0}, {"z3", 0}, {"s3", 0},
             {"sv2", 3},   {"lie-abelian2", 3}, {"lie-heisenberg3", 3}, {"lie-sl2", 3}}) {
        auto H = make_builtin(name);
        CHECK_NOTHROW(H->check_hopf_axioms(D));
    }
    auto U = uq_sl2(Rat(3) / 2, 1);
    CHECK_NOTHROW(U->check_hopf_axioms(2));
}

TEST_CASE("group algebra of Z/2: S = Id, Delta(g) = g x g") {
    auto H = cyclic_group_algebra(2);
    Key g{1};
    CHECK(H->antipode(g) == elem_of(g));
    CHECK(H->comul(g) == PairElem{{{g, g}, Rat(1)}});
}

TEST_CASE("twisted antipode basics") {
    auto H = cyclic_group_algebra(3);
    Character eps = Character::counit();
    // S_delta(1) = 1
    CHECK(H->twisted_antipode(eps, H->unit()) == elem_of(H->unit()));
    // S_eps(g) = g^{-1} = g^2
    CHECK(H->twisted_antipode(eps, Key{1}) == elem_of(Key{2}));

    // U(g), v a Lie generator: S_delta(v) = -v + delta(v) 1
    auto U = enveloping(LieAlgebra::heisenberg3());
    Character delta = Character::lie("d", {Rat(5), Rat(0), Rat(0)});
    U->check_character(delta, 2);
    Key v{1, 0, 0};
    Elem expect = elem_of(U->unit());
    add_term(expect, v, Rat(-1));
    expect[U->unit()] = Rat(5);
    CHECK(U->twisted_antipode(delta, v) == expect);
}

TEST_CASE("twisted identities (7)-(11)") {
    CHECK(check_twisted_identities(*symmetric_group_s3(), Character::counit(), 0).ok);
    CHECK(check_twisted_identities(*uq_sl2(Rat(3) / 2, 1), Character::counit(), 2).ok);
    auto U = enveloping(LieAlgebra::sl2());
    CHECK(check_twisted_identities(*U, Character::counit(), 3).ok);
}

TEST_CASE("corrupted product table breaks identity (7)") {
    TableData d = tabulate(*cyclic_group_algebra(2));
    d.mul[1][1] = {{1, Rat(1)}};  // g*g := g (wrong)
    auto B = table_presentation(d);
    CHECK_THROWS_AS(check_twisted_identities(*B, Character::counit(), 0), IdentityFailure);
}

TEST_CASE("involutivity and modular pairs") {
    Character eps = Character::counit();
    CHECK(check_involutive(*symmetric_group_s3(), eps, 0).holds);
    auto U = enveloping(LieAlgebra::heisenberg3());
    Character delta = Character::lie("d", {Rat(1), Rat(0), Rat(0)});
    CHECK(check_involutive(*U, delta, 3).holds);
    CHECK_NOTHROW(check_modular_pair(*U, delta, U->unit(), 2));

    auto Q = uq_sl2(Rat(3) / 2, 1);
    auto rep = check_involutive(*Q, eps, 2);
    CHECK(!rep.holds);
    Key K{0, 0, 1};
    CHECK_NOTHROW(check_modular_pair(*Q, eps, K, 2));
    Key K2{0, 0, 2};
    CHECK_THROWS_AS(check_modular_pair(*Q, eps, K2, 2), NotModular);
}

TEST_CASE("U_q(sl2) normal ordering: F E = E F - (K - K^-1)/(q - q^-1)") {
    Rat q = Rat(3) / 2;
    auto Q = uq_sl2(q, 2);
    Elem E = elem_of(Key{1, 0, 0});
    Elem F = Q->mul(Key{0, 0, -1}, Key{0, 1, 0});  // F = K^{-1} (KF)
    Elem fe = Q->mul_elem(F, E);
    Elem ef = Q->mul_elem(E, F);
    Rat c = Rat(1) / (q - Rat(1) / q);
    Elem expect = ef;
    add_term(expect, Key{0, 0, 1}, -c);
    add_term(expect, Key{0, 0, -1}, c);
    CHECK(fe == expect);
    // S^2(h) = K h K^-1 spot check on E: S^2(E) = q^2 E
    Elem s2 = Q->antipode_elem(Q->antipode(Key{1, 0, 0}));
    CHECK(s2 == scaled(elem_of(Key{1, 0, 0}), q * q));
}

TEST_CASE("enveloping of an abelian algebra is the symmetric product") {
    auto S = symmetric_algebra(2);
    CHECK(S->mul(Key{1, 0}, Key{0, 1}) == elem_of(Key{1, 1}));
    CHECK(S->mul(Key{0, 1}, Key{1, 0}) == elem_of(Key{1, 1}));
    // comul is weight-homogeneous exactly
    for (auto& k : S->basis(3))
        for (auto& [pq, c] : S->comul(k)) {
            (void)c;
            CHECK(S->weight(pq.first) + S->weight(pq.second) == S->weight(k));
        }
}

TEST_CASE("PBW multiplication is associative on sampled keys") {
    testutil::Rng rng(42);
    for (auto& gname : {std::string("lie-heisenberg3"), std::string("lie-sl2")}) {
        auto U = make_builtin(gname);
        auto keys = U->basis(2);
        for (int trial = 0; trial < 25; ++trial) {
            const Key& a = keys[rng.range(0, (long long)keys.size() - 1)];
            const Key& b = keys[rng.range(0, (long long)keys.size() - 1)];
            const Key& c = keys[rng.range(0, (long long)keys.size() - 1)];
            Elem lhs = U->mul_elem(U->mul(a, b), elem_of(c));
            Elem rhs = U->mul_elem(elem_of(a), U->mul(b, c));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("U_q(sl2) multiplication is associative on sampled keys") {
    testutil::Rng rng(43);
    auto Q = uq_sl2(Rat(3) / 2, 1);
    auto keys = Q->basis(2);
    for (int trial = 0; trial < 20; ++trial) {
        const Key& a = keys[rng.range(0, (long long)keys.size() - 1)];
        const Key& b = keys[rng.range(0, (long long)keys.size() - 1)];
        const Key& c = keys[rng.range(0, (long long)keys.size() - 1)];
        CHECK(Q->mul_elem(Q->mul(a, b), elem_of(c)) == Q->mul_elem(elem_of(a), Q->mul(b, c)));
    }
}

TEST_CASE("group table validation") {
    CHECK_THROWS_AS(group_algebra({"a", "b"}, {{0, 1}, {1, 1}}), InvalidTable);
    CHECK_THROWS_AS(group_algebra({}, {}), InvalidTable);
    LieAlgebra bad = LieAlgebra::abelian(3);
    bad.c[0][1] = {{0, Rat(1)}};  // [e1,e2] = e1, [e1,e3] = e2: Jacobi fails
    bad.c[0][2] = {{1, Rat(1)}};
    CHECK_THROWS_AS(enveloping(bad), JacobiFailure);
    CHECK_THROWS_AS(uq_sl2(Rat(1), 1), BadParameter);
}

TEST_CASE("random rational combinations also satisfy linear identities") {
    // redundancy for the linear extension of S_delta on a seeded sample
    testutil::Rng rng(20240818);
    auto U = enveloping(LieAlgebra::sl2());
    Character eps = Character::counit();
    auto keys = U->basis(3);
    for (int trial = 0; trial < 5; ++trial) {
        Elem x;
        for (int t = 0; t < 4; ++t)
            add_term(x, keys[rng.range(0, (long long)keys.size() - 1)],
                     Rat((long)rng.range(-3, 3)));
        // eps(S_eps(x)) = eps(x)
        Rat lhs(0);
        for (auto& [k, c] : U->twisted_antipode_elem(eps, x)) lhs += c * U->counit(k);
        Rat rhs(0);
        for (auto& [k, c] : x) rhs += c * U->counit(k);
        CHECK(lhs == rhs);
    }
}
