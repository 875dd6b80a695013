#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcyc/builtins.hpp"
#include "hopfcyc/errors.hpp"
#include "hopfcyc/tensor_x.hpp"

using namespace hopfcyc;

TEST_CASE("trivial module: assemblies agree and H^0 = Q on the window") {
    auto P = one_grouplike();
    auto rep = tensor_x_complex(trivial_module(P), Character::counit(), 4);
    CHECK(rep.assemblies_agree);
    CHECK(rep.h0_dim == 1);
}

TEST_CASE("regular representation of C[Z/2] at word length <= 3: assemblies agree") {
    auto H = cyclic_group_algebra(2);
    auto rep = tensor_x_complex(regular_module(H), Character::counit(), 3);
    CHECK(rep.assemblies_agree);
    // localization by the free Z/2 translation action halves the word count
    CHECK(rep.x0_dim > 0);
    CHECK(rep.x1_dim > 0);
}

TEST_CASE("S(V) acting trivially: assemblies agree with a nontrivial delta filter") {
    auto S = symmetric_algebra(2);
    auto rep = tensor_x_complex(trivial_module(S, 2), Character::counit(), 3);
    CHECK(rep.assemblies_agree);
}

TEST_CASE("twisted X-complex for U_q(sl2) on the 2-dimensional simple module") {
    auto Q = uq_sl2(Rat(3) / 2, 1);
    auto V = uq_simple2(Q);
    CHECK_NOTHROW(V.check_module_axioms(1));
    auto rep = tensor_x_twisted(V, Character::counit(), Key{0, 0, 1}, 3);
    CHECK(rep.bsigma_d_zero);
    CHECK(rep.d_bsigma_zero);
}

TEST_CASE("untwisted route refuses non-involutive S_delta") {
    auto Q = uq_sl2(Rat(3) / 2, 1);
    CHECK_THROWS_AS(tensor_x_complex(uq_simple2(Q), Character::counit(), 2), NotInvolutive);
}
