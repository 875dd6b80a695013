#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcyc/errors.hpp"
#include "hopfcyc/presentation_io.hpp"

using namespace hopfcyc;

TEST_CASE("load -> emit -> load is the identity on the table form") {
    for (auto& name : {std::string("z2"), std::string("z3"), std::string("s3"),
                       std::string("point")}) {
        auto H = make_builtin(name);
        std::string text = presentation_to_json(*H);
        auto H2 = parse_presentation(text);
        CHECK(presentation_to_json(*H2) == text);
        // structurally identical: same tables
        TableData a = tabulate(*H), b = tabulate(*H2);
        CHECK(a.mul == b.mul);
        CHECK(a.comul == b.comul);
        CHECK(a.counit == b.counit);
        CHECK(a.antipode == b.antipode);
        CHECK_NOTHROW(H2->check_hopf_axioms(0));
    }
}

TEST_CASE("parameter kinds round-trip") {
    auto U = uq_sl2(Rat(3) / 2, 2);
    auto U2 = parse_presentation(presentation_to_json(*U));
    CHECK(uq_data_of(*U2) != nullptr);
    CHECK(uq_data_of(*U2)->q == Rat(3) / 2);

    auto L = make_builtin("lie-heisenberg3");
    auto L2 = parse_presentation(presentation_to_json(*L));
    REQUIRE(lie_data_of(*L2) != nullptr);
    CHECK(lie_data_of(*L2)->dim == 3);
    CHECK_NOTHROW(L2->check_hopf_axioms(3));
}

TEST_CASE("corrupted structure constants are rejected with the failing triple named") {
    std::string bad_lie = R"({
      "kind": "lie", "basis": ["e1","e2","e3"],
      "brackets": [ {"i":0,"j":1,"terms":[[0,"1"]]},
                    {"i":0,"j":2,"terms":[[1,"1"]]} ]
    })";
    try {
        parse_presentation(bad_lie);
        FAIL("expected JacobiFailure");
    } catch (const JacobiFailure& e) {
        CHECK(std::string(e.what()).find("(0,1,2)") != std::string::npos);
    }
    std::string bad_group = R"({"kind":"group","elements":["e","g"],"table":[[0,1],[1,1]]})";
    CHECK_THROWS_AS(parse_presentation(bad_group), InvalidTable);
}

TEST_CASE("malformed input is rejected with precise schema errors") {
    CHECK_THROWS_AS(parse_presentation("{"), SchemaError);
    CHECK_THROWS_AS(parse_presentation(R"({"kind":"nope"})"), SchemaError);
    CHECK_THROWS_AS(parse_presentation(R"({"kind":"uq_sl2","q":"1/0"})"), SchemaError);
    CHECK_THROWS_AS(parse_presentation(R"({"kind":"uq_sl2","q":"1"})"), BadParameter);
}

TEST_CASE("key and character lookup by name") {
    auto Q = uq_sl2(Rat(3) / 2, 1);
    CHECK(key_by_name(*Q, "K") == Key{0, 0, 1});
    CHECK(key_by_name(*Q, "E") == Key{1, 0, 0});
    CHECK(key_name(*Q, Key{0, 1, 0}) == "KF");
    auto G = symmetric_group_s3();
    CHECK(key_by_name(*G, "r").has_value());
    auto U = make_builtin("lie-abelian2");
    Character d = character_by_name(*U, "lie:1,0");
    CHECK(U->character(d, Key{1, 0}) == 1);
    CHECK(U->character(d, Key{0, 1}) == 0);
    CHECK(key_by_name(*U, "(1,1)") == Key{1, 1});
}

#include "hopfcyc/cohomology.hpp"

TEST_CASE("Z/2 builtin and its table-file form produce identical reports") {
    auto builtin = cyclic_group_algebra(2);
    auto table = parse_presentation(presentation_to_json(*builtin));
    auto rep = [](HopfPtr H) {
        auto M = CocyclicModule::sharp_delta(H, Character::counit(), 0);
        return cyclic_and_periodic(M, 3).report.to_json();
    };
    CHECK(rep(builtin) == rep(table));
}
