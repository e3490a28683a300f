#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wu/finring.hpp"

#include <algorithm>
#include <set>

using namespace wu::ring;

namespace {

bool has_ideal(const std::vector<ElementSet>& ideals, const ElementSet& want) {
    return std::find(ideals.begin(), ideals.end(), want) != ideals.end();
}

// t2f2 encodes [[a,b],[0,d]] as a + 2b + 4d.
// kxyf2 encodes c0 + c1 x + c2 x^2 + c3 y + c4 y^2 as a 5-bit index.

}  // namespace

TEST_CASE("ring construction and validation") {
    FiniteRing z4 = preset("z4");
    CHECK(z4.size() == 4);
    CHECK(z4.zero() == 0);
    CHECK(z4.one() == 1);
    CHECK(z4.add(3, 2) == 1);
    CHECK(z4.mul(2, 2) == 0);
    CHECK(z4.neg(1) == 3);
    CHECK(z4.commutative());
    CHECK(z4.element_name(2) == "2");

    // xor as multiplication breaks distributivity
    std::vector<std::vector<int>> add = {{0, 1}, {1, 0}};
    CHECK_THROWS_WITH_AS(FiniteRing(add, {{0, 1}, {1, 0}}),
                         "right distributivity fails", RingAxiomError);
    CHECK_THROWS_WITH_AS(FiniteRing(add, {{0, 0}, {0, 0}}),
                         "ring has no multiplicative identity", RingAxiomError);
    CHECK_THROWS_WITH_AS(FiniteRing({{0, 0}, {0, 0}}, {{0, 1}, {1, 0}}),
                         "addition has no identity element", RingAxiomError);
    CHECK_THROWS_AS(FiniteRing({{0, 5}, {1, 0}}, {{0, 0}, {0, 1}}),
                    RingAxiomError);
}

TEST_CASE("presets") {
    for (const auto& name : preset_names()) {
        FiniteRing r = preset(name);
        CHECK(r.name() == name);
    }
    CHECK(preset("z6").size() == 6);
    CHECK(preset("f4").size() == 4);
    CHECK(preset("m2f2").size() == 16);
    CHECK(preset("t2f2").size() == 8);
    CHECK(preset("struct3f2").size() == 8);
    CHECK(preset("kxyf2").size() == 32);
    CHECK(preset("z12").size() == 12);
    CHECK_FALSE(preset("m2f2").commutative());
    CHECK_FALSE(preset("t2f2").commutative());
    CHECK(preset("struct3f2").commutative());
    CHECK(preset("kxyf2").commutative());
    CHECK_THROWS_AS(preset("nope"), std::invalid_argument);
    // f4 really is a field: every nonzero element is invertible
    FiniteRing f4 = preset("f4");
    for (int a = 1; a < 4; ++a) {
        bool invertible = false;
        for (int b = 1; b < 4; ++b)
            if (f4.mul(a, b) == f4.one()) invertible = true;
        CHECK(invertible);
    }
}

TEST_CASE("opposite ring") {
    FiniteRing t = preset("t2f2");
    FiniteRing op = t.opposite();
    CHECK(op.mul(1, 2) == t.mul(2, 1));
    CHECK(op.size() == t.size());
    // opposite of a commutative ring multiplies identically
    FiniteRing z6 = preset("z6");
    FiniteRing z6op = z6.opposite();
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) CHECK(z6op.mul(a, b) == z6.mul(a, b));
}

TEST_CASE("right ideal enumeration") {
    // z6: divisor lattice {0, 2Z6, 3Z6, R}
    auto z6_ideals = enumerate_right_ideals(preset("z6"));
    CHECK(z6_ideals.size() == 4);
    CHECK(has_ideal(z6_ideals, {0, 2, 4}));
    CHECK(has_ideal(z6_ideals, {0, 3}));

    // z8: chain of four
    auto z8_ideals = enumerate_right_ideals(preset("z8"));
    CHECK(z8_ideals.size() == 4);

    // t2f2: seven right ideals, with the two maximal ones of order four
    auto t_ideals = enumerate_right_ideals(preset("t2f2"));
    CHECK(t_ideals.size() == 7);
    CHECK(has_ideal(t_ideals, {0, 1, 2, 3}));  // [[*,*],[0,0]]
    CHECK(has_ideal(t_ideals, {0, 2, 4, 6}));  // [[0,*],[0,*]]

    // m2f2: zero, three minimal right ideals, whole
    CHECK(enumerate_right_ideals(preset("m2f2")).size() == 5);

    // struct3f2: zero, three lines in the maximal ideal, the maximal, whole
    CHECK(enumerate_right_ideals(preset("struct3f2")).size() == 6);

    // every returned set is additively closed and right-stable
    FiniteRing k = preset("kxyf2");
    for (const auto& ideal : enumerate_right_ideals(k)) {
        std::set<int> s(ideal.begin(), ideal.end());
        for (int x : ideal) {
            for (int y : ideal) CHECK(s.count(k.add(x, y)));
            for (int r = 0; r < k.size(); ++r) CHECK(s.count(k.mul(x, r)));
        }
    }

    CHECK_THROWS_AS(enumerate_right_ideals(preset("z125"), 64), CapExceeded);
}

TEST_CASE("left ideal enumeration") {
    // left and right counts coincide for t2f2 (by inspection of the tables)
    CHECK(enumerate_left_ideals(preset("t2f2")).size() == 7);
    FiniteRing t = preset("t2f2");
    for (const auto& ideal : enumerate_left_ideals(t)) {
        std::set<int> s(ideal.begin(), ideal.end());
        for (int x : ideal)
            for (int r = 0; r < t.size(); ++r) CHECK(s.count(t.mul(r, x)));
    }
}

TEST_CASE("right module monomorphism search") {
    FiniteRing s3 = preset("struct3f2");
    // the two corner lines embed in each other
    ElementSet i1 = {0, 2}, i2 = {0, 4};
    CHECK(exists_right_module_mono(s3, i1, i2).has_value());
    CHECK(exists_right_module_mono(s3, i2, i1).has_value());

    // zero ideal embeds anywhere
    CHECK(exists_right_module_mono(s3, {0}, i1).has_value());

    // t2f2: the two maximal right ideals fail in both directions
    FiniteRing t = preset("t2f2");
    CHECK_FALSE(exists_right_module_mono(t, {0, 1, 2, 3}, {0, 2, 4, 6}));
    CHECK_FALSE(exists_right_module_mono(t, {0, 2, 4, 6}, {0, 1, 2, 3}));
    // the annihilator filter alone rules this direction out
    auto ann_i = right_annihilator(t, {0, 1, 2, 3});
    auto ann_j = right_annihilator(t, {0, 2, 4, 6});
    CHECK_FALSE(std::includes(ann_i.begin(), ann_i.end(), ann_j.begin(),
                              ann_j.end()));

    // witnesses expand to verified injective linear maps
    RightModule reg = RightModule::regular(s3);
    Submodule m{&reg, {0, 2, 4, 6}};  // the maximal ideal of struct3f2
    Submodule whole = whole_module(reg);
    auto w = module_mono(m, whole);
    REQUIRE(w.has_value());
    CHECK(expand_module_mono(m, whole, *w).has_value());
    CHECK_FALSE(expand_module_mono(m, whole, ModuleMono{{2, 1}}).has_value());
}

TEST_CASE("weak uniseriality of the preset rings") {
    CHECK_FALSE(is_right_weakly_uniserial(preset("z6")).weakly_uniserial);
    CHECK_FALSE(is_left_weakly_uniserial(preset("z6")).weakly_uniserial);
    CHECK(is_right_weakly_uniserial(preset("z8")).weakly_uniserial);
    CHECK(is_right_weakly_uniserial(preset("z4")).weakly_uniserial);
    CHECK(is_right_weakly_uniserial(preset("struct3f2")).weakly_uniserial);
    CHECK(is_left_weakly_uniserial(preset("struct3f2")).weakly_uniserial);
    CHECK(is_right_weakly_uniserial(preset("m2f2")).weakly_uniserial);
    CHECK(is_left_weakly_uniserial(preset("m2f2")).weakly_uniserial);
    CHECK_FALSE(is_right_weakly_uniserial(preset("t2f2")).weakly_uniserial);
    CHECK_FALSE(is_left_weakly_uniserial(preset("t2f2")).weakly_uniserial);

    auto z6v = is_right_weakly_uniserial(preset("z6"));
    REQUIRE(z6v.witness.has_value());
    CHECK(z6v.witness->first == ElementSet{0, 2, 4});
    CHECK(z6v.witness->second == ElementSet{0, 3});

    // kxyf2 fails with the (xR, yR) witness
    auto kv = is_right_weakly_uniserial(preset("kxyf2"));
    CHECK_FALSE(kv.weakly_uniserial);
    REQUIRE(kv.witness.has_value());
    CHECK(kv.witness->first == ElementSet{0, 2, 4, 6});     // x, x^2 span
    CHECK(kv.witness->second == ElementSet{0, 8, 16, 24});  // y, y^2 span
}

TEST_CASE("central idempotents") {
    FiniteRing z6 = preset("z6");
    CHECK(central_idempotents(z6) == std::vector<int>{0, 1, 3, 4});
    CHECK(central_idempotents(preset("z4")) == std::vector<int>{0, 1});
    // the identity matrix encodes as 1 + 8 = 9
    CHECK(central_idempotents(preset("m2f2")) == std::vector<int>{0, 9});
    CHECK(central_idempotents(preset("m2f2"))[1] == preset("m2f2").one());
}

TEST_CASE("radical, socle, and structural predicates") {
    FiniteRing z4 = preset("z4");
    CHECK(jacobson_radical(z4) == ElementSet{0, 2});
    CHECK(is_local(z4));
    CHECK(socle_right(z4) == ElementSet{0, 2});

    CHECK(jacobson_radical(preset("m2f2")) == ElementSet{0});
    CHECK_FALSE(is_local(preset("z6")));
    CHECK(is_local(preset("z8")));
    CHECK(is_local(preset("struct3f2")));
    CHECK(is_local(preset("kxyf2")));
    CHECK_FALSE(is_local(preset("t2f2")));
    CHECK_FALSE(is_local(preset("m2f2")));

    CHECK_FALSE(is_prime(preset("z6")));
    CHECK(is_semiprime(preset("z6")));
    CHECK(is_prime(preset("f5")));
    CHECK(is_prime(preset("m2f2")));
    CHECK_FALSE(is_semiprime(preset("z4")));

    CHECK(is_right_uniserial(preset("z8")));
    CHECK(is_left_uniserial(preset("z8")));
    CHECK_FALSE(is_right_uniserial(preset("t2f2")));
    CHECK_FALSE(is_right_uniserial(preset("z6")));
    CHECK_FALSE(is_right_uniserial(preset("struct3f2")));

    CHECK(is_kasch_right(preset("z4")));
    CHECK(is_kasch_right(preset("struct3f2")));
    CHECK(is_kasch_right(preset("kxyf2")));
    CHECK_FALSE(is_kasch_right(preset("t2f2")));
    CHECK(is_kasch_right(preset("z6")));
}

TEST_CASE("rings over which every module is weakly uniserial") {
    CHECK(every_module_weakly_uniserial(preset("m2f2")));
    CHECK(every_module_weakly_uniserial(preset("f5")));
    CHECK(every_module_weakly_uniserial(preset("f4")));
    CHECK_FALSE(every_module_weakly_uniserial(preset("z4")));
    CHECK_FALSE(every_module_weakly_uniserial(preset("z6")));
    CHECK_FALSE(every_module_weakly_uniserial(preset("z8")));
    CHECK_FALSE(every_module_weakly_uniserial(preset("t2f2")));
    CHECK_FALSE(every_module_weakly_uniserial(preset("struct3f2")));
}

TEST_CASE("two-generated counterexample search") {
    FiniteRing z4 = preset("z4");
    auto w = check_2generated_counterexample(z4);
    REQUIRE(w.has_value());
    // a cyclic order-4 submodule against 2R + 2R
    std::vector<std::pair<int, int>> diag_component = {
        {0, 0}, {0, 1}, {0, 2}, {0, 3}};
    std::vector<std::pair<int, int>> twotwo = {{0, 0}, {0, 2}, {2, 0}, {2, 2}};
    CHECK(w->first == diag_component);
    CHECK(w->second == twotwo);

    CHECK_FALSE(check_2generated_counterexample(preset("m2f2")).has_value());
    CHECK_FALSE(check_2generated_counterexample(preset("f2")).has_value());
    CHECK_THROWS_AS(check_2generated_counterexample(preset("kxyf2")),
                    CapExceeded);
}

TEST_CASE("quotient modules") {
    FiniteRing z4 = preset("z4");
    RightModule reg = RightModule::regular(z4);
    RightModule q = RightModule::quotient(reg, {0, 2});
    CHECK(q.size() == 2);
    CHECK(q.zero() == 0);
    CHECK(q.add(1, 1) == 0);
    CHECK(q.act(1, 3) == 1);
    CHECK_THROWS_AS(RightModule::quotient(reg, {0, 1}), std::invalid_argument);
}

TEST_CASE("submodule machinery on the direct square") {
    FiniteRing f2 = preset("f2");
    RightModule m2 = RightModule::direct_square(f2);
    auto subs = enumerate_submodules(m2);
    CHECK(subs.size() == 5);  // subspaces of F_2^2
    for (const auto& a : subs)
        for (const auto& b : subs)
            CHECK((module_mono(a, b) || module_mono(b, a)));
}
