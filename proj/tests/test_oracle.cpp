#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wu/oracle.hpp"

#include <map>

using namespace wu;
using namespace wu::oracle;

namespace {

ConcreteGroup group(std::initializer_list<int> orders) {
    return ConcreteGroup(std::vector<int>(orders));
}

bool valid_witness(const Subgroup& from, const Subgroup& into,
                   const Monomorphism& m) {
    return expand_monomorphism(from, into, m).has_value();
}

}  // namespace

TEST_CASE("concrete group tables") {
    ConcreteGroup g = group({2, 4});
    CHECK(g.size() == 8);
    CHECK(g.add(1, 3) == 0);            // (0,1)+(0,3)=(0,0)
    CHECK(g.add(5, 6) == 3);            // (1,1)+(1,2)=(0,3)
    CHECK(g.neg(1) == 3);
    CHECK(g.element_order(1) == 4);
    CHECK(g.element_order(4) == 2);
    CHECK(g.element_order(5) == 4);
    CHECK(g.show(5) == "(1,1)");
    ConcreteGroup trivial = group({});
    CHECK(trivial.size() == 1);
    CHECK_THROWS_AS(group({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ConcreteGroup({257}, 256), CapExceeded);
}

TEST_CASE("from_fg uses ascending factor order") {
    ConcreteGroup g = ConcreteGroup::from_fg(parse_module("Z/2 + Z/4").fg());
    CHECK(g.cyclic_orders() == std::vector<int>{2, 4});
    CHECK(ConcreteGroup::from_fg(parse_module("Z/6").fg()).cyclic_orders() ==
          std::vector<int>{2, 3});
    CHECK_THROWS_AS(ConcreteGroup::from_fg(parse_module("Z").fg()),
                    std::invalid_argument);
}

TEST_CASE("subgroup counts") {
    CHECK(enumerate_subgroups(group({4})).size() == 3);
    CHECK(enumerate_subgroups(group({2, 2})).size() == 5);
    // hand listing: trivial, three order-2, three order-4, whole
    CHECK(enumerate_subgroups(group({2, 4})).size() == 8);
    CHECK(enumerate_subgroups(group({})).size() == 1);
    // subspace counts of F_2^6 and F_3^3: sums of Gaussian binomials
    CHECK(enumerate_subgroups(group({2, 2, 2, 2, 2, 2})).size() == 2825);
    CHECK(enumerate_subgroups(group({3, 3, 3})).size() == 28);
    // every enumerated set is closed and deduplicated
    ConcreteGroup g = group({2, 4});
    auto subs = enumerate_subgroups(g);
    for (const auto& h : subs) {
        CHECK(closure(g, h.elements).elements == h.elements);
        CHECK(h.contains(0));
    }
}

TEST_CASE("isomorphism type by order counting") {
    ConcreteGroup g = group({2, 4});
    CHECK(isomorphism_type(g) == parse_module("Z/2 + Z/4").fg());
    CHECK(isomorphism_type(group({12})) == parse_module("Z/12").fg());
    CHECK(isomorphism_type(group({2, 2, 3})) ==
          parse_module("Z/2 + Z/2 + Z/3").fg());
    // subgroup generated by (1,2) in Z/2+Z/4 is cyclic of order 2... check a
    // diagonal of order 4 instead
    auto diag = closure(g, {5});  // (1,1)
    CHECK(isomorphism_type(diag) == parse_module("Z/4").fg());
}

TEST_CASE("monomorphism search examples") {
    ConcreteGroup z4 = group({4});
    ConcreteGroup klein = group({2, 2});
    CHECK_FALSE(exists_monomorphism(z4, klein).has_value());

    ConcreteGroup trivial = group({});
    auto zero_map = exists_monomorphism(trivial, z4);
    REQUIRE(zero_map.has_value());
    CHECK(zero_map->generator_images.empty());

    ConcreteGroup k = group({4, 2});
    auto w = exists_monomorphism(whole_group(klein), whole_group(k));
    REQUIRE(w.has_value());
    CHECK(valid_witness(whole_group(klein), whole_group(k), *w));
}

TEST_CASE("expand_monomorphism rejects invalid witnesses") {
    ConcreteGroup klein = group({2, 2});
    ConcreteGroup k = group({4, 2});
    // sending both generators to the same image is not injective
    Monomorphism bad{{{1, 1}, {2, 1}}};
    CHECK_FALSE(expand_monomorphism(whole_group(klein), whole_group(k), bad)
                    .has_value());
    // sending an order-2 generator to an order-4 element is not a hom
    Monomorphism illtyped{{{1, 2}}};
    CHECK_FALSE(
        expand_monomorphism(whole_group(klein), whole_group(k), illtyped)
            .has_value());
}

TEST_CASE("monomorphism relation is reflexive and transitive") {
    ConcreteGroup g = group({2, 4});
    auto subs = enumerate_subgroups(g);
    for (const auto& a : subs) {
        auto self = exists_monomorphism(a, a);
        REQUIRE(self.has_value());
        CHECK(valid_witness(a, a, *self));
    }
    for (const auto& a : subs)
        for (const auto& b : subs)
            for (const auto& c : subs) {
                auto ab = exists_monomorphism(a, b);
                auto bc = exists_monomorphism(b, c);
                if (!ab || !bc) continue;
                CHECK(exists_monomorphism(a, c).has_value());
                // composing the expanded witnesses gives an injection a -> c
                auto fab = expand_monomorphism(a, b, *ab);
                auto fbc = expand_monomorphism(b, c, *bc);
                REQUIRE(fab.has_value());
                REQUIRE(fbc.has_value());
                std::map<int, int> mid(fbc->begin(), fbc->end());
                std::set<int> images;
                for (auto [x, y] : *fab) images.insert(mid.at(y));
                CHECK(images.size() == static_cast<size_t>(a.size()));
            }
}

TEST_CASE("mutual embedding with equal order is isomorphism") {
    ConcreteGroup g = group({2, 4});
    auto subs = enumerate_subgroups(g);
    for (const auto& a : subs)
        for (const auto& b : subs) {
            if (a.size() != b.size()) continue;
            auto ab = exists_monomorphism(a, b);
            auto ba = exists_monomorphism(b, a);
            if (ab && ba) {
                // witness maps are then bijections, i.e. isomorphisms
                auto full = expand_monomorphism(a, b, *ab);
                REQUIRE(full.has_value());
                std::set<int> images;
                for (auto [x, y] : *full) images.insert(y);
                CHECK(images.size() == static_cast<size_t>(a.size()));
                CHECK(isomorphism_type(a) == isomorphism_type(b));
            }
        }
}

TEST_CASE("weak uniseriality oracle verdicts") {
    CHECK(is_weakly_uniserial_oracle(group({8})).weakly_uniserial);
    CHECK(is_weakly_uniserial_oracle(group({2, 2, 2})).weakly_uniserial);
    CHECK(is_weakly_uniserial_oracle(group({})).weakly_uniserial);

    // witness subgroups borrow the group, so it must outlive them
    ConcreteGroup m = group({2, 4});
    auto bad = is_weakly_uniserial_oracle(m);
    CHECK_FALSE(bad.weakly_uniserial);
    REQUIRE(bad.witness.has_value());
    // minimal witness: the Z/4 inside against Z/2 + 2(Z/4)
    CHECK(bad.witness->first.elements == std::vector<int>{0, 1, 2, 3});
    CHECK(bad.witness->second.elements == std::vector<int>{0, 2, 4, 6});
    CHECK_FALSE(
        exists_monomorphism(bad.witness->first, bad.witness->second).has_value());
    CHECK_FALSE(
        exists_monomorphism(bad.witness->second, bad.witness->first).has_value());
}

TEST_CASE("associated primes") {
    CHECK(associated_primes(group({12})) == std::set<long long>{2, 3});
    CHECK(associated_primes(group({2, 2})) == std::set<long long>{2});
    CHECK(associated_primes(group({})).empty());
    CHECK(associated_primes(group({2, 3, 5})) == std::set<long long>{2, 3, 5});
}

TEST_CASE("prime modules") {
    ConcreteGroup g = group({4});
    auto subs = enumerate_subgroups(g);
    // {0,2} is a prime module, Z/4 itself is not (annihilators 2Z vs 4Z)
    CHECK(is_prime_module(subs[1]));
    CHECK_FALSE(is_prime_module(subs[2]));
    CHECK_FALSE(is_prime_module(subs[0]));
}

TEST_CASE("socle and essentiality") {
    CHECK(socle_is_essential(group({4})));
    CHECK(socle_is_essential(group({2, 3})));
    CHECK(socle_is_essential(group({9, 3})));

    ConcreteGroup g = group({2, 3});
    CHECK(socle(g).size() == 6);  // semisimple group equals its socle
    // the Z/2 line misses the Z/3 line, so it is not essential
    auto line2 = closure(g, {3});  // element (1,0)
    CHECK(line2.size() == 2);
    CHECK_FALSE(is_essential(line2, g));
    CHECK(is_essential(whole_group(g), g));

    ConcreteGroup h = group({4});
    CHECK(socle(h).elements == std::vector<int>{0, 2});
    CHECK(is_essential(socle(h), h));
}
