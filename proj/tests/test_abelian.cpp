#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wu/abelian.hpp"

#include <random>

using namespace wu;

namespace {

// Independent oracle for the cokernel order of a square nonsingular relation
// matrix: |Z^k / A Z^k| = |det A|. Cofactor expansion, test-scale only.
long long det(const std::vector<std::vector<long long>>& a) {
    size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    long long d = 0;
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<long long>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<long long> row;
            for (size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(a[i][j]);
            minor.push_back(std::move(row));
        }
        long long term = a[0][c] * det(minor);
        d += (c % 2 == 0) ? term : -term;
    }
    return d;
}

FgZModule random_module(std::mt19937& rng) {
    std::uniform_int_distribution<int> rank(0, 3), nparts(0, 3), part(1, 4);
    const long long primes[] = {2, 3, 5, 7};
    std::map<long long, Partition> t;
    for (long long p : primes) {
        std::vector<int> parts;
        for (int i = nparts(rng); i > 0; --i) parts.push_back(part(rng));
        if (!parts.empty()) t.emplace(p, Partition(parts));
    }
    return FgZModule(rank(rng), std::move(t));
}

}  // namespace

TEST_CASE("partition canonical form") {
    Partition p({1, 3, 2});
    CHECK(p.parts() == std::vector<int>{3, 2, 1});
    CHECK(p.part(0) == 3);
    CHECK(p.part(5) == 0);
    CHECK(p.sum() == 6);
    CHECK_FALSE(p.all_ones());
    CHECK(Partition{}.empty());
    CHECK(Partition::ones(3).all_ones());
    CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("parse_module examples") {
    auto m = parse_module("Z^2 + Z/4 + Z/2");
    REQUIRE(m.is_fg());
    CHECK(m.fg() == FgZModule(2, {{2, Partition({2, 1})}}));

    auto z6 = parse_module("Z/6");
    CHECK(z6.fg() == FgZModule(0, {{2, Partition({1})}, {3, Partition({1})}}));

    auto prufer = parse_module("Z/2^inf");
    REQUIRE(prufer.is_prufer());
    CHECK(prufer.prufer().p == 2);
}

TEST_CASE("parse_module grammar corners") {
    CHECK(parse_module("Z").fg() == FgZModule::free_module(1));
    CHECK(parse_module("Z^0").fg().is_trivial());
    CHECK(parse_module("Z/1").fg().is_trivial());
    CHECK(parse_module("Z/2^3").fg() == FgZModule(0, {{2, Partition({3})}}));
    CHECK(parse_module("Z/6^2").fg() ==
          FgZModule(0, {{2, Partition({2})}, {3, Partition({2})}}));
    CHECK(parse_module("(Z/3)^4").fg() ==
          FgZModule(0, {{3, Partition::ones(4)}}));
    CHECK(parse_module("(Z/6)^2").fg() ==
          FgZModule(0, {{2, Partition({1, 1})}, {3, Partition({1, 1})}}));
    auto ep = parse_module("(Z/5)^inf");
    REQUIRE(ep.is_elementary_power());
    CHECK(ep.elementary_power().p == 5);
    CHECK_FALSE(ep.elementary_power().copies.has_value());
    // an infinite shape may only be padded by trivial terms
    CHECK(parse_module("Z/2^inf + Z^0").is_prufer());
}

TEST_CASE("parse_module errors") {
    CHECK_THROWS_AS(parse_module("Z/0"), ParseError);
    CHECK_THROWS_AS(parse_module("Z/-6"), ParseError);
    CHECK_THROWS_AS(parse_module("Z/4^inf"), ParseError);
    CHECK_THROWS_AS(parse_module("(Z/6)^inf"), ParseError);
    CHECK_THROWS_AS(parse_module("Q"), ParseError);
    CHECK_THROWS_AS(parse_module(""), ParseError);
    CHECK_THROWS_AS(parse_module("Z +"), ParseError);
    CHECK_THROWS_AS(parse_module("Z^-1"), ParseError);
    CHECK_THROWS_AS(parse_module("Z/2^inf + Z/3"), ParseError);
    CHECK_THROWS_AS(parse_module("Z/2^inf + Z/3^inf"), ParseError);
    CHECK_THROWS_AS(parse_module("Z/2x"), ParseError);
}

TEST_CASE("render round-trips canonical forms") {
    CHECK(render(parse_module("Z/6")) == "Z/2 + Z/3");
    CHECK(render(parse_module("Z^0")) == "Z^0");
    CHECK(render(parse_module("Z/9 + Z")) == "Z + Z/3^2");
    CHECK(render(parse_module("Z/2^inf")) == "Z/2^inf");
    CHECK(render(parse_module("(Z/7)^inf")) == "(Z/7)^inf");

    std::mt19937 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        FgZModule m = random_module(rng);
        CAPTURE(render(m));
        CHECK(parse_module(render(m)).fg() == m);
    }
}

TEST_CASE("from_relations examples") {
    // diag(2,3) has invariant factors (1,6)
    CHECK(from_relations({{2, 0}, {0, 3}}, 2) == parse_module("Z/6").fg());
    CHECK(from_relations({}, 2) == FgZModule::free_module(2));
    CHECK(from_relations({{1}}, 1).is_trivial());
    CHECK(from_relations({{0, 0}}, 2) == FgZModule::free_module(2));
    CHECK(from_relations({{2, 0}}, 2) ==
          FgZModule(1, {{2, Partition({1})}}));
    CHECK_THROWS_AS(from_relations({{1, 2, 3}}, 2), std::invalid_argument);
}

TEST_CASE("smith invariant factors divisibility chain") {
    auto d = smith_invariant_factors({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    REQUIRE(d.size() == 3);
    for (size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);
    long long prod = d[0] * d[1] * d[2];
    CHECK(prod == std::llabs(det({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}})));
}

TEST_CASE("cokernel order matches determinant oracle") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> entry(-6, 6);
    int checked = 0;
    while (checked < 60) {
        size_t k = 1 + static_cast<size_t>(rng() % 3);
        std::vector<std::vector<long long>> a(k, std::vector<long long>(k));
        for (auto& row : a)
            for (auto& x : row) x = entry(rng);
        long long d = det(a);
        if (d == 0) continue;
        ++checked;
        FgZModule m = from_relations(a, static_cast<int>(k));
        CAPTURE(render(m));
        REQUIRE(m.is_torsion());
        CHECK(order_of(m).value() == static_cast<unsigned long long>(std::llabs(d)));
    }
}

TEST_CASE("from_relations is presentation-invariant") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> entry(-5, 5);
    for (int trial = 0; trial < 100; ++trial) {
        size_t rows = rng() % 4, k = 1 + rng() % 3;
        std::vector<std::vector<long long>> a(rows, std::vector<long long>(k));
        for (auto& row : a)
            for (auto& x : row) x = entry(rng);
        FgZModule base = from_relations(a, static_cast<int>(k));

        auto b = a;
        if (rows >= 2) {
            std::swap(b[0], b[rows - 1]);                       // row swap
            long long c = entry(rng);
            for (size_t j = 0; j < k; ++j) b[0][j] += c * b[1][j];  // row add
        }
        for (auto& row : b) std::rotate(row.begin(), row.begin() + 1, row.end());
        CHECK(from_relations(b, static_cast<int>(k)) == base);
    }
}

TEST_CASE("socle examples and idempotence") {
    CHECK(socle_fg(FgZModule(0, {{2, Partition({2, 1})}})) ==
          FgZModule(0, {{2, Partition({1, 1})}}));
    CHECK(socle_fg(FgZModule::free_module(3)).is_trivial());
    FgZModule semisimple(0, {{2, Partition({1})}, {3, Partition({1})}});
    CHECK(socle_fg(semisimple) == semisimple);

    std::mt19937 rng(3);
    for (int i = 0; i < 50; ++i) {
        FgZModule m = random_module(rng);
        CHECK(socle_fg(socle_fg(m)) == socle_fg(m));
    }
}

TEST_CASE("order_of") {
    CHECK(order_of(FgZModule(0, {{2, Partition({2, 1})}})).value() == 8);
    CHECK_FALSE(order_of(FgZModule::free_module(1)).has_value());
    CHECK(order_of(FgZModule{}).value() == 1);
    CHECK(order_of(parse_module("Z/12 + Z/10").fg()).value() == 120);
}

TEST_CASE("primality and factorization") {
    CHECK(is_prime_number(2));
    CHECK(is_prime_number(97));
    CHECK_FALSE(is_prime_number(1));
    CHECK_FALSE(is_prime_number(91));
    CHECK(factorize(360) ==
          std::vector<std::pair<long long, int>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(1).empty());
}
