#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wu/sweeps.hpp"

#include <set>

using namespace wu;
using namespace wu::sweeps;

TEST_CASE("partition generation") {
    CHECK(partitions_of_total(0).size() == 1);
    CHECK(partitions_of_total(1).size() == 1);
    CHECK(partitions_of_total(4).size() == 5);
    CHECK(partitions_of_total(6).size() == 11);
    CHECK(partitions_of_total(8).size() == 22);
    for (const auto& p : partitions_of_total(5)) CHECK(p.sum() == 5);
}

TEST_CASE("group list generation") {
    // p(0) + ... + p(6) groups of order dividing 64
    CHECK(pgroup_list(2, 64).size() == 30);
    CHECK(pgroup_list(3, 81).size() == 12);
    CHECK(pgroup_list(2, 1).size() == 1);  // only the trivial group

    // hand count of abelian group types of order <= 16
    auto groups = abelian_list(16);
    CHECK(groups.size() == 25);
    std::set<FgZModule> distinct(groups.begin(), groups.end());
    CHECK(distinct.size() == groups.size());
    int order8 = 0;
    for (const auto& m : groups)
        if (order_of(m).value() == 8) ++order8;
    CHECK(order8 == 3);
}

TEST_CASE("small sweeps find no divergence") {
    auto thm = sweep_thm55(2, 16, 256, false);
    CHECK(thm.cases == 12);  // partitions of 0..4
    CHECK(thm.pass());

    auto emb = (sweep_embed(2, 8, 256, false));
    CHECK(emb.cases == 7 * 7);
    CHECK(emb.pass());

    auto p51 = sweep_prop51(30, 256, false);
    CHECK(p51.pass());
    CHECK(p51.cases == 9);  // 6,10,12(x2),14,15,18(x2),20... up to 30
}

TEST_CASE("parallel and sequential sweeps agree") {
    auto seq = sweep_thm55(3, 27, 256, false);
    auto par = sweep_thm55(3, 27, 256, true);
    CHECK(seq.cases == par.cases);
    CHECK(seq.failures == par.failures);
}
