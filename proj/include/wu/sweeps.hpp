#pragma once

// Exhaustive validation sweeps: classifier-versus-oracle equivalence over
// the small finite abelian groups, and the structural invariants over the
// ring preset zoo. These back both the `sweep` CLI subcommand and the
// acceptance suite.

#include "wu/abelian.hpp"

#include <string>
#include <vector>

namespace wu::sweeps {

struct SweepResult {
    std::string name;
    long long cases = 0;
    std::vector<std::string> failures;
    double seconds = 0;

    bool pass() const { return failures.empty(); }
};

std::vector<Partition> partitions_of_total(int n);

/// Finite abelian p-groups of order <= max_order (including the trivial
/// group), as canonical modules.
std::vector<FgZModule> pgroup_list(long long p, long long max_order);

/// All isomorphism types of finite abelian groups of order <= max_order.
std::vector<FgZModule> abelian_list(long long max_order);

/// Classifier verdict == oracle verdict for every p-group with p <= pmax and
/// order <= omax.
SweepResult sweep_thm55(int pmax, long long omax, int group_cap, bool parallel);

/// pgroup_embeds == monomorphism search for every ordered pair of p-groups
/// with p <= pmax and order <= omax.
SweepResult sweep_embed(int pmax, long long omax, int group_cap, bool parallel);

/// Every group of order <= omax with at least two prime divisors is rejected
/// by both classifier and oracle.
SweepResult sweep_prop51(long long omax, int group_cap, bool parallel);

/// Module-side invariant battery over all abelian groups of order <= omax:
/// classifier/oracle agreement, |Ass| <= 1, homogeneous essential socle,
/// socle comparability, and closure of the verdict under embedded shapes.
SweepResult sweep_module_invariants(long long omax, int group_cap, bool parallel);

/// Ring-side invariant battery over the preset zoo: central idempotents,
/// radical/socle square vanishing, local-or-matrix-ring, Kasch locality,
/// prime vs semiprime, the principal-maximal-ideal dichotomy, the
/// 2-generated check, and submodule closure.
SweepResult sweep_ring_invariants(int ring_cap, int module_cap);

/// The fixed expected verdicts for the preset rings.
SweepResult sweep_ring_fixtures(int ring_cap, int module_cap);

}  // namespace wu::sweeps
