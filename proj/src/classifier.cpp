#include "wu/classifier.hpp"

#include <algorithm>

namespace wu {

bool pgroup_embeds(const Partition& lambda, const Partition& mu) {
    for (int i = 0; i < lambda.length(); ++i)
        if (lambda.part(i) > mu.part(i)) return false;
    return true;
}

bool fg_embeds(const FgZModule& m, const FgZModule& n) {
    if (m.free_rank() > n.free_rank()) return false;
    for (const auto& [p, lam] : m.torsion())
        if (!pgroup_embeds(lam, n.primary_part(p))) return false;
    return true;
}

const char* reason_tag(WuReason r) {
    switch (r) {
        case WuReason::none: return "";
        case WuReason::torsion_and_free: return "torsion-and-free";
        case WuReason::mixed_primes: return "mixed-primes";
        case WuReason::bad_p_shape: return "bad-p-shape";
    }
    return "";
}

FgWuVerdict is_weakly_uniserial_fg(const FgZModule& m) {
    if (m.is_free()) return {true, WuReason::none};
    if (m.free_rank() > 0) return {false, WuReason::torsion_and_free};
    if (m.torsion().size() > 1) return {false, WuReason::mixed_primes};
    const Partition& lam = m.torsion().begin()->second;
    if (lam.length() == 1 || lam.all_ones()) return {true, WuReason::none};
    return {false, WuReason::bad_p_shape};
}

bool is_homogeneous_semisimple(const FgZModule& m) {
    if (m.free_rank() > 0) return false;
    if (m.torsion().empty()) return true;
    return m.torsion().size() == 1 && m.torsion().begin()->second.all_ones();
}

bool classify_socle_nonzero(const SymbolicModule& m) {
    if (m.is_prufer() || m.is_elementary_power()) return true;
    const FgZModule& fg = m.fg();
    if (fg.torsion().empty())
        throw SocleZeroError("module has zero socle; classification applies "
                             "only to modules with nonzero socle");
    if (fg.free_rank() > 0 || fg.torsion().size() > 1) return false;
    const Partition& lam = fg.torsion().begin()->second;
    return lam.length() == 1 || lam.all_ones();
}

std::string matched_shape(const SymbolicModule& m) {
    if (m.is_prufer()) return "M = Z/p^inf (divisible primary)";
    if (m.is_elementary_power()) return "M = (Z/p)^I (elementary)";
    const FgZModule& fg = m.fg();
    if (!is_weakly_uniserial_fg(fg).weakly_uniserial) return "";
    if (fg.is_free()) return "M = Z^n (free)";
    const Partition& lam = fg.torsion().begin()->second;
    if (lam.all_ones() && lam.length() != 1)
        return "M = (Z/p)^n (elementary)";
    return "M = Z/p^n (cyclic primary)";
}

}  // namespace wu
