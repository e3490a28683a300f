#pragma once

// Fast predicates for embeddability and weak uniseriality of finitely
// generated Z-modules, plus the nonzero-socle classification of the symbolic
// shapes. Each decision rule is validated against the brute-force oracle by
// the sweep suites before being trusted.

#include "wu/abelian.hpp"

namespace wu {

/// True iff the abelian p-group with exponent partition `lambda` embeds in
/// the one with partition `mu`, for any fixed prime. Decision rule:
/// componentwise dominance of the zero-padded decreasing sequences.
bool pgroup_embeds(const Partition& lambda, const Partition& mu);

/// True iff a Z-monomorphism M -> N exists: free rank is monotone and the
/// torsion embeds prime by prime.
bool fg_embeds(const FgZModule& m, const FgZModule& n);

enum class WuReason {
    none,             // weakly uniserial
    torsion_and_free, // mixes nonzero torsion and free parts
    mixed_primes,     // torsion at two or more primes
    bad_p_shape,      // single prime, neither cyclic nor elementary
};

const char* reason_tag(WuReason r);  // kebab-case tag, "" for none

struct FgWuVerdict {
    bool weakly_uniserial = false;
    WuReason reason = WuReason::none;
};

/// A finitely generated Z-module is weakly uniserial iff it is free, or
/// elementary abelian at a single prime, or cyclic of prime-power order.
/// Negative verdicts carry the first obstruction in that proof order.
FgWuVerdict is_weakly_uniserial_fg(const FgZModule& m);

/// Trivial, or a direct sum of pairwise isomorphic simple modules.
bool is_homogeneous_semisimple(const FgZModule& m);

/// Thrown when classify_socle_nonzero is applied to a module with zero socle.
class SocleZeroError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Classification of weakly uniserial Z-modules with nonzero socle: true iff
/// the module is Z/p^n, Z/p^inf, or a direct sum of copies of Z/p. Throws
/// SocleZeroError for free (including trivial) inputs, where the
/// classification does not apply.
bool classify_socle_nonzero(const SymbolicModule& m);

/// Human-readable canonical shape matched by a positive verdict, e.g.
/// "M = Z^n (free)"; empty for negative verdicts.
std::string matched_shape(const SymbolicModule& m);

}  // namespace wu
