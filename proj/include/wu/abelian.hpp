#pragma once

// Canonical forms for finitely generated Z-modules and the symbolic shapes
// (Prufer groups, elementary powers) used by the socle classifier.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace wu {

/// Malformed module expression or invalid constructor argument.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool is_prime_number(long long n);

/// Prime factorization by trial division, (prime, exponent) pairs with
/// primes ascending. Requires n >= 1.
std::vector<std::pair<long long, int>> factorize(long long n);

/// Weakly decreasing sequence of positive integers: the exponent vector of a
/// finite abelian p-group (one part per cyclic factor). The empty partition
/// is the trivial group.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    static Partition ones(int n);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long long sum() const;
    /// i-th part, zero-padded past the end.
    int part(int i) const {
        return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
    }
    bool empty() const { return parts_.empty(); }
    bool all_ones() const;

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    std::vector<int> parts_;  // weakly decreasing, all >= 1
};

/// Canonical form of a finitely generated Z-module: free rank plus, for each
/// prime with torsion, the partition of cyclic p-power exponents. Equal
/// modules have identical representations.
class FgZModule {
public:
    FgZModule() = default;  // trivial module
    FgZModule(int free_rank, std::map<long long, Partition> torsion);

    static FgZModule free_module(int rank);
    /// Cyclic module Z/n, CRT-split into prime partitions. n >= 1.
    static FgZModule cyclic(long long n);
    static FgZModule primary(long long p, Partition lambda);

    int free_rank() const { return free_rank_; }
    const std::map<long long, Partition>& torsion() const { return torsion_; }
    /// Partition at p (empty if p-torsion-free).
    Partition primary_part(long long p) const;

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_free() const { return torsion_.empty(); }
    bool is_torsion() const { return free_rank_ == 0; }

    FgZModule direct_sum(const FgZModule& other) const;

    bool operator==(const FgZModule&) const = default;

private:
    int free_rank_ = 0;
    std::map<long long, Partition> torsion_;  // prime -> nonempty partition
};

/// Strict ordering for use as a map key (rank, then torsion lexicographic).
bool operator<(const FgZModule& a, const FgZModule& b);

struct Prufer {
    long long p;
    bool operator==(const Prufer&) const = default;
};

/// Direct sum of copies of Z/p; copies == nullopt means countably many.
struct ElementaryPower {
    long long p;
    std::optional<long long> copies;
    bool operator==(const ElementaryPower&) const = default;
};

/// One of: finitely generated module, Prufer group Z/p^inf, or an elementary
/// power (Z/p)^kappa. Finite elementary powers normalize to the Fg shape, so
/// the ElementaryPower alternative only carries the countably-infinite tag.
class SymbolicModule {
public:
    SymbolicModule() : v_(FgZModule{}) {}
    SymbolicModule(FgZModule m) : v_(std::move(m)) {}
    SymbolicModule(Prufer p);
    SymbolicModule(ElementaryPower e);

    bool is_fg() const { return std::holds_alternative<FgZModule>(v_); }
    bool is_prufer() const { return std::holds_alternative<Prufer>(v_); }
    bool is_elementary_power() const {
        return std::holds_alternative<ElementaryPower>(v_);
    }

    const FgZModule& fg() const { return std::get<FgZModule>(v_); }
    const Prufer& prufer() const { return std::get<Prufer>(v_); }
    const ElementaryPower& elementary_power() const {
        return std::get<ElementaryPower>(v_);
    }

    bool operator==(const SymbolicModule&) const = default;

private:
    std::variant<FgZModule, Prufer, ElementaryPower> v_;
};

/// Parses a module expression. Grammar (terms joined by " + "):
///   Z | Z^k | Z/n | Z/n^k | Z/p^inf | (Z/n)^k | (Z/p)^inf
/// Composite moduli are CRT-split eagerly; the ^inf forms require a prime
/// base. Throws ParseError on syntax errors, nonpositive moduli, or sums
/// that mix an infinite shape with a nontrivial remainder.
SymbolicModule parse_module(std::string_view text);

/// Canonical rendering; parse_module(render(m)) == m. The trivial module
/// renders as "Z^0", prime powers as "Z/p^k".
std::string render(const FgZModule& m);
std::string render(const SymbolicModule& m);

/// Cokernel of an integer relation matrix on Z^generators (each row one
/// relation), computed via Smith normal form.
FgZModule from_relations(const std::vector<std::vector<long long>>& rows,
                         int generators);

/// Nonzero diagonal entries d1 | d2 | ... of the Smith normal form.
std::vector<long long> smith_invariant_factors(
    std::vector<std::vector<long long>> a);

FgZModule socle_fg(const FgZModule& m);

/// Order of the module; nullopt means infinite. Throws std::overflow_error
/// if the order exceeds 64 bits.
std::optional<unsigned long long> order_of(const FgZModule& m);

}  // namespace wu
