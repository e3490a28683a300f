#pragma once

// Height sequences and types of rank-1 torsion-free abelian groups.
// Sequences are represented as finitely many per-prime exceptions over an
// eventually-constant tail, which keeps every predicate decidable.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wu::rank1 {

/// Value in N together with infinity.
class Height {
public:
    constexpr Height() : v_(0) {}
    constexpr Height(unsigned long long v) : v_(v) {}
    static constexpr Height infinity() { return Height(kInf); }

    bool is_infinite() const { return v_ == kInf; }
    unsigned long long value() const {
        if (is_infinite()) throw std::logic_error("Height: infinite value");
        return v_;
    }
    std::string str() const {
        return is_infinite() ? "inf" : std::to_string(v_);
    }

    friend bool operator==(Height a, Height b) { return a.v_ == b.v_; }
    friend bool operator!=(Height a, Height b) { return a.v_ != b.v_; }
    friend bool operator<(Height a, Height b) { return a.v_ < b.v_; }
    friend bool operator<=(Height a, Height b) { return a.v_ <= b.v_; }

private:
    static constexpr unsigned long long kInf = ~0ULL;
    unsigned long long v_;
};

inline const Height kInfinity = Height::infinity();

/// Prime-indexed heights with an eventually-constant tail. Canonical form:
/// no stored exception equals the tail.
class HeightSequence {
public:
    explicit HeightSequence(Height tail = Height(0),
                            std::map<long long, Height> exceptions = {});

    Height tail() const { return tail_; }
    const std::map<long long, Height>& exceptions() const { return exceptions_; }
    Height at(long long p) const;

    /// Comma literal "p:v,...,tail:v" with v a nonnegative integer or "inf";
    /// the tail entry is required.
    static HeightSequence parse(std::string_view literal);
    std::string to_literal() const;
    /// Values at ascending primes through the last exception, then the tail
    /// twice and an ellipsis: "(inf, 1, 1, 0, 0, ...)".
    std::string to_sequence_string() const;

    bool operator==(const HeightSequence&) const = default;

private:
    Height tail_;
    std::map<long long, Height> exceptions_;
};

/// The paper notion: sequences agreeing at all but finitely many primes,
/// with exact agreement wherever either value is infinite. Equivalently:
/// equal tails and identical infinite positions.
bool equivalent(const HeightSequence& a, const HeightSequence& b);

/// Equivalence class of height sequences. The stored representative is fully
/// canonical: with a finite tail only the infinite exceptions survive; with
/// an infinite tail the finite exceptions are normalized to 0.
class TypeClass {
public:
    explicit TypeClass(const HeightSequence& s);
    const HeightSequence& representative() const { return rep_; }
    bool operator==(const TypeClass&) const = default;

private:
    HeightSequence rep_;
};

/// Partial order on types: representatives can be adjusted at finitely many
/// finite positions to dominate pointwise. Decision rule: tail(s) <= tail(t)
/// and every infinite position of s is infinite in t.
bool type_leq(const TypeClass& s, const TypeClass& t);

/// Hom(A,B) != 0 for rank-1 groups iff type(A) <= type(B); the nonzero map
/// can then be chosen injective.
bool hom_nonzero(const TypeClass& s, const TypeClass& t);

/// Isomorphism test: type_leq in both directions.
bool same_type(const TypeClass& s, const TypeClass& t);

/// A rank-1 torsion-free group is weakly uniserial iff its type has tail 0
/// and at most one infinite entry.
bool is_weakly_uniserial_type(const TypeClass& t);

/// Generators 1/p^e of a subgroup of Q: finitely many primes, each with an
/// exponent bound in {1, 2, ...} or infinity.
struct Rank1GeneratorSpec {
    std::map<long long, Height> entries;

    /// Comma literal "p:v,..." with v >= 1 or "inf"; empty literal means Z.
    static Rank1GeneratorSpec parse(std::string_view literal);
    std::string to_literal() const;
};

/// Height sequence of 1 in the generated subgroup: the exponent bound at
/// each listed prime, 0 elsewhere.
HeightSequence height_of_spec(const Rank1GeneratorSpec& g);
TypeClass type_of_spec(const Rank1GeneratorSpec& g);

}  // namespace wu::rank1
