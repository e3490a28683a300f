#pragma once

// Finite rings presented by addition/multiplication tables: ideal lattice
// enumeration, brute-force module monomorphism search, and the structural
// predicates (local, Kasch, prime, semiprime, radical, socle, uniserial,
// weakly uniserial). Left-sided notions are computed on the opposite ring.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wu::ring {

/// Table validation failure; the message names the violated axiom.
class RingAxiomError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultRingCap = 64;
inline constexpr int kDefaultModuleCap = 256;

/// Unital ring on elements 0..n-1 given by explicit tables. All axioms are
/// machine-checked at construction; zero and one are located by scan.
class FiniteRing {
public:
    FiniteRing(std::vector<std::vector<int>> add,
               std::vector<std::vector<int>> mul, std::string name = "",
               std::vector<std::string> element_names = {});

    int size() const { return n_; }
    int zero() const { return zero_; }
    int one() const { return one_; }
    int add(int a, int b) const { return add_[static_cast<size_t>(a) * n_ + b]; }
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
    int neg(int a) const { return neg_[static_cast<size_t>(a)]; }

    const std::string& name() const { return name_; }
    std::string element_name(int a) const;
    bool commutative() const;
    /// Same carrier with reversed multiplication; left R-structure equals
    /// right structure over the opposite.
    FiniteRing opposite() const;

private:
    int n_ = 0, zero_ = 0, one_ = 0;
    std::vector<int> add_, mul_, neg_;
    std::string name_;
    std::vector<std::string> element_names_;
};

/// Built-in example rings: z<n> (integers mod n), f2/f3/f4/f5 (fields),
/// m2f2 (2x2 matrices over F_2), t2f2 (upper triangular 2x2 over F_2),
/// struct3f2 (scalar-plus-corner 3x3 structural ring over F_2), kxyf2
/// (F_2[x,y] with x^3 = y^3 = xy = 0, order 32).
FiniteRing preset(std::string_view name);
const std::vector<std::string>& preset_names();

/// Explicit finite right module over a fixed ring, elements 0..m-1 with
/// precomputed addition and scalar action tables.
class RightModule {
public:
    static RightModule regular(const FiniteRing& r);
    static RightModule direct_square(const FiniteRing& r);
    /// Quotient by a submodule (validated element list); elements are cosets
    /// labelled by their minimal representative.
    static RightModule quotient(const RightModule& m, const std::vector<int>& sub);

    const FiniteRing& ring() const { return *ring_; }
    int size() const { return n_; }
    int zero() const { return zero_; }
    int add(int a, int b) const { return add_[static_cast<size_t>(a) * n_ + b]; }
    int act(int m, int r) const {
        return act_[static_cast<size_t>(m) * ring_->size() + r];
    }
    std::string show(int a) const { return labels_[static_cast<size_t>(a)]; }

private:
    RightModule() = default;
    const FiniteRing* ring_ = nullptr;
    int n_ = 0, zero_ = 0;
    std::vector<int> add_, act_;
    std::vector<std::string> labels_;
};

struct Submodule {
    const RightModule* parent = nullptr;
    std::vector<int> elements;  // sorted ascending

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(int x) const;
};

Submodule whole_module(const RightModule& m);
Submodule zero_submodule(const RightModule& m);
Submodule principal_submodule(const RightModule& m, int x);
Submodule submodule_sum(const Submodule& a, const Submodule& b);
/// Closes the set of principal submodules under sums. Discovery order:
/// principal submodules by generator index, then sums as found.
std::vector<Submodule> enumerate_submodules(const RightModule& m);

/// Generator-image witness of an injective module map.
using ModuleMono = std::vector<std::pair<int, int>>;

/// Injective right-linear map search between submodules of (possibly
/// different) modules over the same ring. Assigns images to a small
/// generating set, checking well-definedness and injectivity of every
/// partial extension.
std::optional<ModuleMono> module_mono(const Submodule& from, const Submodule& into);
/// Expands a generator witness to the full map, re-verifying linearity and
/// injectivity; nullopt if the witness is invalid.
std::optional<std::vector<std::pair<int, int>>> expand_module_mono(
    const Submodule& from, const Submodule& into, const ModuleMono& w);

// Ideals of R are carried as sorted element sets of the regular module.
using ElementSet = std::vector<int>;

std::vector<ElementSet> enumerate_right_ideals(const FiniteRing& r,
                                               int cap = kDefaultRingCap);
std::vector<ElementSet> enumerate_left_ideals(const FiniteRing& r,
                                              int cap = kDefaultRingCap);

/// {s : x s = 0 for all x in the set}.
ElementSet right_annihilator(const FiniteRing& r, const ElementSet& xs);

/// Injective right-module map I -> J between right ideals, with the
/// necessary annihilator filter r.Ann(J) <= r.Ann(I) applied before search.
std::optional<ModuleMono> exists_right_module_mono(const FiniteRing& r,
                                                   const ElementSet& i,
                                                   const ElementSet& j);

struct RingWuVerdict {
    bool weakly_uniserial = false;
    /// First incomparable ideal pair in enumeration order.
    std::optional<std::pair<ElementSet, ElementSet>> witness;
};

RingWuVerdict is_right_weakly_uniserial(const FiniteRing& r,
                                        int cap = kDefaultRingCap);
RingWuVerdict is_left_weakly_uniserial(const FiniteRing& r,
                                       int cap = kDefaultRingCap);

/// All e with ee = e commuting with every element (includes 0 and 1).
std::vector<int> central_idempotents(const FiniteRing& r);

/// Intersection of the maximal right ideals. (Two-sided for finite rings.)
ElementSet jacobson_radical(const FiniteRing& r, int cap = kDefaultRingCap);
/// Sum of the minimal right ideals.
ElementSet socle_right(const FiniteRing& r, int cap = kDefaultRingCap);

bool is_local(const FiniteRing& r, int cap = kDefaultRingCap);
/// Every simple right module embeds in R: for each maximal right ideal m,
/// some minimal right ideal is isomorphic to R/m.
bool is_kasch_right(const FiniteRing& r, int cap = kDefaultRingCap);
bool is_prime(const FiniteRing& r);
bool is_semiprime(const FiniteRing& r);
bool is_right_uniserial(const FiniteRing& r, int cap = kDefaultRingCap);
bool is_left_uniserial(const FiniteRing& r, int cap = kDefaultRingCap);

/// Every right R-module is weakly uniserial iff R is simple Artinian:
/// J(R) = 0 and a single isomorphism class of simple right modules.
bool every_module_weakly_uniserial(const FiniteRing& r,
                                   int cap = kDefaultRingCap);

/// A mutually non-embeddable pair of submodules of R + R, witnessed as
/// element-pair lists, or nullopt when every pair is comparable.
struct TwoGenWitness {
    std::vector<std::pair<int, int>> first, second;
};
std::optional<TwoGenWitness> check_2generated_counterexample(
    const FiniteRing& r, int module_cap = kDefaultModuleCap);

}  // namespace wu::ring
