#include "wu/finring.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace wu::ring {

namespace {

int find_additive_identity(const std::vector<std::vector<int>>& add) {
    const int n = static_cast<int>(add.size());
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            if (add[static_cast<size_t>(e)][static_cast<size_t>(x)] != x)
                ok = false;
        if (ok) return e;
    }
    throw RingAxiomError("addition has no identity element");
}

}  // namespace

FiniteRing::FiniteRing(std::vector<std::vector<int>> add,
                       std::vector<std::vector<int>> mul, std::string name,
                       std::vector<std::string> element_names)
    : name_(std::move(name)), element_names_(std::move(element_names)) {
    n_ = static_cast<int>(add.size());
    if (n_ == 0) throw RingAxiomError("ring must be nonempty");
    auto check_shape = [&](const std::vector<std::vector<int>>& t,
                           const char* which) {
        if (static_cast<int>(t.size()) != n_)
            throw RingAxiomError(std::string(which) + " table has wrong row count");
        for (const auto& row : t) {
            if (static_cast<int>(row.size()) != n_)
                throw RingAxiomError(std::string(which) +
                                     " table has wrong row width");
            for (int v : row)
                if (v < 0 || v >= n_)
                    throw RingAxiomError(std::string(which) +
                                         " table entry out of range");
        }
    };
    check_shape(add, "addition");
    check_shape(mul, "multiplication");

    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (add[a][b] != add[b][a])
                throw RingAxiomError("addition is not commutative");
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c)
                if (add[add[a][b]][c] != add[a][add[b][c]])
                    throw RingAxiomError("addition is not associative");

    zero_ = find_additive_identity(add);
    neg_.assign(static_cast<size_t>(n_), -1);
    for (int a = 0; a < n_; ++a) {
        for (int b = 0; b < n_; ++b)
            if (add[a][b] == zero_) {
                neg_[static_cast<size_t>(a)] = b;
                break;
            }
        if (neg_[static_cast<size_t>(a)] < 0)
            throw RingAxiomError("an element has no additive inverse");
    }

    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            for (int c = 0; c < n_; ++c) {
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw RingAxiomError("multiplication is not associative");
                if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
                    throw RingAxiomError("left distributivity fails");
                if (mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]])
                    throw RingAxiomError("right distributivity fails");
            }

    one_ = -1;
    for (int e = 0; e < n_ && one_ < 0; ++e) {
        bool ok = true;
        for (int x = 0; x < n_ && ok; ++x)
            if (mul[e][x] != x || mul[x][e] != x) ok = false;
        if (ok) one_ = e;
    }
    if (one_ < 0) throw RingAxiomError("ring has no multiplicative identity");

    add_.resize(static_cast<size_t>(n_) * n_);
    mul_.resize(static_cast<size_t>(n_) * n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            add_[static_cast<size_t>(a) * n_ + b] = add[a][b];
            mul_[static_cast<size_t>(a) * n_ + b] = mul[a][b];
        }
}

std::string FiniteRing::element_name(int a) const {
    if (a >= 0 && a < static_cast<int>(element_names_.size()))
        return element_names_[static_cast<size_t>(a)];
    return std::to_string(a);
}

bool FiniteRing::commutative() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

FiniteRing FiniteRing::opposite() const {
    std::vector<std::vector<int>> add(static_cast<size_t>(n_),
                                      std::vector<int>(static_cast<size_t>(n_)));
    auto mul = add;
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            add[a][b] = this->add(a, b);
            mul[a][b] = this->mul(b, a);
        }
    return FiniteRing(std::move(add), std::move(mul), name_ + "^op",
                      element_names_);
}

// ---------------------------------------------------------------------------
// modules

RightModule RightModule::regular(const FiniteRing& r) {
    RightModule m;
    m.ring_ = &r;
    m.n_ = r.size();
    m.zero_ = r.zero();
    m.add_.resize(static_cast<size_t>(m.n_) * m.n_);
    m.act_.resize(static_cast<size_t>(m.n_) * r.size());
    for (int a = 0; a < m.n_; ++a)
        for (int b = 0; b < m.n_; ++b) {
            m.add_[static_cast<size_t>(a) * m.n_ + b] = r.add(a, b);
            m.act_[static_cast<size_t>(a) * r.size() + b] = r.mul(a, b);
        }
    m.labels_.reserve(static_cast<size_t>(m.n_));
    for (int a = 0; a < m.n_; ++a) m.labels_.push_back(r.element_name(a));
    return m;
}

RightModule RightModule::direct_square(const FiniteRing& r) {
    RightModule m;
    const int n = r.size();
    m.ring_ = &r;
    m.n_ = n * n;
    m.zero_ = r.zero() * n + r.zero();
    m.add_.resize(static_cast<size_t>(m.n_) * m.n_);
    m.act_.resize(static_cast<size_t>(m.n_) * n);
    for (int a = 0; a < m.n_; ++a) {
        const int a1 = a / n, a2 = a % n;
        for (int b = 0; b < m.n_; ++b) {
            const int b1 = b / n, b2 = b % n;
            m.add_[static_cast<size_t>(a) * m.n_ + b] =
                r.add(a1, b1) * n + r.add(a2, b2);
        }
        for (int s = 0; s < n; ++s)
            m.act_[static_cast<size_t>(a) * n + s] =
                r.mul(a1, s) * n + r.mul(a2, s);
        m.labels_.push_back("(" + r.element_name(a1) + ", " +
                            r.element_name(a2) + ")");
    }
    return m;
}

RightModule RightModule::quotient(const RightModule& big,
                                  const std::vector<int>& sub) {
    // cosets labelled by minimal representative
    std::vector<int> coset_of(static_cast<size_t>(big.size()), -1);
    std::vector<int> reps;
    for (int x = 0; x < big.size(); ++x) {
        if (coset_of[static_cast<size_t>(x)] >= 0) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x);
        for (int e : sub) coset_of[static_cast<size_t>(big.add(x, e))] = id;
        if (coset_of[static_cast<size_t>(x)] != id)
            throw std::invalid_argument("quotient: set is not a subgroup");
    }
    const FiniteRing& r = big.ring();
    RightModule m;
    m.ring_ = &r;
    m.n_ = static_cast<int>(reps.size());
    m.zero_ = coset_of[static_cast<size_t>(big.zero())];
    m.add_.resize(static_cast<size_t>(m.n_) * m.n_);
    m.act_.resize(static_cast<size_t>(m.n_) * r.size());
    for (int a = 0; a < m.n_; ++a) {
        for (int b = 0; b < m.n_; ++b)
            m.add_[static_cast<size_t>(a) * m.n_ + b] =
                coset_of[static_cast<size_t>(big.add(reps[a], reps[b]))];
        for (int t = 0; t < r.size(); ++t)
            m.act_[static_cast<size_t>(a) * r.size() + t] =
                coset_of[static_cast<size_t>(big.act(reps[a], t))];
        m.labels_.push_back("[" + big.show(reps[a]) + "]");
    }
    for (int e : sub)
        for (int t = 0; t < r.size(); ++t)
            if (coset_of[static_cast<size_t>(big.act(e, t))] != m.zero_)
                throw std::invalid_argument(
                    "quotient: set is not closed under the ring action");
    return m;
}

bool Submodule::contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

Submodule whole_module(const RightModule& m) {
    Submodule s{&m, std::vector<int>(static_cast<size_t>(m.size()))};
    for (int i = 0; i < m.size(); ++i) s.elements[static_cast<size_t>(i)] = i;
    return s;
}

Submodule zero_submodule(const RightModule& m) {
    return Submodule{&m, {m.zero()}};
}

Submodule principal_submodule(const RightModule& m, int x) {
    std::set<int> el;
    for (int r = 0; r < m.ring().size(); ++r) el.insert(m.act(x, r));
    return Submodule{&m, std::vector<int>(el.begin(), el.end())};
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
    const RightModule& m = *a.parent;
    std::set<int> el;
    for (int x : a.elements)
        for (int y : b.elements) el.insert(m.add(x, y));
    return Submodule{&m, std::vector<int>(el.begin(), el.end())};
}

std::vector<Submodule> enumerate_submodules(const RightModule& m) {
    std::vector<Submodule> out;
    std::set<std::vector<int>> seen;
    for (int x = 0; x < m.size(); ++x) {
        Submodule p = principal_submodule(m, x);
        if (seen.insert(p.elements).second) out.push_back(std::move(p));
    }
    for (size_t j = 1; j < out.size(); ++j)
        for (size_t i = 0; i < j; ++i) {
            Submodule s = submodule_sum(out[i], out[j]);
            if (seen.insert(s.elements).second) out.push_back(std::move(s));
        }
    return out;
}

namespace {

// Partial injective module map under construction.
struct ModMonoState {
    std::vector<int> image;  // per from-parent element, -1 unassigned
    std::vector<char> used;  // per into-parent element
    std::vector<int> domain;

    static ModMonoState initial(const RightModule& from,
                                const RightModule& into) {
        ModMonoState s;
        s.image.assign(static_cast<size_t>(from.size()), -1);
        s.used.assign(static_cast<size_t>(into.size()), 0);
        s.image[static_cast<size_t>(from.zero())] = into.zero();
        s.used[static_cast<size_t>(into.zero())] = 1;
        s.domain = {from.zero()};
        return s;
    }

    // Extends by gen -> img: checks the anchor relations f(gen*s) = img*s
    // wherever gen*s already has an image, then fills in the elements
    // x + gen*s, failing on any inconsistency or image collision.
    bool extend(const RightModule& from, const RightModule& into, int gen,
                int img) {
        const int nr = from.ring().size();
        for (int s = 0; s < nr; ++s) {
            int have = image[static_cast<size_t>(from.act(gen, s))];
            if (have >= 0 && have != into.act(img, s)) return false;
        }
        const std::vector<int> base = domain;
        for (int x : base)
            for (int s = 0; s < nr; ++s) {
                int y = from.add(x, from.act(gen, s));
                int v = into.add(image[static_cast<size_t>(x)], into.act(img, s));
                int have = image[static_cast<size_t>(y)];
                if (have >= 0) {
                    if (have != v) return false;
                    continue;
                }
                if (used[static_cast<size_t>(v)]) return false;
                image[static_cast<size_t>(y)] = v;
                used[static_cast<size_t>(v)] = 1;
                domain.push_back(y);
            }
        return true;
    }
};

// Small module-generating set, greedily preferring elements with the largest
// principal submodule.
std::vector<int> module_generating_set(const Submodule& m) {
    const RightModule& big = *m.parent;
    std::vector<std::pair<int, int>> sized;  // (-|xR|, x)
    for (int x : m.elements)
        sized.emplace_back(-principal_submodule(big, x).size(), x);
    std::sort(sized.begin(), sized.end());
    std::vector<int> gens;
    Submodule span = zero_submodule(big);
    for (auto [negsz, x] : sized) {
        (void)negsz;
        if (span.contains(x)) continue;
        gens.push_back(x);
        span = submodule_sum(span, principal_submodule(big, x));
        if (span.size() == m.size()) break;
    }
    return gens;
}

bool mono_search(const RightModule& fromm, const RightModule& intom,
                 const std::vector<int>& gens, const Submodule& into,
                 size_t depth, const ModMonoState& state,
                 std::vector<int>& images) {
    if (depth == gens.size()) return true;
    for (int h : into.elements) {
        ModMonoState next = state;
        if (!next.extend(fromm, intom, gens[depth], h)) continue;
        images.push_back(h);
        if (mono_search(fromm, intom, gens, into, depth + 1, next, images))
            return true;
        images.pop_back();
    }
    return false;
}

std::vector<int> submodule_annihilator(const Submodule& m) {
    const RightModule& big = *m.parent;
    std::vector<int> out;
    for (int s = 0; s < big.ring().size(); ++s) {
        bool kills = true;
        for (int x : m.elements)
            if (big.act(x, s) != big.zero()) {
                kills = false;
                break;
            }
        if (kills) out.push_back(s);
    }
    return out;
}

}  // namespace

std::optional<ModuleMono> module_mono(const Submodule& from,
                                      const Submodule& into) {
    if (&from.parent->ring() != &into.parent->ring())
        throw std::invalid_argument("module_mono: modules over different rings");
    if (from.size() > into.size()) return std::nullopt;
    // necessary: whatever kills the target kills the source
    auto ann_into = submodule_annihilator(into);
    auto ann_from = submodule_annihilator(from);
    if (!std::includes(ann_from.begin(), ann_from.end(), ann_into.begin(),
                       ann_into.end()))
        return std::nullopt;
    auto gens = module_generating_set(from);
    if (gens.empty()) return ModuleMono{};  // zero module, zero map
    std::vector<int> images;
    if (!mono_search(*from.parent, *into.parent, gens, into, 0,
                     ModMonoState::initial(*from.parent, *into.parent), images))
        return std::nullopt;
    ModuleMono w;
    for (size_t i = 0; i < gens.size(); ++i) w.emplace_back(gens[i], images[i]);
    return w;
}

std::optional<std::vector<std::pair<int, int>>> expand_module_mono(
    const Submodule& from, const Submodule& into, const ModuleMono& w) {
    ModMonoState st = ModMonoState::initial(*from.parent, *into.parent);
    for (auto [g, h] : w) {
        if (!from.contains(g) || !into.contains(h)) return std::nullopt;
        if (!st.extend(*from.parent, *into.parent, g, h)) return std::nullopt;
    }
    if (st.domain.size() != from.elements.size()) return std::nullopt;
    for (int x : from.elements)
        for (int y : from.elements) {
            int lhs = st.image[static_cast<size_t>(from.parent->add(x, y))];
            int rhs = into.parent->add(st.image[static_cast<size_t>(x)],
                                       st.image[static_cast<size_t>(y)]);
            if (lhs != rhs) return std::nullopt;
        }
    for (int x : from.elements)
        for (int s = 0; s < from.parent->ring().size(); ++s) {
            int lhs = st.image[static_cast<size_t>(from.parent->act(x, s))];
            int rhs = into.parent->act(st.image[static_cast<size_t>(x)], s);
            if (lhs != rhs) return std::nullopt;
        }
    std::vector<std::pair<int, int>> out;
    for (int x : from.elements)
        out.emplace_back(x, st.image[static_cast<size_t>(x)]);
    return out;
}

// ---------------------------------------------------------------------------
// ideals and ring predicates

namespace {

void check_ring_cap(const FiniteRing& r, int cap) {
    if (r.size() > cap)
        throw CapExceeded("ring of order " + std::to_string(r.size()) +
                          " exceeds cap " + std::to_string(cap));
}

std::vector<ElementSet> submodule_sets(const RightModule& m) {
    std::vector<ElementSet> out;
    for (auto& s : enumerate_submodules(m)) out.push_back(std::move(s.elements));
    return out;
}

bool set_contains(const ElementSet& a, const ElementSet& b) {  // b inside a
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<ElementSet> maximal_right_ideals(const std::vector<ElementSet>& ideals,
                                             int ring_size) {
    std::vector<ElementSet> proper;
    for (const auto& i : ideals)
        if (static_cast<int>(i.size()) < ring_size) proper.push_back(i);
    std::vector<ElementSet> maximal;
    for (const auto& i : proper) {
        bool top = true;
        for (const auto& j : proper)
            if (i != j && set_contains(j, i)) {
                top = false;
                break;
            }
        if (top) maximal.push_back(i);
    }
    return maximal;
}

std::vector<ElementSet> minimal_right_ideals(const std::vector<ElementSet>& ideals) {
    std::vector<ElementSet> minimal;
    for (const auto& i : ideals) {
        if (i.size() <= 1) continue;
        bool bottom = true;
        for (const auto& j : ideals)
            if (j.size() > 1 && i != j && set_contains(i, j)) {
                bottom = false;
                break;
            }
        if (bottom) minimal.push_back(i);
    }
    return minimal;
}

}  // namespace

std::vector<ElementSet> enumerate_right_ideals(const FiniteRing& r, int cap) {
    check_ring_cap(r, cap);
    RightModule reg = RightModule::regular(r);
    return submodule_sets(reg);
}

std::vector<ElementSet> enumerate_left_ideals(const FiniteRing& r, int cap) {
    // left ideals are the right ideals of the opposite ring, as subsets
    return enumerate_right_ideals(r.opposite(), cap);
}

ElementSet right_annihilator(const FiniteRing& r, const ElementSet& xs) {
    ElementSet out;
    for (int s = 0; s < r.size(); ++s) {
        bool kills = true;
        for (int x : xs)
            if (r.mul(x, s) != r.zero()) {
                kills = false;
                break;
            }
        if (kills) out.push_back(s);
    }
    return out;
}

std::optional<ModuleMono> exists_right_module_mono(const FiniteRing& r,
                                                   const ElementSet& i,
                                                   const ElementSet& j) {
    RightModule reg = RightModule::regular(r);
    return module_mono(Submodule{&reg, i}, Submodule{&reg, j});
}

RingWuVerdict is_right_weakly_uniserial(const FiniteRing& r, int cap) {
    check_ring_cap(r, cap);
    RightModule reg = RightModule::regular(r);
    auto ideals = enumerate_submodules(reg);
    for (size_t j = 1; j < ideals.size(); ++j)
        for (size_t i = 0; i < j; ++i) {
            if (module_mono(ideals[i], ideals[j]) ||
                module_mono(ideals[j], ideals[i]))
                continue;
            return RingWuVerdict{
                false, std::make_pair(ideals[i].elements, ideals[j].elements)};
        }
    return RingWuVerdict{true, std::nullopt};
}

RingWuVerdict is_left_weakly_uniserial(const FiniteRing& r, int cap) {
    return is_right_weakly_uniserial(r.opposite(), cap);
}

std::vector<int> central_idempotents(const FiniteRing& r) {
    std::vector<int> out;
    for (int e = 0; e < r.size(); ++e) {
        if (r.mul(e, e) != e) continue;
        bool central = true;
        for (int x = 0; x < r.size() && central; ++x)
            if (r.mul(e, x) != r.mul(x, e)) central = false;
        if (central) out.push_back(e);
    }
    return out;
}

ElementSet jacobson_radical(const FiniteRing& r, int cap) {
    auto ideals = enumerate_right_ideals(r, cap);
    ElementSet j;
    bool first = true;
    for (const auto& m : maximal_right_ideals(ideals, r.size())) {
        if (first) {
            j = m;
            first = false;
            continue;
        }
        ElementSet next;
        std::set_intersection(j.begin(), j.end(), m.begin(), m.end(),
                              std::back_inserter(next));
        j = std::move(next);
    }
    if (first) j = {r.zero()};
    return j;
}

ElementSet socle_right(const FiniteRing& r, int cap) {
    check_ring_cap(r, cap);
    RightModule reg = RightModule::regular(r);
    auto ideals = submodule_sets(reg);
    Submodule soc = zero_submodule(reg);
    for (const auto& m : minimal_right_ideals(ideals))
        soc = submodule_sum(soc, Submodule{&reg, m});
    return soc.elements;
}

bool is_local(const FiniteRing& r, int cap) {
    auto ideals = enumerate_right_ideals(r, cap);
    return maximal_right_ideals(ideals, r.size()).size() == 1;
}

bool is_kasch_right(const FiniteRing& r, int cap) {
    check_ring_cap(r, cap);
    RightModule reg = RightModule::regular(r);
    auto ideals = submodule_sets(reg);
    auto minimals = minimal_right_ideals(ideals);
    for (const auto& m : maximal_right_ideals(ideals, r.size())) {
        RightModule q = RightModule::quotient(reg, m);
        bool embedded = false;
        for (const auto& iset : minimals) {
            if (iset.size() != static_cast<size_t>(q.size())) continue;
            if (module_mono(whole_module(q), Submodule{&reg, iset})) {
                embedded = true;
                break;
            }
        }
        if (!embedded) return false;
    }
    return true;
}

bool is_prime(const FiniteRing& r) {
    for (int a = 0; a < r.size(); ++a) {
        if (a == r.zero()) continue;
        for (int b = 0; b < r.size(); ++b) {
            if (b == r.zero()) continue;
            bool nonzero = false;
            for (int x = 0; x < r.size(); ++x)
                if (r.mul(r.mul(a, x), b) != r.zero()) {
                    nonzero = true;
                    break;
                }
            if (!nonzero) return false;
        }
    }
    return true;
}

bool is_semiprime(const FiniteRing& r) {
    for (int a = 0; a < r.size(); ++a) {
        if (a == r.zero()) continue;
        bool nonzero = false;
        for (int x = 0; x < r.size(); ++x)
            if (r.mul(r.mul(a, x), a) != r.zero()) {
                nonzero = true;
                break;
            }
        if (!nonzero) return false;
    }
    return true;
}

bool is_right_uniserial(const FiniteRing& r, int cap) {
    auto ideals = enumerate_right_ideals(r, cap);
    for (size_t i = 0; i < ideals.size(); ++i)
        for (size_t j = i + 1; j < ideals.size(); ++j)
            if (!set_contains(ideals[i], ideals[j]) &&
                !set_contains(ideals[j], ideals[i]))
                return false;
    return true;
}

bool is_left_uniserial(const FiniteRing& r, int cap) {
    return is_right_uniserial(r.opposite(), cap);
}

bool every_module_weakly_uniserial(const FiniteRing& r, int cap) {
    check_ring_cap(r, cap);
    if (jacobson_radical(r, cap) != ElementSet{r.zero()}) return false;
    RightModule reg = RightModule::regular(r);
    auto ideals = submodule_sets(reg);
    auto maximals = maximal_right_ideals(ideals, r.size());
    if (maximals.size() <= 1) return true;
    RightModule q0 = RightModule::quotient(reg, maximals[0]);
    for (size_t k = 1; k < maximals.size(); ++k) {
        RightModule qk = RightModule::quotient(reg, maximals[k]);
        if (q0.size() != qk.size()) return false;
        if (!module_mono(whole_module(q0), whole_module(qk))) return false;
    }
    return true;
}

std::optional<TwoGenWitness> check_2generated_counterexample(const FiniteRing& r,
                                                             int module_cap) {
    if (static_cast<long long>(r.size()) * r.size() > module_cap)
        throw CapExceeded(
            "R + R of order " +
            std::to_string(static_cast<long long>(r.size()) * r.size()) +
            " exceeds module cap " + std::to_string(module_cap));
    RightModule m2 = RightModule::direct_square(r);
    auto subs = enumerate_submodules(m2);
    const int n = r.size();
    auto decode = [&](const Submodule& s) {
        std::vector<std::pair<int, int>> out;
        for (int x : s.elements) out.emplace_back(x / n, x % n);
        return out;
    };
    for (size_t j = 1; j < subs.size(); ++j)
        for (size_t i = 0; i < j; ++i) {
            if (module_mono(subs[i], subs[j]) || module_mono(subs[j], subs[i]))
                continue;
            return TwoGenWitness{decode(subs[i]), decode(subs[j])};
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// presets

namespace {

FiniteRing make_zn(int n, std::string name) {
    std::vector<std::vector<int>> add(static_cast<size_t>(n),
                                      std::vector<int>(static_cast<size_t>(n)));
    auto mul = add;
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b) {
            add[a][b] = (a + b) % n;
            mul[a][b] = (a * b) % n;
        }
    }
    return FiniteRing(std::move(add), std::move(mul), std::move(name),
                      std::move(names));
}

FiniteRing make_f4() {
    // F_2[a] with a^2 = a + 1; element c0 + c1*a encoded as c0 + 2*c1
    std::vector<std::vector<int>> add(4, std::vector<int>(4)), mul = add;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            add[x][y] = x ^ y;
            int c0 = x & 1, c1 = x >> 1, d0 = y & 1, d1 = y >> 1;
            int e0 = (c0 * d0 + c1 * d1) & 1;
            int e1 = (c0 * d1 + c1 * d0 + c1 * d1) & 1;
            mul[x][y] = e0 + 2 * e1;
        }
    return FiniteRing(std::move(add), std::move(mul), "f4",
                      {"0", "1", "a", "a+1"});
}

FiniteRing make_m2f2() {
    // [[a,b],[c,d]] over F_2, encoded a + 2b + 4c + 8d
    std::vector<std::vector<int>> add(16, std::vector<int>(16)), mul = add;
    std::vector<std::string> names;
    auto bits = [](int x) {
        return std::array<int, 4>{x & 1, (x >> 1) & 1, (x >> 2) & 1,
                                  (x >> 3) & 1};
    };
    for (int x = 0; x < 16; ++x) {
        auto [a, b, c, d] = bits(x);
        names.push_back("[[" + std::to_string(a) + "," + std::to_string(b) +
                        "],[" + std::to_string(c) + "," + std::to_string(d) +
                        "]]");
        for (int y = 0; y < 16; ++y) {
            auto [e, f, g, h] = bits(y);
            add[x][y] = x ^ y;
            int pa = (a * e + b * g) & 1, pb = (a * f + b * h) & 1;
            int pc = (c * e + d * g) & 1, pd = (c * f + d * h) & 1;
            mul[x][y] = pa + 2 * pb + 4 * pc + 8 * pd;
        }
    }
    return FiniteRing(std::move(add), std::move(mul), "m2f2", std::move(names));
}

FiniteRing make_t2f2() {
    // upper triangular [[a,b],[0,d]] over F_2, encoded a + 2b + 4d
    std::vector<std::vector<int>> add(8, std::vector<int>(8)), mul = add;
    std::vector<std::string> names;
    for (int x = 0; x < 8; ++x) {
        int a = x & 1, b = (x >> 1) & 1, d = (x >> 2) & 1;
        names.push_back("[[" + std::to_string(a) + "," + std::to_string(b) +
                        "],[0," + std::to_string(d) + "]]");
        for (int y = 0; y < 8; ++y) {
            int e = y & 1, f = (y >> 1) & 1, h = (y >> 2) & 1;
            add[x][y] = x ^ y;
            int pa = a & e, pb = (a * f + b * h) & 1, pd = d & h;
            mul[x][y] = pa + 2 * pb + 4 * pd;
        }
    }
    return FiniteRing(std::move(add), std::move(mul), "t2f2", std::move(names));
}

std::string term_sum_name(
    const std::vector<std::pair<int, const char*>>& terms) {
    std::string s;
    for (auto [on, t] : terms)
        if (on) {
            if (!s.empty()) s += "+";
            s += t;
        }
    return s.empty() ? "0" : s;
}

FiniteRing make_struct3f2() {
    // scalar 3x3 matrices over F_2 plus corner entries u = e13, v = e23:
    // (a,b,c)(a',b',c') = (aa', ab'+a'b, ac'+a'c), encoded a + 2b + 4c
    std::vector<std::vector<int>> add(8, std::vector<int>(8)), mul = add;
    std::vector<std::string> names;
    for (int x = 0; x < 8; ++x) {
        int a = x & 1, b = (x >> 1) & 1, c = (x >> 2) & 1;
        names.push_back(term_sum_name({{a, "1"}, {b, "u"}, {c, "v"}}));
        for (int y = 0; y < 8; ++y) {
            int e = y & 1, f = (y >> 1) & 1, g = (y >> 2) & 1;
            add[x][y] = x ^ y;
            int pa = a & e, pb = (a * f + e * b) & 1, pc = (a * g + e * c) & 1;
            mul[x][y] = pa + 2 * pb + 4 * pc;
        }
    }
    return FiniteRing(std::move(add), std::move(mul), "struct3f2",
                      std::move(names));
}

FiniteRing make_kxyf2() {
    // F_2[x,y] / (x^3, y^3, xy): basis 1, x, x^2, y, y^2, order 32
    std::vector<std::vector<int>> add(32, std::vector<int>(32)), mul = add;
    std::vector<std::string> names;
    auto coef = [](int v, int i) { return (v >> i) & 1; };
    for (int p = 0; p < 32; ++p) {
        names.push_back(term_sum_name({{coef(p, 0), "1"},
                                       {coef(p, 1), "x"},
                                       {coef(p, 2), "x^2"},
                                       {coef(p, 3), "y"},
                                       {coef(p, 4), "y^2"}}));
        for (int q = 0; q < 32; ++q) {
            add[p][q] = p ^ q;
            int a0 = coef(p, 0), a1 = coef(p, 1), a2 = coef(p, 2),
                a3 = coef(p, 3), a4 = coef(p, 4);
            int b0 = coef(q, 0), b1 = coef(q, 1), b2 = coef(q, 2),
                b3 = coef(q, 3), b4 = coef(q, 4);
            int c0 = (a0 * b0) & 1;
            int c1 = (a0 * b1 + a1 * b0) & 1;
            int c2 = (a0 * b2 + a2 * b0 + a1 * b1) & 1;
            int c3 = (a0 * b3 + a3 * b0) & 1;
            int c4 = (a0 * b4 + a4 * b0 + a3 * b3) & 1;
            mul[p][q] = c0 + 2 * c1 + 4 * c2 + 8 * c3 + 16 * c4;
        }
    }
    return FiniteRing(std::move(add), std::move(mul), "kxyf2", std::move(names));
}

}  // namespace

FiniteRing preset(std::string_view name) {
    if (name == "f2") return make_zn(2, "f2");
    if (name == "f3") return make_zn(3, "f3");
    if (name == "f4") return make_f4();
    if (name == "f5") return make_zn(5, "f5");
    if (name == "m2f2") return make_m2f2();
    if (name == "t2f2") return make_t2f2();
    if (name == "struct3f2") return make_struct3f2();
    if (name == "kxyf2") return make_kxyf2();
    if (name.size() > 1 && name[0] == 'z') {
        int n = 0;
        for (char ch : name.substr(1)) {
            if (ch < '0' || ch > '9') {
                n = 0;
                break;
            }
            n = n * 10 + (ch - '0');
        }
        if (n >= 2 && n <= 256) return make_zn(n, std::string(name));
    }
    throw std::invalid_argument("unknown ring preset '" + std::string(name) + "'");
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "z4", "z6",   "z8",   "f2",        "f3",   "f4",
        "f5", "m2f2", "t2f2", "struct3f2", "kxyf2"};
    return names;
}

}  // namespace wu::ring
