#include "wu/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wu::oracle {

ConcreteGroup::ConcreteGroup(std::vector<int> cyclic_orders, int cap)
    : orders_(std::move(cyclic_orders)) {
    if (cap > kHardGroupCap) cap = kHardGroupCap;
    long long n = 1;
    for (int o : orders_) {
        if (o < 2)
            throw std::invalid_argument("ConcreteGroup: cyclic orders must be >= 2");
        n *= o;
        if (n > cap)
            throw CapExceeded("group of order " + std::to_string(n) +
                              " exceeds cap " + std::to_string(cap));
    }
    n_ = static_cast<int>(n);
    add_.resize(static_cast<size_t>(n_) * n_);
    neg_.resize(static_cast<size_t>(n_));
    ord_.resize(static_cast<size_t>(n_));
    // mixed-radix componentwise tables
    std::vector<int> ta(orders_.size()), tb(orders_.size());
    for (int a = 0; a < n_; ++a) {
        int x = a;
        for (size_t i = orders_.size(); i-- > 0;) {
            ta[i] = x % orders_[i];
            x /= orders_[i];
        }
        int neg = 0;
        for (size_t i = 0; i < orders_.size(); ++i)
            neg = neg * orders_[i] + (orders_[i] - ta[i]) % orders_[i];
        neg_[static_cast<size_t>(a)] = neg;
        int ord = 1;
        for (size_t i = 0; i < orders_.size(); ++i) {
            int oi = orders_[i] / std::gcd(ta[i], orders_[i]);
            ord = ord / std::gcd(ord, oi) * oi;
        }
        ord_[static_cast<size_t>(a)] = ord;
        for (int b = 0; b < n_; ++b) {
            int y = b;
            for (size_t i = orders_.size(); i-- > 0;) {
                tb[i] = y % orders_[i];
                y /= orders_[i];
            }
            int s = 0;
            for (size_t i = 0; i < orders_.size(); ++i)
                s = s * orders_[i] + (ta[i] + tb[i]) % orders_[i];
            add_[static_cast<size_t>(a) * n_ + b] = s;
        }
    }
}

ConcreteGroup ConcreteGroup::from_fg(const FgZModule& m, int cap) {
    if (m.free_rank() > 0)
        throw std::invalid_argument("ConcreteGroup::from_fg: module is infinite");
    std::vector<int> orders;
    for (const auto& [p, lam] : m.torsion()) {
        auto parts = lam.parts();
        std::reverse(parts.begin(), parts.end());  // ascending
        for (int e : parts) {
            long long o = 1;
            for (int i = 0; i < e; ++i) {
                o *= p;
                if (o > kHardGroupCap)
                    throw CapExceeded("cyclic factor exceeds hard cap");
            }
            orders.push_back(static_cast<int>(o));
        }
    }
    return ConcreteGroup(std::move(orders), cap);
}

int ConcreteGroup::times(int a, int k) const {
    int r = 0;
    k %= element_order(a);
    if (k < 0) k += element_order(a);
    for (int i = 0; i < k; ++i) r = add(r, a);
    return r;
}

std::vector<int> ConcreteGroup::tuple(int a) const {
    std::vector<int> t(orders_.size());
    for (size_t i = orders_.size(); i-- > 0;) {
        t[i] = a % orders_[i];
        a /= orders_[i];
    }
    return t;
}

std::string ConcreteGroup::show(int a) const {
    auto t = tuple(a);
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

bool Subgroup::contains(int x) const {
    return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup whole_group(const ConcreteGroup& g) {
    Subgroup s{&g, std::vector<int>(static_cast<size_t>(g.size()))};
    std::iota(s.elements.begin(), s.elements.end(), 0);
    return s;
}

Subgroup trivial_subgroup(const ConcreteGroup& g) { return Subgroup{&g, {0}}; }

namespace {

// <H, g> = union of the cosets H + k*g, k = 0 .. min{k : k*g in H} - 1.
std::vector<int> extend(const ConcreteGroup& g, const std::vector<int>& h,
                        int x, std::vector<char>& member) {
    std::vector<int> out = h;
    int off = x;
    while (!member[static_cast<size_t>(off)]) {
        for (int e : h) {
            int y = g.add(e, off);
            member[static_cast<size_t>(y)] = 1;
            out.push_back(y);
        }
        off = g.add(off, x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<char> membership(const ConcreteGroup& g, const std::vector<int>& h) {
    std::vector<char> m(static_cast<size_t>(g.size()), 0);
    for (int e : h) m[static_cast<size_t>(e)] = 1;
    return m;
}

}  // namespace

Subgroup closure(const ConcreteGroup& g, const std::vector<int>& generators) {
    std::vector<int> h{0};
    auto member = membership(g, h);
    for (int x : generators)
        if (!member[static_cast<size_t>(x)]) h = extend(g, h, x, member);
    return Subgroup{&g, std::move(h)};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    Subgroup out{a.parent, {}};
    std::set_intersection(a.elements.begin(), a.elements.end(),
                          b.elements.begin(), b.elements.end(),
                          std::back_inserter(out.elements));
    return out;
}

std::vector<Subgroup> enumerate_subgroups_within(const Subgroup& ambient) {
    const ConcreteGroup& g = *ambient.parent;
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue{{0}};
    seen.insert(queue.front());
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<int> h = queue[qi];
        if (h.size() == ambient.elements.size()) continue;
        // try one representative per coset of h inside the ambient group
        std::vector<char> covered(static_cast<size_t>(g.size()), 0);
        for (int e : h) covered[static_cast<size_t>(e)] = 1;
        for (int x : ambient.elements) {
            if (covered[static_cast<size_t>(x)]) continue;
            for (int e : h) covered[static_cast<size_t>(g.add(x, e))] = 1;
            auto member = membership(g, h);
            auto h2 = extend(g, h, x, member);
            if (seen.insert(h2).second) queue.push_back(std::move(h2));
        }
    }
    std::vector<Subgroup> out;
    out.reserve(queue.size());
    for (auto& e : seen) out.push_back(Subgroup{&g, e});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size())
            return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

std::vector<Subgroup> enumerate_subgroups(const ConcreteGroup& g) {
    return enumerate_subgroups_within(whole_group(g));
}

namespace {

// Conjugate of a weakly decreasing sequence.
std::vector<int> conjugate(const std::vector<int>& u) {
    std::vector<int> lam;
    for (int j = 1; !u.empty() && u[0] >= j; ++j) {
        int c = 0;
        for (int v : u)
            if (v >= j) ++c;
        lam.push_back(c);
    }
    return lam;
}

}  // namespace

FgZModule isomorphism_type(const Subgroup& h) {
    const ConcreteGroup& g = *h.parent;
    long long n = h.size();
    FgZModule out;
    for (auto [p, e] : factorize(n)) {
        // c_i = #{x : ord(x) divides p^i}; log_p ratios give the conjugate
        // partition.
        std::vector<int> u;
        long long pi = 1;
        long long prev = 1;
        for (int i = 1; i <= e; ++i) {
            pi *= p;
            long long c = 0;
            for (int x : h.elements) {
                int o = g.element_order(x);
                if (pi % o == 0) ++c;
            }
            if (c == prev) break;
            int steps = 0;
            while (prev < c) {
                prev *= p;
                ++steps;
            }
            u.push_back(steps);
        }
        out = out.direct_sum(FgZModule::primary(p, Partition(conjugate(u))));
    }
    return out;
}

FgZModule isomorphism_type(const ConcreteGroup& g) {
    return isomorphism_type(whole_group(g));
}

namespace {

// Partial monomorphism state under construction; domain/used are indexed by
// parent element, -1 meaning unassigned.
struct MonoState {
    std::vector<int> image;     // per element of the source parent
    std::vector<char> used;     // per element of the target parent
    std::vector<int> domain;    // elements with image assigned

    static MonoState initial(const ConcreteGroup& from, const ConcreteGroup& into) {
        MonoState s;
        s.image.assign(static_cast<size_t>(from.size()), -1);
        s.used.assign(static_cast<size_t>(into.size()), 0);
        s.image[0] = 0;
        s.used[0] = 1;
        s.domain = {0};
        return s;
    }

    // Extends f by g -> h: finds k0 = min{k : k*g in domain}, checks the
    // anchor relation f(k0*g) == k0*h, then fills the new cosets, failing on
    // any image collision.
    bool extend(const ConcreteGroup& from, const ConcreteGroup& into, int gen,
                int img) {
        int k0 = 1;
        int m = gen;
        while (image[static_cast<size_t>(m)] < 0) {
            m = from.add(m, gen);
            ++k0;
        }
        int anchor = 0;
        for (int i = 0; i < k0; ++i) anchor = into.add(anchor, img);
        if (image[static_cast<size_t>(m)] != anchor) return false;
        const std::vector<int> base = domain;
        int off = gen, imoff = img;
        for (int k = 1; k < k0; ++k) {
            for (int x : base) {
                int y = from.add(x, off);
                int v = into.add(image[static_cast<size_t>(x)], imoff);
                if (used[static_cast<size_t>(v)]) return false;
                image[static_cast<size_t>(y)] = v;
                used[static_cast<size_t>(v)] = 1;
                domain.push_back(y);
            }
            off = from.add(off, gen);
            imoff = into.add(imoff, img);
        }
        return true;
    }
};

// Module-generating set found greedily, highest element order first.
std::vector<int> generating_set(const Subgroup& h) {
    const ConcreteGroup& g = *h.parent;
    std::vector<int> order = h.elements;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.element_order(a) > g.element_order(b);
    });
    std::vector<int> gens;
    std::vector<int> span{0};
    auto member = membership(g, span);
    for (int x : order)
        if (!member[static_cast<size_t>(x)]) {
            gens.push_back(x);
            span = extend(g, span, x, member);
            if (span.size() == h.elements.size()) break;
        }
    return gens;
}

bool search(const ConcreteGroup& fromg, const ConcreteGroup& intog,
            const std::vector<int>& gens, const Subgroup& into, size_t depth,
            const MonoState& state, std::vector<int>& images) {
    if (depth == gens.size()) return true;
    int gen = gens[depth];
    int gord = fromg.element_order(gen);
    for (int h : into.elements) {
        if (gord % intog.element_order(h) != 0) continue;
        MonoState next = state;
        if (!next.extend(fromg, intog, gen, h)) continue;
        images.push_back(h);
        if (search(fromg, intog, gens, into, depth + 1, next, images))
            return true;
        images.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Monomorphism> exists_monomorphism(const Subgroup& from,
                                                const Subgroup& into) {
    if (from.size() > into.size()) return std::nullopt;
    auto gens = generating_set(from);
    if (gens.empty()) return Monomorphism{};  // trivial source, zero map
    std::vector<int> images;
    if (!search(*from.parent, *into.parent, gens, into, 0,
                MonoState::initial(*from.parent, *into.parent), images))
        return std::nullopt;
    Monomorphism m;
    for (size_t i = 0; i < gens.size(); ++i)
        m.generator_images.emplace_back(gens[i], images[i]);
    return m;
}

std::optional<Monomorphism> exists_monomorphism(const ConcreteGroup& from,
                                                const ConcreteGroup& into) {
    return exists_monomorphism(whole_group(from), whole_group(into));
}

std::optional<std::vector<std::pair<int, int>>> expand_monomorphism(
    const Subgroup& from, const Subgroup& into, const Monomorphism& m) {
    const ConcreteGroup& fromg = *from.parent;
    const ConcreteGroup& intog = *into.parent;
    MonoState st = MonoState::initial(fromg, intog);
    for (auto [g, h] : m.generator_images) {
        if (!from.contains(g) || !into.contains(h)) return std::nullopt;
        if (!st.extend(fromg, intog, g, h)) return std::nullopt;
    }
    if (st.domain.size() != from.elements.size()) return std::nullopt;
    // full additivity check, a belt-and-braces verification for tests
    for (int x : from.elements)
        for (int y : from.elements) {
            int lhs = st.image[static_cast<size_t>(fromg.add(x, y))];
            int rhs = intog.add(st.image[static_cast<size_t>(x)],
                                st.image[static_cast<size_t>(y)]);
            if (lhs != rhs) return std::nullopt;
        }
    std::vector<std::pair<int, int>> out;
    for (int x : from.elements)
        out.emplace_back(x, st.image[static_cast<size_t>(x)]);
    return out;
}

OracleVerdict is_weakly_uniserial_oracle(const ConcreteGroup& g) {
    auto subs = enumerate_subgroups(g);
    std::vector<FgZModule> types(subs.size());
    std::map<FgZModule, size_t> rep;  // type -> representative index
    for (size_t i = 0; i < subs.size(); ++i) {
        types[i] = isomorphism_type(subs[i]);
        rep.emplace(types[i], i);
    }
    std::map<std::pair<FgZModule, FgZModule>, bool> embeds;
    auto embeds_memo = [&](const FgZModule& a, const FgZModule& b) {
        auto key = std::make_pair(a, b);
        auto it = embeds.find(key);
        if (it != embeds.end()) return it->second;
        bool v = exists_monomorphism(subs[rep.at(a)], subs[rep.at(b)]).has_value();
        embeds.emplace(std::move(key), v);
        return v;
    };
    auto comparable = [&](const FgZModule& a, const FgZModule& b) {
        return embeds_memo(a, b) || embeds_memo(b, a);
    };
    bool ok = true;
    for (auto i = rep.begin(); i != rep.end() && ok; ++i)
        for (auto j = std::next(i); j != rep.end() && ok; ++j)
            if (!comparable(i->first, j->first)) ok = false;
    if (ok) return OracleVerdict{true, std::nullopt};
    // minimal witness: scan unordered pairs by |N|+|K| ascending, then
    // lexicographically on the element sets (subs is already so sorted)
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < subs.size(); ++i)
        for (size_t j = i + 1; j < subs.size(); ++j) pairs.emplace_back(i, j);
    std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
        int sa = subs[a.first].size() + subs[a.second].size();
        int sb = subs[b.first].size() + subs[b.second].size();
        if (sa != sb) return sa < sb;
        if (subs[a.first].elements != subs[b.first].elements)
            return subs[a.first].elements < subs[b.first].elements;
        return subs[a.second].elements < subs[b.second].elements;
    });
    for (auto [i, j] : pairs)
        if (!comparable(types[i], types[j]))
            return OracleVerdict{false, std::make_pair(subs[i], subs[j])};
    return OracleVerdict{true, std::nullopt};  // unreachable
}

namespace {

// Annihilator of a finite Z-module is (exponent)Z.
long long exponent_of(const Subgroup& h) {
    long long e = 1;
    for (int x : h.elements) {
        long long o = h.parent->element_order(x);
        e = std::lcm(e, o);
    }
    return e;
}

}  // namespace

bool is_prime_module(const Subgroup& h) {
    if (h.size() <= 1) return false;
    long long ann = exponent_of(h);
    for (const auto& sub : enumerate_subgroups_within(h)) {
        if (sub.size() <= 1) continue;
        if (exponent_of(sub) != ann) return false;
    }
    return true;
}

std::set<long long> associated_primes(const Subgroup& ambient) {
    std::set<long long> out;
    auto subs = enumerate_subgroups_within(ambient);  // sorted small-first
    for (const auto& h : subs) {
        if (h.size() <= 1) continue;
        long long e = exponent_of(h);
        // a finite prime module has prime exponent, so only those candidates
        // need the full annihilator scan
        if (!is_prime_number(e) || out.count(e)) continue;
        if (is_prime_module(h)) out.insert(e);
    }
    return out;
}

std::set<long long> associated_primes(const ConcreteGroup& g) {
    return associated_primes(whole_group(g));
}

Subgroup socle(const ConcreteGroup& g) {
    std::vector<int> el;
    for (int x = 0; x < g.size(); ++x) {
        int o = g.element_order(x);
        bool squarefree = true;
        for (auto [p, e] : factorize(o))
            if (e > 1) squarefree = false;
        if (squarefree) el.push_back(x);
    }
    return Subgroup{&g, std::move(el)};
}

bool is_essential(const Subgroup& h, const ConcreteGroup& g) {
    // N ∩ H = 0 for some nonzero N iff it fails for some nonzero cyclic N
    for (int x = 1; x < g.size(); ++x) {
        auto cyc = closure(g, {x});
        bool meets = false;
        for (int y : cyc.elements)
            if (y != 0 && h.contains(y)) {
                meets = true;
                break;
            }
        if (!meets) return false;
    }
    return true;
}

bool socle_is_essential(const ConcreteGroup& g) {
    return is_essential(socle(g), g);
}

}  // namespace wu::oracle
