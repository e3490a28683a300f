#include "wu/sweeps.hpp"

#include "wu/classifier.hpp"
#include "wu/finring.hpp"
#include "wu/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <set>
#include <thread>

namespace wu::sweeps {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs fn over the items, possibly chunked across threads, concatenating the
// failure lists in item order.
template <typename Item, typename Fn>
std::vector<std::string> collect_failures(const std::vector<Item>& items,
                                          bool parallel, Fn fn) {
    if (!parallel || items.size() < 4) {
        std::vector<std::string> out;
        for (const auto& it : items) {
            auto f = fn(it);
            out.insert(out.end(), f.begin(), f.end());
        }
        return out;
    }
    unsigned workers = std::max(2u, std::thread::hardware_concurrency());
    std::vector<std::future<std::vector<std::string>>> futures;
    size_t chunk = (items.size() + workers - 1) / workers;
    for (size_t lo = 0; lo < items.size(); lo += chunk) {
        size_t hi = std::min(items.size(), lo + chunk);
        futures.push_back(std::async(std::launch::async, [&, lo, hi] {
            std::vector<std::string> out;
            for (size_t i = lo; i < hi; ++i) {
                auto f = fn(items[i]);
                out.insert(out.end(), f.begin(), f.end());
            }
            return out;
        }));
    }
    std::vector<std::string> out;
    for (auto& fut : futures) {
        auto f = fut.get();
        out.insert(out.end(), f.begin(), f.end());
    }
    return out;
}

std::vector<long long> primes_up_to(int pmax) {
    std::vector<long long> ps;
    for (long long p = 2; p <= pmax; ++p)
        if (is_prime_number(p)) ps.push_back(p);
    return ps;
}

}  // namespace

std::vector<Partition> partitions_of_total(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<FgZModule> pgroup_list(long long p, long long max_order) {
    std::vector<FgZModule> out;
    long long order = 1;
    for (int k = 0; order <= max_order; ++k) {
        for (const auto& lam : partitions_of_total(k))
            out.push_back(FgZModule::primary(p, lam));
        if (order > max_order / p) break;
        order *= p;
    }
    return out;
}

std::vector<FgZModule> abelian_list(long long max_order) {
    std::vector<FgZModule> out;
    for (long long n = 1; n <= max_order; ++n) {
        std::vector<FgZModule> partial{FgZModule{}};
        for (auto [p, e] : factorize(n)) {
            std::vector<FgZModule> next;
            for (const auto& lam : partitions_of_total(e))
                for (const auto& m : partial)
                    next.push_back(m.direct_sum(FgZModule::primary(p, lam)));
            partial = std::move(next);
        }
        out.insert(out.end(), partial.begin(), partial.end());
    }
    return out;
}

SweepResult sweep_thm55(int pmax, long long omax, int group_cap, bool parallel) {
    auto start = Clock::now();
    SweepResult res;
    res.name = "thm55";
    std::vector<FgZModule> groups;
    bool first_prime = true;
    for (long long p : primes_up_to(pmax)) {
        for (auto& m : pgroup_list(p, omax))
            if (!m.is_trivial() || first_prime) groups.push_back(std::move(m));
        first_prime = false;
    }
    res.cases = static_cast<long long>(groups.size());
    res.failures = collect_failures(groups, parallel, [&](const FgZModule& m) {
        std::vector<std::string> bad;
        bool c = is_weakly_uniserial_fg(m).weakly_uniserial;
        auto g = oracle::ConcreteGroup::from_fg(m, group_cap);
        bool o = oracle::is_weakly_uniserial_oracle(g).weakly_uniserial;
        if (c != o)
            bad.push_back(render(m) + ": classifier=" + (c ? "true" : "false") +
                          " oracle=" + (o ? "true" : "false"));
        return bad;
    });
    res.seconds = elapsed(start);
    return res;
}

SweepResult sweep_embed(int pmax, long long omax, int group_cap, bool parallel) {
    auto start = Clock::now();
    SweepResult res;
    res.name = "embed";
    std::vector<std::pair<FgZModule, FgZModule>> pairs;
    for (long long p : primes_up_to(pmax)) {
        auto list = pgroup_list(p, omax);
        for (const auto& m : list)
            for (const auto& n : list) pairs.emplace_back(m, n);
    }
    res.cases = static_cast<long long>(pairs.size());
    res.failures = collect_failures(pairs, parallel, [&](const auto& pr) {
        const auto& [m, n] = pr;
        std::vector<std::string> bad;
        long long p = m.torsion().empty()
                          ? (n.torsion().empty() ? 2 : n.torsion().begin()->first)
                          : m.torsion().begin()->first;
        bool fast = pgroup_embeds(m.primary_part(p), n.primary_part(p));
        auto gm = oracle::ConcreteGroup::from_fg(m, group_cap);
        auto gn = oracle::ConcreteGroup::from_fg(n, group_cap);
        bool slow = oracle::exists_monomorphism(gm, gn).has_value();
        if (fast != slow)
            bad.push_back(render(m) + " -> " + render(n) +
                          ": classifier=" + (fast ? "true" : "false") +
                          " oracle=" + (slow ? "true" : "false"));
        return bad;
    });
    res.seconds = elapsed(start);
    return res;
}

SweepResult sweep_prop51(long long omax, int group_cap, bool parallel) {
    auto start = Clock::now();
    SweepResult res;
    res.name = "prop51";
    std::vector<FgZModule> groups;
    for (auto& m : abelian_list(omax))
        if (m.torsion().size() >= 2) groups.push_back(std::move(m));
    res.cases = static_cast<long long>(groups.size());
    res.failures = collect_failures(groups, parallel, [&](const FgZModule& m) {
        std::vector<std::string> bad;
        auto v = is_weakly_uniserial_fg(m);
        if (v.weakly_uniserial || v.reason != WuReason::mixed_primes)
            bad.push_back(render(m) + ": classifier did not reject with mixed-primes");
        auto g = oracle::ConcreteGroup::from_fg(m, group_cap);
        if (oracle::is_weakly_uniserial_oracle(g).weakly_uniserial)
            bad.push_back(render(m) + ": oracle accepted a mixed-prime group");
        return bad;
    });
    res.seconds = elapsed(start);
    return res;
}

SweepResult sweep_module_invariants(long long omax, int group_cap,
                                    bool parallel) {
    auto start = Clock::now();
    SweepResult res;
    res.name = "module-invariants";
    auto groups = abelian_list(omax);
    res.cases = static_cast<long long>(groups.size());
    res.failures = collect_failures(groups, parallel, [&](const FgZModule& m) {
        std::vector<std::string> bad;
        const std::string name = render(m);
        auto g = oracle::ConcreteGroup::from_fg(m, group_cap);
        auto subs = oracle::enumerate_subgroups(g);
        std::set<FgZModule> subtypes;
        for (const auto& sub : subs)
            subtypes.insert(oracle::isomorphism_type(sub));

        // fg_embeds must characterize the subgroup types exactly
        for (const auto& t : subtypes)
            if (!fg_embeds(t, m))
                bad.push_back(name + ": subgroup type " + render(t) +
                              " does not register as embeddable");
        for (const auto& t : groups)
            if (fg_embeds(t, m) && !subtypes.count(t))
                bad.push_back(name + ": " + render(t) +
                              " registers as embeddable but is not a subgroup type");

        auto overdict = oracle::is_weakly_uniserial_oracle(g);
        bool o = overdict.weakly_uniserial;
        bool c = is_weakly_uniserial_fg(m).weakly_uniserial;
        if (c != o) bad.push_back(name + ": classifier/oracle divergence");
        if (m.torsion().size() >= 2 && o)
            bad.push_back(name + ": mixed-prime group accepted");
        if (!o) return bad;

        if (oracle::associated_primes(g).size() > 1)
            bad.push_back(name + ": |Ass| > 1 on a weakly uniserial group");
        if (!m.is_trivial()) {
            auto soc = oracle::socle(g);
            if (!oracle::is_essential(soc, g))
                bad.push_back(name + ": socle is not essential");
            if (oracle::associated_primes(soc).size() > 1)
                bad.push_back(name + ": socle is not homogeneous");
            for (const auto& sub : subs) {
                if (sub.size() <= 1) continue;
                bool in_soc = std::includes(soc.elements.begin(),
                                            soc.elements.end(),
                                            sub.elements.begin(),
                                            sub.elements.end());
                bool contains_soc = std::includes(sub.elements.begin(),
                                                  sub.elements.end(),
                                                  soc.elements.begin(),
                                                  soc.elements.end());
                if (!in_soc && !contains_soc) {
                    bad.push_back(name + ": subgroup incomparable with socle");
                    break;
                }
            }
        }
        // every embedded shape of a weakly uniserial module is one
        for (const auto& t : subtypes)
            if (!is_weakly_uniserial_fg(t).weakly_uniserial)
                bad.push_back(name + ": embedded shape " + render(t) +
                              " not weakly uniserial");
        return bad;
    });
    res.seconds = elapsed(start);
    return res;
}

namespace {

using ring::ElementSet;
using ring::FiniteRing;

bool product_set_vanishes(const FiniteRing& r, const ElementSet& xs) {
    for (int a : xs)
        for (int b : xs)
            if (r.mul(a, b) != r.zero()) return false;
    return true;
}

bool has_principal_maximal_right_ideal(const FiniteRing& r, int cap) {
    ring::RightModule reg = ring::RightModule::regular(r);
    auto ideals = ring::enumerate_right_ideals(r, cap);
    std::vector<ElementSet> proper;
    for (const auto& i : ideals)
        if (static_cast<int>(i.size()) < r.size()) proper.push_back(i);
    for (const auto& i : proper) {
        bool maximal = true;
        for (const auto& j : proper)
            if (i != j &&
                std::includes(j.begin(), j.end(), i.begin(), i.end()))
                maximal = false;
        if (!maximal) continue;
        for (int x = 0; x < r.size(); ++x)
            if (ring::principal_submodule(reg, x).elements == i) return true;
    }
    return false;
}

}  // namespace

SweepResult sweep_ring_invariants(int ring_cap, int module_cap) {
    auto start = Clock::now();
    SweepResult res;
    res.name = "ring-invariants";
    for (const auto& preset_name : ring::preset_names()) {
        ++res.cases;
        FiniteRing r = ring::preset(preset_name);
        auto fail = [&](const std::string& what) {
            res.failures.push_back(preset_name + ": " + what);
        };
        bool wu_r = ring::is_right_weakly_uniserial(r, ring_cap).weakly_uniserial;
        bool wu_l = ring::is_left_weakly_uniserial(r, ring_cap).weakly_uniserial;

        std::vector<int> trivial_idems = {r.zero(), r.one()};
        std::sort(trivial_idems.begin(), trivial_idems.end());
        if ((wu_r || wu_l) && ring::central_idempotents(r) != trivial_idems)
            fail("weakly uniserial ring with a nontrivial central idempotent");

        ElementSet jac = ring::jacobson_radical(r, ring_cap);
        ElementSet soc = ring::socle_right(r, ring_cap);
        if (wu_r && soc.size() > 1) {
            if (!product_set_vanishes(r, jac) && !product_set_vanishes(r, soc))
                fail("neither J(R)^2 nor Soc(R_R)^2 vanishes");
        }

        if (wu_r && !(ring::is_local(r, ring_cap) ||
                      ring::every_module_weakly_uniserial(r, ring_cap)))
            fail("weakly uniserial but neither local nor a full matrix ring");

        if (r.commutative() && ring::is_kasch_right(r, ring_cap) && wu_r &&
            !ring::is_local(r, ring_cap))
            fail("commutative Kasch weakly uniserial ring that is not local");

        if (ring::is_prime(r) && !ring::is_semiprime(r))
            fail("prime ring not semiprime");
        if (wu_r && ring::is_semiprime(r) && !ring::is_prime(r))
            fail("weakly uniserial semiprime ring not prime");

        if (wu_r && has_principal_maximal_right_ideal(r, ring_cap)) {
            bool matrix_case = ring::every_module_weakly_uniserial(r, ring_cap);
            bool uniserial_case = ring::is_right_uniserial(r, ring_cap) &&
                                  ring::is_left_uniserial(r, ring_cap);
            if (!matrix_case && !uniserial_case)
                fail("principal maximal ideal but neither matrix ring nor uniserial");
        }

        if (ring::every_module_weakly_uniserial(r, ring_cap) &&
            static_cast<long long>(r.size()) * r.size() <= module_cap &&
            ring::check_2generated_counterexample(r, module_cap))
            fail("2-generated counterexample in a ring where every module "
                 "should be weakly uniserial");

        if (wu_r) {
            // every right ideal is weakly uniserial as a module
            ring::RightModule reg = ring::RightModule::regular(r);
            auto ideals = ring::enumerate_right_ideals(r, ring_cap);
            for (const auto& outer : ideals) {
                std::vector<ring::Submodule> inside;
                for (const auto& inner : ideals)
                    if (std::includes(outer.begin(), outer.end(), inner.begin(),
                                      inner.end()))
                        inside.push_back(ring::Submodule{&reg, inner});
                for (size_t a = 0; a < inside.size(); ++a)
                    for (size_t b = a + 1; b < inside.size(); ++b)
                        if (!ring::module_mono(inside[a], inside[b]) &&
                            !ring::module_mono(inside[b], inside[a]))
                            fail("right ideal is not weakly uniserial as a module");
            }
        }
    }
    res.seconds = elapsed(start);
    return res;
}

SweepResult sweep_ring_fixtures(int ring_cap, int module_cap) {
    auto start = Clock::now();
    SweepResult res;
    res.name = "ring-fixtures";
    auto expect = [&](bool got, bool want, const std::string& what) {
        ++res.cases;
        if (got != want) res.failures.push_back(what);
    };

    expect(ring::is_right_weakly_uniserial(ring::preset("z6"), ring_cap)
               .weakly_uniserial,
           false, "z6 right");
    expect(ring::is_left_weakly_uniserial(ring::preset("z6"), ring_cap)
               .weakly_uniserial,
           false, "z6 left");
    expect(ring::is_right_weakly_uniserial(ring::preset("z8"), ring_cap)
               .weakly_uniserial,
           true, "z8 right");
    expect(ring::is_right_uniserial(ring::preset("z8"), ring_cap), true,
           "z8 uniserial chain");
    expect(ring::is_right_weakly_uniserial(ring::preset("struct3f2"), ring_cap)
               .weakly_uniserial,
           true, "struct3f2 right");
    expect(ring::is_left_weakly_uniserial(ring::preset("struct3f2"), ring_cap)
               .weakly_uniserial,
           true, "struct3f2 left");
    expect(ring::is_right_weakly_uniserial(ring::preset("t2f2"), ring_cap)
               .weakly_uniserial,
           false, "t2f2 right");
    expect(ring::is_left_weakly_uniserial(ring::preset("t2f2"), ring_cap)
               .weakly_uniserial,
           false, "t2f2 left");

    {
        ++res.cases;
        auto v = ring::is_right_weakly_uniserial(ring::preset("kxyf2"), ring_cap);
        // the witness must be the pair generated by x and by y
        if (v.weakly_uniserial || !v.witness ||
            v.witness->first != ElementSet{0, 2, 4, 6} ||
            v.witness->second != ElementSet{0, 8, 16, 24})
            res.failures.push_back("kxyf2 witness is not (xR, yR)");
    }

    expect(ring::is_right_weakly_uniserial(ring::preset("m2f2"), ring_cap)
               .weakly_uniserial,
           true, "m2f2 right");
    expect(ring::is_left_weakly_uniserial(ring::preset("m2f2"), ring_cap)
               .weakly_uniserial,
           true, "m2f2 left");
    expect(ring::every_module_weakly_uniserial(ring::preset("m2f2"), ring_cap),
           true, "m2f2 every module");

    {
        ++res.cases;
        FiniteRing z4 = ring::preset("z4");
        auto w = ring::check_2generated_counterexample(z4, module_cap);
        bool ok = w.has_value();
        if (ok) {
            // second component is exactly 2R + 2R; first is cyclic of order 4
            ok = w->second == std::vector<std::pair<int, int>>{
                                  {0, 0}, {0, 2}, {2, 0}, {2, 2}};
            ok = ok && w->first.size() == 4;
            bool has_order4 = false;
            for (auto [a, b] : w->first)
                if (a % 2 == 1 || b % 2 == 1) has_order4 = true;
            ok = ok && has_order4;
        }
        if (!ok) res.failures.push_back("z4 2-generated witness mismatch");
    }
    {
        ++res.cases;
        if (ring::check_2generated_counterexample(ring::preset("m2f2"),
                                                  module_cap))
            res.failures.push_back("m2f2 2-generated check found a witness");
    }
    res.seconds = elapsed(start);
    return res;
}

}  // namespace wu::sweeps
