#include "wu/abelian.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace wu {

bool is_prime_number(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int x : parts_)
        if (x < 1) throw std::invalid_argument("Partition: parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

Partition Partition::ones(int n) {
    if (n < 0) throw std::invalid_argument("Partition::ones: negative length");
    return Partition(std::vector<int>(static_cast<size_t>(n), 1));
}

long long Partition::sum() const {
    long long s = 0;
    for (int x : parts_) s += x;
    return s;
}

bool Partition::all_ones() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int x) { return x == 1; });
}

FgZModule::FgZModule(int free_rank, std::map<long long, Partition> torsion)
    : free_rank_(free_rank), torsion_(std::move(torsion)) {
    if (free_rank_ < 0)
        throw std::invalid_argument("FgZModule: negative free rank");
    for (auto it = torsion_.begin(); it != torsion_.end();) {
        if (!is_prime_number(it->first))
            throw std::invalid_argument("FgZModule: torsion key is not prime");
        if (it->second.empty())
            it = torsion_.erase(it);
        else
            ++it;
    }
}

FgZModule FgZModule::free_module(int rank) { return FgZModule(rank, {}); }

FgZModule FgZModule::cyclic(long long n) {
    if (n < 1) throw std::invalid_argument("FgZModule::cyclic: modulus must be positive");
    std::map<long long, Partition> t;
    for (auto [p, e] : factorize(n)) t.emplace(p, Partition({e}));
    return FgZModule(0, std::move(t));
}

FgZModule FgZModule::primary(long long p, Partition lambda) {
    std::map<long long, Partition> t;
    if (!lambda.empty()) t.emplace(p, std::move(lambda));
    return FgZModule(0, std::move(t));
}

Partition FgZModule::primary_part(long long p) const {
    auto it = torsion_.find(p);
    return it == torsion_.end() ? Partition{} : it->second;
}

FgZModule FgZModule::direct_sum(const FgZModule& other) const {
    std::map<long long, Partition> t = torsion_;
    for (const auto& [p, lam] : other.torsion_) {
        std::vector<int> parts = primary_part(p).parts();
        parts.insert(parts.end(), lam.parts().begin(), lam.parts().end());
        t.insert_or_assign(p, Partition(std::move(parts)));
    }
    return FgZModule(free_rank_ + other.free_rank_, std::move(t));
}

bool operator<(const FgZModule& a, const FgZModule& b) {
    if (a.free_rank() != b.free_rank()) return a.free_rank() < b.free_rank();
    return std::lexicographical_compare(
        a.torsion().begin(), a.torsion().end(), b.torsion().begin(),
        b.torsion().end(), [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
}

SymbolicModule::SymbolicModule(Prufer p) : v_(p) {
    if (!is_prime_number(p.p))
        throw ParseError("Prufer group requires a prime base");
}

SymbolicModule::SymbolicModule(ElementaryPower e) : v_(FgZModule{}) {
    if (!is_prime_number(e.p))
        throw ParseError("elementary power requires a prime base");
    if (e.copies) {
        if (*e.copies < 0)
            throw ParseError("elementary power: negative multiplicity");
        v_ = FgZModule::primary(e.p, Partition::ones(static_cast<int>(*e.copies)));
    } else {
        v_ = e;
    }
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

// Whole remaining string must be an optionally-signed decimal integer.
long long parse_int(std::string_view s, const char* what) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(std::string("expected ") + what + " in module expression");
    return v;
}

long long parse_modulus(std::string_view s) {
    long long n = parse_int(s, "modulus");
    if (n < 1) throw ParseError("zero or negative modulus");
    return n;
}

long long parse_exponent(std::string_view s) {
    long long k = parse_int(s, "exponent");
    if (k < 0) throw ParseError("negative exponent");
    return k;
}

// Z/(n^k) as a canonical module: n = prod p^e gives one cyclic factor of
// exponent e*k at each prime.
FgZModule cyclic_power(long long n, long long k) {
    std::map<long long, Partition> t;
    if (k > 0) {
        for (auto [p, e] : factorize(n)) {
            long long exp = e * k;
            if (exp > 1'000'000)
                throw ParseError("exponent out of range");
            t.emplace(p, Partition({static_cast<int>(exp)}));
        }
    }
    return FgZModule(0, std::move(t));
}

void parse_term(std::string_view term, FgZModule& acc,
                std::optional<SymbolicModule>& infinite) {
    if (term == "Z") {
        acc = acc.direct_sum(FgZModule::free_module(1));
        return;
    }
    if (term.substr(0, 2) == "Z^") {
        long long k = parse_exponent(term.substr(2));
        if (k > 1'000'000) throw ParseError("exponent out of range");
        acc = acc.direct_sum(FgZModule::free_module(static_cast<int>(k)));
        return;
    }
    if (term.substr(0, 3) == "(Z/") {
        auto close = term.find(')');
        if (close == std::string_view::npos)
            throw ParseError("unterminated '(' in module expression");
        long long n = parse_modulus(term.substr(3, close - 3));
        std::string_view rest = term.substr(close + 1);
        if (rest.substr(0, 1) != "^")
            throw ParseError("expected '^' after parenthesized term");
        rest.remove_prefix(1);
        if (rest == "inf") {
            infinite = SymbolicModule(ElementaryPower{n, std::nullopt});
            return;
        }
        long long k = parse_exponent(rest);
        FgZModule base = FgZModule::cyclic(n);
        for (long long i = 0; i < k; ++i) acc = acc.direct_sum(base);
        return;
    }
    if (term.substr(0, 2) == "Z/") {
        std::string_view rest = term.substr(2);
        auto caret = rest.find('^');
        if (caret == std::string_view::npos) {
            acc = acc.direct_sum(FgZModule::cyclic(parse_modulus(rest)));
            return;
        }
        long long n = parse_modulus(rest.substr(0, caret));
        std::string_view exp = rest.substr(caret + 1);
        if (exp == "inf") {
            infinite = SymbolicModule(Prufer{n});
            return;
        }
        acc = acc.direct_sum(cyclic_power(n, parse_exponent(exp)));
        return;
    }
    throw ParseError("unrecognized term '" + std::string(term) + "'");
}

}  // namespace

SymbolicModule parse_module(std::string_view text) {
    std::vector<std::string_view> terms;
    size_t start = 0;
    while (true) {
        auto plus = text.find('+', start);
        terms.push_back(trim(text.substr(start, plus - start)));
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    FgZModule acc;
    std::optional<SymbolicModule> infinite;
    for (auto term : terms) {
        if (term.empty()) throw ParseError("empty term in module expression");
        std::optional<SymbolicModule> piece;
        parse_term(term, acc, piece);
        if (piece) {
            if (infinite)
                throw ParseError("cannot combine two infinite shapes in a sum");
            infinite = piece;
        }
    }
    if (infinite) {
        if (!acc.is_trivial())
            throw ParseError(
                "cannot combine an infinite shape with other factors");
        return *infinite;
    }
    return SymbolicModule(std::move(acc));
}

std::string render(const FgZModule& m) {
    std::vector<std::string> pieces;
    if (m.free_rank() == 1)
        pieces.push_back("Z");
    else if (m.free_rank() > 1)
        pieces.push_back("Z^" + std::to_string(m.free_rank()));
    for (const auto& [p, lam] : m.torsion())
        for (int k : lam.parts()) {
            std::string s = "Z/" + std::to_string(p);
            if (k > 1) s += "^" + std::to_string(k);
            pieces.push_back(std::move(s));
        }
    if (pieces.empty()) return "Z^0";
    std::string out = pieces.front();
    for (size_t i = 1; i < pieces.size(); ++i) out += " + " + pieces[i];
    return out;
}

std::string render(const SymbolicModule& m) {
    if (m.is_prufer()) return "Z/" + std::to_string(m.prufer().p) + "^inf";
    if (m.is_elementary_power())
        return "(Z/" + std::to_string(m.elementary_power().p) + ")^inf";
    return render(m.fg());
}

namespace {

void row_sub(std::vector<std::vector<long long>>& a, size_t i, size_t t,
             long long q) {
    for (size_t j = 0; j < a[i].size(); ++j) a[i][j] -= q * a[t][j];
}

void col_sub(std::vector<std::vector<long long>>& a, size_t j, size_t t,
             long long q) {
    for (auto& row : a) row[j] -= q * row[t];
}

void col_swap(std::vector<std::vector<long long>>& a, size_t j, size_t t) {
    for (auto& row : a) std::swap(row[j], row[t]);
}

}  // namespace

std::vector<long long> smith_invariant_factors(
    std::vector<std::vector<long long>> a) {
    const size_t nr = a.size();
    const size_t nc = nr ? a[0].size() : 0;
    std::vector<long long> divisors;
    for (size_t t = 0; t < nr && t < nc; ++t) {
        // smallest nonzero entry of the trailing block becomes the pivot
        size_t pi = t, pj = t;
        long long best = 0;
        for (size_t i = t; i < nr; ++i)
            for (size_t j = t; j < nc; ++j) {
                long long v = std::llabs(a[i][j]);
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        std::swap(a[t], a[pi]);
        col_swap(a, pj, t);
        for (;;) {
            bool disturbed = false;
            for (size_t i = t + 1; i < nr; ++i) {
                if (a[i][t] == 0) continue;
                row_sub(a, i, t, a[i][t] / a[t][t]);
                if (a[i][t] != 0) {  // remainder: strictly smaller pivot
                    std::swap(a[i], a[t]);
                    disturbed = true;
                }
            }
            if (disturbed) continue;
            for (size_t j = t + 1; j < nc; ++j) {
                if (a[t][j] == 0) continue;
                col_sub(a, j, t, a[t][j] / a[t][t]);
                if (a[t][j] != 0) {
                    col_swap(a, j, t);
                    disturbed = true;
                }
            }
            if (disturbed) continue;
            // row and column are clear; enforce d_t | everything below
            long long d = a[t][t];
            bool fixed = true;
            for (size_t i = t + 1; i < nr && fixed; ++i)
                for (size_t j = t + 1; j < nc && fixed; ++j)
                    if (a[i][j] % d != 0) {
                        for (size_t c = 0; c < nc; ++c) a[t][c] += a[i][c];
                        fixed = false;
                    }
            if (fixed) break;
        }
        divisors.push_back(std::llabs(a[t][t]));
    }
    return divisors;
}

FgZModule from_relations(const std::vector<std::vector<long long>>& rows,
                         int generators) {
    if (generators < 0)
        throw std::invalid_argument("from_relations: negative generator count");
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != generators)
            throw std::invalid_argument(
                "from_relations: row width does not match generator count");
    auto divisors = smith_invariant_factors(rows);
    FgZModule m = FgZModule::free_module(
        generators - static_cast<int>(divisors.size()));
    for (long long d : divisors)
        if (d > 1) m = m.direct_sum(FgZModule::cyclic(d));
    return m;
}

FgZModule socle_fg(const FgZModule& m) {
    std::map<long long, Partition> t;
    for (const auto& [p, lam] : m.torsion())
        t.emplace(p, Partition::ones(lam.length()));
    return FgZModule(0, std::move(t));
}

std::optional<unsigned long long> order_of(const FgZModule& m) {
    if (m.free_rank() > 0) return std::nullopt;
    unsigned long long n = 1;
    for (const auto& [p, lam] : m.torsion())
        for (long long i = 0; i < lam.sum(); ++i)
            if (__builtin_mul_overflow(n, static_cast<unsigned long long>(p), &n))
                throw std::overflow_error("order_of: order exceeds 64 bits");
    return n;
}

}  // namespace wu
