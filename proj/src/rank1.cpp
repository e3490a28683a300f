#include "wu/rank1.hpp"

#include "wu/abelian.hpp"

#include <charconv>
#include <vector>

namespace wu::rank1 {

HeightSequence::HeightSequence(Height tail, std::map<long long, Height> exceptions)
    : tail_(tail), exceptions_(std::move(exceptions)) {
    for (auto it = exceptions_.begin(); it != exceptions_.end();) {
        if (!is_prime_number(it->first))
            throw std::invalid_argument(
                "HeightSequence: exception key is not prime");
        if (it->second == tail_)
            it = exceptions_.erase(it);
        else
            ++it;
    }
}

Height HeightSequence::at(long long p) const {
    auto it = exceptions_.find(p);
    return it == exceptions_.end() ? tail_ : it->second;
}

namespace {

Height parse_height(std::string_view s) {
    if (s == "inf") return Height::infinity();
    unsigned long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("expected a nonnegative integer or 'inf', got '" +
                         std::string(s) + "'");
    return Height(v);
}

std::vector<std::pair<std::string_view, std::string_view>> split_entries(
    std::string_view literal) {
    std::vector<std::pair<std::string_view, std::string_view>> out;
    size_t start = 0;
    while (start <= literal.size()) {
        auto comma = literal.find(',', start);
        auto entry = literal.substr(start, comma - start);
        if (!entry.empty()) {
            auto colon = entry.find(':');
            if (colon == std::string_view::npos)
                throw ParseError("expected 'key:value' entry, got '" +
                                 std::string(entry) + "'");
            out.emplace_back(entry.substr(0, colon), entry.substr(colon + 1));
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

long long parse_prime_key(std::string_view s) {
    long long p = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("expected a prime key, got '" + std::string(s) + "'");
    if (!is_prime_number(p))
        throw ParseError(std::to_string(p) + " is not prime");
    return p;
}

}  // namespace

HeightSequence HeightSequence::parse(std::string_view literal) {
    std::map<long long, Height> exceptions;
    Height tail(0);
    bool saw_tail = false;
    for (auto [key, value] : split_entries(literal)) {
        if (key == "tail") {
            if (saw_tail) throw ParseError("duplicate tail entry");
            tail = parse_height(value);
            saw_tail = true;
            continue;
        }
        long long p = parse_prime_key(key);
        if (exceptions.count(p))
            throw ParseError("duplicate entry for prime " + std::to_string(p));
        exceptions.emplace(p, parse_height(value));
    }
    if (!saw_tail)
        throw ParseError("height-sequence literal requires a tail entry, "
                         "e.g. 'tail:0'");
    return HeightSequence(tail, std::move(exceptions));
}

std::string HeightSequence::to_literal() const {
    std::string out;
    for (const auto& [p, v] : exceptions_)
        out += std::to_string(p) + ":" + v.str() + ",";
    out += "tail:" + tail_.str();
    return out;
}

std::string HeightSequence::to_sequence_string() const {
    std::string out = "(";
    if (!exceptions_.empty()) {
        long long last = exceptions_.rbegin()->first;
        for (long long p = 2; p <= last; ++p) {
            if (!is_prime_number(p)) continue;
            out += at(p).str() + ", ";
        }
    }
    out += tail_.str() + ", " + tail_.str() + ", ...)";
    return out;
}

bool equivalent(const HeightSequence& a, const HeightSequence& b) {
    // Differing tails disagree at cofinitely many primes; equal tails leave
    // finitely many differences, all of which must respect infinities.
    if (a.tail() != b.tail()) return false;
    for (const auto& [p, v] : a.exceptions())
        if (v.is_infinite() != b.at(p).is_infinite()) return false;
    for (const auto& [p, v] : b.exceptions())
        if (v.is_infinite() != a.at(p).is_infinite()) return false;
    return true;
}

TypeClass::TypeClass(const HeightSequence& s) : rep_(s) {
    std::map<long long, Height> kept;
    if (s.tail().is_infinite()) {
        // finite positions matter, their values do not
        for (const auto& [p, v] : s.exceptions())
            if (!v.is_infinite()) kept.emplace(p, Height(0));
    } else {
        // finite values are adjustable, only infinite positions matter
        for (const auto& [p, v] : s.exceptions())
            if (v.is_infinite()) kept.emplace(p, v);
    }
    rep_ = HeightSequence(s.tail(), std::move(kept));
}

bool type_leq(const TypeClass& s, const TypeClass& t) {
    const HeightSequence& a = s.representative();
    const HeightSequence& b = t.representative();
    if (!(a.tail() <= b.tail())) return false;
    for (const auto& [p, v] : a.exceptions())
        if (v.is_infinite() && !b.at(p).is_infinite()) return false;
    if (a.tail().is_infinite())
        for (const auto& [p, v] : b.exceptions())
            if (!v.is_infinite() && a.at(p).is_infinite()) return false;
    return true;
}

bool hom_nonzero(const TypeClass& s, const TypeClass& t) {
    return type_leq(s, t);
}

bool same_type(const TypeClass& s, const TypeClass& t) {
    return type_leq(s, t) && type_leq(t, s);
}

bool is_weakly_uniserial_type(const TypeClass& t) {
    const HeightSequence& rep = t.representative();
    if (rep.tail() != Height(0)) return false;
    int infinite = 0;
    for (const auto& [p, v] : rep.exceptions())
        if (v.is_infinite()) ++infinite;
    return infinite <= 1;
}

Rank1GeneratorSpec Rank1GeneratorSpec::parse(std::string_view literal) {
    Rank1GeneratorSpec g;
    for (auto [key, value] : split_entries(literal)) {
        if (key == "tail")
            throw ParseError("generator specs do not take a tail entry");
        long long p = parse_prime_key(key);
        if (g.entries.count(p))
            throw ParseError("duplicate entry for prime " + std::to_string(p));
        Height e = parse_height(value);
        if (e == Height(0))
            throw ParseError("generator exponents must be >= 1 or inf");
        g.entries.emplace(p, e);
    }
    return g;
}

std::string Rank1GeneratorSpec::to_literal() const {
    std::string out;
    for (const auto& [p, v] : entries) {
        if (!out.empty()) out += ",";
        out += std::to_string(p) + ":" + v.str();
    }
    return out;
}

HeightSequence height_of_spec(const Rank1GeneratorSpec& g) {
    return HeightSequence(Height(0), g.entries);
}

TypeClass type_of_spec(const Rank1GeneratorSpec& g) {
    return TypeClass(height_of_spec(g));
}

}  // namespace wu::rank1
