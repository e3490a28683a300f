#include "wu/report.hpp"

#include "wu/abelian.hpp"
#include "wu/classifier.hpp"
#include "wu/finring.hpp"
#include "wu/oracle.hpp"
#include "wu/rank1.hpp"
#include "wu/sweeps.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace wu::cli {

using nlohmann::json;

namespace {

json module_json(const FgZModule& m) {
    json torsion = json::object();
    for (const auto& [p, lam] : m.torsion())
        torsion[std::to_string(p)] = lam.parts();
    return json{{"kind", "fg"},
                {"free_rank", m.free_rank()},
                {"torsion", std::move(torsion)}};
}

json module_json(const SymbolicModule& m) {
    if (m.is_prufer()) return json{{"kind", "prufer"}, {"p", m.prufer().p}};
    if (m.is_elementary_power())
        return json{{"kind", "elementary-power"},
                    {"p", m.elementary_power().p},
                    {"copies", "countably-infinite"}};
    return module_json(m.fg());
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string line(const std::string& key, const std::string& value) {
    std::string out = key;
    out.append(key.size() < 20 ? 20 - key.size() : 1, ' ');
    return out + value + "\n";
}

}  // namespace

Report cmd_classify(const std::string& expr) {
    SymbolicModule m = parse_module(expr);
    Report rep;
    rep.data["command"] = "classify";
    rep.data["input"] = expr;
    rep.data["canonical"] = render(m);
    rep.data["module"] = module_json(m);

    bool verdict;
    std::string reason_str, shape;
    if (m.is_fg()) {
        auto v = is_weakly_uniserial_fg(m.fg());
        verdict = v.weakly_uniserial;
        reason_str = reason_tag(v.reason);
        shape = matched_shape(m);
    } else {
        verdict = classify_socle_nonzero(m);
        shape = matched_shape(m);
    }
    rep.data["weakly_uniserial"] = verdict;
    rep.data["reason"] = reason_str.empty() ? json() : json(reason_str);
    rep.data["shape"] = shape.empty() ? json() : json(shape);

    rep.text += line("module:", render(m));
    rep.text += line("weakly uniserial:", yesno(verdict));
    if (!reason_str.empty()) rep.text += line("reason:", reason_str);
    if (!shape.empty()) rep.text += line("shape:", shape);
    return rep;
}

Report cmd_classify_relations(const std::string& matrix_json, int generators) {
    json parsed = json::parse(matrix_json);
    if (!parsed.is_array())
        throw ParseError("relation matrix must be a JSON array of rows");
    std::vector<std::vector<long long>> rows;
    for (const auto& row : parsed) {
        if (!row.is_array())
            throw ParseError("relation matrix rows must be JSON arrays");
        rows.push_back(row.get<std::vector<long long>>());
    }
    FgZModule m = from_relations(rows, generators);
    Report rep = cmd_classify(render(m));
    rep.data["input"] = matrix_json;
    rep.data["generators"] = generators;
    rep.text = line("presentation:", "Z^" + std::to_string(generators) +
                                         " modulo " +
                                         std::to_string(rows.size()) +
                                         " relation(s)") +
               rep.text;
    return rep;
}

Report cmd_embed(const std::string& from, const std::string& to,
                 const Caps& caps) {
    SymbolicModule ms = parse_module(from);
    SymbolicModule ns = parse_module(to);
    if (!ms.is_fg() || !ns.is_fg())
        throw ParseError("embed expects finitely generated shapes");
    const FgZModule& m = ms.fg();
    const FgZModule& n = ns.fg();

    Report rep;
    rep.data["command"] = "embed";
    rep.data["from"] = render(m);
    rep.data["to"] = render(n);
    bool fast = fg_embeds(m, n);
    rep.data["embeds"] = fast;
    rep.text += line("from:", render(m));
    rep.text += line("to:", render(n));
    rep.text += line("embeds:", yesno(fast));

    json oracle_part{{"checked", false}};
    auto om = order_of(m);
    auto on = order_of(n);
    if (om && on && *om <= static_cast<unsigned long long>(caps.group) &&
        *on <= static_cast<unsigned long long>(caps.group)) {
        auto gm = oracle::ConcreteGroup::from_fg(m, caps.group);
        auto gn = oracle::ConcreteGroup::from_fg(n, caps.group);
        auto witness = oracle::exists_monomorphism(gm, gn);
        bool slow = witness.has_value();
        oracle_part["checked"] = true;
        oracle_part["embeds"] = slow;
        oracle_part["agrees"] = slow == fast;
        if (witness) {
            json images = json::array();
            std::string shown;
            for (auto [g, h] : witness->generator_images) {
                images.push_back({gm.show(g), gn.show(h)});
                if (!shown.empty()) shown += ", ";
                shown += gm.show(g) + " -> " + gn.show(h);
            }
            oracle_part["witness"] = std::move(images);
            rep.text += line("witness:", shown.empty() ? "zero map" : shown);
        }
        rep.text += line("oracle:", slow == fast ? "confirmed" : "DIVERGES");
        if (slow != fast) rep.exit_code = 1;
    } else {
        rep.text += line("oracle:", "skipped (outside cap)");
    }
    rep.data["oracle"] = std::move(oracle_part);
    return rep;
}

namespace {

json type_json(const rank1::TypeClass& t) {
    const auto& rep = t.representative();
    json exceptions = json::object();
    for (const auto& [p, v] : rep.exceptions())
        exceptions[std::to_string(p)] = v.str();
    return json{{"tail", rep.tail().str()},
                {"exceptions", std::move(exceptions)},
                {"literal", rep.to_literal()},
                {"sequence", rep.to_sequence_string()}};
}

}  // namespace

Report cmd_type(const std::string& literal,
                const std::optional<std::string>& second,
                bool generator_spec) {
    auto parse_one = [&](const std::string& lit) {
        if (generator_spec)
            return rank1::height_of_spec(rank1::Rank1GeneratorSpec::parse(lit));
        return rank1::HeightSequence::parse(lit);
    };
    rank1::HeightSequence h = parse_one(literal);
    rank1::TypeClass t(h);

    Report rep;
    rep.data["command"] = "type";
    rep.data["input"] = literal;
    rep.data["canonical"] = t.representative().to_literal();
    rep.data["type"] = type_json(t);
    bool wu = rank1::is_weakly_uniserial_type(t);
    rep.data["weakly_uniserial"] = wu;

    rep.text += line("height sequence:", h.to_sequence_string());
    rep.text += line("type:", t.representative().to_sequence_string());
    rep.text += line("canonical:", t.representative().to_literal());
    rep.text += line("weakly uniserial:", yesno(wu));

    if (second) {
        rank1::TypeClass u(parse_one(*second));
        bool leq = rank1::type_leq(t, u);
        bool geq = rank1::type_leq(u, t);
        rep.data["comparison"] = json{
            {"second", u.representative().to_literal()},
            {"leq", leq},
            {"geq", geq},
            {"same_type", leq && geq},
            {"hom_nonzero", rank1::hom_nonzero(t, u)},
            {"comparable", leq || geq},
        };
        rep.text += line("second type:",
                         u.representative().to_sequence_string());
        rep.text += line("first <= second:", yesno(leq));
        rep.text += line("second <= first:", yesno(geq));
        rep.text += line("same type:", yesno(leq && geq));
    }
    return rep;
}

namespace {

ring::FiniteRing ring_from_json(const json& j) {
    if (!j.contains("size") || !j.contains("add") || !j.contains("mul"))
        throw ParseError("ring file needs 'size', 'add' and 'mul' fields");
    int n = j.at("size").get<int>();
    auto add = j.at("add").get<std::vector<std::vector<int>>>();
    auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(add.size()) != n || static_cast<int>(mul.size()) != n)
        throw ParseError("ring file tables do not match 'size'");
    std::string name = j.value("name", std::string("ring"));
    auto names = j.value("element_names", std::vector<std::string>{});
    return ring::FiniteRing(std::move(add), std::move(mul), std::move(name),
                            std::move(names));
}

ring::FiniteRing load_ring(const std::string& spec) {
    bool looks_like_file =
        spec.find(".json") != std::string::npos || spec.find('/') != std::string::npos;
    if (!looks_like_file) {
        try {
            return ring::preset(spec);
        } catch (const std::invalid_argument&) {
            // fall through to file loading
        }
    }
    std::ifstream in(spec);
    if (!in)
        throw ParseError("'" + spec + "' is neither a preset nor a readable file");
    json j;
    in >> j;
    return ring_from_json(j);
}

json element_set_json(const ring::FiniteRing& r, const ring::ElementSet& xs) {
    json names = json::array();
    for (int x : xs) names.push_back(r.element_name(x));
    return json{{"indices", xs}, {"elements", std::move(names)}};
}

std::string element_set_str(const ring::FiniteRing& r,
                            const ring::ElementSet& xs) {
    std::string out = "{";
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += r.element_name(xs[i]);
    }
    return out + "}";
}

bool product_vanishes(const ring::FiniteRing& r, const ring::ElementSet& xs) {
    for (int a : xs)
        for (int b : xs)
            if (r.mul(a, b) != r.zero()) return false;
    return true;
}

}  // namespace

Report cmd_ring(const std::string& preset_or_file,
                std::vector<std::string> checks, const Caps& caps) {
    ring::FiniteRing r = load_ring(preset_or_file);
    if (checks.empty()) checks = {"all"};
    auto wants = [&](const char* what) {
        return std::find(checks.begin(), checks.end(), what) != checks.end() ||
               std::find(checks.begin(), checks.end(), "all") != checks.end();
    };

    Report rep;
    rep.data["command"] = "ring";
    rep.data["input"] = preset_or_file;
    rep.data["name"] = r.name();
    rep.data["size"] = r.size();
    rep.data["commutative"] = r.commutative();
    json results = json::object();
    rep.text += line("ring:", r.name() + " (order " + std::to_string(r.size()) +
                              (r.commutative() ? ", commutative)" : ")"));

    if (wants("wu")) {
        auto right = ring::is_right_weakly_uniserial(r, caps.ring);
        auto left = ring::is_left_weakly_uniserial(r, caps.ring);
        json jr{{"holds", right.weakly_uniserial}};
        if (right.witness)
            jr["witness"] = {element_set_json(r, right.witness->first),
                             element_set_json(r, right.witness->second)};
        json jl{{"holds", left.weakly_uniserial}};
        if (left.witness)
            jl["witness"] = {element_set_json(r, left.witness->first),
                             element_set_json(r, left.witness->second)};
        results["weakly_uniserial_right"] = std::move(jr);
        results["weakly_uniserial_left"] = std::move(jl);
        rep.text += line("weakly uniserial:",
                         "right: " + yesno(right.weakly_uniserial) +
                             ", left: " + yesno(left.weakly_uniserial));
        if (right.witness)
            rep.text += line("  right witness:",
                             element_set_str(r, right.witness->first) + " vs " +
                                 element_set_str(r, right.witness->second));
    }
    if (wants("idempotents")) {
        auto idems = ring::central_idempotents(r);
        results["central_idempotents"] = element_set_json(r, idems);
        results["nontrivial_central_idempotents"] = idems.size() > 2;
        rep.text += line("central idempotents:", element_set_str(r, idems));
    }
    if (wants("radical")) {
        auto j = ring::jacobson_radical(r, caps.ring);
        results["jacobson_radical"] = element_set_json(r, j);
        results["radical_square_zero"] = product_vanishes(r, j);
        rep.text += line("J(R):", element_set_str(r, j) +
                                      (product_vanishes(r, j) ? "  (J^2 = 0)" : ""));
    }
    if (wants("socle")) {
        auto s = ring::socle_right(r, caps.ring);
        results["socle_right"] = element_set_json(r, s);
        results["socle_square_zero"] = product_vanishes(r, s);
        rep.text += line("Soc(R_R):", element_set_str(r, s));
    }
    if (wants("local")) {
        results["local"] = ring::is_local(r, caps.ring);
        rep.text += line("local:", yesno(ring::is_local(r, caps.ring)));
    }
    if (wants("kasch")) {
        results["kasch_right"] = ring::is_kasch_right(r, caps.ring);
        rep.text += line("right Kasch:", yesno(ring::is_kasch_right(r, caps.ring)));
    }
    if (wants("prime")) {
        results["prime"] = ring::is_prime(r);
        rep.text += line("prime:", yesno(ring::is_prime(r)));
    }
    if (wants("semiprime")) {
        results["semiprime"] = ring::is_semiprime(r);
        rep.text += line("semiprime:", yesno(ring::is_semiprime(r)));
    }
    if (wants("uniserial")) {
        bool ru = ring::is_right_uniserial(r, caps.ring);
        bool lu = ring::is_left_uniserial(r, caps.ring);
        results["uniserial_right"] = ru;
        results["uniserial_left"] = lu;
        rep.text += line("uniserial:", "right: " + yesno(ru) + ", left: " + yesno(lu));
    }
    if (wants("ideals")) {
        auto ideals = ring::enumerate_right_ideals(r, caps.ring);
        json list = json::array();
        for (const auto& i : ideals) list.push_back(element_set_json(r, i));
        results["right_ideals"] = std::move(list);
        rep.text += line("right ideals:", std::to_string(ideals.size()));
    }
    if (wants("everymodule")) {
        bool em = ring::every_module_weakly_uniserial(r, caps.ring);
        results["every_module_weakly_uniserial"] = em;
        rep.text += line("every module wu:", yesno(em));
    }
    if (wants("2gen")) {
        if (static_cast<long long>(r.size()) * r.size() <= caps.module) {
            auto w = ring::check_2generated_counterexample(r, caps.module);
            json j{{"found", w.has_value()}};
            if (w) {
                auto pairs_json = [&](const std::vector<std::pair<int, int>>& v) {
                    json arr = json::array();
                    for (auto [a, b] : v)
                        arr.push_back("(" + r.element_name(a) + ", " +
                                      r.element_name(b) + ")");
                    return arr;
                };
                j["first"] = pairs_json(w->first);
                j["second"] = pairs_json(w->second);
            }
            results["two_generated_counterexample"] = std::move(j);
            rep.text += line("2-generated check:",
                             w ? "counterexample found in R + R" : "none");
        } else {
            results["two_generated_counterexample"] = {{"skipped", "over cap"}};
            rep.text += line("2-generated check:", "skipped (over module cap)");
        }
    }
    rep.data["checks"] = std::move(results);
    return rep;
}

Report cmd_sweep(const std::string& suite, const SweepOptions& options,
                 const Caps& caps) {
    std::vector<sweeps::SweepResult> results;
    auto want = [&](const char* name) { return suite == name || suite == "all"; };
    if (want("thm55"))
        results.push_back(sweeps::sweep_thm55(options.pmax, options.omax,
                                              caps.group, options.parallel));
    if (want("embed"))
        results.push_back(sweeps::sweep_embed(options.pmax, options.omax,
                                              caps.group, options.parallel));
    if (want("prop51"))
        results.push_back(sweeps::sweep_prop51(std::min<long long>(options.omax, 60),
                                               caps.group, options.parallel));
    if (want("invariants")) {
        results.push_back(sweeps::sweep_module_invariants(
            std::min<long long>(options.omax, 64), caps.group, options.parallel));
        results.push_back(sweeps::sweep_ring_invariants(caps.ring, caps.module));
    }
    if (want("rings"))
        results.push_back(sweeps::sweep_ring_fixtures(caps.ring, caps.module));
    if (results.empty())
        throw ParseError("unknown sweep suite '" + suite +
                         "' (expected thm55, embed, prop51, invariants, rings "
                         "or all)");

    Report rep;
    rep.data["command"] = "sweep";
    rep.data["suite"] = suite;
    json arr = json::array();
    bool all_pass = true;
    std::ostringstream text;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass();
        json jr{{"name", r.name},
                {"cases", r.cases},
                {"failures", r.failures},
                {"seconds", r.seconds},
                {"pass", r.pass()}};
        arr.push_back(std::move(jr));
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-20s %8lld cases %8zu failures %8.2fs  %s\n",
                      r.name.c_str(), r.cases, r.failures.size(), r.seconds,
                      r.pass() ? "pass" : "FAIL");
        text << buf;
        for (const auto& f : r.failures) text << "    " << f << "\n";
    }
    rep.data["results"] = std::move(arr);
    rep.data["pass"] = all_pass;
    rep.text = text.str();
    rep.exit_code = all_pass ? 0 : 1;
    return rep;
}

}  // namespace wu::cli
