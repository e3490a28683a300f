#include <CLI11.hpp>

#include "wu/abelian.hpp"
#include "wu/report.hpp"

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

void emit(const wu::cli::Report& rep, bool as_json) {
    if (as_json)
        std::cout << rep.data.dump(2) << "\n";
    else
        std::cout << rep.text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "wuni — weak uniseriality of Z-modules, rank-1 groups and finite rings"};
    app.require_subcommand(1);

    bool as_json = false;
    int cap = 0;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    app.add_option("--cap", cap, "override enumeration caps")
        ->envname("WU_CAP");

    // classify
    auto* classify = app.add_subcommand(
        "classify", "decide weak uniseriality of a module expression");
    std::string expr;
    std::string relations;
    int generators = 0;
    classify->add_option("expression", expr,
                         "module expression, e.g. \"Z^2 + Z/4 + Z/2\"");
    classify->add_option("--relations", relations,
                         "relation matrix as a JSON array of integer rows");
    classify->add_option("--generators", generators,
                         "generator count for --relations");

    // embed
    auto* embed = app.add_subcommand(
        "embed", "decide embeddability between two finitely generated modules");
    std::string from_expr, to_expr;
    embed->add_option("from", from_expr, "source module expression")->required();
    embed->add_option("to", to_expr, "target module expression")->required();

    // type
    auto* type = app.add_subcommand(
        "type", "analyze the type of a rank-1 torsion-free group");
    std::string literal;
    std::string second_literal;
    bool gens_mode = false;
    type->add_option("literal", literal,
                     "height literal \"2:inf,3:1,tail:0\" (or generator spec "
                     "with --gens)")
        ->required();
    type->add_option("second", second_literal,
                     "optional second literal to compare against");
    type->add_flag("--gens", gens_mode,
                   "interpret literals as generator exponents \"2:inf,3:1\"");

    // ring
    auto* ringcmd =
        app.add_subcommand("ring", "analyze a finite ring given by tables");
    std::string ring_spec;
    std::vector<std::string> checks;
    ringcmd->add_option("ring", ring_spec, "preset name or JSON table file")
        ->required();
    ringcmd->add_option("--check", checks,
                        "checks to run: wu idempotents radical socle local "
                        "kasch prime semiprime uniserial ideals everymodule "
                        "2gen all");

    // sweep
    auto* sweep = app.add_subcommand(
        "sweep", "run classifier-versus-oracle validation sweeps");
    wu::cli::SweepOptions sweep_options;
    std::string suite = "all";
    sweep->add_option("--suite", suite,
                      "thm55, embed, prop51, invariants, rings or all");
    sweep->add_option("--pmax", sweep_options.pmax, "largest prime to sweep");
    sweep->add_option("--omax", sweep_options.omax, "largest group order");
    sweep->add_flag("--parallel", sweep_options.parallel,
                    "evaluate groups across threads");

    CLI11_PARSE(app, argc, argv);
    const wu::cli::Caps caps = wu::cli::Caps::with_override(cap);

    try {
        wu::cli::Report rep;
        if (*classify) {
            if (!relations.empty())
                rep = wu::cli::cmd_classify_relations(relations, generators);
            else if (!expr.empty())
                rep = wu::cli::cmd_classify(expr);
            else
                throw wu::ParseError(
                    "classify needs an expression or --relations");
        } else if (*embed) {
            rep = wu::cli::cmd_embed(from_expr, to_expr, caps);
        } else if (*type) {
            std::optional<std::string> second;
            if (!second_literal.empty()) second = second_literal;
            rep = wu::cli::cmd_type(literal, second, gens_mode);
        } else if (*ringcmd) {
            rep = wu::cli::cmd_ring(ring_spec, checks, caps);
        } else {
            rep = wu::cli::cmd_sweep(suite, sweep_options, caps);
        }
        emit(rep, as_json);
        return rep.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
