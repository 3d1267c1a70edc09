#include <CLI11.hpp>

#include <iostream>

#include "cotilt/commands.hpp"

int main(int argc, char** argv)
{
    using cotilt::Options;
    CLI::App app{"cotilt: Hom dualities, D-reflexivity and the second spectral sequence over path algebras"};
    app.require_subcommand(1);
    Options o;
    std::string format = "human";
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"resolve", "minimal free resolution of --module"},
        {"ext", "Ext^i(--module, U) as right End(U)-modules"},
        {"dual", "Hom(--module, U) and its double dual, or RPhi of --complex"},
        {"eta", "the unit map of --module"},
        {"reflexive", "is --module reflexive"},
        {"dreflexive", "is --module or --complex D-reflexive"},
        {"spectral", "pages of the second spectral sequence at --module"},
        {"verify", "check a theorem: cotilting legame driflessivi bb last gamma adjoint classes lastt n2 lemma"},
        {"paper-example", "run a registered example (id or all)"},
        {"print", "print the parsed inputs in canonical form"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("args", o.args, name == "verify" ? "theorem" : "example ids");
        sub->add_option("--algebra", o.algebra_file, "algebra file");
        sub->add_option("--example", o.example, "take algebra, U and inputs from a registered example");
        sub->add_option("--module", o.module, "module expression");
        sub->add_option("--U", o.u, "module expression for U, default R");
        sub->add_option("--complex", o.complex_file, "complex file");
        sub->add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
        sub->add_option("--seed", o.seed, "seed for isomorphism search");
        sub->add_option("--cap-res", o.cap_res, "resolution length cap");
        sub->callback([&o, name = name] { o.command = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    o.format = format == "machine" ? cotilt::Format::Machine : cotilt::Format::Human;
    return cotilt::run_command(o, std::cout);
}
