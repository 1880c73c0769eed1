#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "sublat/errors.hpp"

namespace {

using sublat::cli::Format;
using sublat::cli::Report;

int emit(const Report& report, Format format) {
    std::cout << render(report, format);
    return report.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact subspace-lattice toolkit for projection operators"};
    app.require_subcommand(1);

    std::string input_path;
    std::string context_label;
    std::string format_name = "text";
    std::string demo_topic;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "output format: text, json, or dot")
            ->check(CLI::IsMember({"text", "json", "dot"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "check every context in a document");
    validate->add_option("--input", input_path, "operator-set JSON document")->required();
    add_format(validate);

    CLI::App* lattice =
        app.add_subcommand("context-lattice", "invariant-subspace lattice of one context");
    lattice->add_option("--input", input_path, "operator-set JSON document")->required();
    lattice->add_option("--context", context_label, "label of the context")->required();
    add_format(lattice);

    CLI::App* intersect =
        app.add_subcommand("intersect", "intersection of all context lattices");
    intersect->add_option("--input", input_path, "operator-set JSON document")->required();
    add_format(intersect);

    CLI::App* burnside =
        app.add_subcommand("burnside", "irreducibility of the generated matrix algebra");
    burnside->add_option("--input", input_path, "operator-set JSON document")->required();
    add_format(burnside);

    CLI::App* axioms = app.add_subcommand("axioms", "lattice axiom survey over a family");
    axioms->add_option("--input", input_path, "operator-set JSON document")->required();
    add_format(axioms);

    CLI::App* demo = app.add_subcommand("demo", "built-in worked example");
    demo->add_option("topic", demo_topic, "which walkthrough to run (spin-half)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 3;
    }

    const Format format = *sublat::cli::parse_format(format_name);
    try {
        if (validate->parsed()) return emit(sublat::cli::cmd_validate(input_path), format);
        if (lattice->parsed())
            return emit(sublat::cli::cmd_context_lattice(input_path, context_label, format),
                        format);
        if (intersect->parsed())
            return emit(sublat::cli::cmd_intersect(input_path, format), format);
        if (burnside->parsed()) return emit(sublat::cli::cmd_burnside(input_path), format);
        if (axioms->parsed()) return emit(sublat::cli::cmd_axioms(input_path, format), format);
        if (demo->parsed()) {
            if (demo_topic != "spin-half") {
                std::cerr << "unknown demo topic '" << demo_topic << "' (try: spin-half)\n";
                return 3;
            }
            return emit(sublat::cli::cmd_demo_spin_half(), Format::Text);
        }
    } catch (const sublat::cli::DocumentError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const sublat::SelectorError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const sublat::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 3;
}
