#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace cli = roadcolor::cli;

int main(int argc, char** argv) {
    CLI::App app{"Synchronizing road colorings of uniform-outdegree digraphs"};
    app.require_subcommand(1);

    std::string file;
    cli::ColorFlags flags;
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    std::uint64_t seed = 0;

    auto* check = app.add_subcommand("check", "Report sink component and cycle gcd");
    check->add_option("FILE", file, "graph file, or - for standard input")->required();
    auto* color = app.add_subcommand("color", "Print a synchronizing coloring");
    color->add_option("FILE", file, "graph file, or - for standard input")->required();
    color->add_flag("--emit-word", flags.emit_word, "also print a reset word");
    color->add_flag("--paranoid", flags.paranoid, "verify every reduction step");
    auto* verify = app.add_subcommand("verify", "Check a colored graph (slot = color)");
    verify->add_option("FILE", file, "graph file, or - for standard input")->required();
    auto* gen = app.add_subcommand("gen", "Generate a random AGW graph");
    gen->add_option("N", n, "vertex count")->required()->check(CLI::PositiveNumber);
    gen->add_option("D", d, "outdegree")->required()->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "generator seed");
    auto* dot = app.add_subcommand("dot", "Export Graphviz DOT");
    dot->add_option("FILE", file, "graph file, or - for standard input")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? cli::kOk : cli::kInputError;
    }

    if (gen->parsed()) return cli::cmd_gen(n, d, seed, std::cout, std::cerr);

    std::string text;
    if (!cli::read_input(file, text)) {
        std::cerr << "cannot read " << file << '\n';
        return cli::kInputError;
    }
    if (check->parsed()) return cli::cmd_check(text, std::cout, std::cerr);
    if (color->parsed()) return cli::cmd_color(text, flags, std::cout, std::cerr);
    if (verify->parsed()) return cli::cmd_verify(text, std::cout, std::cerr);
    return cli::cmd_dot(text, std::cout, std::cerr);
}
