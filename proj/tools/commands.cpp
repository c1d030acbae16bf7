#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "roadcolor/generator.hpp"
#include "roadcolor/io.hpp"
#include "roadcolor/precheck.hpp"
#include "roadcolor/recolor.hpp"
#include "roadcolor/synchro.hpp"

namespace roadcolor::cli {

namespace {

bool parse_or_report(const std::string& input, Digraph& g, std::ostream& err) {
    try {
        g = parse_graph(input);
        return true;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return false;
    }
}

}  // namespace

bool read_input(const std::string& path, std::string& text) {
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    text.assign(std::istreambuf_iterator<char>(in), {});
    return true;
}

int cmd_check(const std::string& input, std::ostream& out, std::ostream& err) {
    Digraph g;
    if (!parse_or_report(input, g, err)) return kInputError;
    SinkCheck sink = check_sink_scc(g);
    if (!sink.unique()) {
        out << "multiple-sinks count=" << sink.sink_count << '\n';
        return kNegative;
    }
    const bool whole = sink.vertices.size() == g.size();
    std::uint64_t gcd = gcd_of_cycles(whole ? g : g.induced(sink.vertices)).gcd;
    if (whole) {
        out << "strongly-connected";
    } else {
        out << "sink-scc size=" << sink.vertices.size();
    }
    out << " gcd=" << gcd << '\n';
    return gcd == 1 ? kOk : kNegative;
}

int cmd_color(const std::string& input, ColorFlags flags, std::ostream& out, std::ostream& err) {
    Digraph g;
    if (!parse_or_report(input, g, err)) return kInputError;
    PipelineOptions options;
    options.paranoid = flags.paranoid;
    ColoringResult result = synchronizing_coloring(g, options);
    if (auto* bad = std::get_if<Infeasible>(&result)) {
        if (bad->reason == Infeasible::Reason::MultipleSinks) {
            out << "infeasible: multiple-sinks=" << bad->value << '\n';
        } else {
            out << "infeasible: gcd=" << bad->value << '\n';
        }
        return kNegative;
    }
    const auto& ok = std::get<SyncColoring>(result);
    ColoredAutomaton a(g, ok.coloring);
    if (apply_word(a, all_vertices(a), ok.word).size() != 1) {
        err << "internal error: reset word failed re-simulation\n";
        return kNegative;
    }
    out << serialize_graph(g, ok.coloring);
    if (flags.emit_word) {
        out << "word: " << format_word(ok.word, g.degree()) << '\n';
    }
    return kOk;
}

int cmd_verify(const std::string& input, std::ostream& out, std::ostream& err) {
    Digraph g;
    if (!parse_or_report(input, g, err)) return kInputError;
    ColoredAutomaton a(g, Coloring::identity(g.size(), g.degree()));
    SyncReport report = is_synchronizing(a);
    if (report.synchronizing) {
        out << "word: " << format_word(*report.word, g.degree()) << '\n';
        return kOk;
    }
    out << "deadlock: " << report.witness_deadlock->first << ' '
        << report.witness_deadlock->second << '\n';
    return kNegative;
}

int cmd_gen(std::uint64_t n, std::uint64_t d, std::uint64_t seed, std::ostream& out,
            std::ostream& err) {
    try {
        out << serialize_graph(generate_agw(n, d, seed));
        return kOk;
    } catch (const Error& e) {
        err << "gen: " << e.what() << '\n';
        return kInputError;
    }
}

int cmd_dot(const std::string& input, std::ostream& out, std::ostream& err) {
    Digraph g;
    if (!parse_or_report(input, g, err)) return kInputError;
    out << to_dot(g);
    return kOk;
}

}  // namespace roadcolor::cli
