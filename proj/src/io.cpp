#include "roadcolor/io.hpp"

#include <charconv>
#include <iterator>
#include <sstream>
#include <vector>

namespace roadcolor {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

// Splits on single spaces; empty fields (double or trailing spaces) are errors.
std::vector<std::uint64_t> parse_fields(std::string_view line, std::size_t line_no) {
    std::vector<std::uint64_t> fields;
    if (line.empty()) {
        throw ParseError(line_no, "empty line");
    }
    std::size_t pos = 0;
    while (true) {
        std::size_t end = line.find(' ', pos);
        std::string_view tok = line.substr(pos, end == std::string_view::npos ? end : end - pos);
        if (tok.empty()) {
            throw ParseError(line_no, "unexpected space");
        }
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw ParseError(line_no, "not a decimal number: '" + std::string(tok) + "'");
        }
        fields.push_back(value);
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return fields;
}

}  // namespace

Digraph parse_graph(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t n = 0;
    std::size_t d = 0;
    bool have_header = false;
    std::size_t rows = 0;
    std::vector<Vertex> targets;

    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        std::string_view line = text.substr(pos, end == std::string_view::npos ? end : end - pos);
        pos = end == std::string_view::npos ? text.size() : end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty() && line.front() == '#') continue;

        auto fields = parse_fields(line, line_no);
        if (!have_header) {
            if (fields.size() != 2) {
                throw ParseError(line_no, "header must be \"n d\"");
            }
            n = fields[0];
            d = fields[1];
            if (n == 0 || d == 0) {
                throw ParseError(line_no, "n and d must be positive");
            }
            if (n > (std::uint64_t{1} << 31) || d > (std::uint64_t{1} << 20)) {
                throw ParseError(line_no, "graph too large");
            }
            have_header = true;
            targets.reserve(n * d);
            continue;
        }
        if (rows == n) {
            throw ParseError(line_no, "more than " + std::to_string(n) + " rows");
        }
        if (fields.size() != d) {
            throw ParseError(line_no, "row " + std::to_string(rows + 1) + " has " +
                                          std::to_string(fields.size()) + " targets, expected " +
                                          std::to_string(d));
        }
        for (auto t : fields) {
            if (t >= n) {
                throw ParseError(line_no, "target " + std::to_string(t) + " out of range");
            }
            targets.push_back(static_cast<Vertex>(t));
        }
        ++rows;
    }
    if (!have_header) {
        throw ParseError(line_no + 1, "missing header");
    }
    if (rows != n) {
        throw ParseError(line_no + 1, "expected " + std::to_string(n) + " rows, got " +
                                          std::to_string(rows));
    }
    return Digraph(n, d, std::move(targets));
}

Digraph parse_graph(std::istream& in) {
    std::string text(std::istreambuf_iterator<char>(in), {});
    return parse_graph(text);
}

std::string serialize_graph(const Digraph& g, const std::optional<Coloring>& coloring) {
    if (coloring && (coloring->size() != g.size() || coloring->degree() != g.degree())) {
        throw Error("coloring does not match graph dimensions");
    }
    std::ostringstream out;
    out << g.size() << ' ' << g.degree() << '\n';
    for (Vertex v = 0; v < g.size(); ++v) {
        for (Slot c = 0; c < g.degree(); ++c) {
            Slot s = coloring ? coloring->slot(v, c) : c;
            if (c > 0) out << ' ';
            out << g.target(v, s);
        }
        out << '\n';
    }
    return out.str();
}

std::string to_dot(const Digraph& g) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (Vertex v = 0; v < g.size(); ++v) {
        for (Slot s = 0; s < g.degree(); ++s) {
            out << "  " << v << " -> " << g.target(v, s) << " [label=" << s << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace roadcolor
