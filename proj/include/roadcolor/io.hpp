#ifndef ROADCOLOR_IO_HPP
#define ROADCOLOR_IO_HPP

#include <istream>
#include <optional>
#include <string>
#include <string_view>

#include "roadcolor/digraph.hpp"

namespace roadcolor {

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Text format: '#' comment lines anywhere, then a header "n d", then n rows of
// d space-separated targets. Slot order is the order written.
Digraph parse_graph(std::string_view text);
Digraph parse_graph(std::istream& in);

/// Canonical text form. With a coloring, row v lists targets ordered by color,
/// so the output reads back as a colored graph under the slot = color convention.
std::string serialize_graph(const Digraph& g, const std::optional<Coloring>& coloring = {});

/// Graphviz rendering, one edge per (vertex, slot) in ascending order, labeled by slot.
std::string to_dot(const Digraph& g);

}  // namespace roadcolor

#endif  // ROADCOLOR_IO_HPP
