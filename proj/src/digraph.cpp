#include "roadcolor/digraph.hpp"

#include <algorithm>
#include <sstream>

namespace roadcolor {

Digraph::Digraph(std::size_t n, std::size_t d, std::vector<Vertex> targets)
    : n_(n), d_(d), targets_(std::move(targets)) {
    if (n_ == 0 || d_ == 0) {
        throw Error("digraph needs at least one vertex and one out-edge per vertex");
    }
    if (targets_.size() != n_ * d_) {
        throw Error("digraph target table has wrong size");
    }
    for (Vertex t : targets_) {
        if (t >= n_) {
            throw Error("digraph target out of range: " + std::to_string(t));
        }
    }
}

Digraph Digraph::from_rows(const std::vector<std::vector<Vertex>>& rows) {
    if (rows.empty()) {
        throw Error("digraph needs at least one vertex");
    }
    const std::size_t d = rows.front().size();
    std::vector<Vertex> targets;
    targets.reserve(rows.size() * d);
    for (const auto& row : rows) {
        if (row.size() != d) {
            throw Error("digraph rows must have uniform length");
        }
        targets.insert(targets.end(), row.begin(), row.end());
    }
    return Digraph(rows.size(), d, std::move(targets));
}

bool Digraph::is_bunch(Vertex v) const {
    auto r = row(v);
    return std::all_of(r.begin(), r.end(), [&](Vertex t) { return t == r[0]; });
}

Digraph Digraph::induced(std::span<const Vertex> vertices) const {
    std::vector<Vertex> index(n_, static_cast<Vertex>(-1));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        index[vertices[i]] = static_cast<Vertex>(i);
    }
    std::vector<Vertex> targets;
    targets.reserve(vertices.size() * d_);
    for (Vertex v : vertices) {
        for (Vertex t : row(v)) {
            if (index[t] == static_cast<Vertex>(-1)) {
                throw Error("induced vertex set is not closed under out-edges");
            }
            targets.push_back(index[t]);
        }
    }
    return Digraph(vertices.size(), d_, std::move(targets));
}

Coloring::Coloring(std::size_t n, std::size_t d, std::vector<Color> colors)
    : n_(n), d_(d), color_of_slot_(std::move(colors)), slot_of_color_(n * d) {
    if (color_of_slot_.size() != n_ * d_) {
        throw Error("coloring table has wrong size");
    }
    std::vector<bool> seen(d_);
    for (Vertex v = 0; v < n_; ++v) {
        std::fill(seen.begin(), seen.end(), false);
        for (Slot s = 0; s < d_; ++s) {
            Color c = color_of_slot_[v * d_ + s];
            if (c >= d_ || seen[c]) {
                throw Error("coloring is not a bijection at vertex " + std::to_string(v));
            }
            seen[c] = true;
            slot_of_color_[v * d_ + c] = s;
        }
    }
}

Coloring Coloring::identity(std::size_t n, std::size_t d) {
    std::vector<Color> colors(n * d);
    for (std::size_t i = 0; i < colors.size(); ++i) {
        colors[i] = static_cast<Color>(i % d);
    }
    return Coloring(n, d, std::move(colors));
}

void Coloring::swap_slots(Vertex v, Slot a, Slot b) {
    Color& ca = color_of_slot_[v * d_ + a];
    Color& cb = color_of_slot_[v * d_ + b];
    std::swap(ca, cb);
    slot_of_color_[v * d_ + ca] = a;
    slot_of_color_[v * d_ + cb] = b;
}

ColoredAutomaton::ColoredAutomaton(Digraph graph, Coloring coloring)
    : graph_(std::move(graph)), coloring_(std::move(coloring)) {
    if (graph_.size() != coloring_.size() || graph_.degree() != coloring_.degree()) {
        throw Error("coloring does not match graph dimensions");
    }
    const std::size_t d = graph_.degree();
    delta_.resize(graph_.size() * d);
    for (Vertex v = 0; v < graph_.size(); ++v) {
        for (Slot s = 0; s < d; ++s) {
            delta_[v * d + coloring_.color(v, s)] = graph_.target(v, s);
        }
    }
}

Digraph ColoredAutomaton::transition_graph() const {
    return Digraph(graph_.size(), graph_.degree(), delta_);
}

std::vector<Vertex> apply_word(const ColoredAutomaton& a, std::span<const Vertex> start,
                               const Word& w) {
    std::vector<Vertex> current(start.begin(), start.end());
    std::sort(current.begin(), current.end());
    current.erase(std::unique(current.begin(), current.end()), current.end());
    std::vector<char> mark(a.size(), 0);
    std::vector<Vertex> next;
    for (Color c : w) {
        if (c >= a.alphabet_size()) {
            throw Error("letter out of range: " + std::to_string(c));
        }
        next.clear();
        for (Vertex v : current) {
            Vertex t = a.next(v, c);
            if (!mark[t]) {
                mark[t] = 1;
                next.push_back(t);
            }
        }
        for (Vertex t : next) mark[t] = 0;
        current.swap(next);
    }
    std::sort(current.begin(), current.end());
    return current;
}

std::vector<Vertex> all_vertices(const ColoredAutomaton& a) {
    std::vector<Vertex> all(a.size());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return all;
}

std::string format_word(const Word& w, std::size_t alphabet_size) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (alphabet_size > 10 && i > 0) out << ' ';
        out << w[i];
    }
    return out.str();
}

}  // namespace roadcolor
