#include "roadcolor/precheck.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace roadcolor {

namespace {

constexpr std::uint32_t kUnvisited = static_cast<std::uint32_t>(-1);

}  // namespace

// Iterative Tarjan; deep graphs must not overflow the call stack.
SccDecomposition scc_decompose(const Digraph& g) {
    const std::size_t n = g.size();
    const std::size_t d = g.degree();
    std::vector<std::uint32_t> index(n, kUnvisited);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    std::vector<std::uint32_t> raw_component(n, kUnvisited);
    std::uint32_t raw_count = 0;
    std::uint32_t counter = 0;

    struct Frame {
        Vertex v;
        Slot next_slot;
    };
    std::vector<Frame> call;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            if (f.next_slot < d) {
                Vertex w = g.target(f.v, f.next_slot++);
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            Vertex v = f.v;
            call.pop_back();
            if (!call.empty()) {
                Vertex parent = call.back().v;
                low[parent] = std::min(low[parent], low[v]);
            }
            if (low[v] == index[v]) {
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    raw_component[w] = raw_count;
                } while (w != v);
                ++raw_count;
            }
        }
    }

    // Renumber by smallest member.
    SccDecomposition out;
    std::vector<std::uint32_t> renumber(raw_count, kUnvisited);
    out.component_of.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        std::uint32_t& id = renumber[raw_component[v]];
        if (id == kUnvisited) {
            id = static_cast<std::uint32_t>(out.components.size());
            out.components.emplace_back();
        }
        out.component_of[v] = id;
        out.components[id].push_back(v);
    }
    std::vector<char> has_exit(out.components.size(), 0);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex t : g.row(v)) {
            if (out.component_of[t] != out.component_of[v]) has_exit[out.component_of[v]] = 1;
        }
    }
    for (std::uint32_t c = 0; c < has_exit.size(); ++c) {
        if (!has_exit[c]) out.sinks.push_back(c);
    }
    return out;
}

bool is_strongly_connected(const Digraph& g) {
    return scc_decompose(g).components.size() == 1;
}

SinkCheck check_sink_scc(const Digraph& g) {
    SccDecomposition scc = scc_decompose(g);
    SinkCheck out;
    out.sink_count = scc.sinks.size();
    if (out.unique()) {
        out.vertices = scc.components[scc.sinks.front()];
    }
    return out;
}

GcdReport gcd_of_cycles(const Digraph& g) {
    const std::size_t n = g.size();
    const std::size_t d = g.degree();
    GcdReport report;
    report.levels.assign(n, 0);

    struct Frame {
        Vertex v;
        Slot next_slot;
    };
    std::vector<Frame> stack{{0, 0}};
    report.levels[0] = 1;
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next_slot == d) {
            stack.pop_back();
            continue;
        }
        Vertex r = f.v;
        Vertex q = g.target(r, f.next_slot++);
        if (report.levels[q] == 0) {
            report.levels[q] = report.levels[r] + 1;
            stack.push_back({q, 0});
        } else {
            auto lq = static_cast<std::int64_t>(report.levels[q]);
            auto lr = static_cast<std::int64_t>(report.levels[r]);
            auto diff = static_cast<std::uint64_t>(std::llabs(lq - 1 - lr));
            if (diff != 0) report.differences.insert(diff);
        }
    }

    std::uint64_t gcd = 0;
    for (auto x : report.differences) gcd = std::gcd(gcd, x);
    // A lone vertex only has loops.
    report.gcd = n == 1 ? 1 : gcd;
    return report;
}

std::optional<EdgeRef> find_loop(const Digraph& g) {
    for (Vertex v = 0; v < g.size(); ++v) {
        for (Slot s = 0; s < g.degree(); ++s) {
            if (g.target(v, s) == v) return EdgeRef{v, s};
        }
    }
    return std::nullopt;
}

std::optional<BunchPair> find_two_incoming_bunches(const Digraph& g) {
    const std::size_t n = g.size();
    std::vector<Vertex> first_origin(n, kUnvisited);
    std::vector<Vertex> second_origin(n, kUnvisited);
    for (Vertex v = 0; v < n; ++v) {
        if (!g.is_bunch(v)) continue;
        Vertex t = g.target(v, 0);
        if (first_origin[t] == kUnvisited) {
            first_origin[t] = v;
        } else if (second_origin[t] == kUnvisited) {
            second_origin[t] = v;
        }
    }
    for (Vertex p = 0; p < n; ++p) {
        if (second_origin[p] != kUnvisited) {
            return BunchPair{{first_origin[p], second_origin[p]}, p};
        }
    }
    return std::nullopt;
}

}  // namespace roadcolor
