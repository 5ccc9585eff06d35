#ifndef COXMUT_CYCLES_HPP
#define COXMUT_CYCLES_HPP

#include "exchange.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace coxmut {

using VertexCycle = std::vector<Index>;

namespace detail {

inline void extend_chordless(const Diagram& g, std::vector<Index>& path, std::vector<bool>& on_path,
                             std::vector<VertexCycle>& out)
{
    const Index start = path.front();
    const Index last = path.back();
    for (Index v = start + 1; v < g.size(); ++v) {
        if (on_path[v] || !g.adjacent(last, v)) continue;
        bool chord = false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (g.adjacent(v, path[i])) {
                chord = true;
                break;
            }
        if (chord) continue;
        if (g.adjacent(v, start)) {
            // Each cycle is met once per direction; keep the one with path[1] < v.
            if (path[1] < v) {
                VertexCycle c = path;
                c.push_back(v);
                out.push_back(std::move(c));
            }
            continue;
        }
        path.push_back(v);
        on_path[v] = true;
        extend_chordless(g, path, on_path, out);
        on_path[v] = false;
        path.pop_back();
    }
}

} // namespace detail

/// Chordless cycles of the underlying undirected graph, each rooted at its
/// least vertex, length >= 3.
inline std::vector<VertexCycle> chordless_cycles(const Diagram& g)
{
    std::vector<VertexCycle> out;
    std::vector<bool> on_path(g.size(), false);
    for (Index s = 0; s < g.size(); ++s)
        for (Index a = s + 1; a < g.size(); ++a) {
            if (!g.adjacent(s, a)) continue;
            std::vector<Index> path{s, a};
            on_path[s] = on_path[a] = true;
            detail::extend_chordless(g, path, on_path, out);
            on_path[s] = on_path[a] = false;
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Chordless cycles whose arrows all point the same way around, listed in
/// arrow order starting from the least vertex.
inline std::vector<VertexCycle> chordless_oriented_cycles(const Diagram& g)
{
    std::vector<VertexCycle> out;
    for (auto c : chordless_cycles(g)) {
        const std::size_t d = c.size();
        bool forward = true;
        bool backward = true;
        for (std::size_t i = 0; i < d; ++i) {
            forward = forward && g.has_arrow(c[i], c[(i + 1) % d]);
            backward = backward && g.has_arrow(c[(i + 1) % d], c[i]);
        }
        if (!forward && !backward) continue;
        if (backward) std::reverse(c.begin() + 1, c.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_perfect_square(std::int64_t v)
{
    if (v < 0) return false;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(v))));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v;
}

inline std::int64_t isqrt_exact(std::int64_t v)
{
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(v))));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

/// Every chordless cycle has a perfect-square label product.
inline bool satisfies_square_cycle_invariant(const Diagram& g)
{
    for (const auto& c : chordless_cycles(g)) {
        std::int64_t prod = 1;
        for (std::size_t i = 0; i < c.size(); ++i) prod *= g.weight(c[i], c[(i + 1) % c.size()]);
        if (!is_perfect_square(prod)) return false;
    }
    return true;
}

} // namespace coxmut

#endif // COXMUT_CYCLES_HPP
