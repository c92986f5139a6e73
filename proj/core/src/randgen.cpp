#include "graphring/randgen.hpp"

#include <numeric>

namespace graphring {

namespace {

CriticalFiber random_fiber(SplitMix64& rng, long long bound) {
    for (;;) {
        long long b = rng.nonzero(bound);
        long long a = rng.range(1, bound);
        if (std::gcd(std::abs(b), a) == 1) return CriticalFiber{b, a};
    }
}

SeifertNode random_node(SplitMix64& rng, std::size_t i, const TreeBounds& bounds) {
    SeifertNode n;
    n.id = "N" + std::to_string(i + 1);
    n.genus = bounds.orientable_only ? rng.range(0, bounds.max_genus)
                                     : rng.range(-bounds.max_genus, bounds.max_genus);
    std::size_t fibers = rng.bounded(bounds.max_fibers + 1);
    for (std::size_t f = 0; f < fibers; ++f)
        n.fibers.push_back(random_fiber(rng, bounds.entry_bound));
    return n;
}

}  // namespace

PlumbingGraph random_tree(std::uint64_t seed, const TreeBounds& bounds) {
    SplitMix64 rng(seed);
    PlumbingGraph g;
    std::size_t n = 1 + rng.bounded(bounds.max_nodes);
    for (std::size_t i = 0; i < n; ++i) g.nodes.push_back(random_node(rng, i, bounds));
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t parent = rng.bounded(i);
        g.edges.push_back(
            PlumbingEdge{g.nodes[parent].id, g.nodes[i].id, rng.coin() ? 1 : -1});
    }
    return g;
}

PlumbingGraph random_connected_graph(std::uint64_t seed, const TreeBounds& bounds,
                                     std::size_t max_extra_edges) {
    SplitMix64 rng(seed);
    PlumbingGraph g = random_tree(rng.next(), bounds);
    if (g.nodes.size() < 2) return g;
    std::size_t extra = rng.bounded(max_extra_edges + 1);
    for (std::size_t e = 0; e < extra; ++e) {
        std::size_t a = rng.bounded(g.nodes.size());
        std::size_t b = rng.bounded(g.nodes.size());
        if (a == b) b = (b + 1) % g.nodes.size();
        g.edges.push_back(PlumbingEdge{g.nodes[a].id, g.nodes[b].id, rng.coin() ? 1 : -1});
    }
    return g;
}

RatMatrix random_symmetric_matrix(SplitMix64& rng, std::size_t n, long long bound) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Rational v(rng.range(-bound, bound), rng.range(1, bound));
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

RatMatrix random_invertible_matrix(SplitMix64& rng, std::size_t n, long long bound) {
    for (;;) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rng.range(-bound, bound);
        if (!det(m).is_zero()) return m;
    }
}

GluingMatrix random_gluing_matrix(SplitMix64& rng, long long entry_bound) {
    auto max_abs = [](const GluingMatrix& m) {
        long long v = 0;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) v = std::max(v, std::abs(m.m[r][c]));
        return v;
    };
    for (;;) {
        GluingMatrix m;
        if (rng.coin()) {
            m.m[0][1] = -1;
            m.m[1][0] = -1;
        }
        std::size_t shears = rng.bounded(7);
        bool ok = true;
        for (std::size_t s = 0; s < shears && ok; ++s) {
            GluingMatrix next = apply_reduction_step(m, ReductionStep{rng.coin(), rng.nonzero(4)});
            if (max_abs(next) > entry_bound) ok = false;
            else m = next;
        }
        if (ok && m.det() == -1) return m;
    }
}

}  // namespace graphring
