#pragma once

#include <cstdint>

#include "graphring/matrix.hpp"
#include "graphring/plumbing.hpp"
#include "graphring/rng.hpp"

namespace graphring {

struct TreeBounds {
    std::size_t max_nodes = 6;
    long long max_genus = 2;
    std::size_t max_fibers = 2;
    long long entry_bound = 5;  // |b| and a of random fibers
    bool orientable_only = false;
};

// Seed-reproducible random plumbing tree within the bounds.
PlumbingGraph random_tree(std::uint64_t seed, const TreeBounds& bounds);

// Random connected multigraph (tree plus up to max_extra_edges parallel or
// cycle-closing edges, never self-loops). Drives the relation-matrix oracle
// suites.
PlumbingGraph random_connected_graph(std::uint64_t seed, const TreeBounds& bounds,
                                     std::size_t max_extra_edges);

RatMatrix random_symmetric_matrix(SplitMix64& rng, std::size_t n, long long bound);

// det != 0, integer entries in [-bound, bound].
RatMatrix random_invertible_matrix(SplitMix64& rng, std::size_t n, long long bound);

// Random integer matrix with det = -1 and entries bounded by entry_bound,
// built from +/-J by bounded column shears.
GluingMatrix random_gluing_matrix(SplitMix64& rng, long long entry_bound);

}  // namespace graphring
