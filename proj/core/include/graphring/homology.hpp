#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "graphring/matrix.hpp"
#include "graphring/plumbing.hpp"

namespace graphring {

// Symmetric rational matrix over the orientable-base nodes: diagonal entry
// -sum a_j/b_j over the node's fibers, off-diagonal the signed edge count
// inside the orientable subgraph.
struct ConnectivityMatrix {
    std::vector<std::string> node_order;  // document order
    RatMatrix matrix;
};

ConnectivityMatrix connectivity_matrix(const PlumbingGraph& g);

enum class GenKind { alpha, beta, delta, gamma, fiber };

struct Generator {
    GenKind kind;
    std::string node;       // carrying node (empty for gamma)
    std::size_t index = 0;  // 1-based local index for alpha/beta/delta
    std::size_t edge = 0;   // edge index for gamma
    std::string display;
};

struct RankParts {
    std::size_t b = 0, r = 0, g_plus = 0, g_minus = 0;
    std::size_t total() const { return b + r + 2 * g_plus + g_minus; }
};

struct H1Basis {
    std::vector<Generator> generators;
    RankParts rank_parts;
    std::vector<std::string> survivors;  // free-column node labels, column order
    // node label -> coordinates of its fiber class over the surviving fibers;
    // the zero vector for every nonorientable node.
    std::map<std::string, std::vector<Rational>> fiber_expression;

    ConnectivityMatrix cm;
    RatMatrix cm_rref;
    std::vector<std::size_t> cm_pivots;
    SpanningTree tree;

    std::size_t generator_index(const std::string& display) const;  // throws if absent
};

H1Basis h1_basis(const PlumbingGraph& g);

// Closed-surface recipe dual to one surviving fiber: integer multiplicities
// of the orientable-node row surfaces, Klein-bottle cap counts on adjacent
// nonorientable ends, and the positive scale making the dual pairing 1.
struct SurfaceRecipe {
    std::string survivor;
    std::map<std::string, mpz_class> multiplicities;  // only nonzero entries
    std::map<std::string, mpz_class> klein_caps;      // only nonzero entries
    Rational scale;
    bool doubled = false;

    mpz_class multiplicity(const std::string& node) const;
};

std::vector<SurfaceRecipe> kernel_surfaces(const PlumbingGraph& g, const H1Basis& basis);

}  // namespace graphring
