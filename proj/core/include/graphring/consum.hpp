#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphring/homology.hpp"
#include "graphring/intersection.hpp"
#include "graphring/trivector.hpp"

namespace graphring {

// Cohomology ring of one closed-surface x circle block: graded ranks
// (1, 2g+1, 2g+1, 1), with the block's degree-1 classes the A_i/B_i tori
// and the base surface, and product structure alpha_i ^ beta_i ^ t.
struct BlockRing {
    std::string label;
    long long genus = 0;
};

// Connected-sum glue data. The target ring is Q for r = 0, Q[F]/(F^2) for
// r = 1, and Q[F_1..F_r]/(F_i F_j) for r > 1 (an implementation extension,
// validated only by the cross-check).
struct GluePattern {
    std::size_t r = 0;
    std::string target;
    // block label -> multiple of F_k for each surviving fiber (1/c_k or 0).
    std::map<std::string, std::vector<Rational>> epsilon;
    // block label -> coordinates of its fiber over the surviving fibers.
    std::map<std::string, std::vector<Rational>> fiber_identifications;
    // chained fundamental-class equalities M_i = M_j.
    std::vector<std::pair<std::string, std::string>> fundamental_identifications;
    bool extension = false;  // r > 1
};

struct RingPresentation {
    std::vector<BlockRing> blocks;
    GluePattern glue;
    std::vector<std::string> survivors;
    std::size_t generating_set_size = 0;  // pre-quotient fiber-product generators
    std::vector<std::string> relations;   // rendered quotient relations
};

// Connected-sum-of-rings presentation for a tree graph manifold with
// orientable bases. Throws validation_error on a graph with a cycle or a
// nonorientable base.
RingPresentation build_connected_sum(const PlumbingGraph& g, const H1Basis& basis,
                                     const std::vector<SurfaceRecipe>& surfaces);

// Trivector of the quotient ring in the basis (per-block alpha_i, beta_i;
// one shared surface dual per surviving fiber).
Trivector presentation_to_trivector(const RingPresentation& p);

struct Theorem53Result {
    bool match = false;
    RatMatrix basis_map;  // carries the presentation basis onto the table basis
    Trivector direct;     // via the intersection product table
    Trivector consum;     // via the connected-sum presentation
    std::optional<std::string> first_mismatch;
};

// Cross-checks the connected-sum trivector against the directly computed
// intersection trivector, exactly, under an explicit basis map.
Theorem53Result check_theorem_5_3(const PlumbingGraph& g);

}  // namespace graphring
