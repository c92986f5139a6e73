#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "graphring/homology.hpp"
#include "graphring/trivector.hpp"

namespace graphring {

enum class DualKind { A, B, D, C, T };

// Intersection dual of an H1 generator: A/B are the beta x t and alpha x t
// tori, D the Klein bottles, C the plumbing tori of extra edges, T the
// kernel surfaces (scaled to pair 1 with their fiber).
struct DualClass {
    DualKind kind;
    std::string node;
    std::size_t index = 0;
    std::size_t edge = 0;
    std::string display;
};

using SparseVec = std::map<std::size_t, Rational>;  // generator index -> coeff

struct ProductTable {
    std::vector<DualClass> basis;       // aligned with generators
    std::vector<Generator> generators;  // coordinate labels for the values
    // Only nonzero products, both orientations stored (skew-symmetric).
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> products;
    // T.T pairs: zeroed by convention, the value is routing-dependent.
    std::set<std::pair<std::size_t, std::size_t>> convention_dependent;

    SparseVec product(std::size_t i, std::size_t j) const;
    std::size_t size() const { return basis.size(); }
};

ProductTable product_table(const PlumbingGraph& g, const H1Basis& basis,
                           const std::vector<SurfaceRecipe>& surfaces);

// Wedge coefficient on (i, j, k) = k-th dual coordinate of products(i, j).
// Throws std::invalid_argument when the three expansions of any triple
// disagree (the table is not alternating).
Trivector to_trivector(const ProductTable& t);

// Aligned table in the row/column layout of the printed examples.
std::string render_table(const ProductTable& t);

}  // namespace graphring
