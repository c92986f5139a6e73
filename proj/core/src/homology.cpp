#include "graphring/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphring {

ConnectivityMatrix connectivity_matrix(const PlumbingGraph& g) {
    ConnectivityMatrix cm;
    std::map<std::string, std::size_t> idx;
    for (const auto& n : g.nodes)
        if (n.orientable()) {
            idx[n.id] = cm.node_order.size();
            cm.node_order.push_back(n.id);
        }
    std::size_t n = cm.node_order.size();
    cm.matrix = RatMatrix(n, n);
    for (const auto& node : g.nodes) {
        if (!node.orientable()) continue;
        std::size_t i = idx[node.id];
        for (const auto& f : node.fibers)
            cm.matrix.at(i, i) -= Rational(f.a, f.b);
    }
    for (const auto& e : g.edges) {
        auto ia = idx.find(e.a), ib = idx.find(e.b);
        if (ia == idx.end() || ib == idx.end()) continue;
        cm.matrix.at(ia->second, ib->second) += e.sign;
        cm.matrix.at(ib->second, ia->second) += e.sign;
    }
    return cm;
}

std::size_t H1Basis::generator_index(const std::string& display) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].display == display) return i;
    throw std::out_of_range("no generator named '" + display + "'");
}

H1Basis h1_basis(const PlumbingGraph& g) {
    H1Basis basis;
    basis.tree = spanning_tree(g);
    basis.cm = connectivity_matrix(g);
    RrefResult r = rref(basis.cm.matrix);
    basis.cm_rref = r.matrix;
    basis.cm_pivots = r.pivot_cols;

    std::vector<bool> is_pivot(basis.cm.node_order.size(), false);
    for (std::size_t c : basis.cm_pivots) is_pivot[c] = true;
    std::map<std::string, std::size_t> survivor_index;
    for (std::size_t c = 0; c < basis.cm.node_order.size(); ++c)
        if (!is_pivot[c]) {
            survivor_index[basis.cm.node_order[c]] = basis.survivors.size();
            basis.survivors.push_back(basis.cm.node_order[c]);
        }
    std::size_t r_count = basis.survivors.size();

    // A pivot column's fiber is minus the rref row read off over the free
    // columns; a free column's fiber is its own unit vector; a nonorientable
    // node's fiber has order 2 and dies over Q.
    for (std::size_t c = 0; c < basis.cm.node_order.size(); ++c) {
        std::vector<Rational> expr(r_count);
        if (!is_pivot[c]) {
            expr[survivor_index[basis.cm.node_order[c]]] = 1;
        } else {
            std::size_t prow =
                std::find(basis.cm_pivots.begin(), basis.cm_pivots.end(), c) -
                basis.cm_pivots.begin();
            for (std::size_t f = 0; f < basis.cm.node_order.size(); ++f)
                if (!is_pivot[f])
                    expr[survivor_index[basis.cm.node_order[f]]] = -basis.cm_rref.at(prow, f);
        }
        basis.fiber_expression[basis.cm.node_order[c]] = std::move(expr);
    }
    for (const auto& n : g.nodes)
        if (!n.orientable()) basis.fiber_expression[n.id] = std::vector<Rational>(r_count);

    std::size_t pair_counter = 0, delta_counter = 0;
    for (const auto& n : g.nodes) {
        if (!n.orientable()) continue;
        basis.rank_parts.g_plus += static_cast<std::size_t>(n.genus);
        for (long long j = 1; j <= n.genus; ++j) {
            ++pair_counter;
            basis.generators.push_back(Generator{GenKind::alpha, n.id,
                                                 static_cast<std::size_t>(j), 0,
                                                 "α" + std::to_string(pair_counter)});
            basis.generators.push_back(Generator{GenKind::beta, n.id,
                                                 static_cast<std::size_t>(j), 0,
                                                 "β" + std::to_string(pair_counter)});
        }
    }
    for (const auto& n : g.nodes) {
        if (n.orientable()) continue;
        std::size_t gn = static_cast<std::size_t>(-n.genus);
        basis.rank_parts.g_minus += gn - 1;
        for (std::size_t j = 1; j + 1 <= gn; ++j) {  // delta_g is eliminated
            ++delta_counter;
            basis.generators.push_back(
                Generator{GenKind::delta, n.id, j, 0, "δ" + std::to_string(delta_counter)});
        }
    }
    basis.rank_parts.b = basis.tree.extra_edges.size();
    for (std::size_t k = 0; k < basis.tree.extra_edges.size(); ++k) {
        std::string name = basis.rank_parts.b == 1 ? "γ" : "γ" + std::to_string(k + 1);
        basis.generators.push_back(
            Generator{GenKind::gamma, "", 0, basis.tree.extra_edges[k], name});
    }
    basis.rank_parts.r = r_count;
    for (const auto& s : basis.survivors)
        basis.generators.push_back(Generator{GenKind::fiber, s, 0, 0, "t_" + s});

    return basis;
}

mpz_class SurfaceRecipe::multiplicity(const std::string& node) const {
    auto it = multiplicities.find(node);
    return it == multiplicities.end() ? mpz_class(0) : it->second;
}

std::vector<SurfaceRecipe> kernel_surfaces(const PlumbingGraph& g, const H1Basis& basis) {
    const auto& order = basis.cm.node_order;
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < order.size(); ++i) idx[order[i]] = i;
    std::vector<bool> is_pivot(order.size(), false);
    for (std::size_t c : basis.cm_pivots) is_pivot[c] = true;

    std::vector<SurfaceRecipe> recipes;
    for (const auto& survivor : basis.survivors) {
        std::size_t f = idx.at(survivor);
        std::vector<Rational> v(order.size());
        v[f] = 1;
        for (std::size_t p = 0; p < basis.cm_pivots.size(); ++p)
            v[basis.cm_pivots[p]] = -basis.cm_rref.at(p, f);

        // Clear denominators keeping the surviving multiplicity positive.
        mpz_class l = 1;
        for (const auto& x : v)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
        mpz_class content = 0;
        std::vector<mpz_class> w(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            w[i] = v[i].numerator() * (l / v[i].denominator());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w[i].get_mpz_t());
        }
        for (auto& x : w) x /= content;

        // Boundary multiplicity on each adjacent nonorientable end's fiber.
        // A single fiber has order 2 there, so an odd total cannot be capped
        // by punctured Klein bottles; double the whole recipe first.
        std::map<std::string, mpz_class> boundary;
        for (const auto& e : g.edges) {
            auto classify = [&](const std::string& from, const std::string& to) {
                auto it = idx.find(from);
                if (it == idx.end()) return;
                const SeifertNode* other = g.find_node(to);
                if (!other || other->orientable()) return;
                boundary[to] += e.sign * w[it->second];
            };
            classify(e.a, e.b);
            classify(e.b, e.a);
        }
        bool needs_double = false;
        for (const auto& [node, m] : boundary)
            if (mpz_odd_p(m.get_mpz_t())) needs_double = true;
        if (needs_double) {
            for (auto& x : w) x *= 2;
            for (auto& [node, m] : boundary) m *= 2;
        }

        SurfaceRecipe rec;
        rec.survivor = survivor;
        rec.doubled = needs_double;
        for (std::size_t i = 0; i < order.size(); ++i)
            if (w[i] != 0) rec.multiplicities[order[i]] = w[i];
        for (const auto& [node, m] : boundary)
            if (m != 0) rec.klein_caps[node] = abs(m) / 2;
        rec.scale = Rational(mpz_class(1), w[f]);
        recipes.push_back(std::move(rec));
    }
    return recipes;
}

}  // namespace graphring
