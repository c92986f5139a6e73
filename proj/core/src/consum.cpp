#include "graphring/consum.hpp"

#include <sstream>

namespace graphring {

namespace {

std::string target_ring_name(std::size_t r) {
    if (r == 0) return "Q";
    if (r == 1) return "Q[F]/(F^2)";
    std::ostringstream os;
    os << "Q[F1..F" << r << "]/(Fi*Fj)";
    return os.str();
}

}  // namespace

RingPresentation build_connected_sum(const PlumbingGraph& g, const H1Basis& basis,
                                     const std::vector<SurfaceRecipe>& surfaces) {
    if (!basis.tree.extra_edges.empty())
        throw validation_error("graph has a cycle");
    for (const auto& n : g.nodes)
        if (!n.orientable())
            throw validation_error("node '" + n.id + "' has a nonorientable base");

    RingPresentation p;
    p.survivors = basis.survivors;
    std::size_t r = basis.survivors.size();
    p.glue.r = r;
    p.glue.target = target_ring_name(r);
    p.glue.extension = r > 1;

    std::size_t curves = 0;
    for (const auto& n : g.nodes) {
        p.blocks.push_back(BlockRing{n.id, n.genus});
        curves += 2 * static_cast<std::size_t>(n.genus);

        std::vector<Rational> eps(r);
        for (std::size_t k = 0; k < r; ++k) {
            mpz_class c = surfaces[k].multiplicity(n.id);
            if (c != 0) eps[k] = Rational(mpz_class(1), c);
        }
        p.glue.epsilon[n.id] = std::move(eps);
        p.glue.fiber_identifications[n.id] = basis.fiber_expression.at(n.id);
    }
    for (std::size_t i = 0; i + 1 < g.nodes.size(); ++i)
        p.glue.fundamental_identifications.push_back({g.nodes[i].id, g.nodes[i + 1].id});

    // Fiber-product generators before the quotient: the unit, the A/B duals,
    // one shared surface tuple per surviving fiber, the curves, the block
    // fibers, the block fundamental classes.
    p.generating_set_size = 1 + curves + r + curves + g.nodes.size() + g.nodes.size();

    for (const auto& n : g.nodes) {
        const auto& fe = basis.fiber_expression.at(n.id);
        bool survivor = false;
        for (std::size_t k = 0; k < r; ++k)
            if (basis.survivors[k] == n.id) survivor = true;
        if (survivor) continue;
        std::ostringstream os;
        os << "t_" << n.id << " = ";
        bool any = false;
        for (std::size_t k = 0; k < r; ++k) {
            if (fe[k].is_zero()) continue;
            Rational c = fe[k];
            if (any) {
                os << (c.sign() > 0 ? " + " : " - ");
            } else if (c.sign() < 0) {
                os << "-";
            }
            if (c.abs() != Rational(1)) os << c.abs().str() << "·";
            os << "t_" << basis.survivors[k];
            any = true;
        }
        if (!any) os << "0";
        p.relations.push_back(os.str());
    }
    for (const auto& [a, b] : p.glue.fundamental_identifications)
        p.relations.push_back("M_" + a + " = M_" + b);
    return p;
}

Trivector presentation_to_trivector(const RingPresentation& p) {
    std::size_t pairs = 0;
    for (const auto& b : p.blocks) pairs += static_cast<std::size_t>(b.genus);
    std::size_t r = p.glue.r;
    Trivector omega(2 * pairs + r);
    std::size_t slot = 0;
    for (const auto& b : p.blocks) {
        const auto& fe = p.glue.fiber_identifications.at(b.label);
        for (long long j = 0; j < b.genus; ++j) {
            for (std::size_t k = 0; k < r; ++k)
                if (!fe[k].is_zero())
                    omega.add(slot, slot + 1, 2 * pairs + k, fe[k]);
            slot += 2;
        }
    }
    return omega;
}

Theorem53Result check_theorem_5_3(const PlumbingGraph& g) {
    H1Basis basis = h1_basis(g);
    auto surfaces = kernel_surfaces(g, basis);
    Theorem53Result res;
    res.direct = to_trivector(product_table(g, basis, surfaces));
    RingPresentation pres = build_connected_sum(g, basis, surfaces);
    res.consum = presentation_to_trivector(pres);

    // The presentation basis lists per-block pairs then shared surface
    // duals; match each slot to the table basis by provenance.
    std::size_t n = basis.generators.size();
    if (res.consum.dim() != n)
        throw std::logic_error("presentation and table bases differ in rank");
    res.basis_map = RatMatrix(n, n);
    std::size_t slot = 0;
    for (const auto& b : pres.blocks)
        for (long long j = 1; j <= b.genus; ++j) {
            std::size_t a_slot = slot++, b_slot = slot++;
            for (std::size_t i = 0; i < n; ++i) {
                const auto& gen = basis.generators[i];
                if (gen.node != b.label || gen.index != static_cast<std::size_t>(j)) continue;
                if (gen.kind == GenKind::alpha) res.basis_map.at(i, a_slot) = 1;
                if (gen.kind == GenKind::beta) res.basis_map.at(i, b_slot) = 1;
            }
        }
    for (std::size_t k = 0; k < pres.survivors.size(); ++k) {
        std::size_t i = basis.generator_index("t_" + pres.survivors[k]);
        res.basis_map.at(i, slot + k) = 1;
    }

    Trivector mapped = basis_change(res.consum, inverse(res.basis_map));
    if (mapped == res.direct) {
        res.match = true;
    } else {
        res.match = false;
        for (const auto& [key, c] : res.direct.terms()) {
            if (mapped.coeff(key[0], key[1], key[2]) != c) {
                res.first_mismatch = "coefficient on (" + std::to_string(key[0]) + "," +
                                     std::to_string(key[1]) + "," + std::to_string(key[2]) +
                                     "): direct " + c.str() + " vs connected-sum " +
                                     mapped.coeff(key[0], key[1], key[2]).str();
                break;
            }
        }
        if (!res.first_mismatch)
            for (const auto& [key, c] : mapped.terms())
                if (res.direct.coeff(key[0], key[1], key[2]) != c) {
                    res.first_mismatch = "coefficient on (" + std::to_string(key[0]) + "," +
                                         std::to_string(key[1]) + "," + std::to_string(key[2]) +
                                         "): direct 0 vs connected-sum " + c.str();
                    break;
                }
    }
    return res;
}

}  // namespace graphring
