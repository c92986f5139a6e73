#include "graphring/intersection.hpp"

#include <algorithm>
#include <sstream>

namespace graphring {

SparseVec ProductTable::product(std::size_t i, std::size_t j) const {
    auto it = products.find({i, j});
    return it == products.end() ? SparseVec{} : it->second;
}

namespace {

std::string dual_display(const Generator& g, std::size_t gamma_count,
                         std::size_t fiber_count, std::size_t fiber_pos) {
    // A/B/D reuse the generator's numbering; C and T follow the printed
    // examples (plain C and F when unique).
    switch (g.kind) {
        case GenKind::alpha: return "A" + g.display.substr(std::string("α").size());
        case GenKind::beta: return "B" + g.display.substr(std::string("β").size());
        case GenKind::delta: return "D" + g.display.substr(std::string("δ").size());
        case GenKind::gamma:
            return gamma_count == 1 ? "C" : "C" + g.display.substr(std::string("γ").size());
        case GenKind::fiber:
            return fiber_count == 1 ? "F" : "F" + std::to_string(fiber_pos + 1);
    }
    return "?";
}

}  // namespace

ProductTable product_table(const PlumbingGraph& g, const H1Basis& basis,
                           const std::vector<SurfaceRecipe>& surfaces) {
    ProductTable t;
    t.generators = basis.generators;
    std::size_t n = basis.generators.size();

    std::map<std::string, std::size_t> survivor_pos;
    for (std::size_t k = 0; k < basis.survivors.size(); ++k)
        survivor_pos[basis.survivors[k]] = k;
    if (surfaces.size() != basis.survivors.size())
        throw std::invalid_argument("one surface recipe per surviving fiber expected");

    std::size_t fiber_seen = 0;
    for (const auto& gen : basis.generators) {
        DualClass d;
        d.node = gen.node;
        d.index = gen.index;
        d.edge = gen.edge;
        switch (gen.kind) {
            case GenKind::alpha: d.kind = DualKind::A; break;
            case GenKind::beta: d.kind = DualKind::B; break;
            case GenKind::delta: d.kind = DualKind::D; break;
            case GenKind::gamma: d.kind = DualKind::C; break;
            case GenKind::fiber: d.kind = DualKind::T; break;
        }
        d.display = dual_display(gen, basis.rank_parts.b, basis.rank_parts.r,
                                 gen.kind == GenKind::fiber ? fiber_seen++ : 0);
        t.basis.push_back(std::move(d));
    }

    // Generator indices of the surviving fibers, in survivor order.
    std::vector<std::size_t> fiber_gen(basis.survivors.size());
    std::vector<std::size_t> fiber_dual(basis.survivors.size());
    {
        std::size_t pos = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (basis.generators[i].kind == GenKind::fiber) {
                fiber_gen[pos] = i;
                fiber_dual[pos] = i;
                ++pos;
            }
    }

    auto set_skew = [&](std::size_t i, std::size_t j, SparseVec value) {
        if (value.empty()) return;
        SparseVec neg;
        for (const auto& [k, c] : value) neg[k] = -c;
        t.products[{i, j}] = std::move(value);
        t.products[{j, i}] = std::move(neg);
    };
    auto fe_vec = [&](const std::string& node) -> const std::vector<Rational>& {
        return basis.fiber_expression.at(node);
    };
    auto fe_as_sparse = [&](const std::string& node, const Rational& scale) {
        SparseVec v;
        const auto& fe = fe_vec(node);
        for (std::size_t k = 0; k < fe.size(); ++k)
            if (!fe[k].is_zero() && !scale.is_zero()) v[fiber_gen[k]] = scale * fe[k];
        return v;
    };

    // A_j . B_j = the node's fiber class; pairs on distinct nodes or with
    // distinct indices are disjoint.
    for (std::size_t i = 0; i < n; ++i) {
        if (basis.generators[i].kind != GenKind::alpha) continue;
        std::size_t j = i + 1;  // the matching beta follows its alpha
        set_skew(i, j, fe_as_sparse(basis.generators[i].node, Rational(1)));
    }

    // A_j . F_k = -fe_j[k] beta_j and B_j . F_k = fe_j[k] alpha_j, with the
    // scaled dual surfaces (multiplicity times scale is exactly fe).
    for (std::size_t i = 0; i < n; ++i) {
        const auto& gen = basis.generators[i];
        if (gen.kind != GenKind::alpha && gen.kind != GenKind::beta) continue;
        const auto& fe = fe_vec(gen.node);
        for (std::size_t k = 0; k < fe.size(); ++k) {
            if (fe[k].is_zero()) continue;
            SparseVec v;
            if (gen.kind == GenKind::alpha)
                v[i + 1] = -fe[k];  // lands on beta_j
            else
                v[i - 1] = fe[k];  // lands on alpha_j
            set_skew(i, fiber_dual[k], std::move(v));
        }
    }

    // C_e . F_k = sign(e) (c_i fe(t_j) + c_j fe(t_i)) scaled to the dual
    // surface: the annuli are routed through the maximal tree.
    for (std::size_t i = 0; i < n; ++i) {
        const auto& gen = basis.generators[i];
        if (gen.kind != GenKind::gamma) continue;
        const PlumbingEdge& e = g.edges[gen.edge];
        for (std::size_t k = 0; k < basis.survivors.size(); ++k) {
            const auto& fe_a = fe_vec(e.a);
            const auto& fe_b = fe_vec(e.b);
            SparseVec v;
            for (std::size_t l = 0; l < basis.survivors.size(); ++l) {
                Rational c = Rational(e.sign) * (fe_a[k] * fe_b[l] + fe_b[k] * fe_a[l]);
                if (!c.is_zero()) v[fiber_gen[l]] = c;
            }
            set_skew(i, fiber_dual[k], std::move(v));
        }
    }

    // T . T is routing-dependent; zeroed by convention and marked.
    for (std::size_t a = 0; a < basis.survivors.size(); ++a)
        for (std::size_t b = a + 1; b < basis.survivors.size(); ++b) {
            t.convention_dependent.insert({fiber_dual[a], fiber_dual[b]});
            t.convention_dependent.insert({fiber_dual[b], fiber_dual[a]});
        }
    return t;
}

Trivector to_trivector(const ProductTable& t) {
    std::size_t n = t.size();
    Trivector omega(n);
    std::map<Trivector::Key, Rational> seen;
    for (const auto& [ij, vec] : t.products) {
        auto [i, j] = ij;
        if (i >= j) continue;
        for (const auto& [k, c] : vec) {
            if (k == i || k == j)
                throw std::invalid_argument(
                    "table is not alternating: product(" + t.basis[i].display + ", " +
                    t.basis[j].display + ") has a coefficient on its own factor");
            // Signed coefficient on the sorted triple; with i < j fixed, the
            // permutation is odd exactly when k lands between them.
            Rational val = (i < k && k < j) ? -c : c;
            Trivector::Key key{std::min(i, k), std::min(std::max(i, k), j),
                               std::max(j, k)};
            auto it = seen.find(key);
            if (it == seen.end()) {
                seen.emplace(key, val);
            } else if (it->second != val) {
                throw std::invalid_argument(
                    "table is not alternating: the three expansions of (" +
                    t.basis[key[0]].display + ", " + t.basis[key[1]].display + ", " +
                    t.basis[key[2]].display + ") disagree");
            }
        }
    }
    for (const auto& [key, val] : seen) omega.add(key[0], key[1], key[2], val);
    // Well-definedness: every expansion of every triple must agree.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            SparseVec vec = t.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Rational have = omega.coeff(i, j, k);
                auto it = vec.find(k);
                Rational want = it == vec.end() ? Rational(0) : it->second;
                if (have != want)
                    throw std::invalid_argument(
                        "table is not alternating: the three expansions of (" +
                        t.basis[i].display + ", " + t.basis[j].display + ", " +
                        t.basis[k].display + ") disagree");
            }
        }
    return omega;
}

namespace {

std::string format_entry(const SparseVec& v, const std::vector<Generator>& gens) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : v) {
        if (!first) os << (c.sign() > 0 ? "+" : "-");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.abs();
        if (a != Rational(1)) os << a.str();
        os << gens[k].display;
    }
    return os.str();
}

std::size_t utf8_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

}  // namespace

std::string render_table(const ProductTable& t) {
    std::size_t n = t.size();
    std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
    cells[0][0] = "·";
    for (std::size_t i = 0; i < n; ++i) {
        cells[0][i + 1] = t.basis[i].display;
        cells[i + 1][0] = t.basis[i].display;
        for (std::size_t j = 0; j < n; ++j)
            cells[i + 1][j + 1] = format_entry(t.product(i, j), t.generators);
    }
    std::vector<std::size_t> width(n + 1);
    for (std::size_t c = 0; c <= n; ++c)
        for (std::size_t r = 0; r <= n; ++r)
            width[c] = std::max(width[c], utf8_width(cells[r][c]));
    std::ostringstream os;
    for (std::size_t r = 0; r <= n; ++r) {
        for (std::size_t c = 0; c <= n; ++c) {
            std::string pad(width[c] - utf8_width(cells[r][c]), ' ');
            os << (c ? "  " : "") << (c ? pad : "") << cells[r][c] << (c ? "" : pad);
            if (c == 0) os << " |";
        }
        os << "\n";
        if (r == 0) {
            for (std::size_t c = 0; c <= n; ++c)
                os << std::string(width[c] + (c ? 2 : 0), '-') << (c == 0 ? "-+" : "");
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace graphring
