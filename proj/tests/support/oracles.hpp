#pragma once

// Independent oracles for the property suites. These recompute spec'd
// quantities from first principles, off the implementation paths they check.

#include <map>
#include <string>
#include <vector>

#include "graphring/homology.hpp"
#include "graphring/matrix.hpp"
#include "graphring/plumbing.hpp"
#include "graphring/trivector.hpp"

namespace oracles {

// Rank of H_1(M;Q) from the raw relation matrix: generators are every
// node's regular fiber, all delta_1..delta_g of each nonorientable end, the
// alpha/beta of each orientable end, and one gamma per extra edge. Each
// orientable end gives sum(a_j/b_j) t = sum +/- t^k over *all* adjacent
// nodes; each nonorientable end gives 2 sum delta_i = (that same relation)
// and its fiber is killed by the order-2 relation.
inline std::size_t brute_force_h1_rank(const graphring::PlumbingGraph& g) {
    using graphring::Rational;
    std::map<std::string, std::size_t> t_col;
    std::size_t cols = 0;
    for (const auto& n : g.nodes) t_col[n.id] = cols++;
    std::size_t delta_cols = 0, ab_cols = 0;
    std::map<std::string, std::size_t> delta_base;
    for (const auto& n : g.nodes)
        if (!n.orientable()) {
            delta_base[n.id] = cols + delta_cols;
            delta_cols += static_cast<std::size_t>(-n.genus);
        } else {
            ab_cols += 2 * static_cast<std::size_t>(n.genus);
        }
    cols += delta_cols + ab_cols;
    std::size_t gammas = g.edges.size() + 1 - g.nodes.size();
    cols += gammas;

    std::vector<std::vector<Rational>> rows;
    for (const auto& n : g.nodes) {
        std::vector<Rational> row(cols);
        for (const auto& f : n.fibers)
            row[t_col[n.id]] += n.orientable() ? Rational(f.a, f.b) : Rational(-f.a, f.b);
        for (const auto& e : g.edges) {
            if (e.a == n.id) row[t_col[e.b]] -= e.sign;
            if (e.b == n.id) row[t_col[e.a]] -= e.sign;
        }
        if (!n.orientable())
            for (std::size_t d = 0; d < static_cast<std::size_t>(-n.genus); ++d)
                row[delta_base[n.id] + d] = 2;
        rows.push_back(std::move(row));
        if (!n.orientable()) {
            std::vector<Rational> kill(cols);
            kill[t_col[n.id]] = 1;  // 2t = 0 over Q
            rows.push_back(std::move(kill));
        }
    }
    graphring::RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    return cols - graphring::rank(m);
}

// The six dual coefficients of u.x for omega = abc + aef + bde, transcribed
// term by term from the displayed expansion (1-based n^1, n^4 -> u, x).
inline std::vector<graphring::Rational> eq1_expansion(
    const std::vector<graphring::Rational>& u, const std::vector<graphring::Rational>& x) {
    auto n1 = [&](int i) { return u[static_cast<std::size_t>(i - 1)]; };
    auto n4 = [&](int i) { return x[static_cast<std::size_t>(i - 1)]; };
    using graphring::Rational;
    std::vector<Rational> out(6);
    out[0] = n1(2) * n4(3) - n1(3) * n4(2) + n1(5) * n4(6) - n1(6) * n4(5);          // A
    out[1] = -n1(1) * n4(3) + n1(3) * n4(1) + n1(4) * n4(5) - n1(5) * n4(4);         // B
    out[2] = n1(1) * n4(2) - n1(2) * n4(1);                                          // C
    out[3] = -n1(2) * n4(5) + n1(5) * n4(2);                                         // D
    out[4] = -n1(1) * n4(6) + n1(6) * n4(1) + n1(2) * n4(4) - n1(4) * n4(2);         // E
    out[5] = n1(1) * n4(5) - n1(5) * n4(1);                                          // F
    return out;
}

inline graphring::Form3 awesome() {
    graphring::Form3 w(6);
    w.add(0, 1, 2, 1);  // abc
    w.add(0, 4, 5, 1);  // aef
    w.add(1, 3, 4, 1);  // bde
    return w;
}

inline graphring::Form3 uvw_xyz() {
    graphring::Form3 w(6);
    w.add(0, 1, 2, 1);
    w.add(3, 4, 5, 1);
    return w;
}

}  // namespace oracles
