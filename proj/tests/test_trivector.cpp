#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphring/intersection.hpp"
#include "graphring/randgen.hpp"
#include "graphring/trivector.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace graphring;

namespace {

std::vector<Rational> unit(std::size_t n, std::size_t i) {
    std::vector<Rational> v(n);
    v[i] = 1;
    return v;
}

std::vector<Rational> random_vec(SplitMix64& rng, std::size_t n, long long bound) {
    std::vector<Rational> v(n);
    for (auto& x : v) x = rng.range(-bound, bound);
    return v;
}

}  // namespace

TEST_CASE("storage is alternating") {
    Trivector w(5);
    w.add(2, 0, 1, 3);  // odd permutation of (0,1,2)
    CHECK(w.coeff(0, 1, 2) == Rational(3));
    CHECK(w.coeff(1, 0, 2) == Rational(-3));
    CHECK(w.coeff(2, 0, 1) == Rational(3));
    CHECK(w.coeff(0, 0, 2).is_zero());
    w.add(0, 1, 2, -3);
    CHECK(w.is_zero());
    CHECK_THROWS_AS(w.add(0, 1, 5, 1), std::invalid_argument);
}

TEST_CASE("JSON round-trip and rejection of malformed forms") {
    Form3 w = Trivector::from_json(fixtures::awesome_form);
    CHECK(w == oracles::awesome());
    CHECK(Trivector::from_json(w.to_json()) == w);
    CHECK_THROWS_AS(Trivector::from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(Trivector::from_json(R"({"dim":3})"), std::invalid_argument);
    CHECK_THROWS_AS(Trivector::from_json(R"({"dim":3,"terms":[[1,0,2,"1"]]})"),
                    std::invalid_argument);
}

TEST_CASE("the multiplication table of abc + aef + bde") {
    Form3 w = oracles::awesome();
    // every pairwise product against the printed table (dual indices 0..5 = A..F)
    auto prod = [&](std::size_t i, std::size_t j) {
        return form_product(w, unit(6, i), unit(6, j));
    };
    struct Entry { std::size_t i, j; std::size_t dual; Rational c; };
    std::vector<Entry> table = {
        {0, 1, 2, 1},   // a.b = C
        {0, 2, 1, -1},  // a.c = -B
        {0, 4, 5, 1},   // a.e = F
        {0, 5, 4, -1},  // a.f = -E
        {1, 2, 0, 1},   // b.c = A
        {1, 3, 4, 1},   // b.d = E
        {1, 4, 3, -1},  // b.e = -D
        {3, 4, 1, 1},   // d.e = B
        {4, 5, 0, 1},   // e.f = A
    };
    std::set<std::pair<std::size_t, std::size_t>> nonzero;
    for (const auto& e : table) {
        nonzero.insert({e.i, e.j});
        auto v = prod(e.i, e.j);
        for (std::size_t k = 0; k < 6; ++k)
            CHECK(v[k] == (k == e.dual ? e.c : Rational(0)));
    }
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j) {
            if (nonzero.count({i, j})) continue;
            for (const auto& x : prod(i, j)) CHECK(x.is_zero());
        }
}

TEST_CASE("product is bilinear, antisymmetric, and reads off coefficients") {
    SplitMix64 rng(11);
    Form3 w(6);
    for (int t = 0; t < 8; ++t)
        w.add(rng.bounded(6), rng.bounded(6), rng.bounded(6), rng.range(-3, 3));
    for (int trial = 0; trial < 30; ++trial) {
        auto x = random_vec(rng, 6, 5), y = random_vec(rng, 6, 5),
             z = random_vec(rng, 6, 5);
        auto xy = form_product(w, x, y);
        auto yx = form_product(w, y, x);
        for (std::size_t k = 0; k < 6; ++k) CHECK(xy[k] == -yx[k]);
        CHECK(form_product(w, x, x) == std::vector<Rational>(6));
        // bilinearity in the first slot
        std::vector<Rational> xz(6);
        for (std::size_t k = 0; k < 6; ++k) xz[k] = x[k] + Rational(2) * z[k];
        auto lhs = form_product(w, xz, y);
        auto a = form_product(w, x, y), b = form_product(w, z, y);
        for (std::size_t k = 0; k < 6; ++k) CHECK(lhs[k] == a[k] + Rational(2) * b[k]);
    }
    // coefficient read-off at small dimension
    for (std::size_t n = 2; n <= 7; ++n) {
        Form3 v(n);
        SplitMix64 r2(n);
        for (std::size_t t = 0; t < n; ++t)
            v.add(r2.bounded(n), r2.bounded(n), r2.bounded(n), r2.range(-3, 3));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto p = form_product(v, unit(n, i), unit(n, j));
                for (std::size_t k = 0; k < n; ++k) CHECK(p[k] == v.coeff(i, j, k));
            }
    }
}

TEST_CASE("the displayed u.x expansion matches the product on random integers") {
    Form3 w = oracles::awesome();
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        auto u = random_vec(rng, 6, 9), x = random_vec(rng, 6, 9);
        auto got = form_product(w, u, x);
        auto want = oracles::eq1_expansion(u, x);
        for (std::size_t k = 0; k < 6; ++k) CHECK(got[k] == want[k]);
    }
}

TEST_CASE("basis change") {
    Form3 w = oracles::awesome();
    SUBCASE("identity fixes the form") {
        CHECK(basis_change(w, RatMatrix::identity(6)) == w);
    }
    SUBCASE("transpositions flip signs") {
        RatMatrix n = RatMatrix::identity(6);
        std::swap(n.at(0, 0), n.at(0, 1));
        std::swap(n.at(1, 1), n.at(1, 0));  // swap e0, e1
        Form3 sw = basis_change(w, n);
        CHECK(sw.coeff(0, 1, 2) == -w.coeff(0, 1, 2));
    }
    SUBCASE("scaling one vector doubles every triple containing it") {
        RatMatrix n = RatMatrix::identity(6);
        n.at(0, 0) = 2;
        Form3 sc = basis_change(w, n);
        CHECK(sc.coeff(0, 1, 2) == Rational(2));
        CHECK(sc.coeff(0, 4, 5) == Rational(2));
        CHECK(sc.coeff(1, 3, 4) == Rational(1));
    }
    SUBCASE("functorial under composition") {
        SplitMix64 rng(5);
        for (int trial = 0; trial < 15; ++trial) {
            RatMatrix n = random_invertible_matrix(rng, 6, 3);
            RatMatrix m = random_invertible_matrix(rng, 6, 3);
            CHECK(basis_change(w, n * m) == basis_change(basis_change(w, n), m));
        }
    }
    SUBCASE("singular matrices are rejected") {
        CHECK_THROWS_AS(basis_change(w, RatMatrix(6, 6)), std::invalid_argument);
    }
}

TEST_CASE("radical") {
    SUBCASE("abc + aef + bde has zero radical (the four elimination steps)") {
        CHECK(radical(oracles::awesome()).empty());
    }
    SUBCASE("the zero form's radical is everything") {
        CHECK(radical(Form3(4)).size() == 4);
    }
    SUBCASE("an unused direction spans the radical") {
        Form3 w(6);  // a1 b1 s + a2 b2 s with a spare 6th slot
        w.add(0, 1, 4, 1);
        w.add(2, 3, 4, 1);
        auto rad = radical(w);
        REQUIRE(rad.size() == 1);
        CHECK(rad[0] == unit(6, 5));
    }
    SUBCASE("dimension is invariant under basis change") {
        SplitMix64 rng(6);
        Form3 w(6);
        w.add(0, 1, 4, 1);
        w.add(2, 3, 4, 1);
        for (int trial = 0; trial < 25; ++trial) {
            RatMatrix n = random_invertible_matrix(rng, 6, 3);
            CHECK(radical(basis_change(w, n)).size() == 1);
            CHECK(radical(basis_change(oracles::awesome(), n)).empty());
        }
    }
}

TEST_CASE("decomposability") {
    SUBCASE("e1 e2 e3 is decomposable with the right span") {
        Form3 w(6);
        w.add(0, 1, 2, 1);
        auto d = is_decomposable(w);
        REQUIRE(d.decomposable);
        CHECK(d.support.size() == 3);
        // factors wedge back to the input
        Form3 back(6);
        const auto& f = d.factors;
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                for (std::size_t k = 0; k < 6; ++k)
                    back.add(i, j, k, f[0][i] * f[1][j] * f[2][k]);
        CHECK(back == w);
    }
    SUBCASE("uvw + xyz is not decomposable (6-dimensional support)") {
        auto d = is_decomposable(oracles::uvw_xyz());
        CHECK_FALSE(d.decomposable);
        CHECK(d.support.size() == 6);
    }
    SUBCASE("e1^(e2^e3 + e4^e5) fails the wedge test") {
        Form3 w(6);
        w.add(0, 1, 2, 1);
        w.add(0, 3, 4, 1);
        auto d = is_decomposable(w);
        CHECK_FALSE(d.decomposable);
        CHECK(d.support.size() == 5);
    }
    SUBCASE("scaled and basis-changed decomposables stay decomposable") {
        SplitMix64 rng(8);
        Form3 w(6);
        w.add(1, 3, 5, Rational(-7, 3));
        for (int trial = 0; trial < 20; ++trial) {
            RatMatrix n = random_invertible_matrix(rng, 6, 2);
            CHECK(is_decomposable(basis_change(w, n)).decomposable);
        }
    }
    SUBCASE("zero form is rejected") {
        CHECK_THROWS_AS(is_decomposable(Form3(6)), std::invalid_argument);
    }
}

TEST_CASE("the split endomorphism, pinned on the two reference forms") {
    SUBCASE("uvw + xyz: K = diag(1,1,1,-1,-1,-1), q = 1") {
        RatMatrix k = split_endomorphism(oracles::uvw_xyz());
        RatMatrix want(6, 6);
        for (std::size_t i = 0; i < 6; ++i) want.at(i, i) = i < 3 ? 1 : -1;
        CHECK(k == want);
    }
    SUBCASE("abc + aef + bde: the hand-computed nilpotent K") {
        RatMatrix k = split_endomorphism(oracles::awesome());
        RatMatrix want(6, 6);
        want.at(3, 0) = -2;  // K e_a = -2 e_d
        want.at(5, 1) = -2;  // K e_b = -2 e_f
        want.at(2, 4) = 2;   // K e_e =  2 e_c
        CHECK(k == want);
        CHECK((k * k).is_zero());
    }
    SUBCASE("K transforms as det(N) N^-1 K N; q by det(N)^2") {
        SplitMix64 rng(9);
        for (const Form3& w : {oracles::awesome(), oracles::uvw_xyz()})
            for (int trial = 0; trial < 20; ++trial) {
                RatMatrix n = random_invertible_matrix(rng, 6, 2);
                RatMatrix lhs = split_endomorphism(basis_change(w, n));
                RatMatrix rhs = inverse(n) * split_endomorphism(w) * n;
                Rational d = det(n);
                for (std::size_t i = 0; i < 6; ++i)
                    for (std::size_t j = 0; j < 6; ++j)
                        CHECK(lhs.at(i, j) == d * rhs.at(i, j));
            }
    }
}

TEST_CASE("rank-3 split decision") {
    SUBCASE("uvw + xyz splits with a recombining witness") {
        SplitReport r = rank3_split_dim6(oracles::uvw_xyz());
        CHECK(r.verdict == SplitVerdict::splits);
        CHECK(r.q == Rational(1));
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->first + r.witness->second == oracles::uvw_xyz());
        auto d1 = is_decomposable(r.witness->first);
        auto d2 = is_decomposable(r.witness->second);
        CHECK(d1.decomposable);
        CHECK(d2.decomposable);
        // complementary supports
        RatMatrix span(6, 6);
        for (std::size_t v = 0; v < 3; ++v)
            for (std::size_t i = 0; i < 6; ++i) {
                span.at(v, i) = d1.support[v][i];
                span.at(3 + v, i) = d2.support[v][i];
            }
        CHECK(rank(span) == 6);
    }
    SUBCASE("abc + aef + bde does not split; q = 0 is pinned") {
        SplitReport r = rank3_split_dim6(oracles::awesome());
        CHECK(r.verdict == SplitVerdict::does_not_split);
        CHECK(r.q == Rational(0));
        CHECK(r.degenerate);
    }
    SUBCASE("verdicts are invariant under 50 random basis changes each") {
        SplitMix64 rng(10);
        for (int trial = 0; trial < 50; ++trial) {
            RatMatrix n = random_invertible_matrix(rng, 6, 2);
            Rational d2 = det(n) * det(n);
            SplitReport a = rank3_split_dim6(basis_change(oracles::awesome(), n));
            CHECK(a.verdict == SplitVerdict::does_not_split);
            CHECK(a.q == Rational(0));
            SplitReport s = rank3_split_dim6(basis_change(oracles::uvw_xyz(), n));
            CHECK(s.verdict == SplitVerdict::splits);
            CHECK(s.q == d2);  // q transforms by det(N)^2
            CHECK(s.witness->first + s.witness->second ==
                  basis_change(oracles::uvw_xyz(), n));
        }
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(rank3_split_dim6(Form3(5)), std::invalid_argument);
        Form3 degenerate(6);
        degenerate.add(0, 1, 2, 1);  // nonzero radical
        CHECK_THROWS_AS(rank3_split_dim6(degenerate), std::invalid_argument);
    }
}

TEST_CASE("parallelism refuter") {
    SUBCASE("identity rows violate the determinant conditions") {
        std::vector<std::vector<Rational>> rows;
        for (std::size_t i = 0; i < 6; ++i) rows.push_back(unit(6, i));
        ParallelismReport r = opp_para_check(rows);
        CHECK_FALSE(r.violations.empty());
        CHECK_FALSE(r.all_parallel_pair.has_value());
    }
    SUBCASE("an engineered (1,4)-pair violation is reported") {
        std::vector<std::vector<Rational>> rows(6, std::vector<Rational>(6));
        rows[0][0] = 1;  // (n^1_1, n^1_2) = (1, 0)
        rows[3][1] = 1;  // (n^4_1, n^4_2) = (0, 1): not parallel
        ParallelismReport r = opp_para_check(rows);
        bool found = false;
        for (const auto& v : r.violations)
            if (v.i == 0 && v.j == 3 && v.coords == std::array<std::size_t, 2>{0, 1})
                found = true;
        CHECK(found);
    }
    SUBCASE("rows sharing a line in coordinates (1,2) pass and drop C") {
        std::vector<std::vector<Rational>> rows(6, std::vector<Rational>(6));
        for (std::size_t i = 0; i < 6; ++i) {
            rows[i][0] = static_cast<long long>(i + 1);      // first coordinate
            rows[i][1] = static_cast<long long>(2 * (i + 1));  // parallel (1,2) block
            rows[i][2] = static_cast<long long>(i * i);
            rows[i][4] = rows[i][0] * 3;  // keeps (2,5) and (1,5) parallel too
        }
        ParallelismReport r = opp_para_check(rows);
        CHECK(r.violations.empty());
        REQUIRE(r.all_parallel_pair.has_value());
        CHECK(r.missing_dual == "C");
    }
    SUBCASE("zero cross products imply the determinant conditions (cross-validation)") {
        SplitMix64 rng(12);
        Form3 w = oracles::awesome();
        std::size_t checked = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            RatMatrix n = random_invertible_matrix(rng, 6, 2);
            // rows of the candidate basis = columns of n as expansions
            std::vector<std::vector<Rational>> rows(6, std::vector<Rational>(6));
            for (std::size_t c = 0; c < 6; ++c)
                for (std::size_t i = 0; i < 6; ++i) rows[c][i] = n.at(i, c);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 3; j < 6; ++j) {
                    auto p = form_product(w, rows[i], rows[j]);
                    bool zero = true;
                    for (const auto& x : p)
                        if (!x.is_zero()) zero = false;
                    if (!zero) continue;
                    ++checked;
                    // all three determinant conditions for this (i, j) hold
                    for (const auto& v : opp_para_check(rows).violations)
                        CHECK_FALSE((v.i == i && v.j == j));
                }
        }
        CHECK(checked > 0);
    }
    SUBCASE("shape errors") {
        CHECK_THROWS_AS(opp_para_check({}), std::invalid_argument);
    }
}

TEST_CASE("obstruction verdicts") {
    SUBCASE("abc + aef + bde is obstructed") {
        ObstructionVerdict v = obstruct(oracles::awesome());
        CHECK(v.obstructed);
        CHECK(v.verdict.find("obstructed from tree-graph-manifold cobordism") == 0);
    }
    SUBCASE("uvw + xyz is not obstructed") {
        ObstructionVerdict v = obstruct(oracles::uvw_xyz());
        CHECK_FALSE(v.obstructed);
        CHECK(v.detail.verdict == SplitVerdict::splits);
    }
    SUBCASE("nonzero radical blocks the obstruction") {
        Form3 w(6);
        w.add(0, 1, 2, 1);
        ObstructionVerdict v = obstruct(w);
        CHECK_FALSE(v.obstructed);
        CHECK(v.detail.radical_dim == 3);
    }
    SUBCASE("wrong dimension is not applicable") {
        Form3 w(7);
        w.add(0, 1, 2, 1);
        w.add(2, 3, 4, 1);
        w.add(4, 5, 6, 1);
        ObstructionVerdict v = obstruct(w);
        if (radical(w).empty()) CHECK_FALSE(v.obstructed);
    }
}

TEST_CASE("every rank-6 orientable tree form has a radical or a rank-3 split") {
    TreeBounds bounds;
    bounds.orientable_only = true;
    std::size_t found = 0;
    std::uint64_t seed = 0;
    while (found < 200) {
        PlumbingGraph g = random_tree(seed++, bounds);
        H1Basis basis = h1_basis(g);
        if (basis.rank_parts.total() != 6) continue;
        ++found;
        auto surfaces = kernel_surfaces(g, basis);
        Form3 w = to_trivector(product_table(g, basis, surfaces));
        auto rad = radical(w);
        if (!rad.empty()) continue;  // rank-1 summands split off
        SplitReport r = rank3_split_dim6(w);
        CHECK(r.verdict == SplitVerdict::splits);
        CHECK_FALSE(obstruct(w).obstructed);
    }
    CHECK(found == 200);
}
