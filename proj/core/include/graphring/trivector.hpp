#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphring/matrix.hpp"

namespace graphring {

// Element of /\^3 Q^n, stored as canonical strictly increasing triple ->
// nonzero rational coefficient. Evaluation on permuted triples picks up the
// permutation sign.
class Trivector {
public:
    using Key = std::array<std::size_t, 3>;

    Trivector() : dim_(0) {}
    explicit Trivector(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds c * e_i ^ e_j ^ e_k; indices in any order, repeats contribute 0.
    void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
    // Signed coefficient; 0 on repeated indices.
    Rational coeff(std::size_t i, std::size_t j, std::size_t k) const;

    friend bool operator==(const Trivector&, const Trivector&) = default;
    friend Trivector operator+(const Trivector& a, const Trivector& b);
    friend Trivector operator*(const Rational& c, const Trivector& t);

    // {"dim": n, "terms": [[i, j, k, "p/q"], ...]} with 0-based i < j < k.
    static Trivector from_json(const std::string& text);
    std::string to_json() const;
    std::string str(const std::vector<std::string>* labels = nullptr) const;

private:
    std::size_t dim_;
    std::map<Key, Rational> terms_;
};

using Form3 = Trivector;

// The H2 x H2 -> H1 product encoded by the form: covector over the dual
// basis, component k = omega(x, y, e_k). Bilinear, antisymmetric in (x, y).
std::vector<Rational> form_product(const Form3& omega,
                                   const std::vector<Rational>& x,
                                   const std::vector<Rational>& y);

// omega^N with (omega^N)(x,y,z) = omega(Nx, Ny, Nz); N invertible.
Form3 basis_change(const Form3& omega, const RatMatrix& n);

// Basis of {x : omega(x, ., .) = 0}; vectors integer-normalized.
std::vector<std::vector<Rational>> radical(const Form3& omega);

struct DecompResult {
    bool decomposable = false;
    std::array<std::vector<Rational>, 3> factors;  // valid when decomposable
    std::vector<std::vector<Rational>> support;    // basis of the support span
};

// Decides whether delta = u ^ v ^ w for independent u, v, w: the span of all
// degree-2 contractions must be 3-dimensional and delta ^ v = 0 on it.
// Throws std::invalid_argument on the zero form.
DecompResult is_decomposable(const Form3& delta);

// The endomorphism x -> iota_x omega ^ omega of a 6-dimensional space,
// read through the standard volume form. Satisfies K^2 = q * Id.
RatMatrix split_endomorphism(const Form3& omega);

enum class SplitVerdict { splits, does_not_split, not_applicable };

struct SplitReport {
    std::size_t radical_dim = 0;
    std::vector<std::vector<Rational>> radical_basis;
    SplitVerdict verdict = SplitVerdict::not_applicable;
    bool q_known = false;
    Rational q;             // (1/6) tr(K^2)
    bool degenerate = false;  // q == 0
    std::string certificate;
    std::optional<std::pair<Form3, Form3>> witness;  // recombines to the input
};

// Decides omega = delta_1 + delta_2 with decomposable summands of
// complementary 3-dimensional supports, over Q. Requires dim = 6 and zero
// radical (callers strip the radical first).
SplitReport rank3_split_dim6(const Form3& omega);

struct ObstructionVerdict {
    bool obstructed = false;
    std::string verdict;
    SplitReport detail;
};

// Obstructed from tree-graph-manifold homology cobordism iff the radical is
// zero, the dimension is 6, and the rank-3 split fails.
ObstructionVerdict obstruct(const Form3& omega);

struct ParallelismReport {
    struct Violation {
        std::size_t i, j;                  // 0-based row indices, i < 3 <= j
        std::array<std::size_t, 2> coords;  // 0-based coordinate pair
        Rational det;
    };
    std::vector<Violation> violations;
    // Coordinate pair parallel across all row pairs, when one exists.
    std::optional<std::array<std::size_t, 2>> all_parallel_pair;
    std::string missing_dual;  // dual generator forced out of all products
};

// Determinant conditions for candidate basis rows u,v,w,x,y,z expanded over
// the abc+aef+bde basis: any N with omega^N = uvw + xyz must pass all of
// them, and a passing N forces one dual generator to vanish from every
// product. Expects exactly six vectors of dimension 6.
ParallelismReport opp_para_check(const std::vector<std::vector<Rational>>& rows);

}  // namespace graphring
