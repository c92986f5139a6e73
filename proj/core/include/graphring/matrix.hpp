#pragma once

#include <cstddef>
#include <vector>

#include "graphring/rational.hpp"

namespace graphring {

// Dense matrix over Q, row-major.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    RatMatrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b);
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

    std::vector<Rational> apply(const std::vector<Rational>& v) const;  // m * v
    std::string str() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

struct RrefResult {
    RatMatrix matrix;
    std::vector<std::size_t> pivot_cols;  // ascending
};

// Unique reduced row echelon form with the set of pivot columns.
RrefResult rref(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
Rational det(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);  // throws std::invalid_argument if singular

// Basis of the right null space {v : m v = 0}. Each vector is scaled to
// coprime integer entries with first nonzero entry positive.
std::vector<std::vector<Rational>> kernel(const RatMatrix& m);

struct CongruenceResult {
    RatMatrix diagonal;
    RatMatrix change;  // invertible, change^T * m * change = diagonal
};

// Symmetric congruence diagonalization; throws std::invalid_argument on
// non-symmetric input.
CongruenceResult congruence_diagonalize(const RatMatrix& m);

// Scale a rational vector to coprime integer entries, first nonzero positive.
// Zero vectors are returned unchanged.
std::vector<Rational> normalize_integer_vector(std::vector<Rational> v);

}  // namespace graphring
