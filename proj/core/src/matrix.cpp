#include "graphring/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace graphring {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != rows_ * cols_)
        throw std::invalid_argument("entry count does not match matrix shape");
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Rational> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

std::string RatMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? ", " : "") << at(i, j).str();
        os << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

RrefResult rref(const RatMatrix& m) {
    RatMatrix r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t p = row;
        while (p < r.rows() && r.at(p, col).is_zero()) ++p;
        if (p == r.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(p, j), r.at(row, j));
        Rational inv = r.at(row, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r.at(row, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            Rational f = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                r.at(i, j) -= f * r.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivot_cols.size(); }

Rational det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    RatMatrix a = m;
    Rational d = 1;
    std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a.at(p, col).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(col, j));
            d = -d;
        }
        d *= a.at(col, col);
        Rational inv = a.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            Rational f = a.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
        }
    }
    return d;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    RrefResult r = rref(aug);
    for (std::size_t i = 0; i < n; ++i)
        if (i >= r.pivot_cols.size() || r.pivot_cols[i] != i)
            throw std::invalid_argument("matrix is singular");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.matrix.at(i, n + j);
    return inv;
}

std::vector<Rational> normalize_integer_vector(std::vector<Rational> v) {
    mpz_class l = 1;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
    mpz_class g = 0;
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    for (const auto& x : v) {
        mpz_class n = x.numerator() * (l / x.denominator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(n);
    }
    if (g == 0) return v;  // zero vector
    int first_sign = 0;
    for (const auto& n : ints)
        if (sgn(n) != 0) { first_sign = sgn(n); break; }
    if (first_sign < 0) g = -g;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(mpz_class(ints[i] / g));
    return v;
}

std::vector<std::vector<Rational>> kernel(const RatMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
            v[r.pivot_cols[p]] = -r.matrix.at(p, f);
        basis.push_back(normalize_integer_vector(std::move(v)));
    }
    return basis;
}

CongruenceResult congruence_diagonalize(const RatMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("matrix is not symmetric");
    std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix c = RatMatrix::identity(n);

    // E acts by columns on a and c, and by rows on a (a <- E^T a E).
    auto add_col = [&](std::size_t dst, std::size_t src, const Rational& f) {
        for (std::size_t i = 0; i < n; ++i) a.at(i, dst) += f * a.at(i, src);
        for (std::size_t i = 0; i < n; ++i) a.at(dst, i) += f * a.at(src, i);
        for (std::size_t i = 0; i < n; ++i) c.at(i, dst) += f * c.at(i, src);
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, x), a.at(i, y));
        for (std::size_t i = 0; i < n; ++i) std::swap(a.at(x, i), a.at(y, i));
        for (std::size_t i = 0; i < n; ++i) std::swap(c.at(i, x), c.at(i, y));
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t d = k;
            for (std::size_t j = k + 1; j < n; ++j)
                if (!a.at(j, j).is_zero()) { d = j; break; }
            if (d != k) {
                swap_cols(k, d);
            } else {
                std::size_t off = n;
                for (std::size_t j = k + 1; j < n; ++j)
                    if (!a.at(k, j).is_zero()) { off = j; break; }
                if (off == n) continue;  // row/column already zero
                add_col(k, off, Rational(1));
            }
        }
        Rational inv = a.at(k, k).inverse();
        for (std::size_t j = k + 1; j < n; ++j) {
            if (a.at(k, j).is_zero()) continue;
            add_col(j, k, -a.at(k, j) * inv);
        }
    }
    return {std::move(a), std::move(c)};
}

}  // namespace graphring
