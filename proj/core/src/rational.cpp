#include "graphring/rational.hpp"

#include <ostream>

namespace graphring {

mpz_class Rational::mpz_from_ll(long long n) {
    // mpz_class has no long long constructor on LP64 this matters only for
    // completeness; go through a decimal string to stay portable.
    if (n >= -2147483648LL && n <= 2147483647LL) return mpz_class(static_cast<long>(n));
    return mpz_class(std::to_string(n));
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (sgn(den) == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto trim = [](std::string s) {
        const char* ws = " \t\r\n";
        auto b = s.find_first_not_of(ws);
        if (b == std::string::npos) return std::string();
        auto e = s.find_last_not_of(ws);
        return s.substr(b, e - b + 1);
    };
    std::string s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(s));
        mpz_class num(trim(s.substr(0, slash)));
        mpz_class den(trim(s.substr(slash + 1)));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal '" + text + "'");
    }
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

bool Rational::is_square(Rational* root) const {
    if (sign() < 0) return false;
    mpz_class num = numerator(), den = denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    if (root) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *root = Rational(rn, rd);
    }
    return true;
}

}  // namespace graphring
