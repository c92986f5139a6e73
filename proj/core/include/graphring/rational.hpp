#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace graphring {

// Exact rational scalar backed by GMP. Canonical form is maintained after
// every operation: denominator > 0, gcd(|numerator|, denominator) = 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n) : v_(mpz_from_ll(n)) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(long long num, long long den) : Rational(mpz_from_ll(num), mpz_from_ll(den)) {}
    Rational(const mpz_class& num, const mpz_class& den);

    // Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rational parse(const std::string& text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const;
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

    // True iff *this = s^2 for some rational s; if so and s != nullptr, stores s >= 0.
    bool is_square(Rational* root = nullptr) const;

private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    static mpz_class mpz_from_ll(long long n);

    mpq_class v_;
};

}  // namespace graphring
