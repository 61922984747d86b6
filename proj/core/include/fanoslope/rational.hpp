#ifndef FANOSLOPE_RATIONAL_HPP
#define FANOSLOPE_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fanoslope::exactmath {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator. Every scalar in the library is one of these; there
/// is no floating point anywhere in the core.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(static_cast<long>(n)) {} // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpq_class& q);
    explicit Rational(const mpz_class& z) : v_(z) {}

    /// Parses "p" or "p/q" (canonical or not; q must be nonzero).
    static Rational parse(std::string_view text);

    /// Canonical "p" or "p/q" with q > 1.
    std::string str() const;

    /// Decimal approximation for display-only columns.
    double approx() const { return v_.get_d(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// Largest integer <= *this, as a Rational.
    Rational floor() const;
    /// Smallest integer >= *this.
    Rational ceil() const;

    Rational abs() const;
    Rational pow(unsigned long e) const;

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

private:
    mpq_class v_; // invariant: canonicalized
};

/// n! as an exact integer Rational.
Rational factorial(unsigned n);
/// Binomial coefficient C(n, k); zero when k > n.
Rational binomial(unsigned n, long k);

} // namespace fanoslope::exactmath

#endif
