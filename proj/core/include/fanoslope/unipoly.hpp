#ifndef FANOSLOPE_UNIPOLY_HPP
#define FANOSLOPE_UNIPOLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "fanoslope/rational.hpp"

namespace fanoslope::exactmath {

/// Univariate polynomial with Rational coefficients, stored densely with
/// index = degree. Immutable value type: every operation returns a new
/// polynomial. The zero polynomial has an empty coefficient list.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> ascending_coeffs);
    explicit UniPoly(std::vector<Rational> ascending_coeffs);

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(Rational c);
    /// a + b*x
    static UniPoly linear(Rational a, Rational b);
    static UniPoly monomial(Rational c, unsigned degree);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return c_; }
    Rational coefficient(unsigned degree) const;
    Rational leading_coefficient() const;

    Rational eval(const Rational& x) const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& s) const;
    UniPoly operator/(const Rational& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return c_ != o.c_; }

    UniPoly derivative() const;
    /// Antiderivative with zero constant term.
    UniPoly antiderivative() const;
    /// p(x + s)
    UniPoly shift(const Rational& s) const;
    UniPoly pow(unsigned e) const;

    /// Quotient and remainder of *this by d (d nonzero).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    /// gcd of the coefficients (positive; 0 for the zero polynomial).
    Rational content() const;
    /// *this divided by its content, with positive leading coefficient.
    UniPoly primitive_part() const;

    /// Human-readable form, descending powers, e.g. "-x^3 + 12*x^2 - 48*x + 64".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p);

private:
    void normalize();
    std::vector<Rational> c_;
};

inline UniPoly operator*(const Rational& s, const UniPoly& p) { return p * s; }

/// Exact signed definite integral of p over [a, b] via the antiderivative.
/// a may exceed b.
Rational integrate(const UniPoly& p, const Rational& a, const Rational& b);

/// Exact Horner evaluation (free-function spelling of UniPoly::eval).
Rational eval(const UniPoly& p, const Rational& x);

} // namespace fanoslope::exactmath

#endif
