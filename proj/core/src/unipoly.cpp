#include "fanoslope/unipoly.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "fanoslope/errors.hpp"

namespace fanoslope::exactmath {

UniPoly::UniPoly(std::initializer_list<Rational> ascending_coeffs)
    : c_(ascending_coeffs) {
    normalize();
}

UniPoly::UniPoly(std::vector<Rational> ascending_coeffs)
    : c_(std::move(ascending_coeffs)) {
    normalize();
}

void UniPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(Rational c) {
    return UniPoly(std::vector<Rational>{std::move(c)});
}

UniPoly UniPoly::linear(Rational a, Rational b) {
    return UniPoly(std::vector<Rational>{std::move(a), std::move(b)});
}

UniPoly UniPoly::monomial(Rational c, unsigned degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = std::move(c);
    return UniPoly(std::move(v));
}

Rational UniPoly::coefficient(unsigned degree) const {
    if (degree >= c_.size()) return Rational(0);
    return c_[degree];
}

Rational UniPoly::leading_coefficient() const {
    if (c_.empty()) return Rational(0);
    return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> v(c_);
    for (auto& r : v) r = -r;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    return *this + (-o);
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    std::vector<Rational> v(c_);
    for (auto& r : v) r *= s;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator/(const Rational& s) const {
    if (s.is_zero()) throw DataError("division of polynomial by zero scalar");
    std::vector<Rational> v(c_);
    for (auto& r : v) r /= s;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::antiderivative() const {
    if (c_.empty()) return UniPoly();
    std::vector<Rational> v(c_.size() + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        v[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::shift(const Rational& s) const {
    // Horner on p(y) with y = x + s.
    UniPoly acc;
    const UniPoly xs = UniPoly::linear(s, Rational(1));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * xs + UniPoly::constant(*it);
    return acc;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly acc = UniPoly::constant(Rational(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw DataError("polynomial division by zero");
    std::vector<Rational> rem(c_);
    std::vector<Rational> quo;
    const int dd = d.degree();
    int rd = static_cast<int>(rem.size()) - 1;
    if (rd >= dd) quo.assign(rd - dd + 1, Rational(0));
    const Rational lead = d.leading_coefficient();
    while (rd >= dd) {
        while (rd >= 0 && rem[rd].is_zero()) --rd;
        if (rd < dd) break;
        Rational q = rem[rd] / lead;
        quo[rd - dd] = q;
        for (int i = 0; i <= dd; ++i)
            rem[rd - dd + i] -= q * d.c_[i];
        --rd;
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

Rational UniPoly::content() const {
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& r : c_) {
        mpz_class n = r.numerator(), d = r.denominator();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    if (num_gcd == 0) return Rational(0);
    return Rational(mpq_class(num_gcd, den_lcm));
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return UniPoly();
    Rational c = content();
    if (leading_coefficient().sign() < 0) c = -c;
    return *this / c;
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational& r = c_[static_cast<size_t>(d)];
        if (r.is_zero()) continue;
        Rational a = r.abs();
        if (first) {
            if (r.sign() < 0) os << "-";
            first = false;
        } else {
            os << (r.sign() < 0 ? " - " : " + ");
        }
        const bool unit = (a == Rational(1));
        if (d == 0) {
            os << a.str();
        } else {
            if (!unit) os << a.str() << "*";
            os << "x";
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
    return os << p.str();
}

Rational integrate(const UniPoly& p, const Rational& a, const Rational& b) {
    UniPoly anti = p.antiderivative();
    return anti.eval(b) - anti.eval(a);
}

Rational eval(const UniPoly& p, const Rational& x) {
    return p.eval(x);
}

} // namespace fanoslope::exactmath
