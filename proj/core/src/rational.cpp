#include "fanoslope/rational.hpp"

#include <cctype>
#include <ostream>

#include "fanoslope/errors.hpp"

namespace fanoslope::exactmath {

Rational::Rational(long num, long den) {
    if (den == 0) throw DataError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpq_class& q) : v_(q) {
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw DataError("empty rational literal");
    std::string s(text);
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
            throw DataError("malformed rational literal: '" + s + "'");
    }
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class q(mpz_class(s));
            return Rational(q);
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw DataError("rational with zero denominator: '" + s + "'");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw DataError("malformed rational literal: '" + s + "'");
    }
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(q);
}

Rational Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return Rational(q);
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::pow(unsigned long e) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    return Rational(mpq_class(num, den));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DataError("division of rational by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational factorial(unsigned n) {
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return Rational(z);
}

Rational binomial(unsigned n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Rational(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), n, static_cast<unsigned long>(k));
    return Rational(z);
}

} // namespace fanoslope::exactmath
