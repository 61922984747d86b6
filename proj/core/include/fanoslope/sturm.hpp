#ifndef FANOSLOPE_STURM_HPP
#define FANOSLOPE_STURM_HPP

#include <string>
#include <vector>

#include "fanoslope/unipoly.hpp"

namespace fanoslope::exactmath {

enum class IntervalMode { Open, Closed };

enum class IntervalSign {
    StrictlyPositive,
    StrictlyNegative,
    NonNegative,   // >= 0 with a zero attained on the interval
    NonPositive,   // <= 0 with a zero attained on the interval
    Mixed,
    IdenticallyZero,
};

std::string to_string(IntervalSign s);

/// Primitive polynomial gcd (Euclid with content normalization at each
/// step), positive leading coefficient.
UniPoly poly_gcd(UniPoly a, UniPoly b);

/// Product of the distinct irreducible factors (each root once).
UniPoly squarefree_part(const UniPoly& p);

/// Product of the squarefree factors appearing with odd multiplicity;
/// p changes sign exactly at the real roots of this polynomial.
UniPoly odd_multiplicity_part(const UniPoly& p);

/// Number of distinct real roots of p in the open interval (a, b).
/// Requires p nonzero, p(a) != 0 and p(b) != 0.
int count_roots_open(const UniPoly& p, const Rational& a, const Rational& b);

/// Exact classification of the sign behavior of p over (a,b) or [a,b],
/// via Sturm root counts plus endpoint and interior evaluations. No
/// sampling is involved. Rejects a >= b.
IntervalSign sign_on_interval(const UniPoly& p, const Rational& a, const Rational& b,
                              IntervalMode mode);

} // namespace fanoslope::exactmath

#endif
