#include "fanoslope/sturm.hpp"

#include "fanoslope/errors.hpp"

namespace fanoslope::exactmath {

std::string to_string(IntervalSign s) {
    switch (s) {
        case IntervalSign::StrictlyPositive: return "StrictlyPositive";
        case IntervalSign::StrictlyNegative: return "StrictlyNegative";
        case IntervalSign::NonNegative: return "NonNegative";
        case IntervalSign::NonPositive: return "NonPositive";
        case IntervalSign::Mixed: return "Mixed";
        case IntervalSign::IdenticallyZero: return "IdenticallyZero";
    }
    return "?";
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second.primitive_part();
        a = b;
        b = r;
    }
    return a.primitive_part();
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) return UniPoly();
    if (p.degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly g = poly_gcd(p, p.derivative());
    return p.divmod(g).first.primitive_part();
}

UniPoly odd_multiplicity_part(const UniPoly& p) {
    if (p.is_zero()) return UniPoly();
    // Yun's squarefree decomposition p = lc * prod a_i^i.
    UniPoly q = p.primitive_part();
    if (q.degree() == 0) return UniPoly::constant(Rational(1));
    UniPoly g = poly_gcd(q, q.derivative());
    UniPoly w = q.divmod(g).first;
    UniPoly y = q.derivative().divmod(g).first;
    UniPoly z = y - w.derivative();
    UniPoly odd = UniPoly::constant(Rational(1));
    for (unsigned i = 1; w.degree() > 0; ++i) {
        UniPoly ai = poly_gcd(w, z);
        if (i % 2 == 1) odd = odd * ai;
        w = w.divmod(ai).first;
        y = z.divmod(ai).first;
        z = y - w.derivative();
    }
    return odd.primitive_part();
}

namespace {

// Strips content only; never flips the sign, which the variation count
// depends on.
UniPoly scale_by_content(const UniPoly& p) {
    if (p.is_zero()) return p;
    return p / p.content();
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(scale_by_content(p));
    if (p.degree() <= 0) return chain;
    chain.push_back(scale_by_content(p.derivative()));
    while (!chain.back().is_zero()) {
        UniPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(scale_by_content(-r));
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

int sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& s : chain) {
        int sg = s.eval(x).sign();
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++variations;
        prev = sg;
    }
    return variations;
}

// Multiplicity of (x - root) in p; returns the deflated polynomial.
unsigned strip_root(UniPoly& p, const Rational& root) {
    unsigned mult = 0;
    const UniPoly factor = UniPoly::linear(-root, Rational(1));
    while (!p.is_zero() && p.eval(root).is_zero()) {
        p = p.divmod(factor).first;
        ++mult;
    }
    return mult;
}

} // namespace

int count_roots_open(const UniPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw DataError("root count of the zero polynomial");
    if (p.eval(a).is_zero() || p.eval(b).is_zero())
        throw DataError("count_roots_open requires nonvanishing endpoints");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(squarefree_part(p));
    return sign_variations(chain, a) - sign_variations(chain, b);
}

IntervalSign sign_on_interval(const UniPoly& p, const Rational& a, const Rational& b,
                              IntervalMode mode) {
    if (!(a < b)) throw DataError("sign_on_interval requires a < b");
    if (p.is_zero()) return IntervalSign::IdenticallyZero;

    UniPoly q = p;
    const unsigned mult_a = strip_root(q, a);
    const unsigned mult_b = strip_root(q, b);

    // q has no roots at the endpoints; p and q have the same interior roots,
    // and on (a,b) sign(p) = sign(q) * (-1)^mult_b since (x-a) > 0 > (x-b).
    const bool interior_flip = (mult_b % 2 == 1);

    bool mixed = false;
    bool interior_zero = false;
    if (q.degree() > 0) {
        mixed = count_roots_open(odd_multiplicity_part(q), a, b) > 0;
        interior_zero = count_roots_open(squarefree_part(q), a, b) > 0;
    }
    if (mixed) return IntervalSign::Mixed;

    // Constant weak sign; find a non-root sample point to read it off.
    int s0 = 0;
    const int max_roots = q.degree() > 0 ? q.degree() : 0;
    for (int k = 1; k <= max_roots + 1; ++k) {
        Rational t = a + (b - a) * Rational(k, static_cast<long>(max_roots) + 2);
        s0 = q.eval(t).sign();
        if (s0 != 0) break;
    }
    if (interior_flip) s0 = -s0;

    bool zero_attained = interior_zero;
    if (mode == IntervalMode::Closed && (mult_a > 0 || mult_b > 0)) zero_attained = true;

    if (s0 > 0) return zero_attained ? IntervalSign::NonNegative : IntervalSign::StrictlyPositive;
    return zero_attained ? IntervalSign::NonPositive : IntervalSign::StrictlyNegative;
}

} // namespace fanoslope::exactmath
