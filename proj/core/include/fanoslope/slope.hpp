#ifndef FANOSLOPE_SLOPE_HPP
#define FANOSLOPE_SLOPE_HPP

#include <optional>
#include <string>

#include "fanoslope/model.hpp"

namespace fanoslope::slopekit {

using exactmath::Rational;
using exactmath::UniPoly;
using fanomodel::RestrictionModel;
using fanomodel::VarietyModel;
using nslattice::DivisorClass;

enum class Verdict { Stable, SemistableNotStable, Unstable };
std::string to_string(Verdict v);

/// The slope target: a divisor class on the model, optionally with the
/// restriction presentation of the same divisor (codim 1) or of the blowup
/// center it came from (codim r >= 2).
struct Target {
    DivisorClass cls;
    std::string label;
    const RestrictionModel* restriction = nullptr; // borrowed from the model
};

/// Target for a plain divisor class (codim 1, no restriction data).
Target target_class(const VarietyModel& m, const DivisorClass& D);
/// Target for a named divisor; picks up its restriction model when present.
Target target_named(const VarietyModel& m, const std::string& divisor_name);
/// Named divisor treated as a plain divisor on the model (codim forced to
/// 1); restriction data is kept only when it also has codim 1.
Target target_named_divisor(const VarietyModel& m, const std::string& divisor_name);

struct XiReport {
    Rational epsilon;
    std::string witness_ray;
    unsigned r = 1;
    UniPoly f;         // f(x) = vol(sigma^*(-K_X) - xE)
    UniPoly g;         // (E . (sigma^*(-K_X) - xE)^(n-1))
    Rational xi;       // r f(0) + (eps - r) f(eps) - int_0^eps f
    Rational xi_alt;   // n int_0^eps (r - x) g(x) dx; always equals xi
    Verdict verdict;
};

struct SlopeValues {
    Rational mu_c;
    Rational mu_X; // n/2
    Rational c;
};

/// xi_c for 0 < c <= epsilon.
Rational xi_c(const VarietyModel& m, const Target& target, const Rational& c);

/// Full report at c = epsilon; computes both formulas, asserts their
/// equality (MismatchError on disagreement) and attaches the sign verdict.
XiReport xi(const VarietyModel& m, const Target& target);

/// Ross-Thomas slope of the target at parameter c, together with
/// mu(X) = n/2. sign(mu_X - mu_c) always equals sign(xi_c).
SlopeValues slope_mu_c(const VarietyModel& m, const Target& target, const Rational& c);

struct VerdictWithBounds {
    XiReport report;
    Rational seshadri_floor; // r(n+1)/n
};

/// xi plus the Seshadri bound checks: a non-Stable verdict forces
/// eps > r and eps >= r(n+1)/n, an Unstable verdict forces
/// eps > r(n+1)/n. Bound violations are theorem violations and raise
/// MismatchError (the input data is wrong).
VerdictWithBounds verdict_with_bounds(const VarietyModel& m, const Target& target);

enum class ConvexityVerdict { NotStable, NotSemistable, Stable, Inconclusive };
std::string to_string(ConvexityVerdict v);

/// The three sufficient convexity conditions, driven by the restriction
/// model's conormal flags and epsilon:
///   (1) conormal nef and eps >= 2r            -> NotStable
///   (2) (1) and (r >= 2 or eps > 2r or ample) -> NotSemistable
///   (3) r = 1, E^2 nonzero effective, eps <= 2 -> Stable
ConvexityVerdict convexity_criterion(const VarietyModel& m, const std::string& divisor_name);

struct RayWitness {
    std::string ray;
    Rational margin; // min over rays of ((-K - D) . C)
};

/// The necessary-condition filter for non-stable classes: returns a ray
/// with (D.C) > 0 (of length >= 2 when lengths are recorded) when the class
/// could be non-stable, and nullopt when the class is provably slope
/// stable: some ray has ((-K - D) . C) <= 0, or every positively-pairing
/// ray has recorded length <= 1.
std::optional<RayWitness> ray_length_witness(const VarietyModel& m, const DivisorClass& D);

struct ProductPullback {
    Rational xi_product; // xi(p1^* D1) on m1 x m2
    Rational xi_factor;  // xi(D1) on m1
    Rational scale;      // C(n1+n2, n1) vol(-K_2)
};

/// Computes xi(p1^*D1) on the product directly and via the factor identity
/// xi(p1^*D1) = C(n1+n2, n1) vol(-K_2) xi(D1); asserts they agree.
ProductPullback product_pullback_xi(const VarietyModel& m1, const VarietyModel& m2,
                                    const DivisorClass& D1);

/// For xi(D1) >= 0 and xi(D2) >= 0 the class p1^*D1 + p2^*D2 on the product
/// is slope stable; computes the report and asserts the Stable verdict.
/// Violated preconditions raise DataError.
XiReport product_sum_stability(const VarietyModel& m1, const DivisorClass& D1,
                               const VarietyModel& m2, const DivisorClass& D2);

/// Closed form vol(D) t^n (1 - t/(n+1)) for -K numerically equal to tD.
Rational proportional_xi(const Rational& volD, const Rational& t, unsigned n);

enum class NefCriterion { Stable, Semistable, Inconclusive };
std::string to_string(NefCriterion v);

/// Vanishing test on the numbers (D^i . (-K - eps D)^(n-i)): Stable when
/// they vanish for every integer 1 <= i <= eps-1, Semistable when they
/// vanish for every 1 <= i < eps-1; vacuous index ranges are Inconclusive.
NefCriterion nef_divisor_criterion(const VarietyModel& m, const DivisorClass& D);

struct SubvarietyReduction {
    Rational xi_subvariety; // (1/n) int_0^eps (r-x) g dx
    Rational xi_divisor;    // (1/n) int_0^(eps-r+1) (1-x) g(x+r-1) dx
    Rational residual;      // int_0^(r-1) (r-x) g dx
    Rational epsilon;       // eps(Z) on the base
};

/// Reduction of the codim r >= 2 functional to the exceptional-divisor
/// functional on the blowup: n xi_divisor = n xi_subvariety - residual.
/// The identity is recomputed from both sides and asserted.
SubvarietyReduction subvariety_reduction(const VarietyModel& m,
                                         const std::string& divisor_name);

} // namespace fanoslope::slopekit

#endif
