#ifndef FANOSLOPE_MODEL_HPP
#define FANOSLOPE_MODEL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanoslope/lattice.hpp"

namespace fanoslope::fanomodel {

using exactmath::Rational;
using exactmath::UniPoly;
using nslattice::CurveClass;
using nslattice::DivisorClass;
using nslattice::IntersectionTensor;

struct ConormalFlags {
    std::optional<bool> conormal_nef;
    std::optional<bool> conormal_ample;
    std::optional<bool> self_square_effective_nonzero;

    bool empty() const {
        return !conormal_nef && !conormal_ample && !self_square_effective_nonzero;
    }
};

/// A divisor (or blowup exceptional divisor) E presented by E's own
/// intersection lattice together with the restricted polarization class and
/// E's self-class. Enough to compute the slope integrand without the
/// ambient tensor.
struct RestrictionModel {
    unsigned center_codim = 1;            // r; 1 for a divisor on X itself
    std::vector<std::string> basis;       // labels for E's own lattice
    IntersectionTensor lattice;           // dim = ambient dim - 1
    DivisorClass restricted_anticanonical; // (sigma^*(-K_X))|_E
    DivisorClass self_class;               // E|_E
    std::optional<Rational> seshadri_override;
    ConormalFlags conormal_flags;
};

struct Ray {
    std::string name;
    CurveClass curve;
    std::optional<long> length; // l(R), a positive integer, when known
};

/// Finite presentation of a Fano variety: lattice basis, intersection
/// tensor, anticanonical class, extremal rays (with optional lengths),
/// effective generators, named divisors and optional restriction models
/// keyed by divisor name. Immutable after load/validation by convention.
struct VarietyModel {
    std::string name;
    unsigned dim = 0;
    std::vector<std::string> basis;
    IntersectionTensor tensor;
    DivisorClass anticanonical;
    std::vector<Ray> rays;
    std::vector<DivisorClass> effective_generators;
    std::map<std::string, DivisorClass> named_divisors;
    std::map<std::string, RestrictionModel> restrictions;

    size_t rank() const { return basis.size(); }
    /// Index of a basis label; throws on unknown labels.
    unsigned basis_index(const std::string& label) const;
    /// Named divisor lookup; throws on unknown names.
    const DivisorClass& named(const std::string& divisor_name) const;
    /// Class from basis-label coefficients; absent labels are zero.
    DivisorClass make_class(const std::map<std::string, Rational>& coeffs) const;
};

struct SeshadriResult {
    Rational value;
    std::string witness_ray;
};

/// Checks every model invariant; returns an empty list iff the model is
/// valid. Violations are data, not failures.
std::vector<std::string> validate_model(const VarietyModel& m);

/// Throws DataError with the joined violations when invalid.
void require_valid(const VarietyModel& m);

/// Nef against the supplied ray list: (D . C) >= 0 for every ray.
bool is_nef(const VarietyModel& m, const DivisorClass& D);

/// Largest c with L - cD nef, i.e. min over rays with (D.C) > 0 of
/// (L.C)/(D.C). Requires L nef and strictly positive on all rays, and D
/// nonzero with a positive pairing somewhere.
SeshadriResult seshadri_constant(const VarietyModel& m, const DivisorClass& L,
                                 const DivisorClass& D);

/// Same minimization with L only required nef; used for pulled-back
/// polarizations that vanish on fiber rays.
SeshadriResult seshadri_constant_nef(const VarietyModel& m, const DivisorClass& L,
                                     const DivisorClass& D);

/// Direct-sum lattice, product tensor, concatenated rays (zero-extended),
/// merged effective generators. Restriction models do not transfer.
VarietyModel product_model(const VarietyModel& m1, const VarietyModel& m2);

/// All nonzero classes sum(a_i G_i), integer 0 <= a_i <= bound, over the
/// listed effective generators, deduplicated by coordinate vector and
/// sorted. Membership is by listed generators only.
std::vector<DivisorClass> enumerate_effective_classes(const VarietyModel& m, unsigned bound);

/// g(x) = ((sigma^*(-K_X))|_E - x (E|_E))^(n-1) evaluated in E's own
/// lattice; equals (E . (sigma^*(-K_X) - xE)^(n-1)) on the ambient variety.
UniPoly restriction_integrand(const RestrictionModel& E_data);

/// Human-readable class label in basis names, e.g. "-E+H+F".
std::string format_class(const VarietyModel& m, const DivisorClass& D);

// Canonical model builders.
VarietyModel build_pn(unsigned n);
VarietyModel build_quadric3();
VarietyModel build_hirzebruch1();
VarietyModel build_p1p1();
/// Blowup of P^n at a point; named divisor "D" is the strict transform of
/// a hyperplane through the center. n >= 2.
VarietyModel build_pn_blowup_point(unsigned n);
/// Blowup of P^n along a linear subspace of codimension r, 2 <= r <= n-1.
/// Carries the exceptional divisor "E" with its codim-r restriction model.
VarietyModel build_pn_blowup_subspace(unsigned n, unsigned r);
/// P_Z(O + O(s)) over a rho=1 Fano (n-1)-fold Z of index t with t > s > 0,
/// vol_Z(O_Z(1)) = volZ; named divisor "E" is the section with normal
/// bundle O_Z(-s).
VarietyModel build_projbundle_family(unsigned n, long t, long s, const Rational& volZ);

} // namespace fanoslope::fanomodel

#endif
